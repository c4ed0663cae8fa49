#pragma once

#include <array>
#include <string>
#include <vector>

#include "gam/corpus.hpp"
#include "gam/decision_log.hpp"
#include "gam/features.hpp"
#include "gam/outcome.hpp"
#include "gam/stats.hpp"

namespace gam::validation {

struct FeaturePairing {
  std::string annotated;
  features::GamFeature gam;
};

/// valence<->valence_mean, ..., context availability<->cont_ava_mean.
const std::array<FeaturePairing, 10>& feature_pairings();

struct BivariateCell {
  std::string annotated;
  std::string gam;
  std::size_t n = 0;  // sonnets where both values are defined
  Outcome<stats::CorrelationResult> result;
};

/// Spearman rho for every (ordinal annotated feature x GAM feature), rows in
/// catalog order, columns in GAM order. Pairwise deletion per cell.
std::vector<BivariateCell> bivariate_report(const features::FeatureMatrix& gam,
                                            const AnnotationSet& median);

struct PartialDependenceRow {
  std::string category;  // "all" or a psychological tag
  std::string annotated;
  std::string gam;
  bool computable = false;
  std::string reason;  // why not computable
  std::size_t n = 0;          // rows used
  std::size_t n_dropped = 0;  // category rows lost to listwise deletion
  std::size_t k = 0;          // predictors kept
  std::string predictor_set;  // "gam32" or "lexical20"
  std::vector<std::string> dropped_predictors;      // exact collinearity
  std::vector<std::string> unavailable_predictors;  // undefined in every row
  double r_squared = 0.0;
  double adjusted_r_squared = 0.0;
  double coefficient = 0.0;
  double p_value = 1.0;
  bool significant = false;  // p < 0.05 and coefficient > 0
};

inline constexpr double kSignificance = 0.05;

/// OLS of the median annotated value on the GAM features, for every
/// category and pairing. Predictors are ordered with the paired feature
/// first. Features undefined in every row of the category are skipped, and
/// columns exactly dependent on earlier ones are dropped (the spans equal
/// max - min). When n <= k + 1 the predictors are pruned to the 20 mean/sd
/// features. Every fallback is recorded in `log`.
std::vector<PartialDependenceRow> partial_dependence_report(
    const features::FeatureMatrix& gam, const AnnotationSet& median,
    const std::vector<std::string>& categories, DecisionLog* log = nullptr);

/// "all" followed by the 21 psychological tags.
std::vector<std::string> default_categories();

struct AnovaRow {
  std::string category;
  std::string gam_feature;
  bool computable = false;
  std::string reason;
  double mean_in = 0.0;   // M (=1)
  double mean_out = 0.0;  // M (=0)
  std::size_t n_in = 0;
  std::size_t n_out = 0;
  double f_statistic = 0.0;
  double p_value = 1.0;
  bool degenerate = false;
  bool significant = false;  // p < 0.05
};

struct AnovaReport {
  std::vector<AnovaRow> rows;  // all 21 x 10 combinations, tag-major
  std::size_t n_significant = 0;
  std::vector<AnovaRow> significant_rows() const;
};

/// One-way ANOVA of each *_mean GAM feature between the sonnets carrying a
/// tag (median = 1) and the rest.
AnovaReport anova_report(const features::FeatureMatrix& gam, const AnnotationSet& median,
                         DecisionLog* log = nullptr);

}  // namespace gam::validation
