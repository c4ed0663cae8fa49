#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gam/catalog.hpp"
#include "gam/corpus.hpp"
#include "gam/decision_log.hpp"
#include "gam/outcome.hpp"

namespace gam::agreement {

enum class Level { Nominal, Ordinal, Interval };

std::string to_string(Level level);

/// Units (sonnets) by raters. cells[u][r] is rater r's value for unit u.
struct ReliabilityMatrix {
  std::vector<std::string> units;
  std::vector<std::string> raters;
  std::vector<std::vector<std::optional<double>>> cells;
  Level level = Level::Nominal;
};

enum class AgreementBand { VeryLow, Light, Acceptable, Moderate, Substantial, Perfect };

std::string to_string(AgreementBand band);

/// Thresholds 0, 0.21, 0.41, 0.61, 0.81, each boundary belonging to the
/// band above it. alpha < 0 is Very low; alpha >= 0.81 is Perfect.
AgreementBand agreement_band(double alpha);

struct AlphaResult {
  double alpha = 1.0;
  double n_pairable = 0.0;  // values in units with >= 2 ratings
  AgreementBand band = AgreementBand::Perfect;
  /// Only one category was observed: D_e = 0, alpha reported as 1.
  bool degenerate = false;
};

/// alpha = 1 - D_o / D_e over the coincidence matrix. Units with fewer than
/// two values are skipped. Throws ComputationError when no unit is pairable
/// and std::invalid_argument for fewer than two raters or ragged rows.
AlphaResult krippendorff_alpha(const ReliabilityMatrix& matrix);

/// One feature across annotation sets, rows aligned by position.
ReliabilityMatrix matrix_for_feature(std::span<const AnnotationSet> sets, std::string_view feature,
                                     Level level);

struct PairwiseAlpha {
  Outcome<AlphaResult> joint;
  /// Unordered pairs (i < j) of indices into the input sets.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Outcome<AlphaResult>>> pairs;
};

/// Joint alpha over all sets plus one alpha per pair. A pair without any
/// pairable unit gets an undefined result.
PairwiseAlpha pairwise_alpha(std::span<const AnnotationSet> sets, std::string_view feature,
                             Level level);

/// Ordinal for 1..4 features, nominal for binary tags.
Level level_for(const FeatureSpec& spec);

struct AgreementCell {
  std::string column;  // k_all, k_12, ..., k_1m, ...
  Outcome<AlphaResult> result;
  bool below_threshold = false;  // alpha < 0.21
};

struct AgreementRow {
  std::string feature;
  Level level = Level::Nominal;
  std::vector<AgreementCell> cells;
};

struct AgreementReport {
  std::vector<std::string> columns;
  std::vector<AgreementRow> rows;
  std::vector<std::string> warnings;
};

inline constexpr double kAcceptableAlpha = 0.21;

/// One row per catalog feature. Columns: k_all, k_ij for every annotator
/// pair, and k_im (annotator vs median) when a median set is given. Column
/// labels use the annotators' ids.
AgreementReport agreement_report(std::span<const AnnotationSet> sets,
                                 const AnnotationSet* median,
                                 const FeatureCatalog& catalog = FeatureCatalog::standard(),
                                 DecisionLog* log = nullptr);

}  // namespace gam::agreement
