#include "gam/validation.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "gam/catalog.hpp"

namespace gam::validation {

namespace {

using features::GamFeature;
using features::GamFeatureVector;
using lexicon::Dimension;

// GAM rows aligned with the median set's rows; nullptr when the sonnet has no
// feature vector.
std::vector<const GamFeatureVector*> align(const features::FeatureMatrix& gam,
                                           const AnnotationSet& median) {
  std::vector<const GamFeatureVector*> out;
  out.reserve(median.rows());
  for (const auto& id : median.sonnet_ids()) out.push_back(gam.find(id));
  return out;
}

std::size_t catalog_index(std::string_view name) {
  const auto i = FeatureCatalog::standard().index_of(name);
  if (i == FeatureCatalog::npos) {
    throw std::invalid_argument("unknown feature '" + std::string(name) + "'");
  }
  return i;
}

struct Fit {
  enum class Status { Ok, TooFewRows, Failed } status = Status::Failed;
  std::string reason;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> dropped;
  std::vector<std::string> unavailable;
  stats::RegressionResult result;
};

Fit fit(const std::vector<const GamFeatureVector*>& rows, const std::vector<std::size_t>& members,
        std::size_t y_feature, const AnnotationSet& median, std::vector<GamFeature> predictors) {
  Fit out;
  std::vector<std::size_t> candidates;
  for (auto r : members) {
    if (median.get(r, y_feature) && rows[r] != nullptr) candidates.push_back(r);
  }
  // A feature with no value in any row (e.g. an sd no source provides) would
  // empty the listwise selection; it cannot be a predictor here.
  const auto paired = predictors.front();
  std::erase_if(predictors, [&](GamFeature p) {
    const bool never = std::none_of(candidates.begin(), candidates.end(),
                                    [&](std::size_t r) { return (*rows[r])[p].defined(); });
    if (never) out.unavailable.emplace_back(features::name(p));
    return never;
  });
  if (predictors.empty() || predictors.front() != paired) {
    out.reason = "paired GAM feature is undefined for every row";
    return out;
  }
  std::vector<std::size_t> used;
  for (auto r : candidates) {
    bool complete = true;
    for (auto p : predictors) complete = complete && (*rows[r])[p].defined();
    if (complete) used.push_back(r);
  }
  out.n = used.size();
  if (used.size() < 3) {
    out.status = Fit::Status::TooFewRows;
    out.reason = fmt::format("{} complete rows", used.size());
    return out;
  }

  Eigen::MatrixXd X(static_cast<Eigen::Index>(used.size()),
                    static_cast<Eigen::Index>(predictors.size()));
  Eigen::VectorXd y(static_cast<Eigen::Index>(used.size()));
  for (std::size_t i = 0; i < used.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    y(row) = *median.get(used[i], y_feature);
    for (std::size_t j = 0; j < predictors.size(); ++j) {
      X(row, static_cast<Eigen::Index>(j)) = (*rows[used[i]])[predictors[j]].value();
    }
  }

  const auto keep = stats::independent_columns(X);
  if (keep.empty() || keep.front() != 0) {
    out.reason = "paired GAM feature is constant over the rows";
    return out;
  }
  std::vector<bool> kept(predictors.size(), false);
  for (auto j : keep) kept[j] = true;
  for (std::size_t j = 0; j < predictors.size(); ++j) {
    if (!kept[j]) out.dropped.emplace_back(features::name(predictors[j]));
  }
  out.k = keep.size();
  if (out.n <= out.k + 1) {
    out.status = Fit::Status::TooFewRows;
    out.reason = fmt::format("n = {} rows for k = {} predictors", out.n, out.k);
    return out;
  }

  Eigen::MatrixXd Xk(X.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    Xk.col(static_cast<Eigen::Index>(j)) = X.col(static_cast<Eigen::Index>(keep[j]));
  }
  try {
    out.result = stats::ols(Xk, y);
    out.status = Fit::Status::Ok;
  } catch (const ComputationError& e) {
    out.reason = e.what();
  }
  return out;
}

std::vector<GamFeature> predictor_order(GamFeature paired, std::size_t count) {
  std::vector<GamFeature> out{paired};
  for (std::size_t i = 0; i < count; ++i) {
    const auto f = static_cast<GamFeature>(i);
    if (f != paired) out.push_back(f);
  }
  return out;
}

constexpr std::size_t kLexicalFeatureCount = 20;

}  // namespace

const std::array<FeaturePairing, 10>& feature_pairings() {
  static const std::array<FeaturePairing, 10> pairings = {{
      {"valence", GamFeature::ValenceMean},
      {"arousal", GamFeature::ArousalMean},
      {"happiness", GamFeature::HappinessMean},
      {"anger", GamFeature::AngerMean},
      {"sadness", GamFeature::SadnessMean},
      {"fear", GamFeature::FearMean},
      {"disgust", GamFeature::DisgustMean},
      {"concreteness", GamFeature::ConcretenessMean},
      {"imageability", GamFeature::ImageabilityMean},
      {"context availability", GamFeature::ContAvaMean},
  }};
  return pairings;
}

std::vector<std::string> default_categories() {
  std::vector<std::string> out{"all"};
  for (auto& t : FeatureCatalog::standard().psychological_names()) out.push_back(std::move(t));
  return out;
}

std::vector<BivariateCell> bivariate_report(const features::FeatureMatrix& gam,
                                            const AnnotationSet& median) {
  const auto rows = align(gam, median);
  std::vector<BivariateCell> out;
  for (const auto& annotated : FeatureCatalog::standard().ordinal_names()) {
    const auto a = catalog_index(annotated);
    for (auto g : features::all_gam_features()) {
      std::vector<double> x;
      std::vector<double> y;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto v = median.get(r, a);
        if (!v || rows[r] == nullptr || !(*rows[r])[g]) continue;
        x.push_back(*v);
        y.push_back((*rows[r])[g].value());
      }
      BivariateCell cell{annotated, std::string(features::name(g)), x.size(), {}};
      if (x.size() < 2) {
        cell.result = Outcome<stats::CorrelationResult>::undefined(
            fmt::format("{} usable pairs", x.size()));
      } else {
        cell.result = stats::spearman(x, y);
      }
      out.push_back(std::move(cell));
    }
  }
  return out;
}

std::vector<PartialDependenceRow> partial_dependence_report(
    const features::FeatureMatrix& gam, const AnnotationSet& median,
    const std::vector<std::string>& categories, DecisionLog* log) {
  const auto rows = align(gam, median);
  std::vector<PartialDependenceRow> out;
  for (const auto& category : categories) {
    std::vector<std::size_t> members;
    if (category == "all") {
      for (std::size_t r = 0; r < rows.size(); ++r) members.push_back(r);
    } else {
      const auto& spec = FeatureCatalog::standard().at(category);
      if (!spec.binary()) {
        throw std::invalid_argument("category '" + category + "' is not a psychological tag");
      }
      const auto t = catalog_index(category);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (median.get(r, t) == 1) members.push_back(r);
      }
    }

    for (const auto& pairing : feature_pairings()) {
      PartialDependenceRow row;
      row.category = category;
      row.annotated = pairing.annotated;
      row.gam = std::string(features::name(pairing.gam));
      const auto y_feature = catalog_index(pairing.annotated);

      row.predictor_set = "gam32";
      auto result = fit(rows, members, y_feature, median,
                        predictor_order(pairing.gam, features::kGamFeatureCount));
      if (result.status == Fit::Status::TooFewRows) {
        note(log, "partial.pruned_to_lexical",
             fmt::format("{} / {}: {}; refitting on the 20 mean/sd features", category,
                         pairing.annotated, result.reason));
        row.predictor_set = "lexical20";
        result = fit(rows, members, y_feature, median,
                     predictor_order(pairing.gam, kLexicalFeatureCount));
      }
      row.n = result.n;
      row.n_dropped = members.size() - result.n;
      row.k = result.k;
      row.dropped_predictors = result.dropped;
      row.unavailable_predictors = result.unavailable;
      if (!result.unavailable.empty()) {
        note(log, "partial.undefined_predictor_skipped",
             fmt::format("{} / {}: {}", category, pairing.annotated,
                         fmt::join(result.unavailable, " ")));
      }
      if (!result.dropped.empty()) {
        note(log, "partial.collinear_dropped",
             fmt::format("{} / {}: {}", category, pairing.annotated,
                         fmt::join(result.dropped, " ")));
      }
      if (result.status != Fit::Status::Ok) {
        row.reason = result.reason;
        note(log, "partial.not_computable",
             fmt::format("{} / {}: {}", category, pairing.annotated, result.reason));
      } else {
        row.computable = true;
        row.r_squared = result.result.r_squared;
        row.adjusted_r_squared = result.result.adjusted_r_squared;
        row.coefficient = result.result.coefficients.front();
        row.p_value = result.result.p_values.front();
        row.significant = row.p_value < kSignificance && row.coefficient > 0.0;
      }
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<AnovaRow> AnovaReport::significant_rows() const {
  std::vector<AnovaRow> out;
  for (const auto& r : rows) {
    if (r.significant) out.push_back(r);
  }
  return out;
}

AnovaReport anova_report(const features::FeatureMatrix& gam, const AnnotationSet& median,
                         DecisionLog* log) {
  const auto rows = align(gam, median);
  AnovaReport report;
  for (const auto& tag : FeatureCatalog::standard().psychological_names()) {
    const auto t = catalog_index(tag);
    for (auto d : lexicon::kDimensions) {
      const auto g = features::mean_feature(d);
      AnovaRow row;
      row.category = tag;
      row.gam_feature = std::string(features::name(g));
      std::vector<std::vector<double>> groups(2);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] == nullptr || !(*rows[r])[g]) continue;
        groups[median.get(r, t) == 1 ? 0 : 1].push_back((*rows[r])[g].value());
      }
      row.n_in = groups[0].size();
      row.n_out = groups[1].size();
      if (groups[0].empty() || groups[1].empty() || row.n_in + row.n_out <= 2) {
        row.reason = fmt::format("group sizes {} / {}", row.n_in, row.n_out);
        note(log, "anova.not_computable", fmt::format("{} / {}: {}", tag, row.gam_feature, row.reason));
        report.rows.push_back(std::move(row));
        continue;
      }
      const auto a = stats::one_way_anova(groups);
      row.computable = true;
      row.mean_in = a.group_means[0];
      row.mean_out = a.group_means[1];
      row.f_statistic = a.f_statistic;
      row.p_value = a.p_value;
      row.degenerate = a.degenerate;
      row.significant = a.p_value < kSignificance;
      if (a.degenerate) {
        note(log, "anova.degenerate", fmt::format("{} / {}: {}", tag, row.gam_feature, a.note));
      }
      if (row.significant) ++report.n_significant;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace gam::validation
