#include "gam/agreement.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace gam::agreement {

std::string to_string(Level level) {
  switch (level) {
    case Level::Nominal: return "nominal";
    case Level::Ordinal: return "ordinal";
    case Level::Interval: return "interval";
  }
  return "?";
}

std::string to_string(AgreementBand band) {
  switch (band) {
    case AgreementBand::VeryLow: return "Very low";
    case AgreementBand::Light: return "Light";
    case AgreementBand::Acceptable: return "Acceptable";
    case AgreementBand::Moderate: return "Moderate";
    case AgreementBand::Substantial: return "Substantial";
    case AgreementBand::Perfect: return "Perfect";
  }
  return "?";
}

AgreementBand agreement_band(double alpha) {
  if (alpha < 0.0) return AgreementBand::VeryLow;
  if (alpha < 0.21) return AgreementBand::Light;
  if (alpha < 0.41) return AgreementBand::Acceptable;
  if (alpha < 0.61) return AgreementBand::Moderate;
  if (alpha < 0.81) return AgreementBand::Substantial;
  return AgreementBand::Perfect;
}

AlphaResult krippendorff_alpha(const ReliabilityMatrix& matrix) {
  if (matrix.raters.size() < 2) throw std::invalid_argument("alpha needs at least two raters");

  std::vector<double> categories;
  for (const auto& row : matrix.cells) {
    if (row.size() != matrix.raters.size()) {
      throw std::invalid_argument("reliability matrix row length differs from rater count");
    }
    for (const auto& v : row) {
      if (v) categories.push_back(*v);
    }
  }
  std::sort(categories.begin(), categories.end());
  categories.erase(std::unique(categories.begin(), categories.end()), categories.end());
  const std::size_t c = categories.size();
  auto category_index = [&](double v) {
    return static_cast<std::size_t>(std::lower_bound(categories.begin(), categories.end(), v) -
                                    categories.begin());
  };

  // Coincidence matrix: every ordered pair of values within a unit, weighted 1/(m-1).
  std::vector<double> o(c * c, 0.0);
  std::vector<std::size_t> idx;
  for (const auto& row : matrix.cells) {
    idx.clear();
    for (const auto& v : row) {
      if (v) idx.push_back(category_index(*v));
    }
    const std::size_t m = idx.size();
    if (m < 2) continue;
    const double w = 1.0 / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j) o[idx[i] * c + idx[j]] += w;
      }
    }
  }

  std::vector<double> marginal(c, 0.0);
  double n = 0.0;
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) marginal[a] += o[a * c + b];
    n += marginal[a];
  }
  if (n <= 0.0) throw ComputationError("no pairable values");

  auto delta2 = [&](std::size_t a, std::size_t b) -> double {
    if (a == b) return 0.0;
    switch (matrix.level) {
      case Level::Nominal: return 1.0;
      case Level::Interval: {
        const double d = categories[a] - categories[b];
        return d * d;
      }
      case Level::Ordinal: {
        const auto [lo, hi] = std::minmax(a, b);
        double s = 0.0;
        for (std::size_t g = lo; g <= hi; ++g) s += marginal[g];
        s -= (marginal[lo] + marginal[hi]) / 2.0;
        return s * s;
      }
    }
    return 0.0;
  };

  double observed = 0.0;
  double expected = 0.0;
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) {
      if (a == b) continue;
      const double d = delta2(a, b);
      observed += o[a * c + b] * d;
      expected += marginal[a] * marginal[b] * d;
    }
  }
  observed /= n;
  expected /= n * (n - 1.0);

  AlphaResult r;
  r.n_pairable = n;
  if (expected == 0.0) {
    r.alpha = 1.0;
    r.degenerate = true;
  } else {
    r.alpha = 1.0 - observed / expected;
  }
  r.band = agreement_band(r.alpha);
  return r;
}

ReliabilityMatrix matrix_for_feature(std::span<const AnnotationSet> sets, std::string_view feature,
                                     Level level) {
  if (sets.empty()) throw std::invalid_argument("no annotation sets");
  const auto f = FeatureCatalog::standard().index_of(feature);
  if (f == FeatureCatalog::npos) {
    throw std::invalid_argument("unknown feature '" + std::string(feature) + "'");
  }
  ReliabilityMatrix m;
  m.level = level;
  m.units = sets.front().sonnet_ids();
  for (const auto& s : sets) {
    if (s.rows() != m.units.size()) {
      throw std::invalid_argument("annotation sets cover different numbers of sonnets");
    }
    m.raters.push_back(std::to_string(s.annotator_id()));
  }
  m.cells.assign(m.units.size(), std::vector<std::optional<double>>(sets.size()));
  for (std::size_t u = 0; u < m.units.size(); ++u) {
    for (std::size_t r = 0; r < sets.size(); ++r) {
      if (const auto v = sets[r].get(u, f)) m.cells[u][r] = static_cast<double>(*v);
    }
  }
  return m;
}

namespace {

Outcome<AlphaResult> try_alpha(const ReliabilityMatrix& m) {
  try {
    return Outcome<AlphaResult>::ok(krippendorff_alpha(m));
  } catch (const ComputationError& e) {
    return Outcome<AlphaResult>::undefined(e.what());
  }
}

}  // namespace

PairwiseAlpha pairwise_alpha(std::span<const AnnotationSet> sets, std::string_view feature,
                             Level level) {
  if (sets.size() < 2) throw std::invalid_argument("pairwise alpha needs at least two sets");
  PairwiseAlpha out;
  out.joint = try_alpha(matrix_for_feature(sets, feature, level));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const AnnotationSet pair[] = {sets[i], sets[j]};
      out.pairs.push_back({{i, j}, try_alpha(matrix_for_feature(pair, feature, level))});
    }
  }
  return out;
}

Level level_for(const FeatureSpec& spec) {
  return spec.binary() ? Level::Nominal : Level::Ordinal;
}

AgreementReport agreement_report(std::span<const AnnotationSet> sets,
                                 const AnnotationSet* median, const FeatureCatalog& catalog,
                                 DecisionLog* log) {
  if (sets.size() < 2) throw std::invalid_argument("agreement needs at least two annotation sets");
  AgreementReport report;
  report.columns.push_back("k_all");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      report.columns.push_back(
          fmt::format("k_{}{}", sets[i].annotator_id(), sets[j].annotator_id()));
    }
  }
  if (median != nullptr) {
    for (const auto& s : sets) report.columns.push_back(fmt::format("k_{}m", s.annotator_id()));
  } else {
    report.warnings.push_back(
        fmt::format("median columns omitted: the median annotator needs three annotation sets, "
                    "got {}",
                    sets.size()));
    note(log, "agreement.no_median", report.warnings.back());
  }

  auto make_cell = [&](std::string column, Outcome<AlphaResult> r, const std::string& feature) {
    AgreementCell cell{std::move(column), std::move(r), false};
    if (cell.result) {
      cell.below_threshold = cell.result->alpha < kAcceptableAlpha;
      if (cell.result->degenerate) {
        note(log, "alpha.degenerate", fmt::format("{} {}: single category observed, alpha = 1",
                                                  feature, cell.column));
      }
    } else {
      note(log, "alpha.undefined",
           fmt::format("{} {}: {}", feature, cell.column, cell.result.reason()));
    }
    return cell;
  };

  for (const auto& spec : catalog.features()) {
    AgreementRow row{spec.name, level_for(spec), {}};
    const auto pa = pairwise_alpha(sets, spec.name, row.level);
    row.cells.push_back(make_cell("k_all", pa.joint, spec.name));
    for (std::size_t p = 0; p < pa.pairs.size(); ++p) {
      row.cells.push_back(make_cell(report.columns[1 + p], pa.pairs[p].second, spec.name));
    }
    if (median != nullptr) {
      for (const auto& s : sets) {
        const AnnotationSet pair[] = {s, *median};
        row.cells.push_back(make_cell(fmt::format("k_{}m", s.annotator_id()),
                                      try_alpha(matrix_for_feature(pair, spec.name, row.level)),
                                      spec.name));
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace gam::agreement
