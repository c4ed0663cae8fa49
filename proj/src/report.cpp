#include "gam/report.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "gam/outcome.hpp"
#include "gam/table_io.hpp"

namespace gam::report {

namespace {

using Row = std::vector<Value>;

Value real(double v) { return v; }
Value count(std::size_t v) { return static_cast<long long>(v); }
Value opt(const Real& r) { return r ? Value(r.value()) : Value(); }

std::string join(const std::vector<std::string>& items, char sep = ';') {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out.push_back(sep);
    out += s;
  }
  return out;
}

}  // namespace

std::string format_value(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(long long n) const { return std::to_string(n); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(double d) const {
      if (std::isnan(d)) return "nan";
      if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
      if (d == 0.0) return "0";  // folds -0
      return fmt::format("{}", d);
    }
  };
  return std::visit(Visitor{}, v);
}

std::string to_csv(const Table& table) {
  std::string out = io::join_row(table.header) + "\n";
  std::vector<std::string> fields;
  for (const auto& row : table.rows) {
    fields.clear();
    for (const auto& v : row) fields.push_back(format_value(v));
    out += io::join_row(fields) + "\n";
  }
  return out;
}

std::string to_json(const Table& table) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < table.header.size() && i < row.size(); ++i) {
      const auto& v = row[i];
      auto& slot = obj[table.header[i]];
      if (std::holds_alternative<std::monostate>(v)) {
        slot = nullptr;
      } else if (const auto* s = std::get_if<std::string>(&v)) {
        slot = *s;
      } else if (const auto* n = std::get_if<long long>(&v)) {
        slot = *n;
      } else if (const auto* b = std::get_if<bool>(&v)) {
        slot = *b;
      } else {
        const double d = std::get<double>(v);
        if (std::isfinite(d)) {
          slot = d == 0.0 ? 0.0 : d;
        } else {
          slot = format_value(v);
        }
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_table(const Table& table,
                                               const std::filesystem::path& dir,
                                               ReportFormat format) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& ext, const std::string& content) {
    const auto path = dir / (table.name + ext);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write report", path.string());
    out << content;
    written.push_back(path);
  };
  if (format != ReportFormat::Json) emit(".csv", to_csv(table));
  if (format != ReportFormat::Csv) emit(".json", to_json(table));
  return written;
}

Table corpus_stats_table(const CorpusStats& stats) {
  Table t{"corpus_stats", {"section", "key", "value"}, {}};
  t.rows.push_back({"corpus", "n_sonnets", count(stats.n_sonnets)});
  t.rows.push_back({"corpus", "words_mean", real(stats.words_mean)});
  t.rows.push_back({"corpus", "words_sd", real(stats.words_sd)});
  const auto& h = stats.histogram;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    t.rows.push_back({"word_histogram", fmt::format("[{},{})", format_value(h.edges[b]),
                                                    format_value(h.edges[b + 1])),
                      count(h.counts[b])});
  }
  for (const auto& [tag, n] : stats.tag_counts) t.rows.push_back({"tag_count", tag, count(n)});
  return t;
}

Table coverage_table(const std::vector<lexicon::CoverageRow>& rows) {
  Table t{"coverage", {"category", "mode", "source", "n_keys", "n_matched", "fraction"}, {}};
  for (const auto& r : rows) {
    const auto mode = text::to_string(r.mode);
    t.rows.push_back({r.category, mode, "combined", count(r.n_keys), count(r.n_matched),
                      real(r.fraction)});
    for (const auto& [source, fraction] : r.per_source_fractions) {
      t.rows.push_back({r.category, mode, source, count(r.n_keys), Value(), real(fraction)});
    }
  }
  return t;
}

Table missing_words_table(const std::vector<std::pair<std::string, std::size_t>>& words) {
  Table t{"missing_words", {"word", "occurrences"}, {}};
  for (const auto& [w, n] : words) t.rows.push_back({w, count(n)});
  return t;
}

Table agreement_table(const agreement::AgreementReport& report) {
  Table t{"agreement", {"feature", "level"}, {}};
  for (const auto& c : report.columns) t.header.push_back(c);
  t.header.insert(t.header.end(), {"n_pairable_all", "band_all", "below_0.21"});
  for (const auto& row : report.rows) {
    Row r{row.feature, agreement::to_string(row.level)};
    std::vector<std::string> flagged;
    for (const auto& cell : row.cells) {
      r.push_back(cell.result ? Value(cell.result->alpha) : Value());
      if (cell.below_threshold) flagged.push_back(cell.column);
    }
    const auto& all = row.cells.front().result;
    r.push_back(all ? Value(all->n_pairable) : Value());
    r.push_back(all ? Value(agreement::to_string(all->band)) : Value());
    r.push_back(join(flagged));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table gam_features_table(const features::FeatureMatrix& matrix) {
  Table t{"gam_features", {"sonnet_id"}, {}};
  for (auto f : features::all_gam_features()) t.header.emplace_back(features::name(f));
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    Row r{matrix.sonnet_ids[i]};
    for (const auto& v : matrix.rows[i].values()) r.push_back(opt(v));
    t.rows.push_back(std::move(r));
  }
  return t;
}

Table bivariate_table(const std::vector<validation::BivariateCell>& cells) {
  Table t{"bivariate", {"feature", "feature_gam", "n", "rho", "band", "note"}, {}};
  for (const auto& c : cells) {
    if (c.result) {
      t.rows.push_back({c.annotated, c.gam, count(c.n), real(c.result->rho),
                        stats::to_string(c.result->band), ""});
    } else {
      t.rows.push_back({c.annotated, c.gam, count(c.n), Value(), Value(), c.result.reason()});
    }
  }
  return t;
}

Table partial_dependence_table(const std::vector<validation::PartialDependenceRow>& rows) {
  Table t{"partial_dependence",
          {"category", "feature", "feature_gam", "n", "n_dropped", "k", "predictors", "r2",
           "adj_r2", "coeff", "p", "sign", "dropped_predictors", "unavailable_predictors", "note"},
          {}};
  for (const auto& r : rows) {
    Row out{r.category, r.annotated, r.gam, count(r.n), count(r.n_dropped), count(r.k),
            r.predictor_set};
    if (r.computable) {
      out.insert(out.end(), {real(r.r_squared), real(r.adjusted_r_squared), real(r.coefficient),
                             real(r.p_value), r.significant});
    } else {
      out.insert(out.end(), {Value(), Value(), Value(), Value(), false});
    }
    out.push_back(join(r.dropped_predictors));
    out.push_back(join(r.unavailable_predictors));
    out.push_back(r.reason);
    t.rows.push_back(std::move(out));
  }
  return t;
}

Table anova_table(const validation::AnovaReport& report) {
  Table t{"anova", {"category", "feature_gam", "M1", "M0", "n1", "n0", "F", "p", "degenerate"}, {}};
  for (const auto& r : report.rows) {
    if (!r.significant) continue;
    t.rows.push_back({r.category, r.gam_feature, real(r.mean_in), real(r.mean_out),
                      count(r.n_in), count(r.n_out), real(r.f_statistic), real(r.p_value),
                      r.degenerate});
  }
  return t;
}

}  // namespace gam::report
