#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "gam/agreement.hpp"
#include "gam/corpus.hpp"
#include "gam/features.hpp"
#include "gam/lexicon.hpp"
#include "gam/run_config.hpp"
#include "gam/validation.hpp"

namespace gam::report {

/// Empty, text, real, count or flag.
using Value = std::variant<std::monostate, std::string, double, long long, bool>;

struct Table {
  std::string name;  // file stem
  std::vector<std::string> header;
  std::vector<std::vector<Value>> rows;
};

/// Shortest round-trip representation for reals, "inf"/"-inf"/"nan" for
/// non-finite ones, empty for a missing value. Output is locale-free.
std::string format_value(const Value& v);

std::string to_csv(const Table& table);
/// Array of objects keyed by header; non-finite reals become strings.
std::string to_json(const Table& table);

/// Writes `<name>.csv` and/or `<name>.json` into `dir`; returns the paths.
std::vector<std::filesystem::path> write_table(const Table& table,
                                               const std::filesystem::path& dir,
                                               ReportFormat format);

Table corpus_stats_table(const CorpusStats& stats);
Table coverage_table(const std::vector<lexicon::CoverageRow>& rows);
Table missing_words_table(const std::vector<std::pair<std::string, std::size_t>>& words);
Table agreement_table(const agreement::AgreementReport& report);
Table gam_features_table(const features::FeatureMatrix& matrix);
Table bivariate_table(const std::vector<validation::BivariateCell>& cells);
Table partial_dependence_table(const std::vector<validation::PartialDependenceRow>& rows);
/// Only the rows with p < 0.05, as in the published table.
Table anova_table(const validation::AnovaReport& report);

}  // namespace gam::report
