#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gam/lexicon.hpp"
#include "gam/text.hpp"

namespace gam {

enum class ReportFormat { Csv, Json, Both };

ReportFormat parse_report_format(std::string_view text);

struct LexiconSource {
  std::string name;
  std::filesystem::path file;
  std::optional<std::filesystem::path> schema;  // none = canonical long layout
};

/// Everything a run needs. Loaded from a `key = value` file; relative paths
/// resolve against the config file's directory.
///
///   metadata = metadata.csv
///   texts = sonnets/                   (default: metadata's directory)
///   annotation.1 = annotator1.csv      (one key per annotator id)
///   alias.<column> = <catalog name>    (or "ignore")
///   reverse_valence = 1,2
///   lexicon.<name> = file.csv
///   lexicon.<name>.schema = file.schema
///   stopwords = default | none | path
///   lemma_table = lemmas.csv
///   mode = raw | stem | lemma
///   scale.<dimension> = min max
///   out = reports
///   format = csv | json | both
///   histogram_bin_width = 5
struct RunConfig {
  std::filesystem::path metadata;
  std::filesystem::path texts;
  std::vector<std::pair<int, std::filesystem::path>> annotations;
  std::map<std::string, std::string> aliases;
  std::vector<int> reversed_valence{1, 2};
  std::vector<LexiconSource> lexicons;
  std::optional<std::filesystem::path> stopwords;  // none = bundled list
  bool no_stopwords = false;
  std::optional<std::filesystem::path> lemma_table;
  text::Mode mode = text::Mode::Stem;
  lexicon::CanonicalScales scales = lexicon::default_canonical_scales();
  std::filesystem::path out = "reports";
  ReportFormat format = ReportFormat::Csv;
  double histogram_bin_width = 5.0;
  bool missing_words = false;
  bool log_decisions = false;
  bool strict = false;
};

/// Throws InputError (with line) for unknown keys or malformed values.
RunConfig load_run_config(const std::filesystem::path& path);

/// Builds the normalization settings, loading stopword and lemma files.
text::NormalizationConfig normalization_for(const RunConfig& config);

}  // namespace gam
