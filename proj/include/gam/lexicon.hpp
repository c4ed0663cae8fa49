#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gam/corpus.hpp"
#include "gam/decision_log.hpp"
#include "gam/text.hpp"

namespace gam::lexicon {

enum class Dimension {
  Valence,
  Arousal,
  Happiness,
  Anger,
  Sadness,
  Fear,
  Disgust,
  Concreteness,
  Imageability,
  ContextAvailability,
};

inline constexpr std::size_t kDimensionCount = 10;
inline constexpr std::array<Dimension, kDimensionCount> kDimensions = {
    Dimension::Valence,      Dimension::Arousal,      Dimension::Happiness,
    Dimension::Anger,        Dimension::Sadness,      Dimension::Fear,
    Dimension::Disgust,      Dimension::Concreteness, Dimension::Imageability,
    Dimension::ContextAvailability};

constexpr std::size_t index(Dimension d) noexcept { return static_cast<std::size_t>(d); }
/// "valence", ..., "context_availability".
std::string_view name(Dimension d) noexcept;
/// Accepts the snake_case name, spaces for underscores, and "cont_ava".
std::optional<Dimension> parse_dimension(std::string_view text);

struct Scale {
  double min = 0.0;
  double max = 1.0;
  friend bool operator==(const Scale&, const Scale&) = default;
};

struct Norm {
  double mean = 0.0;
  std::optional<double> sd;
  friend bool operator==(const Norm&, const Norm&) = default;
};

/// Per-dimension norms of one word; an empty slot means "not rated".
using NormSet = std::array<std::optional<Norm>, kDimensionCount>;
using Scales = std::array<std::optional<Scale>, kDimensionCount>;
using CanonicalScales = std::array<Scale, kDimensionCount>;

/// valence/arousal [1,9]; the five discrete emotions [1,5];
/// concreteness/imageability/context availability [1,7].
CanonicalScales default_canonical_scales();

struct SourceLexicon {
  std::string source_id;
  std::map<std::string, NormSet> entries;  // lowercase surface word -> norms
  Scales scales;
};

/// How to read one lexicon file. The default describes the canonical long
/// format: columns word, dimension, mean, sd, scale_min, scale_max,
/// source_id, one row per (word, dimension). Wide files (one row per word)
/// are described by per-dimension mean/sd column names and a scale.
struct SchemaDescriptor {
  enum class Layout { Long, Wide };
  Layout layout = Layout::Long;
  std::string source_id;  // overrides / fills the source_id column
  char delimiter = 0;     // 0 = detect
  std::string word_column = "word";
  // long layout
  std::string dimension_column = "dimension";
  std::string mean_column = "mean";
  std::string sd_column = "sd";
  std::string scale_min_column = "scale_min";
  std::string scale_max_column = "scale_max";
  std::string source_column = "source_id";
  // wide layout
  struct WideColumn {
    std::string mean;
    std::string sd;  // may be empty
    Scale scale;
  };
  std::map<Dimension, WideColumn> wide;
};

/// Plain `key = value` file. Keys: layout (long|wide), source_id, delimiter
/// (comma|semicolon|tab), word, and for wide layouts `<dimension>.mean`,
/// `<dimension>.sd`, `<dimension>.scale` ("min max"). Long layouts may rename
/// columns with dimension/mean/sd/scale_min/scale_max/source_column.
SchemaDescriptor load_schema_descriptor(const std::filesystem::path& path);

/// Errors: InputError for missing columns, non-numeric cells, a mean outside
/// the declared scale, sd < 0, or inconsistent scales. Duplicate words within
/// the source are averaged (recorded in `log`).
SourceLexicon load_lexicon(const std::filesystem::path& path, const SchemaDescriptor& schema = {},
                           DecisionLog* log = nullptr);

/// Affine map of `value` from one range onto another. Throws
/// std::invalid_argument for a degenerate range or a value outside `from`.
double rescale(double value, Scale from, Scale to);
/// Standard deviations scale by the same slope.
double rescale_sd(double sd, Scale from, Scale to);

class MergedLexicon {
 public:
  MergedLexicon() = default;
  MergedLexicon(text::Mode mode, CanonicalScales scales);

  text::Mode mode() const noexcept { return mode_; }
  const CanonicalScales& scales() const noexcept { return scales_; }
  const std::map<std::string, NormSet>& entries() const noexcept { return entries_; }
  const std::map<std::string, std::vector<std::string>>& provenance() const noexcept {
    return provenance_;
  }
  std::size_t size() const noexcept { return entries_.size(); }

  /// nullopt when the key is absent; otherwise the per-dimension slots.
  std::optional<NormSet> lookup(const std::string& key) const;
  bool contains(const std::string& key) const { return entries_.contains(key); }

  void insert(std::string key, NormSet norms, std::vector<std::string> sources);

 private:
  text::Mode mode_ = text::Mode::Raw;
  CanonicalScales scales_{};
  std::map<std::string, NormSet> entries_;
  std::map<std::string, std::vector<std::string>> provenance_;
};

/// 1. rescale every source value onto the canonical scale;
/// 2. per surface word and dimension, median across the sources that rate it
///    (even count -> mean of the two central values);
/// 3. normalize words to keys and average words that share a key.
/// Standard deviations follow the same rules independently of the means.
MergedLexicon merge(std::span<const SourceLexicon> sources, const text::NormalizationConfig& norm,
                    const CanonicalScales& canonical = default_canonical_scales(),
                    DecisionLog* log = nullptr);

std::optional<NormSet> lookup(const MergedLexicon& merged, const std::string& key);

struct CoverageRow {
  std::string category;  // "all" or a psychological tag
  text::Mode mode = text::Mode::Raw;
  std::size_t n_keys = 0;  // distinct corpus keys after stopword removal
  std::size_t n_matched = 0;
  double fraction = 0.0;  // n_matched / n_keys (0 for an empty category)
  std::vector<std::pair<std::string, double>> per_source_fractions;
};

struct CoverageReport {
  std::vector<CoverageRow> rows;
  /// Surface forms whose key is missing from the merged lexicon, with their
  /// occurrence counts; most frequent first. Filled when requested.
  std::vector<std::pair<std::string, std::size_t>> missing_words;
};

/// Rows for "all" and every psychological tag (in-group of the median set).
CoverageReport coverage(const Corpus& corpus, std::span<const SourceLexicon> sources,
                        const MergedLexicon& merged, const text::NormalizationConfig& norm,
                        const AnnotationSet& median, bool with_missing_words = false);

}  // namespace gam::lexicon
