#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gam/catalog.hpp"
#include "gam/decision_log.hpp"
#include "gam/text.hpp"

namespace gam {

struct SonnetMetadata {
  std::string author;
  std::string year;  // a year or a century label
  std::string title;
  std::string sonnet_id;
  std::string file_path;
};

struct Sonnet {
  SonnetMetadata metadata;
  std::string text;
};

/// Sonnets in annotation-file row order. Annotators worked through the same
/// sonnet order, so row i of every annotation file is sonnets[i].
class Corpus {
 public:
  Corpus() = default;
  /// Throws InputError for duplicate ids, empty paths or empty texts.
  explicit Corpus(std::vector<Sonnet> sonnets);

  const std::vector<Sonnet>& sonnets() const noexcept { return sonnets_; }
  std::size_t size() const noexcept { return sonnets_.size(); }
  bool empty() const noexcept { return sonnets_.empty(); }
  std::vector<std::string> ids() const;
  std::optional<std::size_t> index_of(const std::string& sonnet_id) const;

 private:
  std::vector<Sonnet> sonnets_;
  std::map<std::string, std::size_t> index_;
};

/// Columns author, year, title, id_sonnet, file_path (any order, extra
/// columns ignored).
std::vector<SonnetMetadata> load_metadata(const std::filesystem::path& path);

/// Loads metadata and reads each sonnet's text from `text_root / file_path`.
Corpus load_corpus(const std::filesystem::path& metadata_path,
                   const std::filesystem::path& text_root);

using Cell = std::optional<int>;

/// One annotator's values for every sonnet and catalog feature. Storage is
/// dense: row = sonnet (corpus order), column = catalog index.
class AnnotationSet {
 public:
  AnnotationSet() = default;
  AnnotationSet(int annotator_id, std::vector<std::string> sonnet_ids);

  int annotator_id() const noexcept { return annotator_id_; }
  const std::vector<std::string>& sonnet_ids() const noexcept { return sonnet_ids_; }
  std::size_t rows() const noexcept { return sonnet_ids_.size(); }

  Cell get(std::size_t row, std::size_t feature) const { return cells_.at(row).at(feature); }
  Cell get(const std::string& sonnet_id, std::string_view feature) const;
  void set(std::size_t row, std::size_t feature, Cell value);

  std::size_t missing_count() const;

  friend bool operator==(const AnnotationSet&, const AnnotationSet&) = default;

 private:
  int annotator_id_ = 0;
  std::vector<std::string> sonnet_ids_;
  std::vector<std::vector<Cell>> cells_;
};

struct AnnotationLoadOptions {
  /// Header aliases: file column name -> catalog name, or "ignore" to skip
  /// a column (e.g. a text column).
  std::map<std::string, std::string> aliases;
  /// Row i is mapped to sonnet_ids[i]; when empty, ids are "1".."N".
  std::vector<std::string> sonnet_ids;
  char delimiter = 0;  // 0 = detect
};

/// Errors (InputError with row/column): no rows, unknown or missing feature
/// column, malformed row, non-integer cell, out-of-range value, missing value
/// in an ordinal feature.
AnnotationSet load_annotation_set(const std::filesystem::path& path, int annotator_id,
                                  const AnnotationLoadOptions& options = {});

/// x -> 5 - x on a 1..4 feature; throws std::invalid_argument otherwise.
AnnotationSet reverse_ordinal_scale(const AnnotationSet& set, std::string_view feature);

struct MissingCell {
  std::string sonnet_id;
  std::string feature;
  std::vector<int> annotators;  // who left it empty
};

struct FillReport {
  std::vector<AnnotationSet> sets;
  std::vector<MissingCell> filled;    // set to 0 in the single missing set
  std::vector<MissingCell> unfilled;  // missing in >= 2 sets, left missing
};

/// A psychological cell missing in exactly one of the three sets is set to 0
/// there; cells missing in two or more sets are left and reported.
FillReport fill_missing_psych(std::span<const AnnotationSet> sets, DecisionLog* log = nullptr);

/// Per-cell median of the available values. With 3 values this is the middle
/// one (majority vote for binary tags). With an even count the lower central
/// value is taken, so a binary 0/1 split resolves to 0. Fewer than 2
/// available values leave the cell missing.
AnnotationSet build_median_annotator(std::span<const AnnotationSet> sets,
                                     DecisionLog* log = nullptr);

struct TagPartition {
  std::vector<std::string> in_group;
  std::vector<std::string> out_group;
};

/// Splits all sonnets by the median tag value; a missing median counts as 0.
TagPartition subset_by_tag(const AnnotationSet& median, std::string_view tag);

struct Histogram {
  std::vector<double> edges;  // size = counts.size() + 1, bins [e_i, e_{i+1})
  std::vector<std::size_t> counts;
};

struct CorpusStats {
  std::size_t n_sonnets = 0;
  double words_mean = 0.0;
  double words_sd = 0.0;  // sample sd
  std::vector<std::size_t> word_counts;
  Histogram histogram;
  std::vector<std::pair<std::string, std::size_t>> tag_counts;  // catalog order
};

/// Word counts are post-stopword token counts under `norm` (mode does not
/// change counts). Histogram bins have width `bin_width` starting at a
/// multiple of it.
CorpusStats corpus_statistics(const Corpus& corpus, const AnnotationSet& median,
                              const text::NormalizationConfig& norm, double bin_width = 5.0);

}  // namespace gam
