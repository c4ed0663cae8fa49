#include "gam/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "gam/outcome.hpp"
#include "gam/stats.hpp"
#include "gam/table_io.hpp"

namespace gam {

Corpus::Corpus(std::vector<Sonnet> sonnets) : sonnets_(std::move(sonnets)) {
  for (std::size_t i = 0; i < sonnets_.size(); ++i) {
    const auto& m = sonnets_[i].metadata;
    if (m.file_path.empty()) {
      throw InputError(fmt::format("sonnet '{}' has an empty file_path", m.sonnet_id));
    }
    if (sonnets_[i].text.empty()) {
      throw InputError(fmt::format("sonnet '{}' has empty text", m.sonnet_id), m.file_path);
    }
    if (!index_.emplace(m.sonnet_id, i).second) {
      throw InputError(fmt::format("duplicate sonnet_id '{}'", m.sonnet_id));
    }
  }
}

std::vector<std::string> Corpus::ids() const {
  std::vector<std::string> out;
  out.reserve(sonnets_.size());
  for (const auto& s : sonnets_) out.push_back(s.metadata.sonnet_id);
  return out;
}

std::optional<std::size_t> Corpus::index_of(const std::string& sonnet_id) const {
  const auto it = index_.find(sonnet_id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<SonnetMetadata> load_metadata(const std::filesystem::path& path) {
  const auto table = io::read_delimited(path);
  const char* required[] = {"author", "year", "title", "id_sonnet", "file_path"};
  std::size_t col[5];
  for (std::size_t i = 0; i < 5; ++i) {
    col[i] = table.column(required[i]);
    if (col[i] == std::string::npos) {
      throw InputError(fmt::format("metadata column '{}' missing", required[i]), path.string(),
                       1);
    }
  }
  if (table.rows.empty()) throw InputError("no rows", path.string());
  std::vector<SonnetMetadata> out;
  std::set<std::string> ids;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw InputError(fmt::format("expected {} fields, found {}", table.header.size(),
                                   row.size()),
                       path.string(), table.line_of(r));
    }
    SonnetMetadata m{io::trim(row[col[0]]), io::trim(row[col[1]]), io::trim(row[col[2]]),
                     io::trim(row[col[3]]), io::trim(row[col[4]])};
    if (m.sonnet_id.empty()) {
      throw InputError("empty id_sonnet", path.string(), table.line_of(r), col[3] + 1);
    }
    if (m.file_path.empty()) {
      throw InputError("empty file_path", path.string(), table.line_of(r), col[4] + 1);
    }
    if (!ids.insert(m.sonnet_id).second) {
      throw InputError(fmt::format("duplicate id_sonnet '{}'", m.sonnet_id), path.string(),
                       table.line_of(r), col[3] + 1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Corpus load_corpus(const std::filesystem::path& metadata_path,
                   const std::filesystem::path& text_root) {
  std::vector<Sonnet> sonnets;
  for (auto& m : load_metadata(metadata_path)) {
    const auto file = text_root / m.file_path;
    if (!std::filesystem::exists(file)) {
      throw InputError(fmt::format("text for sonnet '{}' not found", m.sonnet_id), file.string());
    }
    auto text = io::read_file(file);
    if (io::trim(text).empty()) {
      throw InputError(fmt::format("text for sonnet '{}' is empty", m.sonnet_id), file.string());
    }
    sonnets.push_back({std::move(m), std::move(text)});
  }
  return Corpus(std::move(sonnets));
}

// ---------------------------------------------------------------------------

AnnotationSet::AnnotationSet(int annotator_id, std::vector<std::string> sonnet_ids)
    : annotator_id_(annotator_id),
      sonnet_ids_(std::move(sonnet_ids)),
      cells_(sonnet_ids_.size(), std::vector<Cell>(FeatureCatalog::standard().size())) {}

Cell AnnotationSet::get(const std::string& sonnet_id, std::string_view feature) const {
  const auto it = std::find(sonnet_ids_.begin(), sonnet_ids_.end(), sonnet_id);
  if (it == sonnet_ids_.end()) throw std::out_of_range("unknown sonnet '" + sonnet_id + "'");
  const auto f = FeatureCatalog::standard().index_of(feature);
  if (f == FeatureCatalog::npos) {
    throw std::out_of_range("unknown feature '" + std::string(feature) + "'");
  }
  return cells_[static_cast<std::size_t>(it - sonnet_ids_.begin())][f];
}

void AnnotationSet::set(std::size_t row, std::size_t feature, Cell value) {
  cells_.at(row).at(feature) = value;
}

std::size_t AnnotationSet::missing_count() const {
  std::size_t n = 0;
  for (const auto& row : cells_) {
    n += static_cast<std::size_t>(std::count(row.begin(), row.end(), std::nullopt));
  }
  return n;
}

AnnotationSet load_annotation_set(const std::filesystem::path& path, int annotator_id,
                                  const AnnotationLoadOptions& options) {
  const auto& catalog = FeatureCatalog::standard();
  const auto table = io::read_delimited(path, true, options.delimiter);
  const std::string file = path.string();
  if (table.header.empty()) throw InputError("no rows", file);

  // header column -> catalog index (npos = ignored)
  std::vector<std::size_t> column_feature(table.header.size(), FeatureCatalog::npos);
  std::vector<bool> seen(catalog.size(), false);
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    std::string name = table.header[c];
    if (const auto a = options.aliases.find(name); a != options.aliases.end()) name = a->second;
    if (name == "ignore") continue;
    const auto f = catalog.index_of(name);
    if (f == FeatureCatalog::npos) {
      throw InputError(fmt::format("unknown feature name '{}'", table.header[c]), file, 1, c + 1);
    }
    if (seen[f]) throw InputError(fmt::format("duplicate column '{}'", name), file, 1, c + 1);
    seen[f] = true;
    column_feature[c] = f;
  }
  for (std::size_t f = 0; f < catalog.size(); ++f) {
    if (!seen[f]) {
      throw InputError(fmt::format("feature column '{}' missing", catalog.features()[f].name),
                       file, 1);
    }
  }
  if (table.rows.empty()) throw InputError("no rows", file);

  std::vector<std::string> ids = options.sonnet_ids;
  if (ids.empty()) {
    for (std::size_t r = 0; r < table.rows.size(); ++r) ids.push_back(std::to_string(r + 1));
  } else if (ids.size() != table.rows.size()) {
    throw InputError(fmt::format("{} annotation rows but {} sonnets in the metadata",
                                 table.rows.size(), ids.size()),
                     file);
  }

  AnnotationSet set(annotator_id, std::move(ids));
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = table.line_of(r);
    if (row.size() != table.header.size()) {
      throw InputError(fmt::format("malformed row: expected {} fields, found {}",
                                   table.header.size(), row.size()),
                       file, line);
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto f = column_feature[c];
      if (f == FeatureCatalog::npos) continue;
      const auto& spec = catalog.features()[f];
      std::string cell = io::trim(row[c]);
      // tolerate integral values written as reals ("3.0")
      if (const auto dot = cell.find('.'); dot != std::string::npos &&
                                           cell.find_first_not_of('0', dot + 1) == std::string::npos) {
        cell.erase(dot);
      }
      if (cell.empty() || cell == "NA" || cell == "NaN" || cell == "nan") {
        if (spec.ordinal()) {
          throw InputError(fmt::format("missing value for ordinal feature '{}'", spec.name), file,
                           line, c + 1);
        }
        continue;
      }
      int value = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw InputError(fmt::format("'{}' is not an integer", cell), file, line, c + 1);
      }
      if (!spec.in_range(value)) {
        throw InputError(fmt::format("value {} out of range [{}, {}] for '{}'", value,
                                     spec.min_value, spec.max_value, spec.name),
                         file, line, c + 1);
      }
      set.set(r, f, value);
    }
  }
  return set;
}

AnnotationSet reverse_ordinal_scale(const AnnotationSet& set, std::string_view feature) {
  const auto& catalog = FeatureCatalog::standard();
  const auto f = catalog.index_of(feature);
  if (f == FeatureCatalog::npos) {
    throw std::invalid_argument("unknown feature '" + std::string(feature) + "'");
  }
  const auto& spec = catalog.features()[f];
  if (!spec.ordinal()) {
    throw std::invalid_argument("feature '" + spec.name + "' is not ordinal");
  }
  AnnotationSet out = set;
  for (std::size_t r = 0; r < set.rows(); ++r) {
    if (const auto v = set.get(r, f)) out.set(r, f, spec.min_value + spec.max_value - *v);
  }
  return out;
}

namespace {

void require_same_sonnets(std::span<const AnnotationSet> sets) {
  for (const auto& s : sets) {
    if (s.sonnet_ids() != sets.front().sonnet_ids()) {
      throw std::invalid_argument("annotation sets cover different sonnets");
    }
  }
}

}  // namespace

FillReport fill_missing_psych(std::span<const AnnotationSet> sets, DecisionLog* log) {
  if (sets.size() != 3) throw std::invalid_argument("fill_missing_psych needs exactly 3 sets");
  require_same_sonnets(sets);
  const auto& catalog = FeatureCatalog::standard();
  FillReport report;
  report.sets.assign(sets.begin(), sets.end());
  for (std::size_t r = 0; r < sets.front().rows(); ++r) {
    for (std::size_t f = 0; f < catalog.size(); ++f) {
      if (!catalog.features()[f].binary()) continue;
      std::vector<int> missing;
      std::size_t missing_index = 0;
      for (std::size_t s = 0; s < 3; ++s) {
        if (!sets[s].get(r, f)) {
          missing.push_back(sets[s].annotator_id());
          missing_index = s;
        }
      }
      if (missing.empty()) continue;
      MissingCell cell{sets.front().sonnet_ids()[r], catalog.features()[f].name, missing};
      if (missing.size() == 1) {
        report.sets[missing_index].set(r, f, 0);
        report.filled.push_back(std::move(cell));
      } else {
        note(log, "fill.unfillable",
             fmt::format("sonnet {} tag {}: missing for {} annotators, left missing",
                         cell.sonnet_id, cell.feature, missing.size()));
        report.unfilled.push_back(std::move(cell));
      }
    }
  }
  if (!report.filled.empty()) {
    note(log, "fill.zero", fmt::format("{} single-annotator missing tag cells set to 0",
                                       report.filled.size()));
  }
  return report;
}

AnnotationSet build_median_annotator(std::span<const AnnotationSet> sets, DecisionLog* log) {
  if (sets.empty()) throw std::invalid_argument("build_median_annotator: no sets");
  require_same_sonnets(sets);
  const auto& catalog = FeatureCatalog::standard();
  AnnotationSet out(0, sets.front().sonnet_ids());
  std::vector<int> values;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t f = 0; f < catalog.size(); ++f) {
      values.clear();
      for (const auto& s : sets) {
        if (const auto v = s.get(r, f)) values.push_back(*v);
      }
      if (values.size() < 2) {
        note(log, "median.too_few_values",
             fmt::format("sonnet {} feature {}: {} value(s) available, median left missing",
                         out.sonnet_ids()[r], catalog.features()[f].name, values.size()));
        continue;
      }
      std::sort(values.begin(), values.end());
      const std::size_t n = values.size();
      if (n % 2 == 0 && values[n / 2 - 1] != values[n / 2]) {
        note(log, catalog.features()[f].binary() ? "median.binary_tie" : "median.even_lower",
             fmt::format("sonnet {} feature {}: even split resolved to {}", out.sonnet_ids()[r],
                         catalog.features()[f].name, values[n / 2 - 1]));
      }
      out.set(r, f, values[(n - 1) / 2]);
    }
  }
  return out;
}

TagPartition subset_by_tag(const AnnotationSet& median, std::string_view tag) {
  const auto& catalog = FeatureCatalog::standard();
  const auto f = catalog.index_of(tag);
  if (f == FeatureCatalog::npos || !catalog.features()[f].binary()) {
    throw std::invalid_argument("unknown psychological tag '" + std::string(tag) + "'");
  }
  TagPartition out;
  for (std::size_t r = 0; r < median.rows(); ++r) {
    const auto v = median.get(r, f);
    (v && *v == 1 ? out.in_group : out.out_group).push_back(median.sonnet_ids()[r]);
  }
  return out;
}

CorpusStats corpus_statistics(const Corpus& corpus, const AnnotationSet& median,
                              const text::NormalizationConfig& norm, double bin_width) {
  if (!(bin_width > 0.0)) throw std::invalid_argument("bin_width must be positive");
  CorpusStats out;
  out.n_sonnets = corpus.size();
  std::vector<double> counts;
  for (const auto& s : corpus.sonnets()) {
    const auto tokens = text::tokenize(s.text, norm.lowercase, norm.strip_punctuation);
    const auto kept = text::remove_stopwords(tokens, norm.stopwords);
    out.word_counts.push_back(kept.size());
    counts.push_back(static_cast<double>(kept.size()));
  }
  if (!counts.empty()) {
    out.words_mean = stats::mean(counts);
    out.words_sd = stats::sample_sd(counts);
    const double lo = std::floor(*std::min_element(counts.begin(), counts.end()) / bin_width);
    const double hi = std::floor(*std::max_element(counts.begin(), counts.end()) / bin_width);
    const auto bins = static_cast<std::size_t>(hi - lo) + 1;
    for (std::size_t b = 0; b <= bins; ++b) {
      out.histogram.edges.push_back((lo + static_cast<double>(b)) * bin_width);
    }
    out.histogram.counts.assign(bins, 0);
    for (double c : counts) {
      ++out.histogram.counts[static_cast<std::size_t>(std::floor(c / bin_width) - lo)];
    }
  }
  for (const auto& tag : FeatureCatalog::standard().psychological_names()) {
    out.tag_counts.emplace_back(tag,
                                median.rows() == 0 ? 0 : subset_by_tag(median, tag).in_group.size());
  }
  return out;
}

}  // namespace gam
