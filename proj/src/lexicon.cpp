#include "gam/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "gam/outcome.hpp"
#include "gam/stats.hpp"
#include "gam/table_io.hpp"

namespace gam::lexicon {

namespace {

constexpr std::array<std::string_view, kDimensionCount> kNames = {
    "valence", "arousal", "happiness",    "anger",        "sadness",
    "fear",    "disgust", "concreteness", "imageability", "context_availability"};

char parse_delimiter_name(const std::string& v, const std::string& file, std::size_t line) {
  if (v == "comma" || v == ",") return ',';
  if (v == "semicolon" || v == ";") return ';';
  if (v == "tab" || v == "\\t") return '\t';
  if (v == "auto" || v.empty()) return 0;
  throw InputError("unknown delimiter '" + v + "'", file, line);
}

// Running sums used to average duplicate words inside a source and words
// that collapse onto one key.
struct Accumulator {
  double mean_sum = 0.0;
  std::size_t mean_n = 0;
  double sd_sum = 0.0;
  std::size_t sd_n = 0;

  void add(const Norm& n) {
    mean_sum += n.mean;
    ++mean_n;
    if (n.sd) {
      sd_sum += *n.sd;
      ++sd_n;
    }
  }
  Norm result() const {
    Norm n{mean_sum / static_cast<double>(mean_n), std::nullopt};
    if (sd_n > 0) n.sd = sd_sum / static_cast<double>(sd_n);
    return n;
  }
};

}  // namespace

std::string_view name(Dimension d) noexcept { return kNames[index(d)]; }

std::optional<Dimension> parse_dimension(std::string_view text) {
  std::string s = text::to_lower(io::trim(text));
  std::replace(s.begin(), s.end(), ' ', '_');
  if (s == "cont_ava") return Dimension::ContextAvailability;
  for (auto d : kDimensions) {
    if (name(d) == s) return d;
  }
  return std::nullopt;
}

CanonicalScales default_canonical_scales() {
  CanonicalScales s{};
  for (auto d : kDimensions) {
    switch (d) {
      case Dimension::Valence:
      case Dimension::Arousal: s[index(d)] = {1.0, 9.0}; break;
      case Dimension::Happiness:
      case Dimension::Anger:
      case Dimension::Sadness:
      case Dimension::Fear:
      case Dimension::Disgust: s[index(d)] = {1.0, 5.0}; break;
      case Dimension::Concreteness:
      case Dimension::Imageability:
      case Dimension::ContextAvailability: s[index(d)] = {1.0, 7.0}; break;
    }
  }
  return s;
}

SchemaDescriptor load_schema_descriptor(const std::filesystem::path& path) {
  SchemaDescriptor schema;
  const std::string file = path.string();
  std::map<Dimension, bool> has_scale;
  for (const auto& kv : io::read_key_values(path)) {
    const auto& k = kv.key;
    if (k == "layout") {
      if (kv.value == "long") {
        schema.layout = SchemaDescriptor::Layout::Long;
      } else if (kv.value == "wide") {
        schema.layout = SchemaDescriptor::Layout::Wide;
      } else {
        throw InputError("layout must be 'long' or 'wide'", file, kv.line);
      }
    } else if (k == "source_id") {
      schema.source_id = kv.value;
    } else if (k == "delimiter") {
      schema.delimiter = parse_delimiter_name(kv.value, file, kv.line);
    } else if (k == "word") {
      schema.word_column = kv.value;
    } else if (k == "dimension") {
      schema.dimension_column = kv.value;
    } else if (k == "mean") {
      schema.mean_column = kv.value;
    } else if (k == "sd") {
      schema.sd_column = kv.value;
    } else if (k == "scale_min") {
      schema.scale_min_column = kv.value;
    } else if (k == "scale_max") {
      schema.scale_max_column = kv.value;
    } else if (k == "source_column") {
      schema.source_column = kv.value;
    } else if (const auto dot = k.rfind('.'); dot != std::string::npos) {
      const auto dim = parse_dimension(k.substr(0, dot));
      if (!dim) throw InputError("unknown dimension in key '" + k + "'", file, kv.line);
      auto& col = schema.wide[*dim];
      const auto field = k.substr(dot + 1);
      if (field == "mean") {
        col.mean = kv.value;
      } else if (field == "sd") {
        col.sd = kv.value;
      } else if (field == "scale") {
        std::string v = kv.value;
        std::replace(v.begin(), v.end(), ',', ' ');
        const auto parts = text::tokenize(v, false, false);
        const auto lo = parts.size() == 2 ? io::parse_real(parts[0]) : std::nullopt;
        const auto hi = parts.size() == 2 ? io::parse_real(parts[1]) : std::nullopt;
        if (!lo || !hi || !(*lo < *hi)) {
          throw InputError("scale must be 'min max' with min < max", file, kv.line);
        }
        col.scale = {*lo, *hi};
        has_scale[*dim] = true;
      } else {
        throw InputError("unknown key '" + k + "'", file, kv.line);
      }
    } else {
      throw InputError("unknown key '" + k + "'", file, kv.line);
    }
  }
  if (schema.layout == SchemaDescriptor::Layout::Wide) {
    if (schema.source_id.empty()) throw InputError("wide layout needs source_id", file);
    if (schema.wide.empty()) throw InputError("wide layout maps no dimensions", file);
    for (const auto& [dim, col] : schema.wide) {
      if (col.mean.empty() || !has_scale[dim]) {
        throw InputError(fmt::format("dimension '{}' needs both .mean and .scale", name(dim)),
                         file);
      }
    }
  }
  return schema;
}

SourceLexicon load_lexicon(const std::filesystem::path& path, const SchemaDescriptor& schema,
                           DecisionLog* log) {
  const std::string file = path.string();
  const auto table = io::read_delimited(path, true, schema.delimiter);
  auto need = [&](const std::string& column) {
    const auto c = table.column(column);
    if (c == std::string::npos) {
      throw InputError(fmt::format("column '{}' missing", column), file, 1);
    }
    return c;
  };

  SourceLexicon lex;
  lex.source_id = schema.source_id;
  // word -> dimension -> accumulated values (duplicates averaged)
  std::map<std::string, std::array<Accumulator, kDimensionCount>> acc;
  const std::size_t word_col = need(schema.word_column);

  auto check_value = [&](double mean, std::optional<double> sd, Scale scale, std::size_t line,
                         std::size_t column, Dimension d) {
    if (mean < scale.min || mean > scale.max) {
      throw InputError(fmt::format("{} mean {} outside declared scale [{}, {}]", name(d), mean,
                                   scale.min, scale.max),
                       file, line, column);
    }
    if (sd && *sd < 0.0) {
      throw InputError(fmt::format("{} sd {} is negative", name(d), *sd), file, line, column);
    }
  };
  auto check_scale = [&](Dimension d, Scale s, std::size_t line) {
    auto& slot = lex.scales[index(d)];
    if (!(s.min < s.max)) {
      throw InputError(fmt::format("degenerate {} scale [{}, {}]", name(d), s.min, s.max), file,
                       line);
    }
    if (slot && !(*slot == s)) {
      throw InputError(fmt::format("inconsistent {} scale within source", name(d)), file, line);
    }
    slot = s;
  };

  if (schema.layout == SchemaDescriptor::Layout::Long) {
    const auto dim_col = need(schema.dimension_column);
    const auto mean_col = need(schema.mean_column);
    const auto sd_col = table.column(schema.sd_column);
    const auto lo_col = need(schema.scale_min_column);
    const auto hi_col = need(schema.scale_max_column);
    const auto src_col = table.column(schema.source_column);
    if (src_col == std::string::npos && schema.source_id.empty()) {
      throw InputError("no source_id column and none given by the descriptor", file, 1);
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const auto& row = table.rows[r];
      const auto line = table.line_of(r);
      if (row.size() != table.header.size()) {
        throw InputError(fmt::format("malformed row: expected {} fields, found {}",
                                     table.header.size(), row.size()),
                         file, line);
      }
      if (src_col != std::string::npos && schema.source_id.empty()) {
        const auto id = io::trim(row[src_col]);
        if (lex.source_id.empty()) lex.source_id = id;
        if (id != lex.source_id) {
          throw InputError(fmt::format("mixed source ids '{}' and '{}' in one file",
                                       lex.source_id, id),
                           file, line, src_col + 1);
        }
      }
      const auto word = text::to_lower(io::trim(row[word_col]));
      if (word.empty()) throw InputError("empty word", file, line, word_col + 1);
      const auto dim = parse_dimension(row[dim_col]);
      if (!dim) {
        throw InputError(fmt::format("unknown dimension '{}'", row[dim_col]), file, line,
                         dim_col + 1);
      }
      const auto mean = io::parse_real(row[mean_col]);
      if (!mean) {
        if (io::trim(row[mean_col]).empty()) continue;
        throw InputError(fmt::format("'{}' is not a number", row[mean_col]), file, line,
                         mean_col + 1);
      }
      std::optional<double> sd;
      if (sd_col != std::string::npos && !io::trim(row[sd_col]).empty()) {
        sd = io::parse_real(row[sd_col]);
        if (!sd) {
          throw InputError(fmt::format("'{}' is not a number", row[sd_col]), file, line,
                           sd_col + 1);
        }
      }
      const auto lo = io::parse_real(row[lo_col]);
      const auto hi = io::parse_real(row[hi_col]);
      if (!lo || !hi) throw InputError("scale_min/scale_max must be numbers", file, line);
      check_scale(*dim, {*lo, *hi}, line);
      check_value(*mean, sd, {*lo, *hi}, line, mean_col + 1, *dim);
      acc[word][index(*dim)].add({*mean, sd});
    }
  } else {
    struct Resolved {
      Dimension dim;
      std::size_t mean_col;
      std::size_t sd_col;
      Scale scale;
    };
    std::vector<Resolved> columns;
    for (const auto& [dim, col] : schema.wide) {
      columns.push_back({dim, need(col.mean),
                         col.sd.empty() ? std::string::npos : need(col.sd), col.scale});
      check_scale(dim, col.scale, 1);
    }
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const auto& row = table.rows[r];
      const auto line = table.line_of(r);
      if (row.size() != table.header.size()) {
        throw InputError(fmt::format("malformed row: expected {} fields, found {}",
                                     table.header.size(), row.size()),
                         file, line);
      }
      const auto word = text::to_lower(io::trim(row[word_col]));
      if (word.empty()) throw InputError("empty word", file, line, word_col + 1);
      for (const auto& c : columns) {
        if (io::trim(row[c.mean_col]).empty()) continue;
        const auto mean = io::parse_real(row[c.mean_col]);
        if (!mean) {
          throw InputError(fmt::format("'{}' is not a number", row[c.mean_col]), file, line,
                           c.mean_col + 1);
        }
        std::optional<double> sd;
        if (c.sd_col != std::string::npos && !io::trim(row[c.sd_col]).empty()) {
          sd = io::parse_real(row[c.sd_col]);
          if (!sd) {
            throw InputError(fmt::format("'{}' is not a number", row[c.sd_col]), file, line,
                             c.sd_col + 1);
          }
        }
        check_value(*mean, sd, c.scale, line, c.mean_col + 1, c.dim);
        acc[word][index(c.dim)].add({*mean, sd});
      }
    }
  }

  for (const auto& [word, dims] : acc) {
    NormSet norms;
    bool any = false;
    for (std::size_t d = 0; d < kDimensionCount; ++d) {
      if (dims[d].mean_n == 0) continue;
      if (dims[d].mean_n > 1) {
        note(log, "lexicon.duplicate_averaged",
             fmt::format("{}: '{}' listed {} times for {}, averaged", lex.source_id, word,
                         dims[d].mean_n, kNames[d]));
      }
      norms[d] = dims[d].result();
      any = true;
    }
    if (any) lex.entries.emplace(word, norms);
  }
  return lex;
}

double rescale(double value, Scale from, Scale to) {
  if (!(from.min < from.max) || !(to.min < to.max)) {
    throw std::invalid_argument("rescale: degenerate range");
  }
  if (value < from.min || value > from.max) {
    throw std::invalid_argument(fmt::format("rescale: {} outside [{}, {}]", value, from.min,
                                            from.max));
  }
  return to.min + (value - from.min) * (to.max - to.min) / (from.max - from.min);
}

double rescale_sd(double sd, Scale from, Scale to) {
  if (!(from.min < from.max) || !(to.min < to.max)) {
    throw std::invalid_argument("rescale_sd: degenerate range");
  }
  return sd * (to.max - to.min) / (from.max - from.min);
}

// ---------------------------------------------------------------------------

MergedLexicon::MergedLexicon(text::Mode mode, CanonicalScales scales)
    : mode_(mode), scales_(scales) {}

std::optional<NormSet> MergedLexicon::lookup(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void MergedLexicon::insert(std::string key, NormSet norms, std::vector<std::string> sources) {
  provenance_[key] = std::move(sources);
  entries_[std::move(key)] = norms;
}

std::optional<NormSet> lookup(const MergedLexicon& merged, const std::string& key) {
  return merged.lookup(key);
}

MergedLexicon merge(std::span<const SourceLexicon> sources, const text::NormalizationConfig& norm,
                    const CanonicalScales& canonical, DecisionLog* log) {
  if (sources.empty()) throw std::invalid_argument("merge: no source lexicons");

  // step 1 + 2: per surface word, per dimension, the rescaled values of every source
  struct Pending {
    std::array<std::vector<double>, kDimensionCount> means;
    std::array<std::vector<double>, kDimensionCount> sds;
    std::set<std::string> sources;
  };
  std::map<std::string, Pending> words;
  for (const auto& src : sources) {
    for (const auto& [word, norms] : src.entries) {
      auto& p = words[word];
      for (std::size_t d = 0; d < kDimensionCount; ++d) {
        if (!norms[d]) continue;
        if (!src.scales[d]) {
          throw InputError(fmt::format("source '{}' has no scale for {}", src.source_id,
                                       kNames[d]));
        }
        p.means[d].push_back(rescale(norms[d]->mean, *src.scales[d], canonical[d]));
        if (norms[d]->sd) p.sds[d].push_back(rescale_sd(*norms[d]->sd, *src.scales[d], canonical[d]));
        p.sources.insert(src.source_id);
      }
    }
  }

  // step 3: collapse words onto keys
  struct Collapsed {
    std::array<Accumulator, kDimensionCount> dims;
    std::set<std::string> sources;
  };
  std::map<std::string, Collapsed> keys;
  for (const auto& [word, p] : words) {
    std::string key = text::normalize_word(word, norm);
    if (key.empty()) continue;
    auto& c = keys[key];
    for (std::size_t d = 0; d < kDimensionCount; ++d) {
      if (p.means[d].empty()) continue;
      if (p.means[d].size() % 2 == 0) {
        note(log, "merge.even_median",
             fmt::format("'{}' {}: {} source values, mean of the central two", word, kNames[d],
                         p.means[d].size()));
      }
      Norm fused{stats::median(p.means[d]), std::nullopt};
      if (!p.sds[d].empty()) fused.sd = stats::median(p.sds[d]);
      c.dims[d].add(fused);
    }
    c.sources.insert(p.sources.begin(), p.sources.end());
  }

  MergedLexicon merged(norm.mode, canonical);
  for (const auto& [key, c] : keys) {
    NormSet norms;
    bool any = false;
    for (std::size_t d = 0; d < kDimensionCount; ++d) {
      if (c.dims[d].mean_n == 0) continue;
      Norm n = c.dims[d].result();
      n.mean = std::clamp(n.mean, canonical[d].min, canonical[d].max);
      norms[d] = n;
      any = true;
    }
    if (any) merged.insert(key, norms, {c.sources.begin(), c.sources.end()});
  }
  return merged;
}

// ---------------------------------------------------------------------------

CoverageReport coverage(const Corpus& corpus, std::span<const SourceLexicon> sources,
                        const MergedLexicon& merged, const text::NormalizationConfig& norm,
                        const AnnotationSet& median, bool with_missing_words) {
  // keys per sonnet, and surface counts of unmatched tokens
  std::vector<std::vector<std::string>> sonnet_keys(corpus.size());
  std::map<std::string, std::size_t> missing;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (auto& t : text::normalize(corpus.sonnets()[i].text, norm)) {
      if (with_missing_words && !merged.contains(t.normalized)) ++missing[t.surface];
      sonnet_keys[i].push_back(std::move(t.normalized));
    }
  }
  std::vector<std::unordered_set<std::string>> source_keys;
  for (const auto& src : sources) {
    std::unordered_set<std::string> keys;
    for (const auto& [word, norms] : src.entries) keys.insert(text::normalize_word(word, norm));
    source_keys.push_back(std::move(keys));
  }

  auto row_for = [&](const std::string& category, const std::vector<std::size_t>& members) {
    std::set<std::string> keys;
    for (auto i : members) keys.insert(sonnet_keys[i].begin(), sonnet_keys[i].end());
    CoverageRow row;
    row.category = category;
    row.mode = norm.mode;
    row.n_keys = keys.size();
    for (const auto& k : keys) row.n_matched += merged.contains(k) ? 1 : 0;
    const double denom = keys.empty() ? 1.0 : static_cast<double>(keys.size());
    row.fraction = static_cast<double>(row.n_matched) / denom;
    for (std::size_t s = 0; s < sources.size(); ++s) {
      std::size_t hit = 0;
      for (const auto& k : keys) hit += source_keys[s].contains(k) ? 1 : 0;
      row.per_source_fractions.emplace_back(sources[s].source_id,
                                            static_cast<double>(hit) / denom);
    }
    return row;
  };

  CoverageReport report;
  std::vector<std::size_t> all(corpus.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  report.rows.push_back(row_for("all", all));
  if (median.rows() > 0) {
    for (const auto& tag : FeatureCatalog::standard().psychological_names()) {
      std::vector<std::size_t> members;
      for (const auto& id : subset_by_tag(median, tag).in_group) {
        if (const auto i = corpus.index_of(id)) members.push_back(*i);
      }
      report.rows.push_back(row_for(tag, members));
    }
  }
  if (with_missing_words) {
    report.missing_words.assign(missing.begin(), missing.end());
    std::stable_sort(report.missing_words.begin(), report.missing_words.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
  }
  return report;
}

}  // namespace gam::lexicon
