#include "gam/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "gam/outcome.hpp"
#include "gam/table_io.hpp"

namespace gam {

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  if (text == "both") return ReportFormat::Both;
  throw std::invalid_argument("unknown report format '" + std::string(text) +
                              "' (expected csv, json or both)");
}

namespace {

std::vector<int> parse_ids(const std::string& value, const std::string& file, std::size_t line) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = io::trim(item);
    if (item.empty()) continue;
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw InputError("expected a list of annotator ids, got '" + value + "'", file, line);
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
  const auto entries = io::read_key_values(path);
  const auto base = path.parent_path();
  const std::string file = path.string();
  auto resolve = [&](const std::string& value) {
    std::filesystem::path p(value);
    return p.is_absolute() ? p : base / p;
  };

  RunConfig c;
  bool texts_set = false;
  std::map<std::string, LexiconSource> lexicons;
  for (const auto& [key, value, line] : entries) {
    try {
      if (key == "metadata") {
        c.metadata = resolve(value);
      } else if (key == "texts") {
        c.texts = resolve(value);
        texts_set = true;
      } else if (key.starts_with("annotation.")) {
        const auto ids = parse_ids(key.substr(11), file, line);
        if (ids.size() != 1) throw InputError("expected annotation.<id>", file, line);
        c.annotations.emplace_back(ids.front(), resolve(value));
      } else if (key.starts_with("alias.")) {
        c.aliases[key.substr(6)] = value;
      } else if (key == "reverse_valence") {
        c.reversed_valence = parse_ids(value, file, line);
      } else if (key.starts_with("lexicon.")) {
        auto name = key.substr(8);
        const bool schema = name.ends_with(".schema");
        if (schema) name.resize(name.size() - 7);
        auto& src = lexicons[name];
        src.name = name;
        if (schema) {
          src.schema = resolve(value);
        } else {
          src.file = resolve(value);
        }
      } else if (key == "stopwords") {
        if (value == "none") {
          c.no_stopwords = true;
        } else if (value != "default") {
          c.stopwords = resolve(value);
        }
      } else if (key == "lemma_table") {
        c.lemma_table = resolve(value);
      } else if (key == "mode") {
        c.mode = text::parse_mode(value);
      } else if (key.starts_with("scale.")) {
        const auto dim = lexicon::parse_dimension(key.substr(6));
        if (!dim) throw InputError("unknown dimension in '" + key + "'", file, line);
        std::istringstream in(value);
        lexicon::Scale s;
        if (!(in >> s.min >> s.max) || s.max <= s.min) {
          throw InputError("expected 'min max' with min < max", file, line);
        }
        c.scales[lexicon::index(*dim)] = s;
      } else if (key == "out") {
        c.out = resolve(value);
      } else if (key == "format") {
        c.format = parse_report_format(value);
      } else if (key == "histogram_bin_width") {
        const auto w = io::parse_real(value);
        if (!w || *w <= 0.0) throw InputError("bin width must be a positive number", file, line);
        c.histogram_bin_width = *w;
      } else {
        throw InputError("unknown key '" + key + "'", file, line);
      }
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what(), file, line);
    }
  }
  if (!texts_set && !c.metadata.empty()) c.texts = c.metadata.parent_path();
  std::sort(c.annotations.begin(), c.annotations.end());
  for (auto& [name, src] : lexicons) {
    if (src.file.empty()) throw InputError("lexicon '" + name + "' has a schema but no file", file);
    c.lexicons.push_back(std::move(src));
  }
  return c;
}

text::NormalizationConfig normalization_for(const RunConfig& config) {
  text::NormalizationConfig n;
  n.mode = config.mode;
  if (config.no_stopwords) {
    n.stopwords.clear();
  } else if (config.stopwords) {
    n.stopwords = text::load_stopwords(*config.stopwords);
  } else {
    n.stopwords = text::default_spanish_stopwords();
  }
  if (config.lemma_table) n.lemma_table = text::load_lemma_table(*config.lemma_table);
  n.validate();
  return n;
}

}  // namespace gam
