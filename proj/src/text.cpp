#include "gam/text.hpp"

#include <fstream>
#include <stdexcept>

#include "gam/outcome.hpp"
#include "gam/table_io.hpp"

namespace gam::text {

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Raw: return "raw";
    case Mode::Stem: return "stem";
    case Mode::Lemma: return "lemma";
  }
  return "raw";
}

Mode parse_mode(std::string_view name) {
  if (name == "raw") return Mode::Raw;
  if (name == "stem") return Mode::Stem;
  if (name == "lemma") return Mode::Lemma;
  throw std::invalid_argument("unknown normalization mode '" + std::string(name) +
                              "' (expected raw, stem or lemma)");
}

void NormalizationConfig::validate() const {
  for (const auto& w : stopwords) {
    if (to_lower(w) != w) throw std::invalid_argument("stopword not lowercase: " + w);
  }
  if (mode == Mode::Lemma && lemma_table.empty()) {
    throw std::invalid_argument("lemma mode requires a non-empty lemma table");
  }
}

// ---------------------------------------------------------------------------

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 1;
    if (c < 0x80) {
      cp = c;
    } else if ((c >> 5) == 0x6) {
      cp = c & 0x1F;
      len = 2;
    } else if ((c >> 4) == 0xE) {
      cp = c & 0x0F;
      len = 3;
    } else if ((c >> 3) == 0x1E) {
      cp = c & 0x07;
      len = 4;
    } else {
      out.push_back(U'�');
      ++i;
      continue;
    }
    if (i + len > s.size()) {
      out.push_back(U'�');
      break;
    }
    bool valid = true;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc >> 6) != 0x2) {
        valid = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!valid) {
      out.push_back(U'�');
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

namespace {

char32_t lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  if (c >= 0x100 && c <= 0x17F && c % 2 == 0 && c != 0x130 && c != 0x138) return c + 1;
  return c;
}

bool is_word_char(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') || (c >= U'0' && c <= U'9')) {
    return true;
  }
  if (c >= 0xC0 && c <= 0x24F) return c != 0xD7 && c != 0xF7;
  return c >= 0x370 && c != 0x2014 && c != 0x2013 && !(c >= 0x2000 && c <= 0x206F) &&
         !(c >= 0x3000 && c <= 0x303F);
}

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' ||
         c == 0xA0 || c == 0x2028 || c == 0x2029 || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x3000;
}

}  // namespace

std::string to_lower(std::string_view utf8) {
  auto cps = decode_utf8(utf8);
  for (auto& c : cps) c = lower(c);
  return encode_utf8(cps);
}

std::vector<std::string> tokenize(std::string_view text, bool lowercase, bool strip_punctuation) {
  const auto cps = decode_utf8(text);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !is_space(cps[j])) ++j;
    if (j > i) {
      std::size_t b = i;
      std::size_t e = j;
      if (strip_punctuation) {
        while (b < e && !is_word_char(cps[b])) ++b;
        while (e > b && !is_word_char(cps[e - 1])) --e;
      }
      if (e > b) {
        std::u32string word(cps.begin() + static_cast<std::ptrdiff_t>(b),
                            cps.begin() + static_cast<std::ptrdiff_t>(e));
        if (lowercase) {
          for (auto& c : word) c = lower(c);
        }
        out.push_back(encode_utf8(word));
      }
    }
    i = j;
  }
  return out;
}

std::vector<Token> remove_stopwords(const std::vector<std::string>& tokens,
                                    const StopwordList& stopwords) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (stopwords.contains(t)) continue;
    out.push_back({t, out.size() + 1, t});
  }
  return out;
}

std::string lemmatize(std::string_view word, const LemmaTable& table) {
  const auto it = table.find(std::string(word));
  return it == table.end() ? std::string(word) : it->second;
}

std::string normalize_word(std::string_view word, const NormalizationConfig& config) {
  switch (config.mode) {
    case Mode::Raw: return std::string(word);
    case Mode::Stem: return stem(word);
    case Mode::Lemma: return lemmatize(word, config.lemma_table);
  }
  return std::string(word);
}

std::vector<Token> normalize(std::string_view text, const NormalizationConfig& config) {
  const auto tokens = tokenize(text, config.lowercase, config.strip_punctuation);
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (config.stopwords.contains(t)) continue;
    std::string key = normalize_word(t, config);
    if (key.empty()) continue;
    out.push_back({t, out.size() + 1, std::move(key)});
  }
  return out;
}

// ---------------------------------------------------------------------------

StopwordList load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open stopword file", path.string());
  StopwordList out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto words = tokenize(line, true, false);
    if (words.empty() || words.front().starts_with('#')) continue;
    out.insert(words.front());
  }
  return out;
}

LemmaTable load_lemma_table(const std::filesystem::path& path) {
  const auto table = io::read_delimited(path, /*has_header=*/false);
  LemmaTable out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (r == 0 && row.size() >= 2 && io::trim(row[0]) == "surface" && io::trim(row[1]) == "lemma") {
      continue;
    }
    if (row.size() < 2) {
      throw InputError("lemma table row needs two columns", path.string(), table.line_of(r));
    }
    const auto surface = to_lower(io::trim(row[0]));
    const auto lemma = to_lower(io::trim(row[1]));
    if (surface.empty() || lemma.empty()) {
      throw InputError("empty surface or lemma", path.string(), table.line_of(r));
    }
    out.insert_or_assign(surface, lemma);
  }
  return out;
}

}  // namespace gam::text
