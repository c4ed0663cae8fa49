#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gam::text {

enum class Mode { Raw, Stem, Lemma };

std::string to_string(Mode mode);
/// Parses "raw" | "stem" | "lemma"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view name);

using StopwordList = std::unordered_set<std::string>;
using LemmaTable = std::unordered_map<std::string, std::string>;

struct NormalizationConfig {
  Mode mode = Mode::Stem;
  StopwordList stopwords;
  LemmaTable lemma_table;  // consulted only in lemma mode
  bool lowercase = true;
  bool strip_punctuation = true;

  /// Stopwords lowercase; lemma mode needs a non-empty table.
  /// Throws std::invalid_argument describing the first violation.
  void validate() const;
};

struct Token {
  std::string surface;
  std::size_t position = 0;  // 1-based, counted after stopword removal
  std::string normalized;
};

// UTF-8 helpers ------------------------------------------------------------

/// Lowercases ASCII and the Latin-1 / Latin Extended-A letters used in Spanish.
std::string to_lower(std::string_view utf8);
std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view text);

// Pipeline -----------------------------------------------------------------

/// Whitespace split, edge punctuation stripped (intra-word hyphens and
/// apostrophes kept), diacritics preserved, optional lowercasing.
std::vector<std::string> tokenize(std::string_view text, bool lowercase = true,
                                  bool strip_punctuation = true);

/// Drops stopwords and renumbers survivors 1..n. `normalized` is left equal
/// to the surface form.
std::vector<Token> remove_stopwords(const std::vector<std::string>& tokens,
                                    const StopwordList& stopwords);

/// Spanish Snowball stemmer. Input is expected lowercase UTF-8.
std::string stem(std::string_view word);

/// Table lookup with identity fallback.
std::string lemmatize(std::string_view word, const LemmaTable& table);

/// Key of a single (already tokenized) word under the config's mode.
std::string normalize_word(std::string_view word, const NormalizationConfig& config);

/// tokenize -> remove_stopwords -> mode transform. Tokens whose key comes out
/// empty are dropped before positions are assigned.
std::vector<Token> normalize(std::string_view text, const NormalizationConfig& config);

// Resources -----------------------------------------------------------------

/// Bundled Spanish stopword list (lowercase, accented).
const StopwordList& default_spanish_stopwords();
/// One word per line; blank lines and lines starting with '#' ignored.
StopwordList load_stopwords(const std::filesystem::path& path);
/// Two-column delimited text (surface, lemma); ',', ';' or tab.
LemmaTable load_lemma_table(const std::filesystem::path& path);

}  // namespace gam::text
