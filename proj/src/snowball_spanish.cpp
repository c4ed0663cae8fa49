// Spanish stemmer following the Snowball algorithm description
// (https://snowballstem.org/algorithms/spanish/stemmer.html).
//
// Works on UTF-32 so that accented vowels count as single letters. Every
// "search for the longest among" step looks for the longest listed suffix
// that ends the word and then applies that entry's condition; when the
// condition fails the step fails, shorter alternatives are not retried.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>

#include "gam/text.hpp"

namespace gam::text {

namespace {

using Word = std::u32string;
using Suffix = std::u32string_view;

bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'á': case U'é': case U'í': case U'ó': case U'ú': case U'ü':
      return true;
    default:
      return false;
  }
}

bool ends_with(const Word& w, Suffix s) {
  return w.size() >= s.size() && std::u32string_view(w).substr(w.size() - s.size()) == s;
}

/// Longest suffix of `w` among `candidates` ending at `end`, searched no
/// further left than `floor`. Returns its length, 0 when none matches.
std::size_t longest_suffix(const Word& w, std::size_t end, std::size_t floor,
                           std::initializer_list<Suffix> candidates, Suffix* matched = nullptr) {
  std::size_t best = 0;
  for (Suffix s : candidates) {
    if (s.size() <= best || s.size() > end || end - s.size() < floor) continue;
    if (std::u32string_view(w).substr(end - s.size(), s.size()) == s) {
      best = s.size();
      if (matched != nullptr) *matched = s;
    }
  }
  return best;
}

struct Regions {
  std::size_t rv;
  std::size_t r1;
  std::size_t r2;
};

std::size_t region_after_vowel_consonant(const Word& w, std::size_t from) {
  for (std::size_t i = from + 1; i < w.size(); ++i) {
    if (!is_vowel(w[i]) && is_vowel(w[i - 1])) return i + 1;
  }
  return w.size();
}

Regions mark_regions(const Word& w) {
  const std::size_t n = w.size();
  Regions r{n, n, n};
  if (n >= 2) {
    if (!is_vowel(w[1])) {
      // second letter a consonant: after the next vowel
      for (std::size_t i = 2; i < n; ++i) {
        if (is_vowel(w[i])) {
          r.rv = i + 1;
          break;
        }
      }
    } else if (is_vowel(w[0])) {
      // first two letters vowels: after the next consonant
      for (std::size_t i = 2; i < n; ++i) {
        if (!is_vowel(w[i])) {
          r.rv = i + 1;
          break;
        }
      }
    } else if (n >= 3) {
      r.rv = 3;
    }
  }
  r.r1 = region_after_vowel_consonant(w, 0);
  r.r2 = r.r1 < n ? region_after_vowel_consonant(w, r.r1) : n;
  return r;
}

char32_t strip_acute(char32_t c) {
  switch (c) {
    case U'á': return U'a';
    case U'é': return U'e';
    case U'í': return U'i';
    case U'ó': return U'o';
    case U'ú': return U'u';
    default: return c;
  }
}

// Step 0: attached pronoun after a gerund or infinitive.
void attached_pronoun(Word& w, const Regions& r) {
  const std::size_t pronoun = longest_suffix(
      w, w.size(), 0,
      {U"me", U"se", U"sela", U"selo", U"selas", U"selos", U"la", U"le", U"lo", U"las", U"les",
       U"los", U"nos"});
  if (pronoun == 0) return;
  const std::size_t end = w.size() - pronoun;
  Suffix verb;
  const std::size_t len =
      longest_suffix(w, end, 0,
                     {U"iéndo", U"ándo", U"ár", U"ér", U"ír", U"ando", U"iendo", U"ar", U"er",
                      U"ir", U"yendo"},
                     &verb);
  if (len == 0 || end - len < r.rv) return;
  if (verb == U"yendo") {
    if (end - len == 0 || w[end - len - 1] != U'u') return;
    w.erase(end);
    return;
  }
  w.erase(end);
  if (verb == U"iéndo" || verb == U"ándo" || verb == U"ár" || verb == U"ér" || verb == U"ír") {
    for (std::size_t i = end - len; i < end; ++i) w[i] = strip_acute(w[i]);
  }
}

// Deletes `suffix_len` chars at the end if the suffix starts in R2.
bool delete_if_in(Word& w, std::size_t suffix_len, std::size_t region) {
  if (w.size() - suffix_len < region) return false;
  w.erase(w.size() - suffix_len);
  return true;
}

// Step 1: standard suffix removal. Returns true when something was removed.
bool standard_suffix(Word& w, const Regions& r) {
  Suffix s;
  const std::size_t len = longest_suffix(
      w, w.size(), 0,
      {U"anza", U"anzas", U"ico", U"ica", U"icos", U"icas", U"ismo", U"ismos", U"able",
       U"ables", U"ible", U"ibles", U"ista", U"istas", U"oso", U"osa", U"osos", U"osas",
       U"amiento", U"amientos", U"imiento", U"imientos",
       U"adora", U"ador", U"ación", U"adoras", U"adores", U"aciones", U"ante", U"antes",
       U"ancia", U"ancias",
       U"logía", U"logías",
       U"ución", U"uciones",
       U"encia", U"encias",
       U"amente",
       U"mente",
       U"idad", U"idades",
       U"iva", U"ivo", U"ivas", U"ivos"},
      &s);
  if (len == 0) return false;
  const std::size_t start = w.size() - len;
  auto in_r2 = [&](std::size_t pos) { return pos >= r.r2; };

  auto one_of = [&](std::initializer_list<Suffix> group) {
    return std::find(group.begin(), group.end(), s) != group.end();
  };

  if (one_of({U"adora", U"ador", U"ación", U"adoras", U"adores", U"aciones", U"ante", U"antes",
              U"ancia", U"ancias"})) {
    if (!in_r2(start)) return false;
    w.erase(start);
    if (ends_with(w, U"ic")) delete_if_in(w, 2, r.r2);
    return true;
  }
  if (one_of({U"logía", U"logías"})) {
    if (!in_r2(start)) return false;
    w.replace(start, len, U"log");
    return true;
  }
  if (one_of({U"ución", U"uciones"})) {
    if (!in_r2(start)) return false;
    w.replace(start, len, U"u");
    return true;
  }
  if (one_of({U"encia", U"encias"})) {
    if (!in_r2(start)) return false;
    w.replace(start, len, U"ente");
    return true;
  }
  if (s == U"amente") {
    if (start < r.r1) return false;
    w.erase(start);
    Suffix pre;
    const std::size_t plen = longest_suffix(w, w.size(), 0, {U"iv", U"os", U"ic", U"ad"}, &pre);
    if (plen > 0 && delete_if_in(w, plen, r.r2) && pre == U"iv" && ends_with(w, U"at")) {
      delete_if_in(w, 2, r.r2);
    }
    return true;
  }
  if (s == U"mente") {
    if (!in_r2(start)) return false;
    w.erase(start);
    const std::size_t plen = longest_suffix(w, w.size(), 0, {U"ante", U"able", U"ible"});
    if (plen > 0) delete_if_in(w, plen, r.r2);
    return true;
  }
  if (one_of({U"idad", U"idades"})) {
    if (!in_r2(start)) return false;
    w.erase(start);
    const std::size_t plen = longest_suffix(w, w.size(), 0, {U"abil", U"ic", U"iv"});
    if (plen > 0) delete_if_in(w, plen, r.r2);
    return true;
  }
  if (one_of({U"iva", U"ivo", U"ivas", U"ivos"})) {
    if (!in_r2(start)) return false;
    w.erase(start);
    if (ends_with(w, U"at")) delete_if_in(w, 2, r.r2);
    return true;
  }
  // anza ... imientos: plain deletion in R2
  if (!in_r2(start)) return false;
  w.erase(start);
  return true;
}

// Step 2a: verb suffixes beginning with y, preceded by u.
bool y_verb_suffix(Word& w, const Regions& r) {
  const std::size_t len = longest_suffix(
      w, w.size(), r.rv,
      {U"ya", U"ye", U"yan", U"yen", U"yeron", U"yendo", U"yo", U"yó", U"yas", U"yes", U"yais",
       U"yamos"});
  if (len == 0) return false;
  const std::size_t start = w.size() - len;
  if (start == 0 || w[start - 1] != U'u') return false;
  w.erase(start);
  return true;
}

// Step 2b: other verb suffixes.
bool verb_suffix(Word& w, const Regions& r) {
  Suffix s;
  const std::size_t len = longest_suffix(
      w, w.size(), r.rv,
      {U"en", U"es", U"éis", U"emos",
       U"arían", U"arías", U"arán", U"arás", U"aríais", U"aría", U"aréis", U"aríamos",
       U"aremos", U"ará", U"aré", U"erían", U"erías", U"erán", U"erás", U"eríais", U"ería",
       U"eréis", U"eríamos", U"eremos", U"erá", U"eré", U"irían", U"irías", U"irán", U"irás",
       U"iríais", U"iría", U"iréis", U"iríamos", U"iremos", U"irá", U"iré", U"aba", U"ada",
       U"ida", U"ía", U"ara", U"iera", U"ad", U"ed", U"id", U"ase", U"iese", U"aste", U"iste",
       U"an", U"aban", U"ían", U"aran", U"ieran", U"asen", U"iesen", U"aron", U"ieron",
       U"ado", U"ido", U"ando", U"iendo", U"ió", U"ar", U"er", U"ir", U"as", U"abas",
       U"adas", U"idas", U"ías", U"aras", U"ieras", U"ases", U"ieses", U"ís", U"áis",
       U"abais", U"íais", U"arais", U"ierais", U"aseis", U"ieseis", U"asteis", U"isteis",
       U"ados", U"idos", U"amos", U"ábamos", U"íamos", U"imos", U"áramos", U"iéramos",
       U"iésemos", U"ásemos"},
      &s);
  if (len == 0) return false;
  std::size_t start = w.size() - len;
  if (s == U"en" || s == U"es" || s == U"éis" || s == U"emos") {
    if (start >= 2 && w[start - 1] == U'u' && w[start - 2] == U'g') --start;
  }
  w.erase(start);
  return true;
}

// Step 3: residual suffix.
void residual_suffix(Word& w, const Regions& r) {
  Suffix s;
  const std::size_t len =
      longest_suffix(w, w.size(), 0, {U"os", U"a", U"o", U"á", U"í", U"ó", U"e", U"é"}, &s);
  if (len == 0) return;
  const std::size_t start = w.size() - len;
  if (start < r.rv) return;
  w.erase(start);
  if (s == U"e" || s == U"é") {
    const std::size_t n = w.size();
    if (n >= 2 && w[n - 1] == U'u' && w[n - 2] == U'g' && n - 1 >= r.rv) w.erase(n - 1);
  }
}

}  // namespace

std::string stem(std::string_view word) {
  Word w = decode_utf8(word);
  if (w.empty()) return {};

  // Region marks are taken once on the input word; later steps only edit
  // the tail, so the marks stay valid.
  const Regions r = mark_regions(w);
  attached_pronoun(w, r);
  if (!standard_suffix(w, r)) {
    if (!y_verb_suffix(w, r)) verb_suffix(w, r);
  }
  residual_suffix(w, r);
  for (auto& c : w) c = strip_acute(c);
  return encode_utf8(w);
}

}  // namespace gam::text
