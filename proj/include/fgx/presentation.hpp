// Finitely presented groups: generator/relator words and their parser.
// Relator syntax: `*`-separated factors with `^` integer exponents,
// e.g. "a^3", "(a*b)^3", "a^-1*b".
#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "common.hpp"

namespace fgx {

// A word is a product of generator powers; interpreted as a relator it
// equals the identity.
struct Word {
  std::vector<std::pair<int, int>> factors;  // (generator index, exponent)
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<int> central;  // generator indices declared central

  int gen_index(const std::string& name) const {
    for (int i = 0; i < int(generators.size()); ++i)
      if (generators[i] == name) return i;
    fail("unknown generator '" + name + "'");
  }

  // Letters encode generators and inverses: gen i -> 2i, inverse -> 2i+1.
  static int inverse_letter(int l) { return l ^ 1; }

  static void append_factor(std::vector<int>& letters, int gen, long long exp) {
    int l = exp >= 0 ? 2 * gen : 2 * gen + 1;
    for (long long c = exp < 0 ? -exp : exp; c > 0; --c) letters.push_back(l);
  }

  static std::vector<int> word_letters(const Word& w) {
    std::vector<int> letters;
    for (auto& [g, e] : w.factors) append_factor(letters, g, e);
    return letters;
  }

  // All relators as letter sequences, with each declared-central generator z
  // expanded to commutators [z,g] against every other generator.
  std::vector<std::vector<int>> relator_letters() const {
    std::vector<std::vector<int>> out;
    for (const Word& w : relators) {
      for (auto& [g, e] : w.factors)
        if (g < 0 || g >= int(generators.size())) fail("relator references invalid generator");
      out.push_back(word_letters(w));
    }
    for (int z : central) {
      if (z < 0 || z >= int(generators.size())) fail("central marker references invalid generator");
      for (int g = 0; g < int(generators.size()); ++g) {
        if (g == z) continue;
        out.push_back({2 * z, 2 * g, 2 * z + 1, 2 * g + 1});
      }
    }
    return out;
  }
};

namespace detail {

struct WordParser {
  const std::string& src;
  const std::vector<std::string>& gens;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) { ++pos, skip_ws(); return true; }
    return false;
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < src.size() && (src[pos] == '-' || src[pos] == '+')) ++pos;
    if (pos >= src.size() || !std::isdigit((unsigned char)src[pos]))
      fail("expected integer in word '" + src + "' at position " + std::to_string(start));
    while (pos < src.size() && std::isdigit((unsigned char)src[pos])) ++pos;
    return std::stoll(src.substr(start, pos - start));
  }

  std::string parse_name() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) ++pos;
    if (pos == start) fail("expected generator name in word '" + src + "'");
    return src.substr(start, pos - start);
  }

  static std::vector<std::pair<int, int>> invert(const std::vector<std::pair<int, int>>& w) {
    std::vector<std::pair<int, int>> r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.emplace_back(it->first, -it->second);
    return r;
  }

  std::vector<std::pair<int, int>> parse_factor() {
    std::vector<std::pair<int, int>> base;
    if (eat('(')) {
      base = parse_word();
      if (!eat(')')) fail("missing ')' in word '" + src + "'");
    } else {
      std::string name = parse_name();
      int gi = -1;
      for (int i = 0; i < int(gens.size()); ++i)
        if (gens[i] == name) gi = i;
      if (gi < 0) fail("unknown generator '" + name + "' in word '" + src + "'");
      base = {{gi, 1}};
    }
    skip_ws();
    if (eat('^')) {
      long long e = parse_int();
      if (e == 0) return {};
      std::vector<std::pair<int, int>> r;
      auto block = e < 0 ? invert(base) : base;
      for (long long c = e < 0 ? -e : e; c > 0; --c) r.insert(r.end(), block.begin(), block.end());
      return r;
    }
    return base;
  }

  std::vector<std::pair<int, int>> parse_word() {
    std::vector<std::pair<int, int>> w = parse_factor();
    while (true) {
      skip_ws();
      if (pos >= src.size() || src[pos] == ')') break;
      if (src[pos] == '*') ++pos;
      auto f = parse_factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }
};

}  // namespace detail

inline Word parse_word(const std::string& text, const std::vector<std::string>& generators) {
  detail::WordParser p{text, generators};
  Word w;
  auto flat = p.parse_word();
  p.skip_ws();
  if (p.pos != text.size()) fail("trailing characters in word '" + text + "'");
  // merge adjacent equal-generator factors
  for (auto& [g, e] : flat) {
    if (!w.factors.empty() && w.factors.back().first == g)
      w.factors.back().second += e;
    else
      w.factors.emplace_back(g, e);
    if (!w.factors.empty() && w.factors.back().second == 0) w.factors.pop_back();
  }
  return w;
}

inline std::string word_to_string(const Word& w, const std::vector<std::string>& generators) {
  if (w.factors.empty()) return "1";
  std::string s;
  for (auto& [g, e] : w.factors) {
    if (!s.empty()) s += "*";
    s += generators[g];
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline Presentation make_presentation(std::vector<std::string> generators,
                                      const std::vector<std::string>& relator_texts,
                                      const std::vector<std::string>& central_names = {}) {
  Presentation p;
  p.generators = std::move(generators);
  for (const auto& t : relator_texts) p.relators.push_back(parse_word(t, p.generators));
  for (const auto& c : central_names) p.central.push_back(p.gen_index(c));
  return p;
}

}  // namespace fgx
