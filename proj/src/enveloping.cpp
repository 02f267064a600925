#include "pgca/enveloping.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "pgca/error.hpp"

namespace pgca {

GeneratorOrder canonical_order() {
  return [](const Generator& a, const Generator& b) { return a < b; };
}

Straightener::Straightener(GeneratorOrder order, ReductionStrategy strategy)
    : order_(std::move(order)), strategy_(strategy) {}

bool Straightener::is_canonical(const Word& word) const {
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (order_(word[k + 1], word[k])) return false;
  return true;
}

EnvelopingElement Straightener::straighten(const Word& word) {
  std::optional<std::size_t> descent;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (order_(word[k + 1], word[k])) {
      descent = k;
      if (strategy_ == ReductionStrategy::Leftmost) break;
    }
  }
  if (!descent) return EnvelopingElement(word);
  if (auto hit = cache_.find(word); hit != cache_.end()) return hit->second;

  const std::size_t k = *descent;
  Word swapped = word;
  std::swap(swapped[k], swapped[k + 1]);
  EnvelopingElement result = straighten(swapped);

  for (const auto& [g, c] : bracket_basis(word[k], word[k + 1])) {
    Word shorter;
    shorter.reserve(word.size() - 1);
    shorter.insert(shorter.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
    shorter.push_back(g);
    shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(k) + 2, word.end());
    result.add_scaled(straighten(shorter), c);
  }
  cache_.emplace(word, result);
  return result;
}

EnvelopingElement Straightener::straighten(const EnvelopingElement& u) {
  EnvelopingElement out;
  for (const auto& [w, c] : u) out.add_scaled(straighten(w), c);
  return out;
}

EnvelopingElement Straightener::multiply(const EnvelopingElement& u, const EnvelopingElement& v) {
  EnvelopingElement out;
  for (const auto& [wu, cu] : u)
    for (const auto& [wv, cv] : v) {
      Word joined = wu;
      joined.insert(joined.end(), wv.begin(), wv.end());
      out.add_scaled(straighten(joined), cu * cv);
    }
  return out;
}

EnvelopingElement straighten(const Word& word, ReductionStrategy strategy) {
  Straightener s(canonical_order(), strategy);
  return s.straighten(word);
}

EnvelopingElement multiply(const EnvelopingElement& u, const EnvelopingElement& v) {
  Straightener s;
  return s.multiply(u, v);
}

std::string format_monomial(const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < word.size()) {
    std::size_t run = 1;
    while (k + run < word.size() && word[k + run] == word[k]) ++run;
    if (!out.empty()) out += " ";
    out += word[k].to_string();
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

Word parse_monomial(std::string_view text) {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    std::size_t caret = tok.find('^');
    int exp = 1;
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw Error(ErrorKind::ParseError, "bad exponent in '" + tok + "'");
      exp = std::stoi(e);
      if (exp < 1) throw Error(ErrorKind::ParseError, "exponents must be positive in '" + tok + "'");
      tok.resize(caret);
    }
    Generator g = Generator::parse(tok);
    out.insert(out.end(), static_cast<std::size_t>(exp), g);
  }
  return out;
}

std::string to_string(const EnvelopingElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : u) {
    if (!out.empty()) out += " + ";
    std::string mono = format_monomial(w);
    if (w.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      std::string cs = c.to_string();
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

}  // namespace pgca
