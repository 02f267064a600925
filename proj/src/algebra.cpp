#include "pgca/algebra.hpp"

#include <cctype>
#include <string>

#include "pgca/error.hpp"

namespace pgca {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::H: return "H";
    case Family::I: return "I";
    case Family::J: return "J";
    case Family::C1: return "c1";
    case Family::C2: return "c2";
    case Family::C3: return "c3";
  }
  return "?";
}

Generator::Generator(Family family, std::int64_t index) : family_(family), index_(index) {
  if (is_central(family) && index != 0)
    throw Error(ErrorKind::InvalidSpec, "central generators carry no index");
}

Generator Generator::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorKind::ParseError, "bad generator '" + std::string(text) + "'"); };
  if (text == "c1") return c1();
  if (text == "c2") return c2();
  if (text == "c3") return c3();
  if (text.size() < 4 || text[1] != '[' || text.back() != ']') throw fail();
  Family f;
  switch (text[0]) {
    case 'L': f = Family::L; break;
    case 'H': f = Family::H; break;
    case 'I': f = Family::I; break;
    case 'J': f = Family::J; break;
    default: throw fail();
  }
  std::string body(text.substr(2, text.size() - 3));
  std::size_t k = (body[0] == '-' || body[0] == '+') ? 1 : 0;
  if (k == body.size()) throw fail();
  for (std::size_t j = k; j < body.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(body[j]))) throw fail();
  return {f, std::stoll(body)};
}

std::string Generator::to_string() const {
  if (central()) return std::string(family_name(family_));
  return std::string(family_name(family_)) + "[" + std::to_string(index_) + "]";
}

std::vector<Generator> generators_up_to(std::int64_t bound, bool include_centrals) {
  std::vector<Generator> out;
  for (Family f : {Family::L, Family::H, Family::J, Family::I})
    for (std::int64_t n = -bound; n <= bound; ++n) out.emplace_back(f, n);
  if (include_centrals) {
    out.push_back(Generator::c1());
    out.push_back(Generator::c2());
    out.push_back(Generator::c3());
  }
  return out;
}

namespace {

// Brackets with the left family ranked no later than the right one in the
// relation table; `bracket_basis` supplies the antisymmetric completion.
AlgebraElement table_bracket(const Generator& a, const Generator& b) {
  const std::int64_t m = a.index();
  const std::int64_t n = b.index();
  AlgebraElement out;
  switch (a.family()) {
    case Family::L:
      switch (b.family()) {
        case Family::L:
          out.add_term(Generator::L(m + n), Scalar(n - m));
          if (m + n == 0) out.add_term(Generator::c1(), Scalar(mpq_class(mpz_class(m * m * m - m), mpz_class(12))));
          return out;
        case Family::H:
          out.add_term(Generator::H(m + n), Scalar(n));
          if (m + n == 0) out.add_term(Generator::c2(), Scalar(m * m));
          return out;
        case Family::I: out.add_term(Generator::I(m + n), Scalar(n - m)); return out;
        case Family::J: out.add_term(Generator::J(m + n), Scalar(n - m)); return out;
        default: return out;
      }
    case Family::H:
      switch (b.family()) {
        case Family::H:
          if (m + n == 0) out.add_term(Generator::c3(), Scalar(m));
          return out;
        case Family::I: out.add_term(Generator::I(m + n), Scalar(1)); return out;
        case Family::J: out.add_term(Generator::J(m + n), Scalar(-1)); return out;
        default: return out;
      }
    default: return out;
  }
}

// Position of a family in the relation table (L, H, then the abelian rest).
int table_rank(Family f) {
  switch (f) {
    case Family::L: return 0;
    case Family::H: return 1;
    default: return 2;
  }
}

}  // namespace

AlgebraElement bracket_basis(const Generator& a, const Generator& b) {
  if (a.central() || b.central()) return {};
  if (table_rank(a.family()) <= table_rank(b.family())) return table_bracket(a, b);
  return -table_bracket(b, a);
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [gx, cx] : x)
    for (const auto& [gy, cy] : y) out.add_scaled(bracket_basis(gx, gy), cx * cy);
  return out;
}

std::string to_string(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : x) {
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += g.to_string();
    } else {
      std::string cs = c.to_string();
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      out += (compound ? "(" + cs + ")" : cs) + "*" + g.to_string();
    }
  }
  return out;
}

AlgebraElement parse_element(std::string_view text) {
  // Terms are separated by top-level +/- (outside brackets and parentheses).
  AlgebraElement out;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "0") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    Scalar sign(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = Scalar(-1);
      ++pos;
    }
    int depth = 0;
    std::size_t end = pos;
    for (; end < s.size(); ++end) {
      char c = s[end];
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      if (depth == 0 && end > pos && (c == '+' || c == '-') && s[end - 1] != '/' && s[end - 1] != '*') break;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    auto star = term.rfind('*');
    Scalar coeff(1);
    std::string gen = term;
    if (star != std::string::npos && term.back() != 'i') {
      std::string cs = term.substr(0, star);
      if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')') cs = cs.substr(1, cs.size() - 2);
      coeff = Scalar::parse(cs);
      gen = term.substr(star + 1);
    }
    out.add_term(Generator::parse(gen), sign * coeff);
  }
  return out;
}

IJTranslation::IJTranslation(AlgebraElement x) : x_(std::move(x)) {
  for (const auto& [g, c] : x_)
    if (g.family() != Family::I && g.family() != Family::J)
      throw Error(ErrorKind::InvalidTranslation, "translation support must lie in the I/J span, found " + g.to_string());
}

AlgebraElement apply_translation(const IJTranslation& t, const AlgebraElement& y) { return t.apply(y); }

AlgebraElement jacobiator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
  return bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
}

JacobiReport verify_jacobi(std::int64_t index_bound) {
  JacobiReport report;
  report.index_bound = index_bound;
  auto gens = generators_up_to(index_bound);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      for (std::size_t k = j; k < gens.size(); ++k) {
        ++report.triples_checked;
        auto r = jacobiator(element(gens[i]), element(gens[j]), element(gens[k]));
        if (!r.is_zero()) report.violations.push_back({{gens[i], gens[j], gens[k]}, r});
      }
  return report;
}

std::vector<std::array<Generator, 2>> antisymmetry_violations(std::int64_t bound) {
  std::vector<std::array<Generator, 2>> out;
  auto gens = generators_up_to(bound);
  for (const auto& a : gens)
    for (const auto& b : gens)
      if (bracket_basis(a, b) != -bracket_basis(b, a)) out.push_back({a, b});
  return out;
}

std::vector<std::array<Generator, 2>> grading_violations(std::int64_t bound) {
  std::vector<std::array<Generator, 2>> out;
  auto gens = generators_up_to(bound);
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& [g, c] : bracket_basis(a, b))
        if (!g.central() && grade(g) != grade(a) + grade(b)) {
          out.push_back({a, b});
          break;
        }
  return out;
}

}  // namespace pgca
