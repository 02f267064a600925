#include "pgca/degree.hpp"

#include "pgca/error.hpp"

namespace pgca {

ExponentVector ExponentVector::unit(std::size_t length, std::size_t k) {
  auto v = zero(length);
  v.entries.at(k) = 1;
  return v;
}

ExponentVector ExponentVector::from_display(const std::vector<std::int64_t>& written) {
  return {std::vector<std::int64_t>(written.rbegin(), written.rend())};
}

bool ExponentVector::is_zero() const {
  for (auto e : entries)
    if (e != 0) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  if (length() != o.length()) throw Error(ErrorKind::LengthMismatch, "exponent vectors of different length");
  ExponentVector out = *this;
  for (std::size_t k = 0; k < length(); ++k) out.entries[k] += o.entries[k];
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
  if (length() != o.length()) throw Error(ErrorKind::LengthMismatch, "exponent vectors of different length");
  ExponentVector out = *this;
  for (std::size_t k = 0; k < length(); ++k) out.entries[k] -= o.entries[k];
  return out;
}

std::string ExponentVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = length(); k-- > 0;) {
    out += std::to_string(entries[k]);
    if (k != 0) out += ",";
  }
  return out + ")";
}

std::int64_t weight(const ExponentVector& i) {
  const auto l = static_cast<std::int64_t>(i.length());
  std::int64_t total = 0;
  for (std::size_t k = 0; k < i.length(); ++k) total += (l - static_cast<std::int64_t>(k)) * i.entries[k];
  return total;
}

std::strong_ordering reverse_lex_compare(const ExponentVector& a, const ExponentVector& b) {
  if (a.length() != b.length()) throw Error(ErrorKind::LengthMismatch, "exponent vectors of different length");
  for (std::size_t k = 0; k < a.length(); ++k)
    if (a.entries[k] != b.entries[k]) return a.entries[k] <=> b.entries[k];
  return std::strong_ordering::equal;
}

std::strong_ordering principal_compare(const DegreePair& a, const DegreePair& b) {
  if (a.first.length() != a.second.length() || b.first.length() != b.second.length() ||
      a.first.length() != b.first.length())
    throw Error(ErrorKind::LengthMismatch, "inconsistent block lengths");
  const auto wa = weight(a.first) + weight(a.second);
  const auto wb = weight(b.first) + weight(b.second);
  if (auto c = wa <=> wb; c != 0) return c;
  if (auto c = reverse_lex_compare(a.second, b.second); c != 0) return c;
  return reverse_lex_compare(a.first, b.first);
}

std::string to_string(const DegreePair& d) { return "(" + d.first.to_string() + "," + d.second.to_string() + ")"; }

DegreePair monomial_degree(const Word& w, Block block, std::size_t block_length) {
  const Family first = block == Block::JI ? Family::J : Family::H;
  const Family second = block == Block::JI ? Family::I : Family::L;
  DegreePair d{ExponentVector::zero(block_length), ExponentVector::zero(block_length)};
  const auto l = static_cast<std::int64_t>(block_length);
  for (const auto& g : w) {
    if ((g.family() != first && g.family() != second) || g.index() < 0 || g.index() >= l)
      throw Error(ErrorKind::UnsupportedMonomial, g.to_string() + " lies outside the block");
    auto& target = g.family() == first ? d.first : d.second;
    ++target.entries[static_cast<std::size_t>(g.index())];
  }
  return d;
}

DegreePair vector_degree(const InducedVector& v, Block block, std::size_t block_length) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "degree of the zero vector");
  std::optional<DegreePair> best;
  for (const auto& [w, c] : v) {
    auto d = monomial_degree(w, block, block_length);
    if (!best || principal_compare(d, *best) > 0) best = std::move(d);
  }
  return *best;
}

std::string_view case_name(ReductionCase c) {
  switch (c) {
    case ReductionCase::JINonzeroJ: return "JI_j_nonzero";
    case ReductionCase::JIOnlyI: return "JI_i_only";
    case ReductionCase::HLNonzeroH: return "HL_h_nonzero";
    case ReductionCase::HLOnlyL: return "HL_l_only";
  }
  return "?";
}

ReductionCase parse_case(std::string_view text) {
  for (auto c : {ReductionCase::JINonzeroJ, ReductionCase::JIOnlyI, ReductionCase::HLNonzeroH, ReductionCase::HLOnlyL})
    if (case_name(c) == text) return c;
  throw Error(ErrorKind::InvalidSpec, "unknown degree-reduction case '" + std::string(text) + "'");
}

DegreeReductionReport check_degree_reduction(const WhittakerModule& module, const InducedVector& v,
                                             ReductionCase c) {
  const WhittakerDatum& psi = module.datum();
  auto fail = [](const std::string& why) { return Error(ErrorKind::PreconditionViolated, why); };
  const std::int64_t m = psi.m;
  const std::int64_t n = psi.n;
  const std::int64_t k = m + n - 1;
  if (m < n) throw fail("degree reduction needs m >= n");
  if (psi.psi(Generator::I(k)).is_zero() || psi.psi(Generator::J(k)).is_zero())
    throw fail("degree reduction needs psi(I_{m+n-1}) psi(J_{m+n-1}) != 0");

  const bool ji = c == ReductionCase::JINonzeroJ || c == ReductionCase::JIOnlyI;
  if (ji && n < 1) throw fail("the J/I block is empty for n = 0");
  if (!ji) {
    if ((m + n) % 2 != 0) throw fail("the H/L block needs m + n even");
    for (const auto& [g, val] : psi.values)
      if ((g.family() == Family::L || g.family() == Family::H) && g.index() >= m + n)
        throw fail("the H/L block needs psi(L_p) = psi(H_p) = 0 for p >= m+n");
  }
  const std::size_t l = static_cast<std::size_t>(ji ? n : m);
  const Block block = ji ? Block::JI : Block::HL;

  DegreeReductionReport report;
  report.reduction_case = c;
  report.block_length = l;
  try {
    report.degree = vector_degree(v, block, l);
  } catch (const Error& e) {
    throw fail(std::string("vector does not fit the block: ") + e.what());
  }
  const auto& [first, second] = report.degree;
  if (first.is_zero() && second.is_zero()) throw fail("vector is a multiple of the cyclic vector");

  std::vector<Generator> ops;
  const bool needs_first = c == ReductionCase::JINonzeroJ || c == ReductionCase::HLNonzeroH;
  if (needs_first) {
    if (first.is_zero()) throw fail("case needs a nonzero first block");
    std::size_t r = 0;
    while (first[r] == 0) ++r;
    report.predicted = {first - ExponentVector::unit(l, r), second};
    const std::int64_t p = k - static_cast<std::int64_t>(r);
    ops.push_back(ji ? Generator::H(p) : Generator::I(p));
  } else {
    if (!first.is_zero()) throw fail("case needs a zero first block");
    std::size_t s = l - 1;
    while (second[s] == 0) --s;
    report.predicted = {first, second - ExponentVector::unit(l, s)};
    const std::int64_t p = k - static_cast<std::int64_t>(s);
    if (ji) {
      ops.push_back(Generator::H(p));
      ops.push_back(Generator::L(p));
    } else {
      ops.push_back(Generator::I(p));
      ops.push_back(Generator::J(p));
    }
  }

  for (const auto& y : ops) {
    ReductionAttempt attempt{y, psi.psi(y), std::nullopt};
    InducedVector image = module.act(y, v) - attempt.shift * v;
    if (!image.is_zero()) {
      try {
        attempt.observed = vector_degree(image, block, l);
      } catch (const Error&) {
        attempt.observed.reset();
      }
    }
    if (attempt.observed && *attempt.observed == report.predicted) report.holds = true;
    report.attempts.push_back(std::move(attempt));
  }
  return report;
}

DegreeReductionReport check_degree_reduction(const WhittakerDatum& psi, const InducedVector& v, ReductionCase c) {
  WhittakerModule module(psi);
  return check_degree_reduction(module, v, c);
}

}  // namespace pgca
