#include "pgca/whittaker.hpp"

#include <algorithm>

#include "pgca/error.hpp"
#include "pgca/matrix.hpp"

namespace pgca {

namespace {

bool is_lh(Family f) { return f == Family::L || f == Family::H; }

std::size_t central_slot(Family f) {
  switch (f) {
    case Family::C1: return 0;
    case Family::C2: return 1;
    default: return 2;
  }
}

}  // namespace

bool WhittakerDatum::in_subalgebra(const Generator& g) const {
  if (g.central()) return true;
  return g.index() >= (is_lh(g.family()) ? m : n);
}

bool WhittakerDatum::is_free(const Generator& g) const { return !in_subalgebra(g); }

bool WhittakerDatum::forced_zero(const Generator& g) const {
  switch (g.family()) {
    case Family::L: return g.index() >= 2 * m + 1;
    case Family::H: return g.index() >= 2 * m;
    case Family::I:
    case Family::J: return g.index() >= m + n;
    default: return false;
  }
}

Scalar WhittakerDatum::psi(const Generator& g) const {
  if (g.central()) return centrals[central_slot(g.family())];
  auto it = values.find(g);
  return it == values.end() ? Scalar() : it->second;
}

std::int64_t WhittakerDatum::free_weight(const Generator& g) const {
  return (is_lh(g.family()) ? m : n) - g.index();
}

std::int64_t WhittakerDatum::free_weight(const Word& w) const {
  std::int64_t total = 0;
  for (const auto& g : w) total += free_weight(g);
  return total;
}

WhittakerDatum validate_whittaker(const std::map<Generator, Scalar>& raw, std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 0) throw Error(ErrorKind::InvalidSpec, "Whittaker datum needs m >= 1 and n >= 0");
  WhittakerDatum d;
  d.m = m;
  d.n = n;
  for (const auto& [g, v] : raw) {
    if (g.central()) {
      d.centrals[central_slot(g.family())] = v;
      continue;
    }
    if (!d.in_subalgebra(g))
      throw Error(ErrorKind::OutOfSubalgebra, g.to_string() + " is not in the subalgebra G^(" + std::to_string(m) +
                                                  "," + std::to_string(n) + ")");
    if (v.is_zero()) continue;
    if (d.forced_zero(g))
      throw Error(ErrorKind::DerivedAlgebraViolation, "psi(" + g.to_string() + ") must vanish");
    d.values.emplace(g, v);
  }
  return d;
}

WhittakerModule::WhittakerModule(WhittakerDatum datum) : datum_(std::move(datum)) {}

InducedVector WhittakerModule::act(const Generator& g, const InducedVector& v) const {
  InducedVector out;
  for (const auto& [w, c] : v) out.add_scaled(act_word(g, w), c);
  return out;
}

InducedVector WhittakerModule::act(const AlgebraElement& x, const InducedVector& v) const {
  InducedVector out;
  for (const auto& [g, c] : x) out.add_scaled(act(g, v), c);
  return out;
}

// g f1 f2 ... fk w = f1 (g f2 ... fk w) + [g, f1] f2 ... fk w, unless g is
// free and may already stand in front of f1.
InducedVector WhittakerModule::act_word(const Generator& g, const Word& w) const {
  if (g.central()) return datum_.psi(g) * InducedVector(w);
  const bool free = datum_.is_free(g);
  if (w.empty()) return free ? InducedVector(Word{g}) : datum_.psi(g) * InducedVector(w);
  if (free && !(w.front() < g)) {
    Word longer;
    longer.reserve(w.size() + 1);
    longer.push_back(g);
    longer.insert(longer.end(), w.begin(), w.end());
    return InducedVector(longer);
  }
  auto key = std::make_pair(g, w);
  {
    std::lock_guard lock(mutex_);
    if (auto hit = cache_.find(key); hit != cache_.end()) return hit->second;
  }
  const Generator& head = w.front();
  Word rest(w.begin() + 1, w.end());
  InducedVector result = act(head, act_word(g, rest));
  result += act(bracket_basis(g, head), InducedVector(rest));
  {
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), result);
  }
  return result;
}

std::int64_t WhittakerModule::annihilation_bound(const Word& w) const {
  std::int64_t bound = std::max(2 * datum_.m, datum_.m + datum_.n - 1);
  for (const auto& g : w)
    if (g.index() < 0) bound -= g.index();
  return bound;
}

std::int64_t WhittakerModule::annihilation_bound(const InducedVector& v) const {
  std::int64_t bound = annihilation_bound(Word{});
  for (const auto& [w, c] : v) bound = std::max(bound, annihilation_bound(w));
  return bound;
}

InducedVector whittaker_act(const WhittakerDatum& psi, const Generator& g, const InducedVector& v) {
  return WhittakerModule(psi).act(g, v);
}

std::vector<Word> whittaker_basis(const WhittakerDatum& psi, std::int64_t weight_bound) {
  std::vector<Generator> gens;
  for (Family f : {Family::L, Family::H, Family::J, Family::I}) {
    const std::int64_t top = is_lh(f) ? psi.m : psi.n;
    for (std::int64_t k = top - weight_bound; k < top; ++k) gens.emplace_back(f, k);
  }
  std::sort(gens.begin(), gens.end());

  std::vector<Word> out;
  Word current;
  // Non-decreasing words over `gens` starting at position `from`.
  auto extend = [&](auto&& self, std::size_t from, std::int64_t budget) -> void {
    for (std::size_t k = from; k < gens.size(); ++k) {
      const std::int64_t w = psi.free_weight(gens[k]);
      if (w > budget) continue;
      current.push_back(gens[k]);
      out.push_back(current);
      self(self, k, budget - w);
      current.pop_back();
    }
  };
  extend(extend, 0, weight_bound);
  std::stable_sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    const auto wa = psi.free_weight(a);
    const auto wb = psi.free_weight(b);
    return wa != wb ? wa < wb : a < b;
  });
  return out;
}

std::vector<Generator> subalgebra_generators(const WhittakerDatum& psi, std::int64_t index_max) {
  std::vector<Generator> out;
  for (Family f : {Family::L, Family::H, Family::J, Family::I})
    for (std::int64_t k = is_lh(f) ? psi.m : psi.n; k <= index_max; ++k) out.emplace_back(f, k);
  return out;
}

bool is_whittaker_vector(const WhittakerModule& module, const InducedVector& v, std::int64_t index_max) {
  for (const auto& y : subalgebra_generators(module.datum(), index_max))
    if (module.act(y, v) != module.datum().psi(y) * v) return false;
  return true;
}

SearchReport singular_vector_search(const WhittakerDatum& psi, std::int64_t weight_bound) {
  SearchReport report;
  report.weight_bound = weight_bound;
  report.index_max = 2 * psi.m + 2 * psi.n + weight_bound + 2;
  WhittakerModule module(psi);

  const auto basis = whittaker_basis(psi, weight_bound);
  report.basis_size = basis.size();
  const auto ys = subalgebra_generators(psi, report.index_max);

  // One row per (y, output monomial); columns are basis monomials.
  std::map<std::pair<std::size_t, Word>, SparseRow> rows;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const InducedVector b(basis[col]);
    for (std::size_t yi = 0; yi < ys.size(); ++yi) {
      InducedVector image = module.act(ys[yi], b) - psi.psi(ys[yi]) * b;
      for (const auto& [w, c] : image) rows[{yi, w}].add_term(col, c);
    }
  }
  std::vector<SparseRow> system;
  system.reserve(rows.size());
  for (auto& [key, row] : rows) system.push_back(std::move(row));
  report.equations = system.size();

  for (const auto& null : sparse_nullspace(system, basis.size())) {
    InducedVector v;
    for (std::size_t col = 0; col < basis.size(); ++col) v.add_term(basis[col], null[col]);
    v *= v.begin()->second.inverse();
    report.kernel.push_back(std::move(v));
  }
  if (!report.kernel.empty()) report.witness = report.kernel.front();

  for (const auto& v : report.kernel)
    for (Family f : {Family::L, Family::H, Family::J, Family::I})
      for (std::int64_t k = 1; k <= 3; ++k)
        if (!module.act(Generator(f, report.index_max + k), v).is_zero()) report.spot_check_ok = false;
  return report;
}

}  // namespace pgca
