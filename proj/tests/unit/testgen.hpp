#pragma once

#include <cstdint>
#include <vector>

#include "pgca/algebra.hpp"
#include "pgca/enveloping.hpp"
#include "pgca/polynomial.hpp"
#include "pgca/scalar.hpp"

namespace testgen {

// splitmix64; reproducible on every platform, unlike <random> distributions.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  long nonzero(long bound) {
    long v = 0;
    while (v == 0) v = static_cast<long>(range(-bound, bound));
    return v;
  }

  pgca::Scalar rational(long bound = 9) { return pgca::Scalar::rational(range(-bound, bound), range(1, bound)); }

  pgca::Scalar gaussian(long bound = 9) {
    return rational(bound) + pgca::Scalar::i() * rational(bound);
  }

  pgca::Generator generator(std::int64_t bound, bool centrals = false) {
    const auto f = static_cast<pgca::Family>(range(0, centrals ? 6 : 3));
    if (pgca::is_central(f)) return {f, 0};
    return {f, range(-bound, bound)};
  }

  pgca::Word word(std::int64_t max_length, std::int64_t bound) {
    pgca::Word w;
    const auto len = range(0, max_length);
    for (std::int64_t k = 0; k < len; ++k) w.push_back(generator(bound));
    return w;
  }

  pgca::BivariatePolynomial polynomial(int max_degree, int terms = 3) {
    pgca::BivariatePolynomial p;
    for (int t = 0; t < terms; ++t) {
      const int total = static_cast<int>(range(0, max_degree));
      const int x = static_cast<int>(range(0, total));
      p += pgca::BivariatePolynomial::monomial(x, total - x, rational(5));
    }
    return p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace testgen
