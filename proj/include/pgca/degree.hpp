#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgca/whittaker.hpp"

namespace pgca {

/// i = (i_{l-1}, ..., i_1, i_0) stored by position: entries[k] == i_k.
struct ExponentVector {
  std::vector<std::int64_t> entries;

  static ExponentVector zero(std::size_t length) { return {std::vector<std::int64_t>(length, 0)}; }
  static ExponentVector unit(std::size_t length, std::size_t k);
  /// Builds from the written order (i_{l-1}, ..., i_0).
  static ExponentVector from_display(const std::vector<std::int64_t>& written);

  std::size_t length() const { return entries.size(); }
  bool is_zero() const;
  std::int64_t operator[](std::size_t k) const { return entries[k]; }

  ExponentVector operator+(const ExponentVector& o) const;
  ExponentVector operator-(const ExponentVector& o) const;

  /// "(i_{l-1},...,i_0)"
  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// sum_k (l - k) i_k
std::int64_t weight(const ExponentVector& i);

/// At the lowest position where the vectors differ, the larger entry wins.
/// Throws LengthMismatch.
std::strong_ordering reverse_lex_compare(const ExponentVector& a, const ExponentVector& b);

/// (j, i) for the J/I block, (h, l) for the H/L block.
using DegreePair = std::pair<ExponentVector, ExponentVector>;

/// Key order: total weight, then the second block by reverse lex, then the
/// first block by reverse lex.
std::strong_ordering principal_compare(const DegreePair& a, const DegreePair& b);

std::string to_string(const DegreePair& d);

enum class Block { JI, HL };

/// Exponents of a monomial J^j I^i (or H^h L^l) with indices in [0, l).
/// Throws UnsupportedMonomial.
DegreePair monomial_degree(const Word& w, Block block, std::size_t block_length);

/// Principal-order maximum of the support. Throws ZeroVector or UnsupportedMonomial.
DegreePair vector_degree(const InducedVector& v, Block block, std::size_t block_length);

enum class ReductionCase { JINonzeroJ, JIOnlyI, HLNonzeroH, HLOnlyL };

std::string_view case_name(ReductionCase c);
ReductionCase parse_case(std::string_view text);

struct ReductionAttempt {
  Generator y;
  Scalar shift;
  std::optional<DegreePair> observed;  // empty when the image is 0 or leaves the block
};

struct DegreeReductionReport {
  ReductionCase reduction_case = ReductionCase::JINonzeroJ;
  std::size_t block_length = 0;
  DegreePair degree;
  DegreePair predicted;
  std::vector<ReductionAttempt> attempts;
  bool holds = false;  // some attempt reached the predicted degree
};

/// Applies the operator(s) prescribed for the case and compares the degree
/// of the image with the prediction. Throws PreconditionViolated when v or
/// psi does not fit the case:
///   all cases: m >= n, psi(I_{m+n-1}) psi(J_{m+n-1}) != 0, v not a multiple of w;
///   J/I cases: n >= 1 and block length n;
///   H/L cases: block length m, m+n even, psi(L_p) = psi(H_p) = 0 for p >= m+n.
DegreeReductionReport check_degree_reduction(const WhittakerModule& module, const InducedVector& v,
                                             ReductionCase c);
DegreeReductionReport check_degree_reduction(const WhittakerDatum& psi, const InducedVector& v, ReductionCase c);

}  // namespace pgca
