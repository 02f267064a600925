#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "pgca/combination.hpp"
#include "pgca/scalar.hpp"

namespace pgca {

using ScalarVector = std::vector<Scalar>;

/// Dense rectangular matrix of exact scalars, row-major.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols);
  ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static ScalarMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ScalarVector operator*(const ScalarVector& x) const;
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) = default;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  Scalar determinant() const;

  /// Places `block` with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const ScalarMatrix& block);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact solution of M x = b for square M; throws SingularMatrix unless the
/// solution is unique.
ScalarVector matrix_solve(const ScalarMatrix& m, const ScalarVector& b);

/// Basis of the right kernel, one vector per free column of the RREF (that
/// column's entry is 1). Empty iff M is injective.
std::vector<ScalarVector> matrix_nullspace(const ScalarMatrix& m);

using SparseRow = Combination<std::size_t>;

/// Kernel of a sparse row system with `cols` unknowns, same conventions as
/// matrix_nullspace; vectors come back ordered by their free column.
std::vector<ScalarVector> sparse_nullspace(const std::vector<SparseRow>& rows, std::size_t cols);

}  // namespace pgca
