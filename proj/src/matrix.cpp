#include "pgca/matrix.hpp"

#include <map>
#include <utility>

#include "pgca/error.hpp"

namespace pgca {

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

ScalarVector ScalarMatrix::operator*(const ScalarVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  ScalarVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
  return y;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  ScalarMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

std::vector<std::size_t> ScalarMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pick = row;
    while (pick < rows_ && (*this)(pick, col).is_zero()) ++pick;
    if (pick == rows_) continue;
    if (pick != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(pick, c), (*this)(row, c));
    Scalar inv = (*this)(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col).is_zero()) continue;
      Scalar f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        if (!(*this)(row, c).is_zero()) (*this)(r, c) -= f * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t ScalarMatrix::rank() const {
  ScalarMatrix copy = *this;
  return copy.rref().size();
}

Scalar ScalarMatrix::determinant() const {
  if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  ScalarMatrix a = *this;
  Scalar det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pick = col;
    while (pick < rows_ && a(pick, col).is_zero()) ++pick;
    if (pick == rows_) return Scalar();
    if (pick != col) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(a(pick, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = a(col, col).inverse();
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar f = a(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

void ScalarMatrix::set_block(std::size_t r, std::size_t c, const ScalarMatrix& block) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_)
    throw Error(ErrorKind::DimensionMismatch, "block does not fit");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
}

std::string ScalarMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]\n";
  }
  return out;
}

ScalarVector matrix_solve(const ScalarMatrix& m, const ScalarVector& b) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix_solve needs a square matrix");
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side size mismatch");
  const std::size_t n = m.rows();
  ScalarMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  auto pivots = aug.rref();
  if (pivots.size() < n || pivots.back() >= n) throw Error(ErrorKind::SingularMatrix, "no unique solution");
  ScalarVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n);
  return x;
}

std::vector<ScalarVector> matrix_nullspace(const ScalarMatrix& m) {
  ScalarMatrix a = m;
  auto pivots = a.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ScalarVector> sparse_nullspace(const std::vector<SparseRow>& rows, std::size_t cols) {
  SparseSpan<std::size_t> span;
  for (const auto& r : rows) {
    for (const auto& [c, v] : r)
      if (c >= cols) throw Error(ErrorKind::DimensionMismatch, "sparse row column out of range");
    span.insert(r);
  }
  // Back-substitute so every pivot row mentions no other pivot column.
  std::map<std::size_t, SparseRow> reduced;
  for (const auto& [pivot, row] : span.basis()) {
    SparseRow r = row;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
      Scalar c = r.coeff(it->first);
      if (!c.is_zero()) r.add_scaled(it->second, -c);
    }
    reduced.emplace(pivot, std::move(r));
  }
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (reduced.count(free)) continue;
    ScalarVector v(cols);
    v[free] = Scalar(1);
    for (const auto& [pivot, row] : reduced) v[pivot] = -row.coeff(free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace pgca
