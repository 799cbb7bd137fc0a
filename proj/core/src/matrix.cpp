#include "superweyl/matrix.hpp"

#include <utility>

#include "superweyl/error.hpp"

namespace superweyl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const std::vector<Rational>> columns) {
  if (columns.empty()) return {};
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows()) fail(ErrorKind::DimensionMismatch, "column lengths differ");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix/vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

namespace {

// Gauss-Jordan on an augmented copy; returns the rank and leaves the reduced
// form in `m`.
std::size_t reduce(Matrix& m, std::size_t pivot_cols) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    ++row;
  }
  return row;
}

}  // namespace

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  if (reduce(aug, n) < n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return reduce(copy, cols_);
}

std::optional<Matrix> left_inverse(const Matrix& columns) {
  const Matrix pt = columns.transposed();
  const auto gram = (pt * columns).inverse();
  if (!gram) return std::nullopt;
  return *gram * pt;
}

}  // namespace superweyl
