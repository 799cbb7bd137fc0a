#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superweyl/rational.hpp"

namespace superweyl {

/// Dense row-major rational matrix. Sized for root-system work (dimension
/// ≤ a few dozen), so no attempt at blocking or fraction-free elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(std::span<const std::vector<Rational>> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& data() const { return data_; }

  Matrix transposed() const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  /// Inverse of a square matrix, or nullopt when singular.
  std::optional<Matrix> inverse() const;
  std::size_t rank() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// For linearly independent columns P (n×k) returns L (k×n) with L·P = I, built
/// as (PᵀP)⁻¹Pᵀ with the standard dot product. Returns nullopt when the
/// columns are dependent.
std::optional<Matrix> left_inverse(const Matrix& columns);

}  // namespace superweyl
