#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "premetric/scalar.hpp"

namespace premetric {

/// Dense exact-rational matrix, row-major. Dimensions in this library never
/// exceed 35, so no attempt is made at blocking or sparsity.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t c) const;

  RationalMatrix transposed() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Scalar& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Scalar& s) { return a *= s; }
  friend RationalMatrix operator*(const Scalar& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend std::vector<Scalar> operator*(const RationalMatrix& a, std::span<const Scalar> x);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank(const RationalMatrix& m);

/// Determinant by fraction-free elimination. Requires a square matrix.
Scalar determinant(const RationalMatrix& m);

/// Exact inverse, or nullopt when singular.
std::optional<RationalMatrix> try_inverse(const RationalMatrix& m);

/// Reduced row echelon form together with pivot column indices.
struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon reduced_row_echelon(const RationalMatrix& m);

/// Null-space basis read off the reduced echelon form: one generator per
/// free column, in increasing free-column order, with a 1 in that column.
std::vector<std::vector<Scalar>> null_space(const RationalMatrix& m);

/// Solves m * x = b exactly when m is square and nonsingular.
std::optional<std::vector<Scalar>> solve(const RationalMatrix& m, std::span<const Scalar> b);

}  // namespace premetric
