#include "premetric/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace premetric {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Scalar> RationalMatrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Scalar& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
  RationalMatrix out(a.rows_, b.cols_);
  Scalar acc;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        acc = aik * bkj;
        out(i, j) += acc;
      }
    }
  }
  return out;
}

std::vector<Scalar> operator*(const RationalMatrix& a, std::span<const Scalar> x) {
  if (a.cols_ != x.size()) throw std::invalid_argument("shape mismatch in matrix-vector *");
  std::vector<Scalar> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0) out[i] += a(i, k) * x[k];
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// Integer copy of m with each row scaled by the lcm of its denominators.
// Row scaling by nonzero factors preserves rank; the product of the factors
// is returned so determinants can be recovered.
std::vector<std::vector<mpz_class>> integer_rows(const RationalMatrix& m, mpz_class& scale) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    scale *= l;
  }
  return out;
}

// Bareiss elimination in place. Returns rank; `sign` tracks row swaps.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t cols, int& sign) {
  const std::size_t rows = a.size();
  sign = 1;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  mpz_class scale;
  auto a = integer_rows(m, scale);
  int sign = 1;
  return bareiss(a, m.cols(), sign);
}

Scalar determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  mpz_class scale;
  auto a = integer_rows(m, scale);
  int sign = 1;
  const std::size_t r = bareiss(a, m.cols(), sign);
  if (r < m.rows()) return 0;
  Scalar det(a[m.rows() - 1][m.cols() - 1] * sign, scale);
  det.canonicalize();
  return det;
}

Echelon reduced_row_echelon(const RationalMatrix& m) {
  Echelon e{m, {}};
  RationalMatrix& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Scalar inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Scalar f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::vector<std::vector<Scalar>> null_space(const RationalMatrix& m) {
  const Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> try_inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = reduced_row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<std::vector<Scalar>> solve(const RationalMatrix& m, std::span<const Scalar> b) {
  if (!m.is_square() || b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const Echelon e = reduced_row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = e.reduced(i, n);
  return x;
}

}  // namespace premetric
