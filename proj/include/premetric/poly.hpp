#pragma once

#include <utility>
#include <vector>

#include "premetric/scalar.hpp"

namespace premetric {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The zero polynomial has no coefficients; degree() is -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients);

  /// Lagrange interpolation through (x_i, y_i) with distinct x_i.
  static Polynomial interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  const Scalar& leading() const { return c_.back(); }

  Scalar operator()(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Square-free decomposition p = c · Π a_i^i; entry i-1 holds a_i (monic).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// All distinct rational roots, ascending.
std::vector<Scalar> rational_roots(const Polynomial& p);

/// Number of distinct real roots, by a Sturm sequence.
int count_real_roots(const Polynomial& p);

}  // namespace premetric
