#include "premetric/poly.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace premetric {

Polynomial::Polynomial(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Polynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis({Scalar(1)});
    Scalar denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial({-xs[j], Scalar(1)});
      denom *= xs[i] - xs[j];
    }
    out = out + basis * Polynomial({ys[i] / denom});
  }
  return out;
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  std::vector<Scalar> m = c_;
  const Scalar lead = c_.back();
  for (auto& v : m) v /= lead;
  return Polynomial(std::move(m));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> r = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Scalar> q(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    const Scalar f = r[k] / b.leading();
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  // Yun's algorithm over a field of characteristic zero.
  std::vector<Polynomial> out;
  if (p.degree() < 1) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(df, a).first;
  Polynomial d = c - b.derivative();
  while (b.degree() >= 1) {
    Polynomial ai = gcd(b, d);
    out.push_back(ai);
    b = divmod(b, ai).first;
    c = divmod(d, ai).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() < 1) out.pop_back();
  return out;
}

namespace {

std::vector<mpz_class> primitive_integer(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& v : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (const auto& v : p.coefficients()) {
    z.push_back(v.get_num() * (l / v.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g != 0)
    for (auto& v : z) v /= g;
  return z;
}

// Positive divisors by trial division; empty optional-like result when the
// number is too large to factor this way.
bool divisors(mpz_class n, std::vector<mpz_class>& out) {
  n = abs(n);
  if (n == 0) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 40) return false;
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  out = {mpz_class(1)};
  for (const auto& [prime, e] : factors) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return true;
}

void add_if_root(const Polynomial& p, const Scalar& x, std::set<Scalar>& roots) {
  if (sgn(p(x)) == 0) roots.insert(x);
}

}  // namespace

std::vector<Scalar> rational_roots(const Polynomial& p) {
  std::set<Scalar> roots;
  if (p.degree() < 1) return {};
  Polynomial f = divmod(p, gcd(p, p.derivative())).first;  // square-free part
  if (sgn(f.coefficients()[0]) == 0) {
    roots.insert(Scalar(0));
    f = divmod(f, Polynomial({Scalar(0), Scalar(1)})).first;
  }
  if (f.degree() == 1) {
    roots.insert(-f.coefficients()[0] / f.coefficients()[1]);
  } else if (f.degree() == 2) {
    const auto& c = f.coefficients();
    const Scalar disc = c[1] * c[1] - 4 * c[2] * c[0];
    Scalar r;
    if (rational_sqrt(disc, r)) {
      roots.insert((-c[1] + r) / (2 * c[2]));
      roots.insert((-c[1] - r) / (2 * c[2]));
    }
  } else if (f.degree() > 2) {
    const auto z = primitive_integer(f);
    std::vector<mpz_class> num, den;
    if (divisors(z.front(), num) && divisors(z.back(), den)) {
      for (const auto& a : num)
        for (const auto& b : den) {
          add_if_root(f, ratio(a, b), roots);
          add_if_root(f, ratio(-a, b), roots);
        }
    } else {
      // Coefficients too large to factor: every rational root is k/lead for
      // an integer k, so round numerical roots onto that grid and verify.
      const int n = f.degree();
      Eigen::VectorXd coeffs(n + 1);
      for (int i = 0; i <= n; ++i) coeffs[i] = f.coefficients()[i].get_d();
      Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
      const mpz_class lead = z.back();
      for (int i = 0; i < solver.roots().size(); ++i) {
        const auto r = solver.roots()[i];
        if (std::abs(r.imag()) > 1e-6 * std::max(1.0, std::abs(r))) continue;
        mpz_class k(std::round(r.real() * lead.get_d()));
        for (int off = -1; off <= 1; ++off) add_if_root(f, ratio(k + off, lead), roots);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

int count_real_roots(const Polynomial& p) {
  if (p.degree() < 1) return 0;
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(Polynomial() - r);
  }
  auto changes = [&](bool at_plus_infinity) {
    int count = 0;
    int prev = 0;
    for (const auto& s : seq) {
      int sign = sgn(s.leading());
      if (!at_plus_infinity && s.degree() % 2 == 1) sign = -sign;
      if (sign != 0 && prev != 0 && sign != prev) ++count;
      if (sign != 0) prev = sign;
    }
    return count;
  };
  return changes(false) - changes(true);
}

}  // namespace premetric
