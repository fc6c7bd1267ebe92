#include "premetric/surface.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "premetric/kernels/quartic_eval.hpp"

namespace premetric::surface {

namespace {

double eval_double(const std::vector<double>& c, double x) {
  double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Real roots of a square-free factor, count fixed by its Sturm sequence.
std::vector<double> real_roots(const Polynomial& f) {
  const int count = count_real_roots(f);
  if (count == 0) return {};
  std::vector<double> c;
  for (const auto& v : f.coefficients()) c.push_back(v.get_d());
  std::vector<double> found;
  if (f.degree() == 1) {
    found.push_back(-c[0] / c[1]);
  } else {
    Eigen::VectorXd coeffs(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = c[i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    std::vector<std::complex<double>> roots(solver.roots().begin(), solver.roots().end());
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return std::abs(a.imag()) < std::abs(b.imag()); });
    for (int i = 0; i < count; ++i) found.push_back(roots[i].real());
  }
  std::vector<double> dc;
  for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<double>(i));
  for (double& x : found)
    for (int it = 0; it < 8; ++it) {
      const double d = eval_double(dc, x);
      if (d == 0) break;
      const double step = eval_double(c, x) / d;
      x -= step;
      if (std::abs(step) <= 1e-17 * std::max(1.0, std::abs(x))) break;
    }
  return found;
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::vector<Direction> ray_directions(int resolution) {
  if (resolution < 8) throw std::invalid_argument("surface resolution must be at least 8");
  std::vector<Direction> dirs;
  const long n = resolution - 1;
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j) {
      const Scalar u = ratio(2 * i - n, n), v = ratio(2 * j - n, n);
      const Scalar s = u * u + v * v;
      if (s > 1) continue;
      const Scalar scale = 1 / (1 + s);
      const Scalar z = (1 - s) * scale;
      dirs.push_back({2 * u * scale, 2 * v * scale, z});
      if (s < 1) dirs.push_back({2 * u * scale, 2 * v * scale, -z});
    }
  return dirs;
}

Polynomial ray_polynomial(const QuarticForm& q, const Direction& d, const Scalar& omega) {
  std::vector<Scalar> xs, ys;
  for (int k = 0; k <= 4; ++k) {
    xs.emplace_back(k);
    ys.push_back(q.evaluate(form4(k * d[0], k * d[1], k * d[2], omega)));
  }
  return Polynomial::interpolate(xs, ys);
}

RaySample sample_ray(const QuarticForm& q, const Direction& d, const Scalar& omega) {
  RaySample out;
  out.direction = d;
  const Polynomial p = ray_polynomial(q, d, omega);
  if (p.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  const auto factors = squarefree_decomposition(p);
  std::vector<std::pair<double, int>> roots;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (double r : real_roots(factors[i])) roots.emplace_back(r, static_cast<int>(i) + 1);
  std::sort(roots.begin(), roots.end());
  for (const auto& [r, m] : roots) {
    out.roots.push_back(r);
    out.multiplicities.push_back(m);
  }
  if (roots.empty()) return out;

  // Residuals in the four-variable quartic: |F(ν)| against Σ|c_t||ν^m|.
  double coeffs[kernels::kTerms], abs_coeffs[kernels::kTerms];
  for (int t = 0; t < kernels::kTerms; ++t) {
    coeffs[t] = q.monomial_coefficient(t).get_d();
    abs_coeffs[t] = std::abs(coeffs[t]);
  }
  const std::size_t n = roots.size();
  std::vector<double> x[4], ax[4];
  for (int v = 0; v < 4; ++v) {
    x[v].resize(n);
    ax[v].resize(n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double k = roots[i].first;
    const double nu[4] = {k * d[0].get_d(), k * d[1].get_d(), k * d[2].get_d(), omega.get_d()};
    for (int v = 0; v < 4; ++v) {
      x[v][i] = nu[v];
      ax[v][i] = std::abs(nu[v]);
    }
  }
  const double* const xp[4] = {x[0].data(), x[1].data(), x[2].data(), x[3].data()};
  const double* const axp[4] = {ax[0].data(), ax[1].data(), ax[2].data(), ax[3].data()};
  std::vector<double> value(n), scale(n);
  kernels::quartic_eval(coeffs, xp, n, value.data());
  kernels::quartic_eval(abs_coeffs, axp, n, scale.data());
  for (std::size_t i = 0; i < n; ++i)
    if (scale[i] > 0) out.max_residual = std::max(out.max_residual, std::abs(value[i]) / scale[i]);
  return out;
}

std::vector<RaySample> sample_surface(const QuarticForm& q, const Scalar& omega, int resolution) {
  std::vector<RaySample> out;
  for (const auto& d : ray_directions(resolution)) out.push_back(sample_ray(q, d, omega));
  return out;
}

std::string to_csv(const std::vector<RaySample>& rays, const Scalar& omega, int resolution) {
  std::ostringstream os;
  os << "# omega=" << format_scalar(omega) << " resolution=" << resolution << " tolerance=" << kTolerance << "\n";
  os << "dx,dy,dz,status,roots,multiplicities,max_relative_residual\n";
  for (const auto& r : rays) {
    os << number(r.direction[0].get_d()) << ',' << number(r.direction[1].get_d()) << ','
       << number(r.direction[2].get_d()) << ',';
    if (r.identically_zero) {
      os << "identically-zero,,,\n";
      continue;
    }
    os << (r.roots.empty() ? "no-real-roots" : "roots") << ',';
    for (std::size_t i = 0; i < r.roots.size(); ++i) os << (i ? ";" : "") << number(r.roots[i]);
    os << ',';
    for (std::size_t i = 0; i < r.multiplicities.size(); ++i) os << (i ? ";" : "") << r.multiplicities[i];
    os << ',' << number(r.max_residual) << "\n";
  }
  return os.str();
}

}  // namespace premetric::surface
