#pragma once

// Floating-point sampler of the Fresnel zero set along rays ν = k d + ω ε4,
// d a unit spatial direction. The univariate quartic along each ray is built
// exactly; only root isolation uses doubles.

#include <array>
#include <string>
#include <vector>

#include "premetric/dispersion.hpp"
#include "premetric/poly.hpp"

namespace premetric::surface {

/// Relative residual bound for accepted roots.
inline constexpr double kTolerance = 1e-9;

using Direction = std::array<Scalar, 3>;

/// Unit directions with rational coordinates by inverse stereographic
/// projection of the grid u, v ∈ {-1, ..., 1} (resolution points per axis)
/// restricted to u² + v² ≤ 1, for both hemispheres. Requires resolution ≥ 8.
std::vector<Direction> ray_directions(int resolution);

/// p(k) = quartic(k d + ω ε4), exact.
Polynomial ray_polynomial(const QuarticForm& q, const Direction& d, const Scalar& omega);

struct RaySample {
  Direction direction;
  bool identically_zero = false;
  std::vector<double> roots;        ///< ascending real roots k
  std::vector<int> multiplicities;  ///< from the square-free decomposition
  double max_residual = 0;          ///< max |p(k)| / Σ|terms| over the roots
};

RaySample sample_ray(const QuarticForm& q, const Direction& d, const Scalar& omega);
std::vector<RaySample> sample_surface(const QuarticForm& q, const Scalar& omega, int resolution);

/// CSV with one row per ray: direction, status, roots, multiplicities, residual.
std::string to_csv(const std::vector<RaySample>& rays, const Scalar& omega, int resolution);

}  // namespace premetric::surface
