#pragma once

// Double-precision batch evaluation of a homogeneous quartic at many points,
// used by the surface sampler. The AVX2 variant performs the same operations
// in the same order as the scalar one (no fused multiply-add), so the two are
// bitwise identical.

#include <array>
#include <cstddef>

namespace premetric::kernels {

inline constexpr int kTerms = 35;

/// Exponent vectors in QuarticForm term order (sorted index multisets).
constexpr std::array<std::array<int, 4>, kTerms> make_exponents() {
  std::array<std::array<int, 4>, kTerms> e{};
  int t = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b)
      for (int c = b; c < 4; ++c)
        for (int d = c; d < 4; ++d) {
          ++e[t][a];
          ++e[t][b];
          ++e[t][c];
          ++e[t][d];
          ++t;
        }
  return e;
}
inline constexpr auto kExponents = make_exponents();

/// out[i] = Σ_t coeffs[t] ν1^m1 ν2^m2 ν3^m3 ν4^m4 at ν = (x0[i], x1[i], x2[i], x3[i]).
/// coeffs are monomial coefficients, not tensor entries.
void quartic_eval_scalar(const double* coeffs, const double* const x[4], std::size_t n, double* out);
void quartic_eval_avx2(const double* coeffs, const double* const x[4], std::size_t n, double* out);

bool avx2_available();

/// Picks the AVX2 variant when the CPU supports it.
void quartic_eval(const double* coeffs, const double* const x[4], std::size_t n, double* out);
const char* quartic_eval_backend();

}  // namespace premetric::kernels
