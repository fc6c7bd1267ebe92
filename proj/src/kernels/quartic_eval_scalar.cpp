#include "premetric/kernels/quartic_eval.hpp"

namespace premetric::kernels {

void quartic_eval_scalar(const double* coeffs, const double* const x[4], std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double pw[4][5];
    for (int v = 0; v < 4; ++v) {
      pw[v][0] = 1.0;
      for (int k = 1; k <= 4; ++k) pw[v][k] = pw[v][k - 1] * x[v][i];
    }
    double acc = 0.0;
    for (int t = 0; t < kTerms; ++t) {
      const auto& e = kExponents[t];
      double term = coeffs[t] * pw[0][e[0]];
      term = term * pw[1][e[1]];
      term = term * pw[2][e[2]];
      term = term * pw[3][e[3]];
      acc = acc + term;
    }
    out[i] = acc;
  }
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void quartic_eval(const double* coeffs, const double* const x[4], std::size_t n, double* out) {
  if (avx2_available())
    quartic_eval_avx2(coeffs, x, n, out);
  else
    quartic_eval_scalar(coeffs, x, n, out);
}

const char* quartic_eval_backend() { return avx2_available() ? "avx2" : "scalar"; }

}  // namespace premetric::kernels
