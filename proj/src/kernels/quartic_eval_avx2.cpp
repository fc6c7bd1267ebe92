#include "premetric/kernels/quartic_eval.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace premetric::kernels {

#if defined(__AVX2__)

void quartic_eval_avx2(const double* coeffs, const double* const x[4], std::size_t n, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d pw[4][5];
    for (int v = 0; v < 4; ++v) {
      pw[v][0] = _mm256_set1_pd(1.0);
      const __m256d xv = _mm256_loadu_pd(x[v] + i);
      for (int k = 1; k <= 4; ++k) pw[v][k] = _mm256_mul_pd(pw[v][k - 1], xv);
    }
    __m256d acc = _mm256_setzero_pd();
    for (int t = 0; t < kTerms; ++t) {
      const auto& e = kExponents[t];
      __m256d term = _mm256_mul_pd(_mm256_set1_pd(coeffs[t]), pw[0][e[0]]);
      term = _mm256_mul_pd(term, pw[1][e[1]]);
      term = _mm256_mul_pd(term, pw[2][e[2]]);
      term = _mm256_mul_pd(term, pw[3][e[3]]);
      acc = _mm256_add_pd(acc, term);
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) {
    const double* const tail[4] = {x[0] + i, x[1] + i, x[2] + i, x[3] + i};
    quartic_eval_scalar(coeffs, tail, n - i, out + i);
  }
}

#else

void quartic_eval_avx2(const double* coeffs, const double* const x[4], std::size_t n, double* out) {
  quartic_eval_scalar(coeffs, x, n, out);
}

#endif

}  // namespace premetric::kernels
