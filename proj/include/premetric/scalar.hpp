#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace premetric {

/// Exact rational scalar. gmpxx keeps results of arithmetic canonical
/// (reduced, positive denominator); values built from strings are
/// canonicalized by parse_scalar.
using Scalar = mpq_class;

/// Thrown when a textual rational cannot be parsed.
class ScalarParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts "p/q" or "p" with an optional leading sign. Rejects q == 0.
Scalar parse_scalar(std::string_view text);

/// Always emits "p/q", including "n/1" for integers, so that every stored
/// value has one textual form.
std::string format_scalar(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

/// p/q in canonical form (gmpxx does not canonicalize this constructor).
inline Scalar ratio(const mpz_class& p, const mpz_class& q) {
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

/// Exact square root if `value` is the square of a rational.
bool rational_sqrt(const Scalar& value, Scalar& root);

}  // namespace premetric
