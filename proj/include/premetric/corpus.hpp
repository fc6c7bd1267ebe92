#pragma once

// Seeded random instances of every medium family, shared by the tests, the
// acceptance binary and the CLI's generate command.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "premetric/media.hpp"

namespace premetric::corpus {

/// mt19937_64 reduced by modulo, so a seed gives the same stream with any
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// Nonzero integer in [-bound, bound].
  long nonzero(long bound);
  /// p/q with |p| ≤ 9 and 1 ≤ q ≤ 4, denominators appearing one time in four.
  Scalar rational();
  Scalar nonzero_rational();
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

enum class Family {
  Axion,
  Skewon,
  SkewonAxion,
  PMedium,
  SpecialPAxion,
  GeneralPAxion,
  Case2General,
  Case1,
  Case1Singular,  ///< case 1 with vanishing determinant
  QAntisym,
  QSymmetric,
  RawDense,
};

/// Stable identifiers, e.g. "skewon-axion", "case1-singular".
std::string to_string(Family f);
Family family_from_string(const std::string& name);
const std::vector<Family>& all_families();

MultiForm random_form(Rng& rng, int grade);
MultiVector random_vector(Rng& rng, int grade);
/// Integer entries in [-bound, bound].
Dyadic random_dyadic(Rng& rng, Space out, Space in, long bound = 5);
/// Full-rank E1F1 dyadic with small integer entries.
Dyadic random_full_rank(Rng& rng);
/// Full-rank E1F1 dyadic whose determinant is the square of a nonzero integer.
Dyadic random_square_determinant(Rng& rng);
/// Symmetric full-rank E1E1 dyadic.
Dyadic random_symmetric_q(Rng& rng);
/// Non-simple bivector (A∧A ≠ 0).
MultiVector random_nonsimple_bivector(Rng& rng);

MediumRecipe random_recipe(Family f, Rng& rng);

}  // namespace premetric::corpus
