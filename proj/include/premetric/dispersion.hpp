#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "premetric/dyadic.hpp"

namespace premetric {

/// Exponent vector (m1, m2, m3, m4) of a quartic monomial ν1^m1 ν2^m2 ν3^m3 ν4^m4.
using Exponents = std::array<int, 4>;

/// Homogeneous quartic in the components of a one-form, stored as the 35
/// independent entries of its symmetric rank-4 coefficient tensor.
///
/// Entries are ordered by sorted index multiset: 1111, 1112, 1113, 1114,
/// 1122, ..., 4444. evaluate(ν) = Σ_{ijkl} T_ijkl ν_i ν_j ν_k ν_l, so the
/// coefficient of a monomial is multinomial(m) times the tensor entry.
class QuarticForm {
 public:
  static constexpr int kTerms = 35;

  QuarticForm() = default;
  explicit QuarticForm(std::array<Scalar, kTerms> entries) : entries_(std::move(entries)) {}

  /// Builds the form from monomial coefficients (one per exponent vector).
  static QuarticForm from_monomials(std::span<const Scalar> coefficients);

  const std::array<Scalar, kTerms>& entries() const { return entries_; }
  const Scalar& entry(int term) const { return entries_[term]; }

  /// Coefficient of the monomial with index `term`.
  Scalar monomial_coefficient(int term) const;

  Scalar evaluate(const MultiForm& nu) const;
  bool is_zero() const;

  /// Index key such as "1124".
  static std::string key(int term);
  static const Exponents& exponents(int term);
  static int multinomial(int term);

  /// Evaluation points used for extraction: ν = (m1, m2, m3, m4) for every
  /// exponent vector, i.e. the degree-4 lattice on the simplex.
  static const std::vector<MultiForm>& polarization_points();

  friend bool operator==(const QuarticForm&, const QuarticForm&) = default;

 private:
  std::array<Scalar, kTerms> entries_{};
};

/// D(ν) = e_N⌊(ν∧M⌊ν) for a medium bidyadic M ∈ F2E2, built column by
/// column from the plane-wave condition ν∧(M|(ν∧φ)).
Dyadic dispersion_dyadic(const Dyadic& m, const MultiForm& nu);

/// M_m⌊⌊νν for a modified bidyadic; agrees with dispersion_dyadic(M, ν)
/// when M_m = e_N⌊M.
Dyadic dispersion_dyadic_modified(const Dyadic& mm, const MultiForm& nu);

/// The Fresnel scalar from both of its closed forms,
///   (1/3) ε_Nε_N||(M_m∧∧D^(2)(ν))
///   (1/6) ε_Nε_N||(M_m∧∧(νν⌋⌋(M_m∧∧(νν⌋⌋M_m))))
/// Throws ConventionError if they differ.
Scalar fresnel_scalar(const Dyadic& mm, const MultiForm& nu);

/// Same quantity for the inverse-side modified bidyadic N_m.
Scalar fresnel_scalar_n(const Dyadic& nm, const MultiForm& nu);

/// Coefficient tensor of ν ↦ fresnel_scalar(M_m, ν), from the 35 fixed
/// evaluation points and one precomputed exact solve.
QuarticForm extract_quartic(const Dyadic& mm);

/// True iff the quartic of M (F2E2) vanishes identically.
bool is_dispersion_free(const Dyadic& m);

struct RankProfile {
  std::vector<std::size_t> ranks;
  std::size_t min_rank = 0;
  std::size_t max_rank = 0;
  /// Necessary condition for a dispersion-free medium.
  bool rank_at_most_two = true;
};

RankProfile rank_profile(const Dyadic& m, std::span<const MultiForm> samples);

struct PlaneWave {
  MultiForm nu;
  MultiForm phi;  ///< potential one-form
  MultiForm Phi;  ///< ν∧φ
  MultiForm Psi;  ///< M|Φ
  std::size_t null_dimension;
};

struct NoWave {
  std::size_t null_dimension;  ///< always 1: only ν itself
};

using WaveSolution = std::variant<PlaneWave, NoWave>;

/// Solves D(ν)|φ = 0 exactly. φ is the first reduced-echelon null-space
/// generator (lowest free basis index) that is not proportional to ν.
WaveSolution plane_wave_solve(const Dyadic& m, const MultiForm& nu);

}  // namespace premetric
