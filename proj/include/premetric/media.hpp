#pragma once

// Medium bidyadics M ∈ F2E2 of the dispersion-free families, their
// recognition, inversion and transformation.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "premetric/dispersion.hpp"
#include "premetric/dyadic.hpp"

namespace premetric {

namespace recipe {

/// α I^(2)T
struct Axion {
  Scalar alpha;
};

/// (B∧∧I)^T + α I^(2)T with B ∈ E1F1.
struct SkewonAxion {
  Dyadic B;
  Scalar alpha;
};

/// M P^(2)T + α I^(2)T with P ∈ E1F1.
struct PAxion {
  Dyadic P;
  Scalar M;
  Scalar alpha;
};

/// a B^(2)T + b (B∧∧I)^T + c I^(2)T with B ∈ E1F1.
struct Case2General {
  Dyadic B;
  Scalar a;
  Scalar b;
  Scalar c;
};

/// Π C + Λ D + α I^(2)T with two-forms Π, Λ and bivectors C, D.
struct Case1 {
  MultiForm Pi;
  MultiForm Lambda;
  MultiVector C;
  MultiVector D;
  Scalar alpha;
};

/// Modified bidyadic M_m = M Q^(2) with Q ∈ E1E1.
struct QMedium {
  Dyadic Q;
  Scalar M;
};

/// Q-medium with antisymmetric Q = A⌊I^T for a bivector A.
struct QAntisym {
  MultiVector A;
  Scalar M;
};

/// Any 6×6 bidyadic in F2E2.
struct Raw {
  Dyadic M;
};

}  // namespace recipe

using MediumRecipe = std::variant<recipe::Axion, recipe::SkewonAxion, recipe::PAxion, recipe::Case2General,
                                  recipe::Case1, recipe::QMedium, recipe::QAntisym, recipe::Raw>;

/// Short identifier: "axion", "skewon-axion", "p-axion", "case2", "case1",
/// "q-medium", "q-antisym", "raw".
std::string recipe_kind(const MediumRecipe& r);

/// The medium bidyadic M ∈ F2E2 of a recipe. Throws SpaceMismatch or
/// DegreeError on badly shaped parameters.
Dyadic build(const MediumRecipe& r);

/// A⌊I^T ∈ E1E1: the antisymmetric dyadic φ ↦ A⌊φ.
Dyadic antisymmetric_dyadic(const MultiVector& a);

struct HODecomposition {
  Dyadic principal;
  Dyadic skewon;
  Scalar axion;
};

/// Principal / skewon / axion split: axion = tr(M)/6, skewon is the
/// pull-back of the antisymmetric part of M_m, principal is the rest.
HODecomposition decompose_hehl_obukhov(const Dyadic& m);

/// D = (Π|C + α)(Λ|D + α) − (Λ|C)(Π|D); M is invertible iff α ≠ 0 and D ≠ 0.
Scalar case1_determinant(const recipe::Case1& c);

struct Case1Inverse {
  MultiVector C;
  MultiVector D;
  Scalar alpha;
  Scalar determinant;
  /// The D = 0 bivector reduction C' = −C/(α(Π|C + α)) was used.
  bool reduced;
};

/// Inverse in the same family, M⁻¹ = Π C' + Λ D' + α' I^(2)T.
/// Throws PreconditionError for α = 0 or dependent Π, Λ, and NoInverse when
/// the determinant vanishes.
Case1Inverse invert_case1(const recipe::Case1& c);

/// Four-way outcome of the P/Q test for solutions of M_mᵀ·M_m = P e_N⌊I^(2)T.
enum class PQBranch { QSolution, PSolution, QAntisymmetric, PMultipleOfIdentity };
std::string to_string(PQBranch b);

/// Default probes: the four basis one-forms and their six pairwise sums.
const std::vector<MultiForm>& default_probes();

/// Evaluates (M_m⌊⌊αα)^(3), ^(2) and M_m⌊⌊αα on the probes; a quantity is
/// declared identically zero only after it also vanishes on a unisolvent
/// lattice for its degree in α, so the answer does not depend on the
/// probe choice. Throws PreconditionError when M_m is singular and
/// NotApplicable when M_m does not satisfy the quadratic law.
PQBranch pq_discriminate(const Dyadic& mm, std::span<const MultiForm> probes = default_probes());

struct PQuadratic {
  bool holds;
  Scalar P;  ///< candidate read off one entry; meaningful when holds
};

/// Tests M_mᵀ·M_m = P e_N⌊I^(2)T.
PQuadratic check_p_quadratic(const Dyadic& mm);

/// Tests M_mᵀ·M_m − α(M_mᵀ + M_m) = (P − α²) e_N⌊I^(2)T.
bool check_paxion_relation(const Dyadic& mm, const Scalar& alpha, const Scalar& P);

/// Structural classes recognized by the classifier.
enum class MediumClass {
  Axion,
  Skewon,         ///< pure skewon: M_m antisymmetric
  SkewonAxion,
  PMedium,        ///< satisfies M_mᵀ·M_m = P e_N⌊I^(2)T
  SpecialPAxion,  ///< P-axion with P = α²
  GeneralPAxion,
  Case1,
  DispersionFreeUnrecognized,
  NotDispersionFree,
};
std::string to_string(MediumClass c);

/// Case-2 sub-class of a modified bidyadic, with the quadratic-law
/// parameters when one applies. Returns nullopt for anything outside
/// case 2 (including antisymmetric-Q media, which belong to case 1).
struct Case2Match {
  MediumClass cls;
  Scalar axion;  ///< α in M_mᵀ·M_m − α(M_mᵀ + M_m) = (P − α²)e_N⌊I^(2)T, or the symmetric-part factor
  Scalar P;      ///< P of the quadratic law (P-type classes only)
};
std::optional<Case2Match> match_case2(const Dyadic& mm);

struct InverseClassRow {
  MediumClass m_class;
  MediumClass n_class;
  Dyadic N;
};

/// Inverts a case-2 medium and classifies the inverse. Throws NoInverse
/// for singular M and PreconditionError when M is not case 2.
InverseClassRow inverse_class_map(const Dyadic& m);

/// M_a = A^(−2)T | M | A^(2)T for a full-rank A ∈ E1F1.
Dyadic affine_transform(const Dyadic& m, const Dyadic& a);

struct ClassificationVerdict {
  bool dispersion_free = false;
  MediumClass structural = MediumClass::NotDispersionFree;
  /// P/Q discriminator branch whenever the quadratic-law test ran on a full-rank input.
  std::optional<PQBranch> discriminator;
  /// Class of N = M⁻¹ when M is invertible and its class is known.
  std::optional<MediumClass> inverse_class;
  /// Quadratic-law parameters for case-2 classes.
  std::optional<Case2Match> case2;
  /// Recovered Π C + Λ D + α I^(2)T for case 1.
  std::optional<recipe::Case1> case1;
};

/// Recognition pipeline for a raw bidyadic: dispersion-free test, axion,
/// skewon-axion, the case-2 quadratic law, then the case-1 α-search.
ClassificationVerdict classify_raw(const Dyadic& m);

/// Rational α with rank(M − α I^(2)T) ≤ 2, found from the common rational
/// roots of all 3×3 minors; nullopt if none exists.
std::optional<recipe::Case1> find_case1(const Dyadic& m);

/// Decides whether F⌊⌊νν vanishes for every ν (F ∈ E2E2) from its ten
/// quadratic coefficient dyadics, and cross-checks against the equivalent
/// statement F ∝ e_N⌊I^(2)T. Throws ConventionError if the routes differ.
bool vanishing_certificate(const Dyadic& f);

}  // namespace premetric
