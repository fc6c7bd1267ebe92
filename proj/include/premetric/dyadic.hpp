#pragma once

// Dyadics: linear maps between graded spaces, written as sums of dyads
// (left factor)(right factor). A dyadic whose right factor lives in space S
// consumes elements of the dual of S; e.g. a bidyadic M ∈ F2E2 maps
// two-forms to two-forms and the modified bidyadic M_m ∈ E2E2 maps
// two-forms to bivectors. The matrix is indexed [left basis][right basis].

#include <string>

#include "premetric/errors.hpp"
#include "premetric/exterior.hpp"
#include "premetric/matrix.hpp"

namespace premetric {

struct Space {
  Kind kind;
  int grade;

  int dim() const { return grade_dim(grade); }
  Space dual() const { return {premetric::dual(kind), grade}; }
  friend bool operator==(const Space&, const Space&) = default;
};

/// "E2", "F1", ...
std::string to_string(Space s);

inline constexpr Space E1{Kind::Vector, 1};
inline constexpr Space F1{Kind::Form, 1};
inline constexpr Space E2{Kind::Vector, 2};
inline constexpr Space F2{Kind::Form, 2};

class Dyadic {
 public:
  Dyadic(Space out, Space in, RationalMatrix matrix);

  static Dyadic zero(Space out, Space in);

  /// The dyad (left)(right).
  template <Kind L, Kind R>
  static Dyadic dyad(const Graded<L>& left, const Graded<R>& right) {
    RationalMatrix m(left.size(), right.size());
    for (int i = 0; i < left.size(); ++i)
      for (int j = 0; j < right.size(); ++j) m(i, j) = left[i] * right[j];
    return Dyadic({L, left.grade()}, {R, right.grade()}, std::move(m));
  }

  /// Left factor space (the kind and grade of outputs).
  Space out_space() const { return out_; }
  /// Right factor space; inputs are elements of its dual.
  Space in_space() const { return in_; }
  const RationalMatrix& matrix() const { return m_; }

  bool is_zero() const { return m_.is_zero(); }

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);
  Dyadic& operator*=(const Scalar& s);
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Scalar& s) { return a *= s; }
  friend Dyadic operator*(const Scalar& s, Dyadic a) { return a *= s; }
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.out_ == b.out_ && a.in_ == b.in_ && a.m_ == b.m_;
  }

 private:
  Space out_;
  Space in_;
  RationalMatrix m_;
};

/// F|x for an element x of the dual of F's right space.
template <Kind Out, Kind In>
Graded<Out> apply(const Dyadic& f, const Graded<In>& x) {
  if (f.in_space() != Space{dual(In), x.grade()} || f.out_space().kind != Out)
    throw SpaceMismatch("dyadic " + to_string(f.out_space()) + to_string(f.in_space()) +
                        " cannot act on this element");
  return Graded<Out>(f.out_space().grade, f.matrix() * x.coords());
}

/// F|G; F's right space must be dual to G's left space.
Dyadic compose(const Dyadic& f, const Dyadic& g);

Dyadic transpose(const Dyadic& f);

/// F∧∧G with (aα)∧∧(bβ) = (a∧b)(α∧β). No factorial normalization.
Dyadic double_wedge(const Dyadic& f, const Dyadic& g);

/// p-th compound F^(p) = (1/p!) F∧∧…∧∧F of a grade-1 → grade-1 dyadic.
Dyadic compound(const Dyadic& f, int p);

/// F⌊⌊νν for F with vector left and right factors: (AB)⌊⌊νν = (A⌊ν)(B⌊ν).
Dyadic double_contract(const Dyadic& f, const MultiForm& nu);

/// νν⌋⌋F for F with vector factors: (AB) ↦ (ν⌋A)(ν⌋B).
Dyadic double_contract_left(const MultiForm& nu, const Dyadic& f);

/// ε_Nε_N||F for F ∈ E4E4.
Scalar double_pair(const Dyadic& f);

/// A·B = A|(ε_N⌊I^(2))|B for A, B ∈ E2E2.
Dyadic dot(const Dyadic& a, const Dyadic& b);

/// Φ·Ψ = Φ|(e_N⌊I^(2)T)|Ψ for two-forms.
Scalar dot(const MultiForm& phi, const MultiForm& psi);

/// Exact inverse. Throws NoInverse carrying the rank when singular.
Dyadic inverse(const Dyadic& f);

Scalar trace(const Dyadic& f);
std::size_t rank(const Dyadic& f);

/// Matrix of the map X ↦ X⌊ν from grade-k multivectors to grade k-1.
RationalMatrix hook_matrix(const MultiForm& nu, int grade);

/// Unit dyadics in the canonical basis.
namespace units {
Dyadic I();        ///< Σ e_i ε_i ∈ E1F1
Dyadic I_T();      ///< Σ ε_i e_i ∈ F1E1
Dyadic I2();       ///< I^(2) ∈ E2F2
Dyadic I2T();      ///< I^(2)T ∈ F2E2, identity on two-forms
Dyadic eN_I2T();   ///< e_N⌊I^(2)T ∈ E2E2
Dyadic epsN_I2();  ///< ε_N⌊I^(2) ∈ F2F2
}  // namespace units

// Complement bookkeeping between medium bidyadics and their modified forms.
// Every conversion in the library goes through these three functions.
//   M_m = e_N⌊M           (F2E2 → E2E2)
//   M   = ε_N⌊M_m         (E2E2 → F2E2; exact inverse of the above since
//                          the grade-2 complement round trip is +1)
//   N_m = e_N e_N⌊⌊M_m⁻¹  (equals e_N⌊(M⁻¹))
Dyadic to_modified(const Dyadic& m);
Dyadic from_modified(const Dyadic& mm);
Dyadic modified_inverse(const Dyadic& mm);

}  // namespace premetric
