#pragma once

// Exact exterior algebra over a four-dimensional vector space E1 and its
// dual F1. Vectors and forms of every grade live in separate types so that
// mixing them is a compile error; grades are checked at runtime.
//
// Basis: e1..e4 and ε1..ε4 with e_i|ε_j = δ_ij. A grade-k basis element is
// an increasing index tuple, enumerated lexicographically:
//   grade 2: 12 13 14 23 24 34
//   grade 3: 123 124 134 234
// e_N = e1∧e2∧e3∧e4 and ε_N = ε1∧ε2∧ε3∧ε4 with ε_N|e_N = 1.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "premetric/scalar.hpp"

namespace premetric {

inline constexpr int kDim = 4;

enum class Kind { Vector, Form };

constexpr Kind dual(Kind k) { return k == Kind::Vector ? Kind::Form : Kind::Vector; }

/// Number of basis elements of grade g: 1, 4, 6, 4, 1.
constexpr int grade_dim(int g) {
  constexpr std::array<int, 5> dims{1, 4, 6, 4, 1};
  return (g < 0 || g > kDim) ? 0 : dims[g];
}

class DegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Basis-element bookkeeping shared by every module.
namespace basis {

/// Bitmask of indices (bit i set for index i+1) of basis element `index` of
/// grade `grade`.
std::uint8_t mask(int grade, int index);

/// Inverse of mask(); -1 if the mask is not a basis element.
int index_of(std::uint8_t mask);

/// e_I ∧ e_J = sign · e_K; sign == 0 when the index sets overlap.
struct WedgeEntry {
  int index;
  int sign;
};
const WedgeEntry& wedge_entry(int grade_a, int a, int grade_b, int b);

/// Human-readable label, e.g. "13" for grade-2 index 1 or "" for grade 0.
std::string label(int grade, int index);

}  // namespace basis

/// A homogeneous element of grade 0..4: a multivector when K is Vector,
/// a multiform when K is Form.
template <Kind K>
class Graded {
 public:
  static constexpr Kind kind = K;

  explicit Graded(int grade) : grade_(grade), coords_(check(grade)) {}
  Graded(int grade, std::vector<Scalar> coords) : grade_(grade), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != check(grade))
      throw DegreeError("coordinate count does not match grade " + std::to_string(grade));
  }

  static Graded basis(int grade, int index) {
    Graded g(grade);
    g.coords_.at(index) = 1;
    return g;
  }
  static Graded scalar(const Scalar& s) { return Graded(0, {s}); }

  int grade() const { return grade_; }
  int size() const { return static_cast<int>(coords_.size()); }
  std::span<const Scalar> coords() const { return coords_; }
  const Scalar& operator[](int i) const { return coords_[i]; }
  Scalar& operator[](int i) { return coords_[i]; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (sgn(c) != 0) return false;
    return true;
  }

  Graded& operator+=(const Graded& o) {
    same_grade(o);
    for (int i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Graded& operator-=(const Graded& o) {
    same_grade(o);
    for (int i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Graded& operator*=(const Scalar& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator-(Graded a) { return a *= Scalar(-1); }
  friend Graded operator*(Graded a, const Scalar& s) { return a *= s; }
  friend Graded operator*(const Scalar& s, Graded a) { return a *= s; }
  friend bool operator==(const Graded& a, const Graded& b) {
    return a.grade_ == b.grade_ && a.coords_ == b.coords_;
  }

 private:
  static int check(int grade) {
    if (grade < 0 || grade > kDim) throw DegreeError("grade " + std::to_string(grade) + " out of range 0..4");
    return grade_dim(grade);
  }
  void same_grade(const Graded& o) const {
    if (o.grade_ != grade_) throw DegreeError("grade mismatch in sum");
  }

  int grade_;
  std::vector<Scalar> coords_;
};

using MultiVector = Graded<Kind::Vector>;
using MultiForm = Graded<Kind::Form>;

/// Grade-1 helpers.
MultiVector vector4(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& a4);
MultiForm form4(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& a4);

/// The quadrivector e_N and quadriform ε_N.
MultiVector e_N();
MultiForm eps_N();

/// x ∧ y. Throws DegreeError when the grades sum past 4.
template <Kind K>
Graded<K> wedge(const Graded<K>& x, const Graded<K>& y);

/// Duality pairing ω|X of equal grades: det[αi|aj] on decomposables.
Scalar pair(const MultiForm& w, const MultiVector& x);

/// a⌋ω for a vector a. Defined through pair(a⌋ω, X) = pair(ω, X∧a); on
/// two-forms this is the contraction satisfying
///   a⌋(ν∧Φ) = ν∧(a⌋Φ) + (a|ν)Φ.
MultiForm contract(const MultiVector& a, const MultiForm& w);

/// α⌋X for a one-form α: pair(β, α⌋X) = pair(β∧α, X).
MultiVector contract(const MultiForm& alpha, const MultiVector& x);

/// X⌊α: pair(β, X⌊α) = pair(α∧β, X). Grade k-l result.
MultiVector hook(const MultiVector& x, const MultiForm& alpha);

/// ω⌊A: pair(ω⌊A, B) = pair(ω, A∧B). Grade k-l result.
MultiForm hook(const MultiForm& w, const MultiVector& a);

/// e_N⌊ω and ε_N⌊X.
MultiVector complement(const MultiForm& w);
MultiForm complement(const MultiVector& x);

/// ε_N⌊(e_N⌊ω) = λ_k ω with λ_k = (-1)^{k(4-k)}.
MultiForm complement_roundtrip(const MultiForm& w);
int complement_roundtrip_sign(int grade);

/// Coefficient s in e1⌋ε12 = s ε2, solved from the contraction identity on
/// basis elements (not read back from the contraction table).
int solve_contraction_sign();

}  // namespace premetric
