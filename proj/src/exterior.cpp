#include "premetric/exterior.hpp"

#include <bit>

namespace premetric {

namespace basis {

namespace {

struct Tables {
  std::array<std::vector<std::uint8_t>, kDim + 1> masks;
  std::array<int, 16> index{};
  // wedge[ga][gb][a * grade_dim(gb) + b]
  std::array<std::array<std::vector<WedgeEntry>, kDim + 1>, kDim + 1> wedge;

  Tables() {
    index.fill(-1);
    // Lexicographic enumeration of increasing index tuples.
    for (int g = 0; g <= kDim; ++g) {
      std::vector<int> tuple(g);
      for (int i = 0; i < g; ++i) tuple[i] = i;
      while (true) {
        std::uint8_t m = 0;
        for (int t : tuple) m |= static_cast<std::uint8_t>(1u << t);
        index[m] = static_cast<int>(masks[g].size());
        masks[g].push_back(m);
        int pos = g - 1;
        while (pos >= 0 && tuple[pos] == kDim - g + pos) --pos;
        if (pos < 0) break;
        ++tuple[pos];
        for (int i = pos + 1; i < g; ++i) tuple[i] = tuple[i - 1] + 1;
      }
    }
    for (int ga = 0; ga <= kDim; ++ga) {
      for (int gb = 0; gb <= kDim; ++gb) {
        auto& table = wedge[ga][gb];
        table.resize(grade_dim(ga) * grade_dim(gb), WedgeEntry{-1, 0});
        if (ga + gb > kDim) continue;
        for (int a = 0; a < grade_dim(ga); ++a) {
          for (int b = 0; b < grade_dim(gb); ++b) {
            const std::uint8_t ma = masks[ga][a];
            const std::uint8_t mb = masks[gb][b];
            if (ma & mb) continue;
            // Sign of sorting the concatenation: one transposition per pair
            // (i in a, j in b) with i > j.
            int inversions = 0;
            for (int j = 0; j < kDim; ++j)
              if (mb & (1u << j)) inversions += std::popcount(static_cast<unsigned>(ma >> (j + 1)));
            table[a * grade_dim(gb) + b] = WedgeEntry{index[ma | mb], (inversions % 2) ? -1 : 1};
          }
        }
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::uint8_t mask(int grade, int index) { return tables().masks.at(grade).at(index); }

int index_of(std::uint8_t m) { return m < 16 ? tables().index[m] : -1; }

const WedgeEntry& wedge_entry(int grade_a, int a, int grade_b, int b) {
  return tables().wedge[grade_a][grade_b][a * grade_dim(grade_b) + b];
}

std::string label(int grade, int index) {
  std::string s;
  const auto m = mask(grade, index);
  for (int i = 0; i < kDim; ++i)
    if (m & (1u << i)) s += static_cast<char>('1' + i);
  return s;
}

}  // namespace basis

MultiVector vector4(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& a4) {
  return MultiVector(1, {a1, a2, a3, a4});
}

MultiForm form4(const Scalar& a1, const Scalar& a2, const Scalar& a3, const Scalar& a4) {
  return MultiForm(1, {a1, a2, a3, a4});
}

MultiVector e_N() { return MultiVector(4, {Scalar(1)}); }
MultiForm eps_N() { return MultiForm(4, {Scalar(1)}); }

template <Kind K>
Graded<K> wedge(const Graded<K>& x, const Graded<K>& y) {
  const int k = x.grade();
  const int l = y.grade();
  if (k + l > kDim)
    throw DegreeError("wedge of grades " + std::to_string(k) + " and " + std::to_string(l) + " exceeds 4");
  Graded<K> out(k + l);
  for (int i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& e = basis::wedge_entry(k, i, l, j);
      if (e.sign == 0) continue;
      if (e.sign > 0)
        out[e.index] += x[i] * y[j];
      else
        out[e.index] -= x[i] * y[j];
    }
  }
  return out;
}

template MultiVector wedge(const MultiVector&, const MultiVector&);
template MultiForm wedge(const MultiForm&, const MultiForm&);

Scalar pair(const MultiForm& w, const MultiVector& x) {
  if (w.grade() != x.grade()) throw DegreeError("pairing requires equal grades");
  Scalar s;
  for (int i = 0; i < w.size(); ++i) s += w[i] * x[i];
  return s;
}

namespace {

// Generic adjoint contraction. For each output basis element j of grade
// (big - small), accumulates Σ_i small_i · sign · big_K where
//   small_first: e_i ∧ e_j = sign e_K
//   otherwise:   e_j ∧ e_i = sign e_K
template <Kind Out, Kind Small, Kind Big>
Graded<Out> adjoint(const Graded<Small>& small, const Graded<Big>& big, bool small_first) {
  const int k = big.grade();
  const int l = small.grade();
  if (l > k) throw DegreeError("contraction of grade " + std::to_string(l) + " into grade " + std::to_string(k));
  Graded<Out> out(k - l);
  for (int j = 0; j < out.size(); ++j) {
    Scalar acc;
    for (int i = 0; i < small.size(); ++i) {
      if (sgn(small[i]) == 0) continue;
      const auto& e = small_first ? basis::wedge_entry(l, i, k - l, j) : basis::wedge_entry(k - l, j, l, i);
      if (e.sign == 0 || sgn(big[e.index]) == 0) continue;
      if (e.sign > 0)
        acc += small[i] * big[e.index];
      else
        acc -= small[i] * big[e.index];
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace

MultiForm contract(const MultiVector& a, const MultiForm& w) {
  if (a.grade() != 1) throw DegreeError("vector contraction needs a grade-1 vector");
  if (w.grade() < 1) throw DegreeError("cannot contract a scalar");
  return adjoint<Kind::Form>(a, w, /*small_first=*/false);
}

MultiVector contract(const MultiForm& alpha, const MultiVector& x) {
  if (alpha.grade() != 1) throw DegreeError("form contraction needs a one-form");
  if (x.grade() < 1) throw DegreeError("cannot contract a scalar");
  return adjoint<Kind::Vector>(alpha, x, /*small_first=*/false);
}

MultiVector hook(const MultiVector& x, const MultiForm& alpha) {
  return adjoint<Kind::Vector>(alpha, x, /*small_first=*/true);
}

MultiForm hook(const MultiForm& w, const MultiVector& a) {
  return adjoint<Kind::Form>(a, w, /*small_first=*/true);
}

MultiVector complement(const MultiForm& w) { return hook(e_N(), w); }
MultiForm complement(const MultiVector& x) { return hook(eps_N(), x); }

int complement_roundtrip_sign(int grade) { return (grade * (kDim - grade)) % 2 ? -1 : 1; }

MultiForm complement_roundtrip(const MultiForm& w) { return complement(complement(w)); }

namespace {

// Textbook first-slot interior product on basis elements, independent of the
// contraction tables above: i_{e_m} ε_K = (-1)^{#indices in K below m} ε_{K\m}.
MultiForm interior_first_slot(int m, const MultiForm& w, int sign) {
  MultiForm out(w.grade() - 1);
  for (int i = 0; i < w.size(); ++i) {
    if (sgn(w[i]) == 0) continue;
    const auto mk = basis::mask(w.grade(), i);
    if (!(mk & (1u << m))) continue;
    const int below = std::popcount(static_cast<unsigned>(mk & ((1u << m) - 1)));
    const int idx = basis::index_of(static_cast<std::uint8_t>(mk & ~(1u << m)));
    const Scalar v = (below % 2 ? -1 : 1) * sign * w[i];
    out[idx] += v;
  }
  return out;
}

}  // namespace

int solve_contraction_sign() {
  // Unknown per-grade signs s2, s3 relative to the first-slot interior
  // product (s1 = +1 is fixed by e_i⌋ε_j = δ_ij). Exactly one pair satisfies
  // a⌋(ν∧Φ) = ν∧(a⌋Φ) + (a|ν)Φ on every basis triple.
  int solution = 0;
  int count = 0;
  for (int s2 : {1, -1}) {
    for (int s3 : {1, -1}) {
      bool ok = true;
      for (int m = 0; m < kDim && ok; ++m) {
        for (int n = 0; n < kDim && ok; ++n) {
          const MultiForm nu = MultiForm::basis(1, n);
          for (int f = 0; f < grade_dim(2) && ok; ++f) {
            const MultiForm phi = MultiForm::basis(2, f);
            const MultiForm lhs = interior_first_slot(m, wedge(nu, phi), s3);
            MultiForm rhs = wedge(nu, interior_first_slot(m, phi, s2));
            if (m == n) rhs += phi;
            ok = lhs == rhs;
          }
        }
      }
      if (ok) {
        ++count;
        // e1⌋ε12 = s2 · i_{e1} ε12 = s2 · ε2.
        solution = s2;
      }
    }
  }
  if (count != 1) throw std::logic_error("contraction identity does not determine a unique sign");
  return solution;
}

}  // namespace premetric
