#include "premetric/media.hpp"

#include "premetric/poly.hpp"

namespace premetric {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_space(const Dyadic& d, Space out, Space in, const char* what) {
  if (d.out_space() != out || d.in_space() != in)
    throw SpaceMismatch(std::string(what) + " must be in " + to_string(out) + to_string(in) + ", got " +
                        to_string(d.out_space()) + to_string(d.in_space()));
}

void require_grade(int actual, int expected, const char* what) {
  if (actual != expected)
    throw DegreeError(std::string(what) + " must have grade " + std::to_string(expected));
}

Dyadic axion_part(const Scalar& alpha) { return alpha * units::I2T(); }

// C2: the matrix of e_N⌊ on two-forms. Entry (0, 5) is +1 (ε12 ↦ e34), so
// a multiple of C2 can be read off that entry.
const RationalMatrix& c2() {
  static const RationalMatrix m = units::eN_I2T().matrix();
  return m;
}

RationalMatrix symmetric_part(const RationalMatrix& m) { return (m + m.transposed()) * Scalar(1, 2); }
RationalMatrix antisymmetric_part(const RationalMatrix& m) { return (m - m.transposed()) * Scalar(1, 2); }

// Exponent vectors of total degree d, as one-forms: a unisolvent set for
// homogeneous polynomials of degree d in four variables.
std::vector<MultiForm> lattice(int d) {
  std::vector<MultiForm> pts;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c) pts.push_back(form4(a, b, c, d - a - b - c));
  return pts;
}

}  // namespace

std::string recipe_kind(const MediumRecipe& r) {
  return std::visit(overloaded{
                        [](const recipe::Axion&) { return std::string("axion"); },
                        [](const recipe::SkewonAxion&) { return std::string("skewon-axion"); },
                        [](const recipe::PAxion&) { return std::string("p-axion"); },
                        [](const recipe::Case2General&) { return std::string("case2"); },
                        [](const recipe::Case1&) { return std::string("case1"); },
                        [](const recipe::QMedium&) { return std::string("q-medium"); },
                        [](const recipe::QAntisym&) { return std::string("q-antisym"); },
                        [](const recipe::Raw&) { return std::string("raw"); },
                    },
                    r);
}

Dyadic antisymmetric_dyadic(const MultiVector& a) {
  require_grade(a.grade(), 2, "bivector A");
  RationalMatrix q(4, 4);
  for (int j = 0; j < 4; ++j) {
    const MultiVector col = hook(a, MultiForm::basis(1, j));
    for (int i = 0; i < 4; ++i) q(i, j) = col[i];
  }
  return Dyadic(E1, E1, std::move(q));
}

Dyadic build(const MediumRecipe& r) {
  return std::visit(
      overloaded{
          [](const recipe::Axion& x) { return axion_part(x.alpha); },
          [](const recipe::SkewonAxion& x) {
            require_space(x.B, E1, F1, "B");
            return transpose(double_wedge(x.B, units::I())) + axion_part(x.alpha);
          },
          [](const recipe::PAxion& x) {
            require_space(x.P, E1, F1, "P");
            return x.M * transpose(compound(x.P, 2)) + axion_part(x.alpha);
          },
          [](const recipe::Case2General& x) {
            require_space(x.B, E1, F1, "B");
            return x.a * transpose(compound(x.B, 2)) + x.b * transpose(double_wedge(x.B, units::I())) +
                   axion_part(x.c);
          },
          [](const recipe::Case1& x) {
            require_grade(x.Pi.grade(), 2, "two-form Π");
            require_grade(x.Lambda.grade(), 2, "two-form Λ");
            require_grade(x.C.grade(), 2, "bivector C");
            require_grade(x.D.grade(), 2, "bivector D");
            return Dyadic::dyad(x.Pi, x.C) + Dyadic::dyad(x.Lambda, x.D) + axion_part(x.alpha);
          },
          [](const recipe::QMedium& x) {
            require_space(x.Q, E1, E1, "Q");
            return from_modified(x.M * compound(x.Q, 2));
          },
          [](const recipe::QAntisym& x) {
            return from_modified(x.M * compound(antisymmetric_dyadic(x.A), 2));
          },
          [](const recipe::Raw& x) {
            require_space(x.M, F2, E2, "raw medium");
            return x.M;
          },
      },
      r);
}

HODecomposition decompose_hehl_obukhov(const Dyadic& m) {
  require_space(m, F2, E2, "medium");
  const Scalar axion = trace(m) / 6;
  const Dyadic mm = to_modified(m);
  const Dyadic skewon = from_modified(Dyadic(E2, E2, antisymmetric_part(mm.matrix())));
  Dyadic principal = m - skewon - axion_part(axion);
  return {std::move(principal), skewon, axion};
}

Scalar case1_determinant(const recipe::Case1& c) {
  const Scalar pc = pair(c.Pi, c.C), pd = pair(c.Pi, c.D);
  const Scalar lc = pair(c.Lambda, c.C), ld = pair(c.Lambda, c.D);
  return (pc + c.alpha) * (ld + c.alpha) - lc * pd;
}

Case1Inverse invert_case1(const recipe::Case1& c) {
  const Dyadic m = build(c);
  if (sgn(c.alpha) == 0) throw PreconditionError("case-1 inverse needs α ≠ 0");
  const Scalar det = case1_determinant(c);
  if (sgn(det) == 0) throw NoInverse(rank(m), 6, "case-1 determinant D = 0");

  Case1Inverse out{MultiVector(2), MultiVector(2), 1 / c.alpha, det, false};
  const Scalar pc = pair(c.Pi, c.C);
  if (c.D.is_zero()) {
    out.C = c.C * (Scalar(-1) / (c.alpha * (pc + c.alpha)));
    out.reduced = true;
  } else {
    RationalMatrix two(6, 2);
    for (int i = 0; i < 6; ++i) {
      two(i, 0) = c.Pi[i];
      two(i, 1) = c.Lambda[i];
    }
    if (rank(two) < 2) throw PreconditionError("case-1 inverse needs linearly independent Π and Λ");
    const Scalar pd = pair(c.Pi, c.D);
    const Scalar lc = pair(c.Lambda, c.C), ld = pair(c.Lambda, c.D);
    const Scalar f = Scalar(-1) / (c.alpha * det);
    out.C = f * ((ld + c.alpha) * c.C - lc * c.D);
    out.D = f * ((pc + c.alpha) * c.D - pd * c.C);
  }
  const recipe::Case1 inv{c.Pi, c.Lambda, out.C, out.D, out.alpha};
  if (compose(m, build(inv)) != units::I2T())
    throw ConventionError("case-1 inverse formula does not reproduce the unit bidyadic");
  return out;
}

std::string to_string(PQBranch b) {
  switch (b) {
    case PQBranch::QSolution: return "Q-solution";
    case PQBranch::PSolution: return "P-solution";
    case PQBranch::QAntisymmetric: return "Q-solution with antisymmetric Q";
    case PQBranch::PMultipleOfIdentity: return "P-solution with P = pI";
  }
  return "?";
}

const std::vector<MultiForm>& default_probes() {
  static const std::vector<MultiForm> probes = [] {
    std::vector<MultiForm> p;
    for (int i = 0; i < 4; ++i) p.push_back(MultiForm::basis(1, i));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) p.push_back(MultiForm::basis(1, i) + MultiForm::basis(1, j));
    return p;
  }();
  return probes;
}

PQuadratic check_p_quadratic(const Dyadic& mm) {
  require_space(mm, E2, E2, "modified bidyadic");
  const Dyadic lhs = dot(transpose(mm), mm);
  const Scalar p = lhs.matrix()(0, 5);
  return {lhs.matrix() == c2() * p, p};
}

bool check_paxion_relation(const Dyadic& mm, const Scalar& alpha, const Scalar& P) {
  require_space(mm, E2, E2, "modified bidyadic");
  const Dyadic mt = transpose(mm);
  const Dyadic lhs = dot(mt, mm) - alpha * (mt + mm);
  return lhs == (P - alpha * alpha) * units::eN_I2T();
}

PQBranch pq_discriminate(const Dyadic& mm, std::span<const MultiForm> probes) {
  require_space(mm, E2, E2, "modified bidyadic");
  if (rank(mm) < 6) throw PreconditionError("P/Q discriminator needs a full-rank modified bidyadic");
  if (!check_p_quadratic(mm).holds) throw NotApplicable("bidyadic does not satisfy M_mᵀ·M_m = P e_N⌊I^(2)T");

  // (M_m⌊⌊αα)^(p) is homogeneous of degree 2p in α.
  auto power = [&](const MultiForm& alpha, int p) {
    const Dyadic k = double_contract(mm, alpha);
    return p == 1 ? k : compound(k, p);
  };
  auto identically_zero = [&](int p) {
    for (const auto& a : probes)
      if (!power(a, p).is_zero()) return false;
    for (const auto& a : lattice(2 * p))
      if (!power(a, p).is_zero()) return false;
    return true;
  };

  if (!identically_zero(3)) return PQBranch::QSolution;
  if (!identically_zero(2)) return PQBranch::PSolution;
  if (!identically_zero(1)) return PQBranch::QAntisymmetric;
  return PQBranch::PMultipleOfIdentity;
}

std::string to_string(MediumClass c) {
  switch (c) {
    case MediumClass::Axion: return "axion";
    case MediumClass::Skewon: return "skewon";
    case MediumClass::SkewonAxion: return "skewon-axion";
    case MediumClass::PMedium: return "P-medium";
    case MediumClass::SpecialPAxion: return "special P-axion";
    case MediumClass::GeneralPAxion: return "general P-axion";
    case MediumClass::Case1: return "case 1";
    case MediumClass::DispersionFreeUnrecognized: return "dispersion-free (unrecognized)";
    case MediumClass::NotDispersionFree: return "not dispersion-free";
  }
  return "?";
}

std::optional<Case2Match> match_case2(const Dyadic& mm) {
  require_space(mm, E2, E2, "modified bidyadic");
  const RationalMatrix& c = c2();
  const RationalMatrix sym = symmetric_part(mm.matrix());
  const Scalar s = sym(0, 5);
  if (sym == c * s) {
    if (antisymmetric_part(mm.matrix()).is_zero()) return Case2Match{MediumClass::Axion, s, s * s};
    if (sgn(s) == 0) return Case2Match{MediumClass::Skewon, 0, 0};
    return Case2Match{MediumClass::SkewonAxion, s, 0};
  }

  // M_mᵀ·M_m = a (M_mᵀ + M_m) + b C2. The symmetric part is not a multiple
  // of C2 here, so (a, b) is unique when it exists.
  const RationalMatrix x = dot(transpose(mm), mm).matrix();
  const RationalMatrix y = sym * Scalar(2);
  RationalMatrix system(36, 3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      system(6 * i + j, 0) = y(i, j);
      system(6 * i + j, 1) = c(i, j);
      system(6 * i + j, 2) = x(i, j);
    }
  const Echelon e = reduced_row_echelon(system);
  if (e.pivots.size() != 2 || e.pivots[1] != 1) return std::nullopt;
  const Scalar a = e.reduced(0, 2);
  const Scalar b = e.reduced(1, 2);
  const Scalar p = b + a * a;

  // Antisymmetric-Q media satisfy the same law but belong to case 1.
  if (sgn(p) != 0) {
    const PQBranch branch = pq_discriminate(mm - a * units::eN_I2T());
    if (branch == PQBranch::QSolution || branch == PQBranch::QAntisymmetric) return std::nullopt;
  }
  if (sgn(a) == 0) return Case2Match{MediumClass::PMedium, 0, p};
  if (sgn(b) == 0) return Case2Match{MediumClass::SpecialPAxion, a, p};
  return Case2Match{MediumClass::GeneralPAxion, a, p};
}

InverseClassRow inverse_class_map(const Dyadic& m) {
  require_space(m, F2, E2, "medium");
  const Dyadic mm = to_modified(m);
  const auto mclass = match_case2(mm);
  if (!mclass) throw PreconditionError("inverse class map needs a case-2 medium");
  Dyadic n = inverse(m);
  const Dyadic nm = to_modified(n);
  if (nm != modified_inverse(mm)) throw ConventionError("N_m routes disagree");
  const auto nclass = match_case2(nm);
  return {mclass->cls, nclass ? nclass->cls : MediumClass::DispersionFreeUnrecognized, std::move(n)};
}

Dyadic affine_transform(const Dyadic& m, const Dyadic& a) {
  require_space(m, F2, E2, "medium");
  require_space(a, E1, F1, "affine map");
  Dyadic a_inv = [&] {
    try {
      return inverse(a);
    } catch (const NoInverse& e) {
      throw PreconditionError(std::string("affine map must be full rank: ") + e.what());
    }
  }();
  const Dyadic forward = transpose(compound(a, 2));
  const Dyadic backward = transpose(compound(a_inv, 2));
  return compose(compose(backward, m), forward);
}

std::optional<recipe::Case1> find_case1(const Dyadic& m) {
  require_space(m, F2, E2, "medium");
  const RationalMatrix& mat = m.matrix();
  const std::vector<Scalar> xs{0, 1, 2, 3};
  std::vector<RationalMatrix> shifted;
  for (const auto& x : xs) shifted.push_back(mat - RationalMatrix::identity(6) * x);

  auto det3 = [](const RationalMatrix& a, const int* r, const int* c) -> Scalar {
    return a(r[0], c[0]) * (a(r[1], c[1]) * a(r[2], c[2]) - a(r[1], c[2]) * a(r[2], c[1])) -
           a(r[0], c[1]) * (a(r[1], c[0]) * a(r[2], c[2]) - a(r[1], c[2]) * a(r[2], c[0])) +
           a(r[0], c[2]) * (a(r[1], c[0]) * a(r[2], c[1]) - a(r[1], c[1]) * a(r[2], c[0]));
  };

  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) triples.push_back({i, j, k});

  Polynomial g;
  for (const auto& r : triples) {
    for (const auto& c : triples) {
      std::vector<Scalar> ys;
      for (const auto& a : shifted) ys.push_back(det3(a, r.data(), c.data()));
      g = gcd(g, Polynomial::interpolate(xs, ys));
      if (g.degree() == 0) return std::nullopt;
    }
  }
  if (g.degree() < 1) return std::nullopt;

  for (const Scalar& alpha : rational_roots(g)) {
    const RationalMatrix rest = mat - RationalMatrix::identity(6) * alpha;
    if (rank(rest) > 2) continue;
    const Echelon e = reduced_row_echelon(rest);
    recipe::Case1 c{MultiForm(2), MultiForm(2), MultiVector(2), MultiVector(2), alpha};
    if (!e.pivots.empty()) {
      c.Pi = MultiForm(2, rest.column(e.pivots[0]));
      for (int j = 0; j < 6; ++j) c.C[j] = e.reduced(0, j);
    }
    if (e.pivots.size() > 1) {
      c.Lambda = MultiForm(2, rest.column(e.pivots[1]));
      for (int j = 0; j < 6; ++j) c.D[j] = e.reduced(1, j);
    }
    if (build(c) != m) throw ConventionError("case-1 factorization does not reproduce the medium");
    return c;
  }
  return std::nullopt;
}

namespace {

struct Structure {
  MediumClass cls;
  std::optional<Case2Match> case2;
  std::optional<recipe::Case1> case1;
};

Structure classify_structure(const Dyadic& m, bool dispersion_free) {
  if (!dispersion_free) return {MediumClass::NotDispersionFree, std::nullopt, std::nullopt};
  if (auto c2m = match_case2(to_modified(m))) return {c2m->cls, c2m, std::nullopt};
  if (auto c1 = find_case1(m)) return {MediumClass::Case1, std::nullopt, c1};
  return {MediumClass::DispersionFreeUnrecognized, std::nullopt, std::nullopt};
}

}  // namespace

ClassificationVerdict classify_raw(const Dyadic& m) {
  require_space(m, F2, E2, "medium");
  ClassificationVerdict v;
  v.dispersion_free = is_dispersion_free(m);
  const Structure s = classify_structure(m, v.dispersion_free);
  v.structural = s.cls;
  v.case2 = s.case2;
  v.case1 = s.case1;

  const Dyadic mm = to_modified(m);
  const bool full_rank = rank(mm) == 6;
  if (full_rank) {
    // The discriminator applies to whichever form satisfies the quadratic
    // law: M_m itself, or M_m − α e_N⌊I^(2)T for a P-axion.
    Dyadic law = mm;
    if (s.case2 && s.case2->cls != MediumClass::Skewon && s.case2->cls != MediumClass::SkewonAxion &&
        s.case2->cls != MediumClass::Axion)
      law = mm - s.case2->axion * units::eN_I2T();
    if (rank(law) == 6 && check_p_quadratic(law).holds) v.discriminator = pq_discriminate(law);

    const Dyadic n = inverse(m);
    const bool n_free = v.dispersion_free ? is_dispersion_free(n) : false;
    v.inverse_class = classify_structure(n, n_free).cls;
  }
  return v;
}

bool vanishing_certificate(const Dyadic& f) {
  require_space(f, E2, E2, "bidyadic");
  // Quadratic coefficients of ν ↦ F⌊⌊νν by polarization over basis one-forms.
  bool all_zero = true;
  std::array<Dyadic, 4> diag{Dyadic::zero(E1, E1), Dyadic::zero(E1, E1), Dyadic::zero(E1, E1),
                             Dyadic::zero(E1, E1)};
  for (int i = 0; i < 4; ++i) {
    diag[i] = double_contract(f, MultiForm::basis(1, i));
    all_zero = all_zero && diag[i].is_zero();
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const MultiForm sum = MultiForm::basis(1, i) + MultiForm::basis(1, j);
      const Dyadic cross = double_contract(f, sum) - diag[i] - diag[j];
      all_zero = all_zero && cross.is_zero();
    }
  const bool proportional = f.matrix() == c2() * f.matrix()(0, 5);
  if (all_zero != proportional) throw ConventionError("vanishing-certificate routes disagree");
  return all_zero;
}

}  // namespace premetric
