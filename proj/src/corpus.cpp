#include "premetric/corpus.hpp"

#include <stdexcept>

namespace premetric::corpus {

long Rng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

long Rng::nonzero(long bound) {
  const long v = integer(1, bound);
  return coin() ? v : -v;
}

Scalar Rng::rational() {
  const long p = integer(-9, 9);
  const long q = integer(0, 3) == 0 ? integer(2, 4) : 1;
  return ratio(p, q);
}

Scalar Rng::nonzero_rational() {
  const long q = integer(0, 3) == 0 ? integer(2, 4) : 1;
  return ratio(nonzero(9), q);
}

namespace {

struct Name {
  Family family;
  const char* id;
};

constexpr Name kNames[] = {
    {Family::Axion, "axion"},
    {Family::Skewon, "skewon"},
    {Family::SkewonAxion, "skewon-axion"},
    {Family::PMedium, "p-medium"},
    {Family::SpecialPAxion, "special-p-axion"},
    {Family::GeneralPAxion, "general-p-axion"},
    {Family::Case2General, "case2-general"},
    {Family::Case1, "case1"},
    {Family::Case1Singular, "case1-singular"},
    {Family::QAntisym, "q-antisym"},
    {Family::QSymmetric, "q-symmetric"},
    {Family::RawDense, "raw-dense"},
};

Scalar trace_of(const Dyadic& b) {
  Scalar t;
  for (int i = 0; i < 4; ++i) t += b.matrix()(i, i);
  return t;
}

}  // namespace

std::string to_string(Family f) {
  for (const auto& n : kNames)
    if (n.family == f) return n.id;
  return "?";
}

Family family_from_string(const std::string& name) {
  for (const auto& n : kNames)
    if (name == n.id) return n.family;
  throw std::invalid_argument("unknown family '" + name + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& n : kNames) v.push_back(n.family);
    return v;
  }();
  return all;
}

MultiForm random_form(Rng& rng, int grade) {
  MultiForm f(grade);
  for (int i = 0; i < f.size(); ++i) f[i] = rng.integer(-5, 5);
  return f;
}

MultiVector random_vector(Rng& rng, int grade) {
  MultiVector v(grade);
  for (int i = 0; i < v.size(); ++i) v[i] = rng.integer(-5, 5);
  return v;
}

Dyadic random_dyadic(Rng& rng, Space out, Space in, long bound) {
  RationalMatrix m(out.dim(), in.dim());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rng.integer(-bound, bound);
  return Dyadic(out, in, std::move(m));
}

Dyadic random_full_rank(Rng& rng) {
  for (;;) {
    Dyadic d = random_dyadic(rng, E1, F1, 3);
    if (rank(d) == 4) return d;
  }
}

Dyadic random_square_determinant(Rng& rng) {
  // L · diag(k1, k1, k2, k2) · U with unit triangular L, U.
  RationalMatrix l = RationalMatrix::identity(4), u = RationalMatrix::identity(4), d(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) {
      l(i, j) = rng.integer(-2, 2);
      u(j, i) = rng.integer(-2, 2);
    }
  const long k1 = rng.nonzero(3), k2 = rng.nonzero(3);
  d(0, 0) = d(1, 1) = k1;
  d(2, 2) = d(3, 3) = k2;
  return Dyadic(E1, F1, l * d * u);
}

Dyadic random_symmetric_q(Rng& rng) {
  for (;;) {
    RationalMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = rng.integer(-4, 4);
    if (rank(m) == 4) return Dyadic(E1, E1, std::move(m));
  }
}

MultiVector random_nonsimple_bivector(Rng& rng) {
  for (;;) {
    MultiVector a = random_vector(rng, 2);
    if (!wedge(a, a).is_zero()) return a;
  }
}

MediumRecipe random_recipe(Family f, Rng& rng) {
  switch (f) {
    case Family::Axion:
      return recipe::Axion{rng.rational()};
    case Family::Skewon: {
      // Symmetric part of the modified form is (tr B/2 + α) times e_N⌊I^(2)T.
      Dyadic b = random_dyadic(rng, E1, F1);
      for (;;) {
        const recipe::SkewonAxion r{b, -trace_of(b) / 2};
        if (rank(build(r)) == 6) return r;
        b = random_dyadic(rng, E1, F1);
      }
    }
    case Family::SkewonAxion: {
      for (;;) {
        const recipe::SkewonAxion r{random_dyadic(rng, E1, F1), rng.rational()};
        // Keep the effective axion part nonzero so the class is not a pure skewon.
        if (sgn(trace_of(r.B) / 2 + r.alpha) != 0) return r;
      }
    }
    case Family::PMedium:
      return recipe::PAxion{random_full_rank(rng), rng.nonzero_rational(), 0};
    case Family::SpecialPAxion: {
      // α² = M² det P.
      const Dyadic p = random_square_determinant(rng);
      const Scalar m = rng.nonzero_rational();
      Scalar root;
      rational_sqrt(determinant(p.matrix()), root);
      const Scalar alpha = m * root;
      return recipe::PAxion{p, m, rng.coin() ? alpha : Scalar(-alpha)};
    }
    case Family::GeneralPAxion: {
      for (;;) {
        const Dyadic p = random_full_rank(rng);
        const Scalar m = rng.nonzero_rational();
        const Scalar alpha = rng.nonzero_rational();
        if (alpha * alpha != m * m * determinant(p.matrix())) return recipe::PAxion{p, m, alpha};
      }
    }
    case Family::Case2General:
      return recipe::Case2General{random_dyadic(rng, E1, F1), rng.coin() ? rng.rational() : Scalar(0),
                                  rng.rational(), rng.rational()};
    case Family::Case1: {
      for (;;) {
        recipe::Case1 c{random_form(rng, 2), random_form(rng, 2), random_vector(rng, 2), random_vector(rng, 2),
                        rng.nonzero_rational()};
        if (sgn(case1_determinant(c)) != 0) return c;
      }
    }
    case Family::Case1Singular: {
      // D = 0 and Π|C = −α make the determinant vanish.
      for (;;) {
        recipe::Case1 c{random_form(rng, 2), random_form(rng, 2), random_vector(rng, 2), MultiVector(2), 0};
        c.alpha = -pair(c.Pi, c.C);
        if (sgn(c.alpha) != 0) return c;
      }
    }
    case Family::QAntisym:
      return recipe::QAntisym{random_nonsimple_bivector(rng), rng.nonzero_rational()};
    case Family::QSymmetric:
      return recipe::QMedium{random_symmetric_q(rng), rng.nonzero_rational()};
    case Family::RawDense:
      return recipe::Raw{random_dyadic(rng, F2, E2, 9)};
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace premetric::corpus
