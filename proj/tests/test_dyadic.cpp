#include "doctest.h"
#include "premetric/corpus.hpp"
#include "premetric/dyadic.hpp"
#include "premetric/media.hpp"

using namespace premetric;
using corpus::Rng;

namespace {

Dyadic random_e1f1(Rng& rng) { return corpus::random_dyadic(rng, E1, F1, 4); }

// p x p minors of a 4x4 matrix indexed by lexicographic p-subsets.
RationalMatrix minors(const RationalMatrix& f, int p) {
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    std::vector<int> s;
    for (int i = 0; i < 4; ++i)
      if (mask & (1 << i)) s.push_back(i);
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end());
  RationalMatrix out(subsets.size(), subsets.size());
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      RationalMatrix sub(p, p);
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) sub(i, j) = f(subsets[r][i], subsets[c][j]);
      out(r, c) = determinant(sub);
    }
  return out;
}

}  // namespace

TEST_CASE("compose examples") {
  Rng rng(1);
  const MultiForm phi = corpus::random_form(rng, 2);
  CHECK(apply<Kind::Form>(units::I2T(), phi) == phi);
  const Scalar a(7, 3);
  CHECK(apply<Kind::Form>(a * units::I2T(), phi) == a * phi);
  CHECK_THROWS_AS(compose(units::eN_I2T(), units::eN_I2T()), SpaceMismatch);
  const Dyadic f = corpus::random_dyadic(rng, F2, E2), g = corpus::random_dyadic(rng, F2, E2),
               h = corpus::random_dyadic(rng, F2, E2);
  CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
}

TEST_CASE("transpose") {
  Rng rng(2);
  const Dyadic m = corpus::random_dyadic(rng, F2, E2);
  CHECK(transpose(transpose(m)) == m);
  CHECK(transpose(units::eN_I2T()) == units::eN_I2T());
  const MultiVector a = corpus::random_vector(rng, 1);
  const MultiForm b = corpus::random_form(rng, 1);
  CHECK(transpose(Dyadic::dyad(a, b)) == Dyadic::dyad(b, a));
}

TEST_CASE("double wedge") {
  CHECK(double_wedge(units::I(), units::I()) == Scalar(2) * units::I2());
  Rng rng(3);
  const MultiVector a = corpus::random_vector(rng, 1);
  const MultiForm al = corpus::random_form(rng, 1), be = corpus::random_form(rng, 1);
  CHECK(double_wedge(Dyadic::dyad(a, al), Dyadic::dyad(a, be)).is_zero());
  for (int n = 0; n < 20; ++n) {
    const Dyadic f = random_e1f1(rng), g = random_e1f1(rng);
    CHECK(double_wedge(f, g) == double_wedge(g, f));
  }
  CHECK_THROWS_AS(double_wedge(units::I2(), compound(units::I(), 3)), DegreeError);
}

TEST_CASE("compounds are minors") {
  CHECK(compound(units::I(), 2) == units::I2());
  Rng rng(4);
  for (int n = 0; n < 20; ++n) {
    const Dyadic f = random_e1f1(rng);
    for (int p = 2; p <= 4; ++p) CHECK(compound(f, p).matrix() == minors(f.matrix(), p));
    CHECK(compound(f, 4).matrix()(0, 0) == determinant(f.matrix()));
  }
  CHECK_THROWS_AS(compound(units::I(), 5), DegreeError);
  CHECK_THROWS_AS(compound(units::I(), 0), DegreeError);
}

TEST_CASE("compounds are multiplicative") {
  Rng rng(5);
  for (int n = 0; n < 20; ++n) {
    const Dyadic f = corpus::random_full_rank(rng), g = corpus::random_full_rank(rng);
    for (int p = 2; p <= 4; ++p) CHECK(compound(compose(f, g), p) == compose(compound(f, p), compound(g, p)));
  }
}

TEST_CASE("rank two iff vanishing third compound") {
  Rng rng(6);
  for (int n = 0; n < 50; ++n) {
    const MultiVector a = corpus::random_vector(rng, 1), b = corpus::random_vector(rng, 1);
    const MultiForm al = corpus::random_form(rng, 1), be = corpus::random_form(rng, 1);
    const Dyadic f = Dyadic::dyad(a, al) + Dyadic::dyad(b, be);
    CHECK(rank(f) <= 2);
    CHECK(compound(f, 3).is_zero());
  }
  for (int n = 0; n < 20; ++n) {
    const Dyadic f = random_e1f1(rng);
    CHECK((rank(f) <= 2) == compound(f, 3).is_zero());
  }
}

TEST_CASE("antisymmetric Q second compound") {
  Rng rng(7);
  for (int n = 0; n < 50; ++n) {
    const MultiVector a = corpus::random_vector(rng, 2);
    const Dyadic q = antisymmetric_dyadic(a);
    CHECK(transpose(q).matrix() == Scalar(-1) * q.matrix());
    const Scalar aa = pair(eps_N(), wedge(a, a));
    CHECK(compound(q, 2) == Dyadic::dyad(a, a) - Scalar(1, 2) * aa * units::eN_I2T());
  }
}

TEST_CASE("double contraction") {
  Rng rng(8);
  for (int n = 0; n < 10; ++n) {
    const MultiForm nu = corpus::random_form(rng, 1);
    CHECK(double_contract(units::eN_I2T(), nu).is_zero());
    const Dyadic f = corpus::random_dyadic(rng, E2, E2);
    CHECK(double_contract(f, MultiForm(1)).is_zero());
    // On a dyad, (AB)⌊⌊νν = (A⌊ν)(B⌊ν).
    const MultiVector a = corpus::random_vector(rng, 2), b = corpus::random_vector(rng, 2);
    CHECK(double_contract(Dyadic::dyad(a, b), nu) == Dyadic::dyad(hook(a, nu), hook(b, nu)));
  }
  CHECK_THROWS_AS(double_contract(units::I2T(), MultiForm::basis(1, 0)), SpaceMismatch);
}

TEST_CASE("double pair") {
  CHECK(double_pair(Dyadic::dyad(e_N(), e_N())) == 1);
  CHECK(double_pair(Dyadic::zero({Kind::Vector, 4}, {Kind::Vector, 4})) == 0);
  const Dyadic f = Dyadic::dyad(e_N(), e_N());
  CHECK(double_pair(Scalar(3) * f + Scalar(-2) * f) == 1);
  CHECK_THROWS_AS(double_pair(units::eN_I2T()), SpaceMismatch);
}

TEST_CASE("dot product") {
  const Dyadic c = units::eN_I2T();
  CHECK(dot(c, c) == Scalar(complement_roundtrip_sign(2)) * c);
  Rng rng(9);
  const Dyadic g = corpus::random_dyadic(rng, E2, E2);
  CHECK(dot(Dyadic::zero(E2, E2), g).is_zero());
  // Printed definition with the explicit middle factor.
  const Dyadic a = corpus::random_dyadic(rng, E2, E2);
  CHECK(dot(a, g) == compose(compose(a, units::epsN_I2()), g));
  // The two-form dot product is symmetric.
  for (int n = 0; n < 20; ++n) {
    const MultiForm phi = corpus::random_form(rng, 2), psi = corpus::random_form(rng, 2);
    CHECK(dot(phi, psi) == dot(psi, phi));
  }
  // For symmetric arguments A·B = (B·A)^T.
  for (int n = 0; n < 20; ++n) {
    Dyadic s1 = corpus::random_dyadic(rng, E2, E2), s2 = corpus::random_dyadic(rng, E2, E2);
    s1 = s1 + transpose(s1);
    s2 = s2 + transpose(s2);
    CHECK(dot(s1, s2) == transpose(dot(s2, s1)));
  }
  CHECK(units::epsN_I2().matrix() * c.matrix() == RationalMatrix::identity(6));
}

TEST_CASE("inverse") {
  CHECK(inverse(units::I2T()) == units::I2T());
  CHECK(inverse(Scalar(4) * units::I2T()) == Scalar(1, 4) * units::I2T());
  Rng rng(10);
  int checked = 0;
  while (checked < 100) {
    const Dyadic m = corpus::random_dyadic(rng, F2, E2);
    if (rank(m) < 6) continue;
    ++checked;
    CHECK(compose(m, inverse(m)) == units::I2T());
  }
  const Dyadic dyad = Dyadic::dyad(corpus::random_form(rng, 2), corpus::random_vector(rng, 2));
  try {
    inverse(dyad);
    FAIL("expected NoInverse");
  } catch (const NoInverse& e) {
    CHECK(e.rank() == 1);
    CHECK(e.dim() == 6);
  }
}

TEST_CASE("trace") {
  CHECK(trace(units::I2T()) == 6);
  Rng rng(11);
  const Dyadic f = corpus::random_dyadic(rng, F2, E2), g = corpus::random_dyadic(rng, F2, E2);
  CHECK(trace(f + g) == trace(f) + trace(g));
  for (int n = 0; n < 20; ++n) {
    const Dyadic b = random_e1f1(rng);
    const Scalar alpha = rng.rational();
    const Dyadic m = build(recipe::SkewonAxion{b, alpha});
    CHECK(trace(transpose(double_wedge(b, units::I()))) == 3 * trace(b));
    CHECK(trace(m) == 3 * trace(b) + 6 * alpha);
  }
  // Trace-free B gives 6α.
  RationalMatrix tf{{1, 2, 0, 0}, {0, -1, 3, 0}, {0, 0, 2, 1}, {1, 0, 0, -2}};
  CHECK(trace(build(recipe::SkewonAxion{Dyadic(E1, F1, tf), Scalar(5, 2)})) == 15);
}

TEST_CASE("modified bidyadic conversions") {
  Rng rng(12);
  for (int n = 0; n < 20; ++n) {
    const Dyadic m = corpus::random_dyadic(rng, F2, E2);
    CHECK(from_modified(to_modified(m)) == m);
    if (rank(m) < 6) continue;
    CHECK(modified_inverse(to_modified(m)) == to_modified(inverse(m)));
  }
}
