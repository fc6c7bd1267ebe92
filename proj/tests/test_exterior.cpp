#include "doctest.h"
#include "premetric/corpus.hpp"
#include "premetric/exterior.hpp"
#include "premetric/matrix.hpp"

using namespace premetric;
using corpus::Rng;

namespace {

MultiForm eps(int i) { return MultiForm::basis(1, i - 1); }
MultiVector e(int i) { return MultiVector::basis(1, i - 1); }
MultiForm eps2(int i, int j) { return wedge(eps(i), eps(j)); }

MultiForm rform(Rng& rng, int g) { return corpus::random_form(rng, g); }
MultiVector rvec(Rng& rng, int g) { return corpus::random_vector(rng, g); }

// Determinant by Laplace expansion along the first row.
Scalar laplace(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Scalar acc;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    acc += (c % 2 ? -1 : 1) * m[0][c] * laplace(minor);
  }
  return acc;
}

template <Kind K>
Graded<K> wedge_all(const std::vector<Graded<K>>& xs) {
  Graded<K> acc = Graded<K>::scalar(1);
  for (const auto& x : xs) acc = wedge(acc, x);
  return acc;
}

}  // namespace

TEST_CASE("wedge examples") {
  CHECK(wedge(eps(1), eps(2)) == MultiForm::basis(2, 0));
  CHECK(wedge(eps(1), eps(1)).is_zero());
  CHECK(wedge(eps(1) + eps(2), eps(3)) == MultiForm::basis(2, 1) + MultiForm::basis(2, 3));
  CHECK_THROWS_AS(wedge(MultiForm::basis(3, 0), MultiForm::basis(2, 0)), DegreeError);
}

TEST_CASE("wedge is graded-anticommutative and associative") {
  Rng rng(1);
  for (int n = 0; n < 200; ++n) {
    const int k = static_cast<int>(rng.integer(0, 4));
    const int l = static_cast<int>(rng.integer(0, 4 - k));
    const MultiForm x = rform(rng, k), y = rform(rng, l);
    const int sign = (k * l) % 2 ? -1 : 1;
    CHECK(wedge(x, y) == Scalar(sign) * wedge(y, x));
    const MultiVector a = rvec(rng, k), b = rvec(rng, l);
    CHECK(wedge(a, b) == Scalar(sign) * wedge(b, a));
  }
  for (int n = 0; n < 100; ++n) {
    const MultiForm x = rform(rng, 1), y = rform(rng, 2), z = rform(rng, 1);
    CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
  }
}

TEST_CASE("pairing examples") {
  CHECK(pair(MultiForm::basis(2, 0), MultiVector::basis(2, 0)) == 1);
  CHECK(pair(MultiForm::basis(2, 0), MultiVector::basis(2, 5)) == 0);
  CHECK(pair(wedge(eps(1), eps(2)), wedge(e(2), e(1))) == -1);
  CHECK(pair(eps_N(), e_N()) == 1);
  CHECK_THROWS_AS(pair(MultiForm::basis(2, 0), MultiVector::basis(1, 0)), DegreeError);
}

TEST_CASE("pairing of decomposables equals the Laplace determinant") {
  Rng rng(2);
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n < 50; ++n) {
      std::vector<MultiForm> alphas;
      std::vector<MultiVector> as;
      for (int i = 0; i < k; ++i) {
        alphas.push_back(rform(rng, 1));
        as.push_back(rvec(rng, 1));
      }
      std::vector<std::vector<Scalar>> m(k, std::vector<Scalar>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = pair(alphas[i], as[j]);
      CHECK(pair(wedge_all(alphas), wedge_all(as)) == laplace(m));
    }
}

TEST_CASE("contraction examples and the solved sign") {
  CHECK(contract(e(1), eps(1)) == MultiForm::scalar(1));
  CHECK(contract(e(3), eps2(1, 2)).is_zero());
  const int s = solve_contraction_sign();
  CHECK((s == 1 || s == -1));
  CHECK(contract(e(1), eps2(1, 2)) == Scalar(s) * eps(2));
  CHECK(s == -1);
}

TEST_CASE("contraction identity a|(nu^Phi) = nu^(a|Phi) + (a|nu) Phi on 1000 random triples") {
  Rng rng(3);
  for (int n = 0; n < 1000; ++n) {
    const MultiVector a = rvec(rng, 1);
    const MultiForm nu = rform(rng, 1), phi = rform(rng, 2);
    const MultiForm lhs = contract(a, wedge(nu, phi));
    const MultiForm rhs = wedge(nu, contract(a, phi)) + pair(nu, a) * phi;
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("contraction adjointness sign is fixed per grade") {
  // pair(a|w, X) = pair(w, X^a) = (-1)^(deg X) pair(w, a^X).
  Rng rng(4);
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n < 50; ++n) {
      const MultiVector a = rvec(rng, 1), x = rvec(rng, k - 1);
      const MultiForm w = rform(rng, k);
      CHECK(pair(contract(a, w), x) == pair(w, wedge(x, a)));
      const int sign = (k - 1) % 2 ? -1 : 1;
      CHECK(pair(contract(a, w), x) == sign * pair(w, wedge(a, x)));
    }
}

TEST_CASE("form-into-vector contraction and hooks are adjoint to wedge") {
  Rng rng(5);
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= k; ++l)
      for (int n = 0; n < 20; ++n) {
        const MultiVector x = rvec(rng, k);
        const MultiForm alpha = rform(rng, l), beta = rform(rng, k - l);
        CHECK(pair(beta, hook(x, alpha)) == pair(wedge(alpha, beta), x));
        const MultiForm w = rform(rng, k);
        const MultiVector a = rvec(rng, l), b = rvec(rng, k - l);
        CHECK(pair(hook(w, a), b) == pair(w, wedge(a, b)));
      }
  for (int n = 0; n < 20; ++n) {
    const MultiForm alpha = rform(rng, 1), beta = rform(rng, 1);
    const MultiVector x = rvec(rng, 2);
    CHECK(pair(beta, contract(alpha, x)) == pair(wedge(beta, alpha), x));
  }
  CHECK_THROWS_AS(hook(MultiVector::basis(1, 0), MultiForm::basis(2, 0)), DegreeError);
}

TEST_CASE("complement examples") {
  CHECK(complement(eps_N()) == MultiVector::scalar(1));
  CHECK(complement(eps2(1, 2)) == MultiVector::basis(2, 5));
  Rng rng(6);
  const MultiForm x = rform(rng, 2), y = rform(rng, 2);
  CHECK(complement(x + y) == complement(x) + complement(y));
}

TEST_CASE("complement maps two-forms bijectively onto bivectors") {
  RationalMatrix m(6, 6);
  for (int j = 0; j < 6; ++j) {
    const MultiVector c = complement(MultiForm::basis(2, j));
    for (int i = 0; i < 6; ++i) m(i, j) = c[i];
  }
  CHECK(determinant(m) != 0);
  CHECK(m == m.transposed());
}

TEST_CASE("complement round trip signs") {
  const int expected[5] = {1, -1, 1, -1, 1};
  for (int g = 0; g <= 4; ++g) {
    CHECK(complement_roundtrip_sign(g) == expected[g]);
    for (int i = 0; i < grade_dim(g); ++i) {
      const MultiForm b = MultiForm::basis(g, i);
      CHECK(complement_roundtrip(b) == Scalar(expected[g]) * b);
      CHECK(complement(complement(b)) == Scalar(expected[g]) * b);
    }
    CHECK(complement_roundtrip(MultiForm(g)).is_zero());
  }
  CHECK(complement_roundtrip(MultiForm::scalar(1)) == MultiForm::scalar(1));
}

TEST_CASE("basis tables") {
  CHECK(basis::label(2, 0) == "12");
  CHECK(basis::label(2, 5) == "34");
  CHECK(basis::label(3, 2) == "134");
  for (int g = 0; g <= 4; ++g)
    for (int i = 0; i < grade_dim(g); ++i) CHECK(basis::index_of(basis::mask(g, i)) == i);
  const auto& w = basis::wedge_entry(1, 1, 1, 0);  // e2 ^ e1
  CHECK(w.index == 0);
  CHECK(w.sign == -1);
}
