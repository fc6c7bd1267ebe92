#include "doctest.h"
#include "premetric/poly.hpp"

using namespace premetric;

namespace {
Polynomial from_roots(std::initializer_list<Scalar> roots) {
  Polynomial p({Scalar(1)});
  for (const auto& r : roots) p = p * Polynomial({-r, Scalar(1)});
  return p;
}
}  // namespace

TEST_CASE("interpolation recovers a cubic") {
  const Polynomial p({Scalar(1), Scalar(-2), Scalar(0), Scalar(3, 2)});
  std::vector<Scalar> xs{0, 1, 2, 3}, ys;
  for (const auto& x : xs) ys.push_back(p(x));
  CHECK(Polynomial::interpolate(xs, ys) == p);
}

TEST_CASE("gcd is monic and divides both") {
  const Polynomial a = from_roots({1, 2, Scalar(-1, 3)}) * Polynomial({Scalar(5)});
  const Polynomial b = from_roots({2, Scalar(-1, 3), 7});
  const Polynomial g = gcd(a, b);
  CHECK(g == from_roots({2, Scalar(-1, 3)}));
  CHECK(divmod(a, g).second.is_zero());
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  CHECK(gcd(Polynomial(), b) == b);
}

TEST_CASE("square-free decomposition") {
  // (x-1)(x+2)^2(x-3)^3
  const Polynomial p = from_roots({1, -2, -2, 3, 3, 3});
  const auto f = squarefree_decomposition(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == from_roots({1}));
  CHECK(f[1] == from_roots({-2}));
  CHECK(f[2] == from_roots({3}));
}

TEST_CASE("rational roots") {
  CHECK(rational_roots(from_roots({Scalar(2, 3), Scalar(-5, 2), 0, 4})) ==
        std::vector<Scalar>{Scalar(-5, 2), 0, Scalar(2, 3), 4});
  // x^2 - 2 has no rational roots.
  CHECK(rational_roots(Polynomial({Scalar(-2), Scalar(0), Scalar(1)})).empty());
  // Repeated roots are reported once.
  CHECK(rational_roots(from_roots({3, 3, 1})) == std::vector<Scalar>{1, 3});
  // Cubic with large coefficients uses the numerical fallback.
  const Scalar big(mpz_class("1234567891011"), mpz_class("17"));
  CHECK(rational_roots(from_roots({big, 1, Scalar(-1, 2)}) * Polynomial({Scalar(mpz_class("99999999977"))})) ==
        std::vector<Scalar>{Scalar(-1, 2), 1, big});
}

TEST_CASE("Sturm counts distinct real roots") {
  CHECK(count_real_roots(from_roots({1, 2, 3, 4})) == 4);
  CHECK(count_real_roots(Polynomial({Scalar(1), Scalar(0), Scalar(1)})) == 0);
  CHECK(count_real_roots(from_roots({1, 1, 2})) == 2);
  // (x^2 + 1)(x - 5)
  CHECK(count_real_roots(Polynomial({Scalar(1), Scalar(0), Scalar(1)}) * from_roots({5})) == 1);
}
