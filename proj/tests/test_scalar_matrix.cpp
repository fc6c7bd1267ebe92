#include "doctest.h"
#include "premetric/corpus.hpp"
#include "premetric/matrix.hpp"

using namespace premetric;

TEST_CASE("rationals parse canonically and always print with a denominator") {
  CHECK(format_scalar(parse_scalar("6/4")) == "3/2");
  CHECK(format_scalar(parse_scalar("-7")) == "-7/1");
  CHECK(format_scalar(parse_scalar("+0/5")) == "0/1");
}

TEST_CASE("malformed rationals are rejected") {
  CHECK_THROWS_AS(parse_scalar(""), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("1/"), ScalarParseError);
  CHECK_THROWS_AS(parse_scalar("2/-3"), ScalarParseError);
}

TEST_CASE("rational square roots") {
  Scalar r;
  CHECK(rational_sqrt(Scalar(9, 4), r));
  CHECK(r == Scalar(3, 2));
  CHECK_FALSE(rational_sqrt(Scalar(2), r));
  CHECK_FALSE(rational_sqrt(Scalar(-4), r));
}

TEST_CASE("rank and determinant") {
  const RationalMatrix a{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(a) == 2);
  CHECK(determinant(a) == 0);
  const RationalMatrix b{{Scalar(1, 2), 1}, {3, 4}};
  CHECK(determinant(b) == -1);
  CHECK(rank(RationalMatrix(3, 3)) == 0);
}

TEST_CASE("determinant matches cofactor expansion on random 4x4") {
  corpus::Rng rng(11);
  for (int n = 0; n < 50; ++n) {
    RationalMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = rng.rational();
    Scalar expansion;
    for (int c = 0; c < 4; ++c) {
      RationalMatrix minor(3, 3);
      for (int i = 1; i < 4; ++i)
        for (int j = 0, jj = 0; j < 4; ++j)
          if (j != c) minor(i - 1, jj++) = m(i, j);
      expansion += (c % 2 ? -1 : 1) * m(0, c) * determinant(minor);
    }
    CHECK(determinant(m) == expansion);
  }
}

TEST_CASE("inverse is exact") {
  corpus::Rng rng(12);
  for (int n = 0; n < 30; ++n) {
    RationalMatrix m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = rng.rational();
    const auto inv = try_inverse(m);
    if (determinant(m) == 0) {
      CHECK_FALSE(inv);
      continue;
    }
    REQUIRE(inv);
    CHECK(m * *inv == RationalMatrix::identity(6));
  }
  CHECK_FALSE(try_inverse(RationalMatrix{{1, 2}, {2, 4}}));
}

TEST_CASE("null space generators follow free columns") {
  const RationalMatrix a{{1, 2, 0, 1}, {0, 0, 1, 1}};
  const auto ns = null_space(a);
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == std::vector<Scalar>{-2, 1, 0, 0});
  CHECK(ns[1] == std::vector<Scalar>{-1, 0, -1, 1});
  for (const auto& v : ns) {
    const auto r = a * std::span<const Scalar>(v);
    CHECK(r == std::vector<Scalar>{0, 0});
  }
}

TEST_CASE("solve") {
  const RationalMatrix a{{2, 1}, {1, 3}};
  const std::vector<Scalar> b{3, 5};
  const auto x = solve(a, b);
  REQUIRE(x);
  CHECK((*x)[0] == Scalar(4, 5));
  CHECK((*x)[1] == Scalar(7, 5));
}
