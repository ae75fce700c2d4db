#include "doctest.h"
#include "stdeg/linalg.hpp"

using namespace stdeg;

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("solve, inverse, determinant") {
  RatMatrix a{{2, 1}, {1, 1}};
  auto x = solve(a, RatVec{3, 2});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK(determinant(a) == 1);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK((*inv)[0][1] == -1);
  CHECK_FALSE(solve(RatMatrix{{1, 1}, {1, 1}}, RatVec{1, 2}));
  CHECK_FALSE(inverse(RatMatrix{{1, 2}, {2, 4}}));
}

TEST_CASE("nullspace and rank") {
  RatMatrix m{{1, 2, 3}, {2, 4, 6}};
  CHECK(rank(m) == 1);
  auto ns = nullspace(m, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

TEST_CASE("primitive integer vectors") {
  BigVec v = primitive_integer(RatVec{Rational(1, 2), Rational(3, 4)});
  CHECK(v == BigVec{2, 3});
  CHECK_THROWS(primitive_integer(BigVec{0, 0}));
}
