#include <doctest.h>

#include "fcy/matrix.hpp"

using namespace fcy;

TEST_SUITE("matrix") {

TEST_CASE("rref and rank") {
  QMat m(3, 4);
  // rows: (1,2,3,4), (2,4,6,8), (0,0,1,1)
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3; m(0, 3) = 4;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6; m(1, 3) = 8;
  m(2, 2) = 1; m(2, 3) = 1;
  CHECK(rank(m) == 2);
}

TEST_CASE("nullspace is exact") {
  QMat m(2, 3);
  m(0, 0) = 1; m(0, 1) = 1; m(0, 2) = 0;
  m(1, 0) = 0; m(1, 1) = 1; m(1, 2) = 1;
  QMat ns = nullspace(m);
  REQUIRE(ns.cols() == 1);
  CHECK((m * ns).is_zero());
  CHECK(ns(0, 0) != 0);
}

TEST_CASE("inverse round trip") {
  QMat m(3, 3);
  m(0, 0) = 2; m(0, 1) = 1; m(0, 2) = 0;
  m(1, 0) = 1; m(1, 1) = 1; m(1, 2) = 1;
  m(2, 0) = 0; m(2, 1) = 3; m(2, 2) = 1;
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK((m * *inv).is_identity());
  CHECK((*inv * m).is_identity());

  QMat sing(2, 2);
  sing(0, 0) = 1; sing(0, 1) = 2;
  sing(1, 0) = 2; sing(1, 1) = 4;
  CHECK_FALSE(inverse(sing).has_value());
}

TEST_CASE("solve full column rank") {
  QMat a(3, 2);
  a(0, 0) = 1; a(1, 1) = 1; a(2, 0) = 1; a(2, 1) = 1;
  QMat b(3, 1);
  b(0, 0) = 2; b(1, 0) = 3; b(2, 0) = 5;
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(*x == [] {
    QMat e(2, 1);
    e(0, 0) = 2; e(1, 0) = 3;
    return e;
  }());

  b(2, 0) = 4;  // inconsistent
  CHECK_FALSE(solve(a, b).has_value());
}

TEST_CASE("determinant") {
  QMat m(2, 2);
  m(0, 0) = 3; m(0, 1) = 7;
  m(1, 0) = 1; m(1, 1) = 4;
  CHECK(determinant(m) == 5);
}

TEST_CASE("matrix power") {
  IMat j(2, 2);
  j(0, 0) = 1; j(0, 1) = 1; j(1, 1) = 1;
  IMat p = mat_pow(j, 20);
  CHECK(p(0, 1) == 20);
  CHECK(mat_pow(j, 0).is_identity());
}

TEST_CASE("integer kernel is a Z-basis") {
  // rows (2, 4, 6), (1, 2, 3): kernel rank 2 over Z
  IMat a(2, 3);
  a(0, 0) = 2; a(0, 1) = 4; a(0, 2) = 6;
  a(1, 0) = 1; a(1, 1) = 2; a(1, 2) = 3;
  IMat k = integer_kernel(a);
  REQUIRE(k.cols() == 2);
  CHECK((a * k).is_zero());
  // (-2, 1, 0) must be an integer combination of the basis: solve exactly
  QMat kb = to_rational(k);
  QMat target(3, 1);
  target(0, 0) = -2; target(1, 0) = 1;
  auto x = solve(kb, target);
  REQUIRE(x.has_value());
  for (size_t i = 0; i < x->rows(); ++i) CHECK(denominator((*x)(i, 0)) == 1);
}

TEST_CASE("integer kernel of unimodular map is trivial") {
  IMat a(2, 2);
  a(0, 0) = 1; a(0, 1) = 1; a(1, 1) = 1;
  CHECK(integer_kernel(a).cols() == 0);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rat("5") == 5);
  CHECK(parse_rat("-3/6") == Rat(-1, 2));
  CHECK(to_string(Rat(-1, 2)) == "-1/2");
  CHECK(to_string(Rat(8, 4)) == "2");
  CHECK_THROWS(parse_rat("1/0"));
}

}  // TEST_SUITE
