#include <doctest.h>

#include <random>

#include "fj/error.hpp"
#include "fj/fischer.hpp"
#include "fj/linalg.hpp"
#include "fj/table1.hpp"
#include "helpers.hpp"

using namespace fj;
using fj::test::mat;

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(parse_rational("4/8")) == "1/2");
  CHECK(to_string(Rational(-3)) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational("0.5"), Error);
}

TEST_CASE("rank") {
  CHECK(rank(RatMatrix::identity(2)) == 2);
  CHECK(rank(RatMatrix(3, 3)) == 0);
  CHECK(rank(mat(2, 3, {1, 2, 3, 2, 4, 6})) == 1);
  auto m = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  CHECK(rank(m.gram) == 6);
}

TEST_CASE("nullspace basis") {
  CHECK(nullspace_basis(RatMatrix::identity(3)).empty());
  const auto k = nullspace_basis(mat(1, 2, {1, -1}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == RatVector{1, 1});
  auto m = test::matsuo(Family::Wr2, 0, 4, Rational(1, 2));
  CHECK(nullspace_basis(m.gram).size() == 2);
}

TEST_CASE("rank plus nullity equals columns") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix m(4, 6);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 6; ++c) m(r, c) = trial % 3 == 0 && r == 3 ? m(0, c) : Rational(d(rng));
    }
    const auto k = nullspace_basis(m);
    CHECK(rank(m) + k.size() == 6);
    for (const auto& v : k) CHECK(is_zero(m * v));
  }
}

TEST_CASE("determinant") {
  CHECK(det(RatMatrix::identity(27)) == 1);
  CHECK(det(RatMatrix::diagonal({Rational(1, 2), Rational(1, 3)})) == Rational(1, 6));
  CHECK(det(mat(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(det(mat(2, 2, {0, 1, 1, 0})) == -1);
  CHECK_THROWS_AS(det(RatMatrix(2, 3)), Error);
}

TEST_CASE("determinant is multiplicative on random 4x4 samples") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    RatMatrix a(4, 4), b(4, 4);
    for (auto* m : {&a, &b}) {
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
          (*m)(r, c) = Rational(num(rng), den(rng));
          (*m)(r, c).canonicalize();
        }
      }
    }
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("inverse") {
  const auto m = mat(2, 2, {2, 1, 1, 1});
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == RatMatrix::identity(2));
  CHECK_FALSE(inverse(mat(2, 2, {1, 2, 2, 4})));
}

TEST_CASE("integer eigenvalue multiplicity") {
  const auto k9 = diagram(*test::cls(Family::Frob9)).adjacency_matrix();
  CHECK(integer_eigen_multiplicity(k9, -1) == 8);
  CHECK(integer_eigen_multiplicity(k9, 8) == 1);
  CHECK(integer_eigen_multiplicity(k9, 3) == 0);
  const auto sp = diagram(*test::cls(Family::Sp, 3)).adjacency_matrix();
  CHECK(integer_eigen_multiplicity(sp, -4) == 35);
  CHECK_THROWS_AS(integer_eigen_multiplicity(RatMatrix(2, 3), 0), Error);
}

TEST_CASE("eigen probe on a non-integral matrix") {
  RatMatrix m = RatMatrix::diagonal({Rational(1, 2), Rational(3), Rational(3)});
  IntegerEigenProbe probe(m);
  CHECK(probe.multiplicity(3) == 2);
  CHECK(probe.multiplicity(0) == 0);
}
