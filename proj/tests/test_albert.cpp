#include <doctest.h>

#include <random>

#include "fj/albert.hpp"
#include "fj/error.hpp"

using namespace fj;

namespace {

Octonion rnd(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  Octonion o;
  for (auto& x : o.c) x = d(rng);
  return o;
}

AlbertElement rnd_albert(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  return {Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), rnd(rng), rnd(rng), rnd(rng)};
}

}  // namespace

TEST_CASE("octonion units") {
  CHECK(oct_mul(Octonion::unit(0), Octonion::unit(1)) == Octonion::unit(3));
  CHECK(oct_mul(Octonion::unit(1), Octonion::unit(0)) == -Octonion::unit(3));
  CHECK(oct_mul(Octonion::unit(4), Octonion::unit(4)) == Octonion::real(-1));
  const auto x = parse_octonion("2-i3+1/2i6");
  CHECK(oct_mul(Octonion::real(1), x) == x);
  CHECK(table_matches_triple_rule());
  for (int t = 0; t < 7; ++t) {
    const auto a = Octonion::unit(t), b = Octonion::unit((t + 1) % 7), c = Octonion::unit((t + 3) % 7);
    CHECK(oct_mul(a, b) == c);
    CHECK(oct_mul(b, c) == a);
    CHECK(oct_mul(c, a) == b);
  }
}

TEST_CASE("octonion norm") {
  CHECK(oct_norm(Octonion::unit(3)) == 1);
  CHECK(oct_norm(parse_octonion("1+i0")) == 2);
  const auto x = parse_octonion("1+i1"), y = parse_octonion("i2-i5");
  CHECK(oct_norm(oct_mul(x, y)) == 4);
  CHECK(oct_conj(x) == parse_octonion("1-i1"));
}

TEST_CASE("octonion parsing") {
  CHECK(to_string(parse_octonion("-1-i1+4i2")) == "-1-i1+4i2");
  CHECK(parse_octonion("0").is_zero());
  CHECK(to_string(parse_octonion("i_3")) == "i3");
  CHECK_THROWS_AS(parse_octonion(""), Error);
  CHECK_THROWS_AS(parse_octonion("i7"), Error);
  CHECK_THROWS_AS(parse_octonion("2i3 i4"), Error);
}

TEST_CASE("alternativity and composition") {
  std::mt19937 rng(1);
  for (int k = 0; k < 30; ++k) {
    const auto x = rnd(rng), y = rnd(rng);
    CHECK(oct_mul(oct_mul(x, x), y) == oct_mul(x, oct_mul(x, y)));
    CHECK(oct_mul(oct_mul(y, x), x) == oct_mul(y, oct_mul(x, x)));
    CHECK(oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y));
  }
  const auto r = check_composition();
  CHECK(r.holds);
  CHECK(r.basis_pairs_checked == 64);
  CHECK(r.random_pairs_checked == 100);
}

TEST_CASE("Albert product") {
  const auto ax = standard_axes();
  CHECK(trace(ax.a) == 1);
  CHECK(albert_jordan_mul(ax.a, ax.a) == ax.a);
  CHECK(ax.d == make_albert(Rational(1, 9), 1, 4, 4, "4i4", "2i3", "2i6"));
  CHECK(albert_jordan_mul(ax.a, ax.b) == make_albert(Rational(1, 8), 2, 0, 0, "i3", "i1", "i0"));
  CHECK(albert_jordan_mul(ax.b, ax.c) == make_albert(Rational(1, 8), 0, 0, 2, "i2", "i1", "i4"));
  const auto x = make_albert(1, 1, 2, 3, "i0", "1+i4", "0");
  CHECK(from_coordinates(to_coordinates(x)) == x);
  CHECK(to_coordinates(x).size() == 27);
}

TEST_CASE("Hermitian closure and trace form") {
  std::mt19937 rng(2);
  for (int k = 0; k < 10; ++k) {
    const auto x = rnd_albert(rng), y = rnd_albert(rng), z = rnd_albert(rng);
    const auto xy = albert_jordan_mul(x, y);
    CHECK(xy == albert_jordan_mul(y, x));
    CHECK(trace(albert_jordan_mul(xy, z)) == trace(albert_jordan_mul(x, albert_jordan_mul(y, z))));
  }
}

TEST_CASE("generated basis") {
  const auto b = generated_basis_27();
  REQUIRE(b.size() == 27);
  CHECK(b[9].name == "cd");
  CHECK(b[9].value == make_albert(Rational(1, 18), 0, 4, 4, "4i2+4i4", "i0+i3", "i6-i5"));
  CHECK(b[10].value == make_albert(Rational(1, 32), 0, 0, 0, "i2+i3", "i1-i6", "2i4"));
  CHECK(b[20].name == "(ac)(bd)");
  CHECK(b[20].value.d == 0);
  CHECK(b[20].value.e == 0);
  CHECK(b[20].value.f == 0);
  CHECK(compute_basis_27(standard_axes())[26].value == printed_basis_27()[26].value);
}

TEST_CASE("basis certificate") {
  const auto c = basis_certificate();
  CHECK(c.rank == 27);
  CHECK(abs(c.determinant) == expected_albert_determinant());
  CHECK(c.determinant_matches);
  auto axes = standard_axes();
  axes.d = axes.a;
  CHECK(basis_certificate(compute_basis_27(axes)).rank < 27);
}

TEST_CASE("Albert axes are primitive") {
  const auto alg = albert_algebra_standard();
  const auto ax = standard_axes();
  for (const auto* x : {&ax.a, &ax.b, &ax.c, &ax.d}) {
    const auto v = to_coordinates(*x);
    CHECK(is_primitive_axis(alg, v, Rational(1, 2)));
    const auto p = peirce(alg, v, {1, 0, Rational(1, 2)});
    CHECK(p.dim_of(1) == 1);
    CHECK(p.dim_of(0) == 10);
    CHECK(p.dim_of(Rational(1, 2)) == 16);
  }
}

TEST_CASE("full Albert verification") {
  const auto r = verify_albert_axial();
  CHECK(r.products_matched == 27);
  CHECK(r.first_mismatch.empty());
  CHECK(r.jordan.is_jordan);
  CHECK(r.jordan.quadruples_checked == 27u * 3654u);
  CHECK(r.passed());
}
