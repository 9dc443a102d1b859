#include <doctest.h>

#include "fj/error.hpp"
#include "fj/linalg.hpp"
#include "fj/table1.hpp"
#include "helpers.hpp"

using namespace fj;

namespace {

std::size_t find_label(const TranspositionClass& c, const std::string& label) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.label(i) == label) return i;
  }
  FAIL("label not found: " << label);
  return 0;
}

bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b, std::size_t dim) {
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto r = rank(RatMatrix::from_rows(both, dim));
  return r == rank(RatMatrix::from_rows(a, dim)) && r == rank(RatMatrix::from_rows(b, dim));
}

}  // namespace

TEST_CASE("product rule") {
  const auto one = test::matsuo(Family::Sym, 2, 0, Rational(1, 3));
  CHECK(one.algebra.dim() == 1);
  CHECK(one.algebra.product(0, 0) == SparseVector{{0, Rational(1)}});

  const auto m = test::matsuo(Family::Sym, 3, 0, Rational(1, 2));
  const auto& c = *m.cls;
  const auto a = find_label(c, "(1,2)"), b = find_label(c, "(2,3)"), e = find_label(c, "(1,3)");
  RatVector expect(3);
  expect[a] = Rational(1, 4);
  expect[b] = Rational(1, 4);
  expect[e] = Rational(-1, 4);
  CHECK(to_dense(m.algebra.product(a, b), 3) == expect);

  const auto m4 = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  CHECK(m4.algebra.product(find_label(*m4.cls, "(1,2)"), find_label(*m4.cls, "(3,4)")).empty());
  CHECK(m4.algebra.is_commutative());

  CHECK_THROWS_AS(build_matsuo(test::cls(Family::Sym, 3), Rational(0)), Error);
  CHECK_THROWS_AS(build_matsuo(test::cls(Family::Sym, 3), Rational(1)), Error);
}

TEST_CASE("Gram identity") {
  auto m = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  CHECK(check_gram_identity(m));
  m.gram(0, 1) += 1;
  CHECK_FALSE(check_gram_identity(m));
  CHECK(check_gram_identity(test::matsuo(Family::Frob9, 0, 0, Rational(2))));
}

TEST_CASE("Frobenius property") {
  CHECK(check_frobenius(test::matsuo(Family::Sym, 4, 0, Rational(1, 2))));
  CHECK(check_frobenius(test::matsuo(Family::Sym, 3, 0, Rational(2))));
  CHECK(check_frobenius(test::matsuo(Family::Sp, 3, 0, Rational(1, 2))));
  auto m = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  auto p = m.algebra.product(0, 1);
  REQUIRE_FALSE(p.empty());
  p[0].coeff += Rational(1, 7);
  m.algebra.set_symmetric(0, 1, p);
  CHECK_FALSE(check_frobenius(m));
}

TEST_CASE("radicals") {
  for (int k = 3; k <= 6; ++k) {
    auto m = test::matsuo(Family::Sym, k, 0, Rational(1, 2));
    CHECK(radical(m).empty());
    CHECK(radical_dim_via_spectrum(m) == 0);
  }
  auto w = test::matsuo(Family::Wr2, 0, 5, Rational(1, 2));
  CHECK(radical(w).size() == 5);
  auto sp = test::matsuo(Family::Sp, 3, 0, Rational(1, 2));
  CHECK(radical(sp).size() == 35);
  CHECK(radical_dim_via_spectrum(sp) == 35);
  auto o8 = test::matsuo(Family::Oplus, 4, 0, Rational(1, 2));
  CHECK(radical_dim_via_spectrum(o8) == 84);
  auto su5 = test::matsuo(Family::SU, 5, 0, Rational(1, 2));
  CHECK(radical_dim_via_spectrum(su5) == 120);
  CHECK(radical(su5).size() == 120);
  for (const auto& r : radical(sp)) CHECK(is_zero(sp.gram * r));
  CHECK_THROWS_AS(radical_dim_via_spectrum(test::matsuo(Family::Sym, 4, 0, Rational(2))), Error);
}

TEST_CASE("closed-form wreath radical basis") {
  const auto b2 = wr_radical_basis(*test::cls(Family::Wr2, 0, 4));
  CHECK(b2.size() == 2);
  const auto b3 = wr_radical_basis(*test::cls(Family::Wr3, 0, 5));
  CHECK(b3.size() == 5);
  for (const auto& v : b3) {
    std::size_t nonzero = 0;
    for (const auto& x : v) {
      if (sgn(x) != 0) {
        ++nonzero;
        CHECK(abs(x) == 1);
      }
    }
    CHECK(nonzero == 12);
  }
  for (int n = 4; n <= 6; ++n) {
    for (Family f : {Family::Wr2, Family::Wr3}) {
      auto m = test::matsuo(f, 0, n, Rational(1, 2));
      const auto basis = wr_radical_basis(*m.cls);
      CHECK(basis.size() == static_cast<std::size_t>(n * (n - 3) / 2));
      for (const auto& v : basis) CHECK(is_zero(m.gram * v));
      CHECK(same_span(basis, radical(m), m.algebra.dim()));
    }
  }
  CHECK_THROWS_AS(wr_radical_basis(*test::cls(Family::Sym, 4)), Error);
}

TEST_CASE("equivariance and the radical ideal") {
  for (auto m : {test::matsuo(Family::Sp, 3, 0, Rational(1, 2)), test::matsuo(Family::Wr3, 0, 5, Rational(1, 2)),
                 test::matsuo(Family::Frob9, 0, 0, Rational(1, 3))}) {
    CHECK(check_equivariance(m));
    CHECK(radical_is_ideal(m));
  }
}

TEST_CASE("quotients") {
  auto w2 = test::matsuo(Family::Wr2, 0, 5, Rational(1, 2));
  const auto q2 = quotient(w2, radical(w2));
  CHECK(q2.algebra.dim() == 15);
  CHECK(q2.algebra.is_commutative());
  auto w3 = test::matsuo(Family::Wr3, 0, 5, Rational(1, 2));
  CHECK(quotient(w3, radical(w3)).algebra.dim() == 25);
  for (const auto& r : radical(w3)) {
    const auto q = quotient(w3, radical(w3));
    CHECK(is_zero(q.projection * r));
  }
  const auto q = quotient(w3, radical(w3));
  for (std::size_t k = 0; k < q.section.size(); ++k) {
    CHECK(q.projection.column_vector(q.section[k]) == unit_vector(q.section.size(), k));
  }
  const auto s4 = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  CHECK(quotient(s4, {}).algebra == s4.algebra);
  try {
    quotient(s4, {unit_vector(6, 0)});
    FAIL("expected NotAnIdeal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnIdeal);
  }
}

TEST_CASE("algebra JSON dump") {
  const auto m = test::matsuo(Family::Sym, 3, 0, Rational(1, 2));
  const auto j = m.algebra.to_json(Rational(1, 2));
  CHECK(j["eta"] == "1/2");
  CHECK(j["dim"] == 3);
  CHECK(j["products"]["0,1"].size() == 3);
  CHECK(Algebra::from_json(j) == m.algebra);
  CHECK_THROWS_AS(Algebra::from_json(nlohmann::json::parse(R"({"dim": 2})")), Error);
}
