#include <doctest.h>

#include <algorithm>
#include <random>

#include "fj/error.hpp"
#include "fj/fischer.hpp"
#include "fj/jordan.hpp"
#include "helpers.hpp"

using namespace fj;

namespace {

RatVector random_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  RatVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector scale(const Rational& s, const RatVector& a) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

}  // namespace

TEST_CASE("adjoint matrices") {
  const auto m = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  CHECK(adjoint_matrix(m.algebra, zero_vector(6)) == RatMatrix(6, 6));
  const auto ad = adjoint_matrix(m.algebra, unit_vector(6, 2));
  CHECK(ad(2, 2) == 1);
}

TEST_CASE("Peirce decomposition of a class axis") {
  const auto m = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  const auto p = peirce(m.algebra, unit_vector(6, 0), {1, 0, Rational(1, 2)});
  CHECK(p.dim_of(1) == 1);
  // one eigenvector d - c^d per line through the axis
  CHECK(p.dim_of(Rational(1, 2)) == diagram(*m.cls).degree(0) / 2);
  CHECK(p.dim_of(1) + p.dim_of(0) + p.dim_of(Rational(1, 2)) == 6);
  CHECK(p.fusion_violations.empty());

  const auto one = test::matsuo(Family::Sym, 2, 0, Rational(1, 2));
  CHECK(peirce(one.algebra, unit_vector(1, 0), {1, 0, Rational(1, 2)}).dim_of(1) == 1);

  RatVector two = unit_vector(6, 0);
  two[0] = 2;
  CHECK_THROWS_AS(peirce(m.algebra, two, {1, 0, Rational(1, 2)}), Error);
  try {
    peirce(m.algebra, unit_vector(6, 0), {1, 0});
    FAIL("expected NotSemisimple");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSemisimple);
  }
}

TEST_CASE("eta-eigenspace of a class axis counts the lines through it") {
  for (auto m : {test::matsuo(Family::Sp, 3, 0, Rational(1, 2)), test::matsuo(Family::Wr3, 0, 5, Rational(1, 3))}) {
    const auto p = peirce(m.algebra, unit_vector(m.algebra.dim(), 0), {1, 0, m.eta});
    CHECK(p.dim_of(m.eta) == diagram(*m.cls).degree(0) / 2);
    CHECK(p.dim_of(1) == 1);
  }
}

TEST_CASE("class elements are primitive axes") {
  for (const Rational eta : {Rational(1, 2), Rational(1, 3), Rational(2)}) {
    for (const auto f : {Family::Sym, Family::Frob9, Family::Wr2}) {
      const auto m = f == Family::Sym ? test::matsuo(f, 4, 0, eta)
                     : f == Family::Wr2 ? test::matsuo(f, 0, 4, eta)
                                        : test::matsuo(f, 0, 0, eta);
      for (std::size_t i = 0; i < m.algebra.dim(); ++i) CHECK(is_primitive_axis(m.algebra, unit_vector(m.algebra.dim(), i), eta));
    }
  }
}

TEST_CASE("sum of two commuting axes is not primitive") {
  const auto m = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  std::size_t j = 1;
  while (m.cls->pair_order(0, j) != 2) ++j;
  RatVector v = unit_vector(6, 0);
  v[j] = 1;
  CHECK_FALSE(is_primitive_axis(m.algebra, v, Rational(1, 2)));
  RatVector w = unit_vector(6, 0);
  w[1] = 1;
  CHECK_FALSE(is_primitive_axis(m.algebra, w, Rational(1, 2)));
}

TEST_CASE("w-element symmetry and multilinearity") {
  const auto m = test::matsuo(Family::Sym, 4, 0, Rational(1, 3));
  const auto& a = m.algebra;
  std::mt19937 rng(3);
  bool saw_nonzero = false;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RatVector> v;
    for (int k = 0; k < 4; ++k) v.push_back(random_vector(rng, 6));
    const auto base = w_element(a, v[0], v[1], v[2], v[3]);
    saw_nonzero = saw_nonzero || !is_zero(base);
    std::array<int, 3> perm{0, 2, 3};
    do {
      CHECK(w_element(a, v[perm[0]], v[1], v[perm[1]], v[perm[2]]) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto x2 = random_vector(rng, 6);
    const Rational alpha(2, 3);
    const auto lhs = w_element(a, add(scale(alpha, v[0]), x2), v[1], v[2], v[3]);
    const auto rhs = add(scale(alpha, base), w_element(a, x2, v[1], v[2], v[3]));
    CHECK(lhs == rhs);
  }
  CHECK(saw_nonzero);
  CHECK(is_zero(w_element(a, 0, 0, 0, 0)));
}

TEST_CASE("jordan_check") {
  CHECK(jordan_check(test::matsuo(Family::Sym, 4, 0, Rational(1, 2)).algebra).is_jordan);
  const auto f9 = jordan_check(test::matsuo(Family::Frob9, 0, 0, Rational(1, 2)).algebra);
  CHECK(f9.is_jordan);
  CHECK(f9.quadruples_checked == 9u * 165u);
  const auto bad = jordan_check(test::matsuo(Family::Sym, 4, 0, Rational(1, 3)).algebra);
  CHECK_FALSE(bad.is_jordan);
  REQUIRE(bad.counterexample);
}

TEST_CASE("Wr(Alt4,4) quotient is not Jordan") {
  auto m = test::matsuo(Family::WrAlt4, 0, 4, Rational(1, 2));
  const auto q = quotient(m, radical(m));
  const auto v = jordan_check(q.algebra);
  CHECK_FALSE(v.is_jordan);
  REQUIRE(v.counterexample);
  const auto [x, y, z, w] = *v.counterexample;
  CHECK_FALSE(is_zero(w_element(q.algebra, x, y, z, w)));
  const auto r = jordan_modulo_radical(m, true);
  CHECK_FALSE(r.is_jordan);
  REQUIRE(r.counterexample);
  const auto [a, b, c, d] = *r.counterexample;
  CHECK_FALSE(w_in_radical(m, a, b, c, d));
}

TEST_CASE("Jordan modulo the radical") {
  auto o6 = test::matsuo(Family::Ominus, 3, 0, Rational(1, 2));
  const auto v = jordan_modulo_radical(o6, true);
  CHECK(v.is_jordan);
  CHECK(v.symmetry_reduction_used);
  CHECK(o6.algebra.dim() - radical(o6).size() == 21);
  auto om = test::matsuo(Family::OmegaMinus3, 6, 0, Rational(1, 2));
  CHECK(jordan_modulo_radical(om, true).is_jordan);
  CHECK(om.algebra.dim() - radical(om).size() == 36);
}

TEST_CASE("symmetry reduction agrees with the full sweep") {
  for (auto m : {test::matsuo(Family::Sp, 3, 0, Rational(1, 2)), test::matsuo(Family::Wr3, 0, 5, Rational(1, 2)),
                 test::matsuo(Family::WrAlt4, 0, 4, Rational(1, 2)), test::matsuo(Family::Wr2, 0, 6, Rational(1, 2))}) {
    const auto fast = jordan_modulo_radical(m, true);
    const auto full = jordan_modulo_radical(m, false);
    CHECK(fast.is_jordan == full.is_jordan);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, m.algebra.dim() - 1);
    bool all = true;
    for (int k = 0; k < 1000; ++k) all = all && w_in_radical(m, pick(rng), pick(rng), pick(rng), pick(rng));
    if (fast.is_jordan) CHECK(all);
  }
}

TEST_CASE("eta other than one half") {
  auto one = test::matsuo(Family::Sym, 2, 0, Rational(3));
  const auto s = eta_not_half_analysis(one);
  CHECK(s.kind == EtaCase::SingleAxis);
  CHECK(s.quotient_dim == 1u);
  for (Family f : {Family::Frob9, Family::Sym}) {
    auto m = f == Family::Sym ? test::matsuo(f, 3, 0, Rational(2)) : test::matsuo(f, 0, 0, Rational(2));
    const auto a = eta_not_half_analysis(m);
    CHECK(a.kind == EtaCase::CompleteEtaTwo);
    CHECK(a.quotient_dim == 1u);
    CHECK(a.differences_in_radical);
  }
  for (const Rational eta : {Rational(3), Rational(-1), Rational(1, 3)}) {
    auto m = test::matsuo(Family::Sym, 4, 0, eta);
    const auto a = eta_not_half_analysis(m);
    CHECK(a.kind == EtaCase::NoJordanFactor);
  }
  auto half = test::matsuo(Family::Sym, 4, 0, Rational(1, 2));
  CHECK_THROWS_AS(eta_not_half_analysis(half), Error);
}
