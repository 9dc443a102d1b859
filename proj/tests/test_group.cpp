#include <doctest.h>

#include <algorithm>

#include "fj/error.hpp"
#include "fj/fischer.hpp"
#include "helpers.hpp"

using namespace fj;

namespace {

GroupSpec perm_spec(std::size_t degree, std::initializer_list<const char*> gens, const char* seed) {
  auto be = std::make_shared<PermutationBackend>(degree);
  GroupSpec s;
  for (const auto* g : gens) s.generators.push_back(be->parse_cycles(g));
  s.seed = be->parse_cycles(seed);
  s.backend = be;
  s.label = "test";
  return s;
}

}  // namespace

TEST_CASE("element orders") {
  PermutationBackend p(4);
  CHECK(element_order(p, p.identity()) == 1);
  CHECK(element_order(p, p.parse_cycles("(1,2)")) == 2);
  const auto g = p.multiply(p.parse_cycles("(1,2)"), p.parse_cycles("(2,3)"));
  CHECK(element_order(p, g) == 3);
  CHECK(element_order(p, p.parse_cycles("(1,2,3,4)")) == 4);
  CHECK(small_order(p, p.parse_cycles("(1,2,3,4)")) == 4);
  CHECK(small_order(p, p.parse_cycles("(1,2,3)")) == 3);
  CHECK_THROWS_AS(element_order(p, p.parse_cycles("(1,2,3,4)"), 3), Error);
}

TEST_CASE("permutation backend") {
  PermutationBackend p(5);
  const auto a = p.parse_cycles("(1,2,3)(4,5)");
  CHECK(p.describe(a) == "(1,2,3)(4,5)");
  CHECK(p.multiply(a, p.inverse(a)) == p.identity());
  CHECK(p.describe(p.identity()) == "()");
  CHECK_THROWS_AS(p.parse_cycles("(1,2"), Error);
  CHECK_THROWS_AS(p.parse_cycles("(1,9)"), Error);
  CHECK_THROWS_AS(p.parse_cycles("(1,1)"), Error);
  // left to right: apply (1 2) then (2 3), so 1 -> 2 -> 3
  const auto g = p.multiply(p.parse_cycles("(1,2)"), p.parse_cycles("(2,3)"));
  CHECK(g.data[0] == 2);
}

TEST_CASE("matrix backend over GF(4)") {
  MatrixBackend m(4, 2);
  const auto g = m.from_entries({1, 2, 0, 1});
  CHECK(m.is_valid(g));
  CHECK(m.multiply(g, m.inverse(g)) == m.identity());
  CHECK(element_order(m, g) == 2);
  CHECK_THROWS_AS(m.from_entries({1, 1, 1, 1}), Error);
  const FiniteField f(4);
  CHECK(f.mul(2, 2) == 3);  // w^2 = w + 1
  CHECK(f.add(2, 1) == 3);
  CHECK(f.conj(2) == 3);
  CHECK(f.conj(f.conj(2)) == 2);
}

TEST_CASE("multiplication tables") {
  const auto a4 = MultTable::alternating4();
  CHECK(a4.size() == 12);
  std::size_t involutions = 0, threes = 0;
  for (std::uint16_t t = 0; t < 12; ++t) {
    involutions += a4.order(t) == 2;
    threes += a4.order(t) == 3;
  }
  CHECK(involutions == 3);
  CHECK(threes == 8);
  CHECK_THROWS_AS(MultTable(std::vector<std::vector<std::uint16_t>>{{0, 1}, {1, 1}}), Error);
  TableBackend tb(std::make_shared<MultTable>(MultTable::cyclic(3)));
  CHECK(tb.multiply(tb.element(1), tb.element(2)) == tb.identity());
}

TEST_CASE("wreath backend symbols") {
  WreathBackend w(std::make_shared<MultTable>(MultTable::cyclic(3)), 4);
  const auto s = w.symbol_element({1, 0, 2});
  CHECK(small_order(w, s) == 2);
  const auto sym = w.symbol(s);
  REQUIRE(sym);
  CHECK(sym->t == 1);
  CHECK(sym->i == 0);
  CHECK(sym->j == 2);
  CHECK(w.describe(s) == "c1,3");
  CHECK(w.describe(w.symbol_element({2, 0, 2})) == "c3,1");
  CHECK(w.describe(w.symbol_element({0, 0, 2})) == "b1,3");
  CHECK(w.multiply(s, w.inverse(s)) == w.identity());
  // the line through t.(i,j) and s.(j,k) contains ts.(i,k)
  const auto a = w.symbol_element({1, 0, 1}), b = w.symbol_element({1, 1, 2});
  const auto third = w.symbol(w.conjugate(a, b));
  REQUIRE(third);
  CHECK(third->t == 2);
  CHECK(third->i == 0);
  CHECK(third->j == 2);
}

TEST_CASE("conjugacy closure of Sym(4)") {
  const auto c = conjugacy_closure(perm_spec(4, {"(1,2)", "(2,3)", "(3,4)"}, "(1,2)"));
  CHECK(c.size() == 6);
  CHECK(verify_3transpositions(c));
  CHECK(c.label(0) == "(1,2)");
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(c.pair_order(i, i) == 1);
}

TEST_CASE("class sizes of built-in transvection and reflection groups") {
  CHECK(test::cls(Family::Sp, 3)->size() == 63);
  CHECK(test::cls(Family::SU, 5)->size() == 165);
  CHECK(test::cls(Family::SU, 4)->size() == 45);
}

TEST_CASE("closure rejects bad seeds and caps") {
  CHECK_THROWS_AS(conjugacy_closure(perm_spec(4, {"(1,2)"}, "(1,2,3)")), Error);
  ClosureOptions small;
  small.cap = 5;
  CHECK_THROWS_AS(conjugacy_closure(perm_spec(4, {"(1,2)", "(2,3)", "(3,4)"}, "(1,2)"), small), Error);
}

TEST_CASE("verify_3transpositions detects an element of order 4") {
  // reflections of the octagon: products of two of them are rotations of order 4
  const auto spec = perm_spec(8, {"(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"}, "(2,8)(3,7)(4,6)");
  try {
    conjugacy_closure(spec);
    FAIL("expected NotThreeTransposition");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotThreeTransposition);
  }
  ClosureOptions lax;
  lax.require_3transpositions = false;
  const auto c = conjugacy_closure(spec, lax);
  CHECK(c.size() == 4);
  CHECK_FALSE(verify_3transpositions(c));
  CHECK(verify_3transpositions(*test::cls(Family::WrAlt4, 0, 4)));
  CHECK(verify_3transpositions(*test::cls(Family::Sym, 5)));
}

TEST_CASE("class closure, pair orders and determinism") {
  for (const auto& c : {test::cls(Family::Sp, 3), test::cls(Family::Wr3, 0, 5), test::cls(Family::Frob9),
                        test::cls(Family::Ominus, 3)}) {
    const auto& be = c->backend();
    for (std::size_t i = 0; i < c->size(); ++i) {
      for (std::size_t j = 0; j < c->size(); ++j) {
        CHECK(c->index_of(be.conjugate(c->element(i), c->element(j))).has_value());
        const auto o = element_order(be, be.multiply(c->element(i), c->element(j)));
        CHECK(o == c->pair_order(i, j));
        CHECK(c->pair_order(i, j) == c->pair_order(j, i));
      }
    }
  }
  const auto a = conjugacy_closure(build_sp(3));
  const auto b = conjugacy_closure(build_sp(3));
  CHECK(a.elements() == b.elements());
}

TEST_CASE("class elements lie in distinct central cosets for Wr(2,n), n even") {
  for (int n : {4, 6}) {
    const auto c = test::cls(Family::Wr2, 0, n);
    const auto& w = dynamic_cast<const WreathBackend&>(c->backend());
    const auto z = w.diagonal(1);
    for (std::size_t i = 0; i < c->size(); ++i) {
      CHECK_FALSE(w.is_identity(z));
      CHECK_FALSE(c->index_of(w.multiply(c->element(i), z)).has_value());
    }
  }
}

TEST_CASE("perp subclasses") {
  const auto s5 = conjugacy_closure(build_sym(5));
  const auto p = perp_subclass(s5, 0);
  CHECK(p.size() == 3);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"(3,4)", "(3,5)", "(4,5)"});
  CHECK(perp_subclass(*test::cls(Family::OmegaMinus3, 6), 0).size() == 45);
  CHECK(perp_subclass(*test::cls(Family::OmegaMinus3, 6), 17).size() == 45);
  CHECK(test::cls(Family::PerpDerived)->size() == 36);
  CHECK_THROWS_AS(perp_subclass(conjugacy_closure(build_sym(3)), 0), Error);
}

TEST_CASE("group files") {
  const auto spec = parse_group_text("perm 3\n# Sym(3)\ngen (1,2)\ngen (2,3)\nseed (1,2)\n");
  CHECK(conjugacy_closure(spec).size() == 3);
  try {
    parse_group_text("perm 3\ngen (1,2)\ngen (1,2\nseed (1,2)\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_group_text("perm 3\ngen (1,2)\nseed (1,2,3)\n");
    FAIL("expected NotInvolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvolution);
  }
  const auto m = parse_group_text("mat 2 2\ngen 0 1 1 0\nseed 0 1 1 0\n");
  CHECK(conjugacy_closure(m).size() == 1);
  const auto t = parse_group_text("table 2\n0 1\n1 0\ngen 1\nseed 1\n");
  CHECK(conjugacy_closure(t).size() == 1);
  CHECK_THROWS_AS(parse_group_text("bogus 3\n"), Error);
  CHECK_THROWS_AS(load_group_file("/nonexistent/file.grp"), Error);
}
