#include <doctest.h>

#include "fj/error.hpp"
#include "fj/fischer.hpp"
#include "helpers.hpp"

using namespace fj;

TEST_CASE("symmetric groups") {
  CHECK(test::cls(Family::Sym, 2)->size() == 1);
  CHECK(test::cls(Family::Sym, 4)->size() == 6);
  CHECK(test::cls(Family::Sym, 6)->size() == 15);
  CHECK_THROWS_AS(build_sym(1), Error);
}

TEST_CASE("wreath products") {
  CHECK(conjugacy_closure(build_wreath(std::make_shared<MultTable>(MultTable::trivial()), 4)).size() == 6);
  CHECK(test::cls(Family::WrAlt4, 0, 4)->size() == 72);
  CHECK(conjugacy_closure(build_wreath(std::make_shared<MultTable>(MultTable::cyclic(3)), 5)).size() == 30);
  CHECK(test::cls(Family::Wr2, 0, 4)->size() == 12);
  CHECK(test::cls(Family::Wr3, 0, 4)->size() == 18);
  try {
    build_wreath(std::make_shared<MultTable>(MultTable::cyclic(4)), 4);
    FAIL("expected BadBaseGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadBaseGroup);
  }
}

TEST_CASE("affine group on nine points") {
  const auto c = test::cls(Family::Frob9);
  CHECK(c->size() == 9);
  for (std::size_t i = 0; i < 9; ++i) {
    for (std::size_t j = 0; j < 9; ++j) {
      if (i != j) CHECK(c->pair_order(i, j) == 3);
    }
  }
}

TEST_CASE("symplectic transvections") {
  const auto c = test::cls(Family::Sp, 3);
  CHECK(c->size() == 63);
  std::size_t twos = 0, threes = 0;
  for (std::size_t j = 1; j < c->size(); ++j) {
    twos += c->pair_order(0, j) == 2;
    threes += c->pair_order(0, j) == 3;
  }
  CHECK(twos == 30);
  CHECK(threes == 32);
  CHECK_THROWS_AS(build_sp(5), Error);
}

TEST_CASE("orthogonal transvections") {
  CHECK(test::cls(Family::Oplus, 4)->size() == 120);
  CHECK(test::cls(Family::Ominus, 3)->size() == 36);
  for (const auto& c : {test::cls(Family::Oplus, 4), test::cls(Family::Ominus, 3)}) {
    for (const auto& g : c->elements()) CHECK_FALSE(c->backend().is_identity(g));
  }
  FamilyParams p = test::params(Family::Oplus, 3);
  CHECK_THROWS_AS(build_family(p), Error);
}

TEST_CASE("unitary transvections") {
  CHECK(test::cls(Family::SU, 4)->size() == 45);
  CHECK(test::cls(Family::SU, 5)->size() == 165);
  CHECK(diagram(*test::cls(Family::SU, 4)).degree(0) == 32);
}

TEST_CASE("GF(3) reflections") {
  CHECK(test::cls(Family::OmegaMinus3, 6)->size() == 126);
  CHECK(test::cls(Family::OmegaPlus3, 6)->size() == 117);
  CHECK(test::cls(Family::OmegaMinus3, 5)->size() == 45);
  CHECK(test::cls(Family::OmegaPlus3, 5)->size() == 36);
  CHECK_THROWS_AS(build_family(test::params(Family::OmegaMinus3, 7)), Error);
}

TEST_CASE("every built-in diagram is connected and regular") {
  for (const auto& c : {test::cls(Family::Sym, 5), test::cls(Family::Wr2, 0, 5), test::cls(Family::Wr3, 0, 5),
                        test::cls(Family::WrAlt4, 0, 4), test::cls(Family::Frob9), test::cls(Family::Sp, 3),
                        test::cls(Family::Ominus, 3), test::cls(Family::SU, 4), test::cls(Family::OmegaMinus3, 6),
                        test::cls(Family::PerpDerived)}) {
    const auto g = diagram(*c);
    CHECK(is_connected(g));
    CHECK(is_regular(g));
  }
}

TEST_CASE("family spellings") {
  CHECK(parse_family("perp-su3") == Family::PerpDerived);
  CHECK(parse_family("omega3minus") == Family::OmegaMinus3);
  CHECK(to_string(Family::Wr3) == "wr3");
  CHECK_THROWS_AS(parse_family("fi22"), Error);
}

TEST_CASE("file input with a row oracle") {
  const char* path = "/tmp/fj_test_sym4.grp";
  {
    std::FILE* f = std::fopen(path, "w");
    std::fputs("perm 4\ngen (1,2)\ngen (2,3)\ngen (3,4)\nseed (1,2)\n", f);
    std::fclose(f);
  }
  FamilyParams p;
  p.family = Family::FromFile;
  p.file = path;
  CHECK(build_family(p).cls->size() == 6);
  p.row_label = "PR2a";
  p.h = 0;
  p.m = 4;
  CHECK(build_family(p).row.has_value());
  p.m = 5;
  try {
    build_family(p);
    FAIL("expected OracleMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleMismatch);
  }
}
