#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyset/cycle_set.hpp"
#include "cyset/error.hpp"
#include "oracles.hpp"

using namespace cyset;

namespace {

CycleSet ex1() { return CycleSet::from_cycles({"(1234)", "(1432)", "(24)", "(13)"}); }

}  // namespace

TEST_CASE("permutation basics") {
  const auto p = Permutation::from_cycles(5, "(124)(35)");
  CHECK(p.to_cycle_string() == "(124)(35)");
  CHECK(p.to_one_line() == "2 4 5 1 3");
  CHECK(p.order() == 6);
  CHECK(compose(p.inverse(), p).is_identity());
  const auto q = Permutation::from_cycles(5, "(12)");
  // apply the inner permutation first
  CHECK(compose(p, q)(0) == p(q(0)));
  CHECK(Permutation::identity(3).to_cycle_string() == "id");
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), Error);
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), Error);
}

TEST_CASE("validate: examples") {
  CHECK(validate(ex1()).valid());
  CHECK(validate(CycleSet::trivial(5)).valid());
  const auto bad = CycleSet::from_cycles({"(124)(35)", "(1532)", "(1254)", "(132)(45)", "(354)"});
  const auto r = validate(bad);
  REQUIRE_FALSE(r.valid());
  CHECK(r.witness->i == 0);
  CHECK(r.witness->j == 1);
  CHECK(r.witness->u == 0);
  CHECK(r.witness->left == 0);
  CHECK(r.witness->right == 3);
  CHECK(r.witness->to_string() == "1 2 1: s_1 vs s_4");
}

TEST_CASE("validate: not a permutation") {
  try {
    validate(std::vector<std::vector<Index>>{{0, 1}, {1, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPermutation);
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
}

TEST_CASE("validate agrees with the triple-loop oracle on all tables n <= 3") {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto perms = oracle::all_permutations(n);
    std::size_t valid = 0;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
      oracle::Table t;
      for (auto k : idx) t.push_back(perms[k]);
      const bool expected = oracle::law_holds(t);
      CHECK(validate(oracle::set_of(t)).valid() == expected);
      valid += expected;
      std::size_t pos = n;
      while (pos > 0 && ++idx[pos - 1] == perms.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
    const std::size_t counts[] = {0, 1, 2, 12};
    CHECK(valid == counts[n]);
  }
}

TEST_CASE("diagonal map") {
  const auto triv = diagonal_map(CycleSet::trivial(4));
  CHECK(triv.t.is_identity());
  CHECK(triv.order == 1);
  CHECK(triv.square_free);
  const auto cyc = diagonal_map(CycleSet::cyclic(5));
  CHECK(cyc.t.to_cycle_string() == "(12345)");
  CHECK(cyc.order == 5);
  const auto e = diagonal_map(ex1());
  CHECK(e.t.to_cycle_string() == "(12)");
  CHECK(e.order == 2);
  CHECK_FALSE(e.square_free);
  // both rows send their own index to 1
  const auto degenerate = CycleSet::from_cycles({"id", "(12)"});
  CHECK_THROWS_AS(diagonal_map(degenerate), Error);
}

TEST_CASE("permutation group") {
  const auto c3 = perm_group(CycleSet::cyclic(3));
  CHECK(c3.order == 3);
  CHECK(c3.abelian);
  CHECK(c3.transitive);
  CHECK(c3.orbits.size() == 1);
  const auto dec = CycleSet::from_cycles({"(12)", "(12)", "(34)", "(34)"});
  const auto g = perm_group(dec);
  CHECK_FALSE(g.transitive);
  CHECK(g.orbits == std::vector<std::vector<Index>>{{0, 1}, {2, 3}});
  const auto e = perm_group(ex1());
  CHECK(e.order == 8);
  CHECK_FALSE(e.abelian);
  REQUIRE(e.elements);
  CHECK(e.elements->size() == 8);
  CHECK_FALSE(perm_group(ex1(), 4).elements.has_value());
}

TEST_CASE("group order agrees with explicit closure on S_n generators") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 2 + trial % 6;
    std::vector<Permutation> gens;
    oracle::Table t;
    for (int k = 0; k < 2; ++k) {
      std::vector<Index> p(n);
      std::iota(p.begin(), p.end(), 0u);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(Permutation::from_images(p));
      t.emplace_back(p.begin(), p.end());
    }
    CHECK(group_order(n, gens) == oracle::closure_order(t));
  }
}

TEST_CASE("decompose") {
  const auto dec = CycleSet::from_cycles({"(12)", "(12)", "(34)", "(34)"});
  const auto parts = decompose(dec);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].orbit == std::vector<Index>{0, 1});
  CHECK(parts[0].induced == CycleSet::from_cycles({"(12)", "(12)"}));
  CHECK(parts[1].orbit == std::vector<Index>{2, 3});
  CHECK(parts[1].induced == CycleSet::from_cycles({"(12)", "(12)"}));
  CHECK(decompose(CycleSet::trivial(3)).size() == 3);
  CHECK(decompose(ex1()).size() == 1);
}

TEST_CASE("structural properties over every cycle set of size <= 4") {
  for (unsigned n = 1; n <= 4; ++n)
    for (const auto& t : oracle::all_cycle_sets(n)) {
      const auto s = oracle::set_of(t);
      CHECK_NOTHROW(diagonal_map(s));
      const auto g = perm_group(s);
      CHECK(g.order == oracle::closure_order(t));
      for (const auto& orbit : g.orbits)
        for (Index i = 0; i < n; ++i)
          for (Index x : orbit)
            CHECK(std::binary_search(orbit.begin(), orbit.end(), s.star(i, x)));
      for (const auto& c : decompose(s)) CHECK(validate(c.induced).valid());
      if (g.transitive) CHECK(g.order % n == 0);
      // (s, t) -> (s*t, t*s) is a bijection on pairs
      std::set<std::pair<Index, Index>> images;
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) images.emplace(s.star(a, b), s.star(b, a));
      CHECK(images.size() == n * n);
    }
}

TEST_CASE(".cys round trip") {
  const auto s = parse_cys("# ex1\n4\n2 3 4 1\n4 1 2 3\n\n1 4 3 2 # third\n3 2 1 4\n");
  CHECK(s == ex1());
  CHECK(format_cys(s) == "4\n2 3 4 1\n4 1 2 3\n1 4 3 2\n3 2 1 4\n");
  CHECK(parse_cys(format_cys(s)) == s);
  CHECK_THROWS_AS(parse_cys("3\n1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_cys("2\n1 1\n1 2\n"), Error);
  const auto blocks = parse_cys_blocks(format_cys(s) + "\n" + format_cys(CycleSet::trivial(2)) + "\ntotal=2\n");
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[1] == CycleSet::trivial(2));
}
