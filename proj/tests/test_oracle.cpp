#include <random>

#include "doctest.h"
#include "laws.hpp"
#include "test_support.hpp"

using namespace gen;
using test_support::build;
using test_support::set_of;

TEST_CASE("grundy") {
  CHECK(grundy(cyclic_group(1), set_of(1, {})) == 0);
  CHECK(grundy(cyclic_group(2), set_of(2, {})) == 2);
  CHECK(grundy(cyclic_group(2), set_of(2, {0})) == 1);
  CHECK(grundy(cyclic_group(6), set_of(6, {})) == 4);
  CHECK(grundy(cyclic_group(4), set_of(4, {})) == 1);
  CHECK(grundy(build("Z2^2"), set_of(4, {})) == 1);
  // a generating position is terminal
  CHECK(grundy(cyclic_group(6), set_of(6, {1})) == 0);
}

TEST_CASE("GrundyMemo") {
  const auto memo = GrundyMemo::build(cyclic_group(3));
  CHECK(memo.positions() == 8);
  CHECK(memo.order() == 3);
  CHECK(memo.value(0) == 2);
  CHECK(memo.generating(0b010));
  CHECK_FALSE(memo.generating(0b001));
  CHECK_THROWS_AS(GrundyMemo::build(cyclic_group(17)), ResourceLimit);
  CHECK_THROWS_AS(GrundyMemo::build(cyclic_group(25), 30), ResourceLimit);
}

TEST_CASE("brute_deficiency") {
  CHECK(brute_deficiency(build("Z2^2"), set_of(4, {0})) == 2);
  CHECK(brute_deficiency(build("Z2^2"), set_of(4, {1})) == 1);
  CHECK(brute_deficiency(build("Z2^2"), set_of(4, {1, 2})) == 0);
  CHECK(brute_deficiency(cyclic_group(6), set_of(6, {0})) == 1);
  CHECK(brute_deficiency(build("Z2^4"), set_of(16, {})) == 4);
  CHECK(brute_deficiency(cyclic_group(1), set_of(1, {})) == 0);
}

TEST_CASE("position invariance") {
  SUBCASE("Z2") {
    const auto r = verify_position_invariance(cyclic_group(2));
    CHECK(r.ok());
    CHECK(r.positions_checked == 4);
    CHECK(r.grundy_empty == 2);
    CHECK(r.grundy_identity == 1);
  }
  SUBCASE("Z4") {
    const auto r = verify_position_invariance(cyclic_group(4));
    CHECK(r.ok());
    CHECK(r.grundy_empty == 1);
  }
  SUBCASE("catalog groups of order at most 16") {
    for (const auto& expr : test_support::small_groups(16)) {
      CAPTURE(expr);
      const Group g = build(expr);
      const auto r = verify_position_invariance(g);
      CHECK(r.ok());
      CHECK(r.positions_checked == (std::size_t{1} << g.order()));
      CHECK(r.grundy_empty == nim_of_game(g).nim);
    }
  }
  SUBCASE("cap") { CHECK_THROWS_AS(verify_position_invariance(cyclic_group(18)), ResourceLimit); }
}

TEST_CASE("brute deficiency agrees with the lattice") {
  std::mt19937_64 rng(4242);
  for (const auto& expr : test_support::small_groups(16)) {
    CAPTURE(expr);
    const auto t = laws::brute_vs_lattice(build(expr), rng, 200);
    CAPTURE(t.notes);
    CHECK(t.ok());
  }
}

TEST_CASE("deficiency is antitone along chains") {
  std::mt19937_64 rng(77);
  for (const auto& expr : test_support::small_groups(16)) {
    CAPTURE(expr);
    const Group g = build(expr);
    for (int trial = 0; trial < 10; ++trial) {
      ElementSet s(g.order());
      unsigned prev = brute_deficiency(g, s);
      std::vector<Element> order(g.order());
      for (Element x = 0; x < g.order(); ++x) order[x] = x;
      std::shuffle(order.begin(), order.end(), rng);
      for (Element x : order) {
        s.insert(x);
        const unsigned now = brute_deficiency(g, s);
        CHECK(now <= prev);
        CHECK(now + 1 >= prev);
        prev = now;
      }
      CHECK(prev == 0);
    }
  }
}
