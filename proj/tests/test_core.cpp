#include <doctest.h>

#include "oracles.hpp"
#include "psp/core.hpp"

using namespace psp;

TEST_CASE("basis validation") {
  CHECK_NOTHROW(Basis::make(2, 3));
  CHECK_THROWS_AS(Basis::make(1, 3), InvalidInput);
  CHECK_THROWS_AS(Basis::make(5, 5), InvalidInput);
  CHECK_THROWS_AS(Basis::make(7, 4), InvalidInput);
  CHECK(to_string(Basis{39, 520}) == "{1,39,520}");
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_mul(1 << 20, 1 << 20) == (i64{1} << 40));
  CHECK_THROWS_AS(checked_mul(i64{1} << 40, i64{1} << 40), OverflowError);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
}

TEST_CASE("can_generate") {
  Basis b{3, 6};
  CHECK(can_generate(b, 3, 10));
  CHECK_FALSE(can_generate(b, 3, 11));
  CHECK(can_generate(Basis{14, 33}, 0, 0));
  CHECK(can_generate(Basis{5, 9}, 1, 0));
}

TEST_CASE("canonical generation picks most a3 stamps") {
  Basis b{4, 6};
  auto g = canonical_generation(b, 4, 16);
  REQUIRE(g);
  CHECK(g->c3 == 2);
  CHECK(g->c2 == 1);
  CHECK(g->c1 == 0);
  CHECK(g->order == 0);

  g = canonical_generation(b, 4, 20);
  REQUIRE(g);
  CHECK(g->c3 == 2);
  CHECK(g->c2 == 2);
  CHECK(g->c1 == 0);
  CHECK(g->order == 1);

  g = canonical_generation(b, 4, 6);
  REQUIRE(g);
  CHECK(g->c3 == 1);
  CHECK(g->c2 == 0);
  CHECK(g->order == 0);
  CHECK(g->stamps == 1);
  CHECK(g->value == 6);

  CHECK_FALSE(canonical_generation(Basis{3, 6}, 3, 11));
}

TEST_CASE("cover3 worked values") {
  CHECK(cover3(Basis{3, 6}, 3).X == 10);

  CoverResult c = cover3(Basis{6, 13}, 6);
  CHECK(c.X == 47);
  CHECK(c.k == 2);
  CHECK(c.Y == 8);

  c = cover3(Basis{3, 4}, 3);
  CHECK(c.X == 12);
  CHECK(c.k == 2);
  CHECK(c.Y == 0);

  c = cover3(Basis{55, 954}, 54);
  CHECK(c.X == 108);
  CHECK(c.k == -1);

  CHECK(cover3(Basis{39, 520}, 54).X == 9852);
  CHECK(cover3(Basis{2, 3}, 1).X == 3);
}

TEST_CASE("cover3 rejects bad input") {
  CHECK_THROWS_AS(cover3(Basis{1, 3}, 3), InvalidInput);
  CHECK_THROWS_AS(cover3(Basis{3, 6}, -1), InvalidInput);
}

TEST_CASE("cover2 and m2") {
  CHECK(cover2(3, 3) == 7);
  CHECK(cover2(2, 1) == 2);
  for (i64 s = 1; s <= 12; ++s) CHECK(cover2(s + 2, s) == s);
  for (i64 a2 = 2; a2 <= 20; ++a2)
    for (i64 s = 1; s <= 15; ++s) CHECK(cover2(a2, s) == oracle::cover2(a2, s));

  M2Result r = m2(4);
  CHECK(r.value == 10);
  CHECK(r.a2 == std::vector<i64>{3, 4});
  r = m2(3);
  CHECK(r.value == 7);
  CHECK(r.a2 == std::vector<i64>{3});
  r = m2(1);
  CHECK(r.value == 2);
  CHECK(r.a2 == std::vector<i64>{2});
  for (i64 t = 1; t <= 10; ++t) {
    CHECK(m2(2 * t).value == t * (t + 3));
    CHECK(m2(2 * t + 1).value == t * (t + 4) + 2);
  }
}

TEST_CASE("cover3 against dynamic programming, exhaustive small bases") {
  for (i64 a3 = 3; a3 <= 40; ++a3)
    for (i64 a2 = 2; a2 < a3; ++a2)
      for (i64 s = 1; s <= 8; ++s) REQUIRE(cover3(Basis{a2, a3}, s).X == oracle::cover(Basis{a2, a3}, s));
}

TEST_CASE("property: cover is monotone in s") {
  oracle::Rng rng(101);
  for (int c = 0; c < 10000; ++c) {
    Basis b = rng.basis(400);
    i64 s = rng(1, 30);
    REQUIRE(cover3(b, s + 1).X >= cover3(b, s).X);
  }
}

TEST_CASE("property: canonical generation has minimal order") {
  oracle::Rng rng(102);
  for (int c = 0; c < 10000; ++c) {
    Basis b = rng.basis(60);
    i64 s = rng(1, 12);
    i64 x = rng(0, 500);
    auto all = oracle::generations(b, s, x);
    auto g = canonical_generation(b, s, x);
    REQUIRE(g.has_value() == !all.empty());
    REQUIRE(can_generate(b, s, x) == !all.empty());
    if (!g) continue;
    i64 best = all.front().order;
    for (const auto& o : all) best = std::min(best, o.order);
    REQUIRE(g->order == best);
    REQUIRE(g->order >= 0);
    REQUIRE(g->value == g->c3 * b.a3 + g->c2 * b.a2 + g->c1);
    REQUIRE(g->stamps == g->c1 + g->c2 + g->c3);
    REQUIRE(g->stamps <= s);
  }
}
