#include <doctest.h>

#include "oracles.hpp"
#include "psp/stride.hpp"

using namespace psp;

namespace {

std::vector<i64> ys(const StrideGenerator& sg) {
  std::vector<i64> out;
  for (const auto& b : sg.breaks) out.push_back(b.y);
  return out;
}

}  // namespace

TEST_CASE("classify worked examples") {
  auto sg = classify(Basis{6, 13}, 4);
  REQUIRE(sg);
  CHECK(sg->p == 2);
  CHECK(ys(*sg) == std::vector<i64>{9, 10});
  CHECK(sg->canonical());

  sg = classify(Basis{14, 33}, 8);
  REQUIRE(sg);
  CHECK(sg->p == 2);
  REQUIRE(sg->breaks.size() == 1);
  CHECK(sg->breaks[0].y == 22);
  CHECK(sg->breaks[0].order == 4);

  sg = classify(Basis{30, 82}, 12);
  REQUIRE(sg);
  CHECK(sg->p == 3);
  CHECK(ys(*sg) == std::vector<i64>{53, 59});

  sg = classify(Basis{34, 51}, 17);
  REQUIRE(sg);
  CHECK(sg->p == 1);
  CHECK(ys(*sg) == std::vector<i64>{33, 50});

  CHECK_FALSE(classify(Basis{6, 13}, 3));

  sg = classify(Basis{95, 100}, 5);
  REQUIRE(sg);
  CHECK(sg->p == 18);
  CHECK(sg->first_break() == 9);
}

TEST_CASE("twelve a2=34 classifications") {
  struct Row {
    i64 a3, n, p;
    std::vector<i64> fundamental, rest_head;
    i64 count;
  };
  // rest_head lists the leading non-fundamental breaks; count is the total.
  const std::vector<Row> rows = {
      {35, 1, 32, {1}, {2, 3, 4}, 34},  {36, 2, 16, {3}, {5, 7, 9}, 17},   {37, 3, 10, {3}, {6, 9, 12}, 12},
      {38, 3, 16, {5}, {9, 13, 17}, 9}, {42, 5, 16, {9}, {17, 25, 33}, 5}, {45, 11, 2, {11}, {22, 33, 44}, 4},
      {49, 6, 8, {15, 18}, {30, 33, 45}, 6}, {50, 9, 16, {17}, {33, 49}, 3}, {51, 17, 1, {33}, {50}, 2},
      {61, 9, 4, {27, 33}, {54, 60}, 4},  {63, 9, 6, {29, 33}, {58, 62}, 4}, {66, 17, 16, {33}, {65}, 2},
  };
  for (const auto& r : rows) {
    CAPTURE(r.a3);
    auto sg = classify(Basis{34, r.a3}, r.n);
    REQUIRE(sg);
    CHECK(sg->p == r.p);
    CHECK(static_cast<i64>(sg->breaks.size()) == r.count);
    std::vector<i64> fund, rest;
    for (const auto& b : sg->breaks) (b.fundamental ? fund : rest).push_back(b.y);
    CHECK(fund == r.fundamental);
    rest.resize(std::min(rest.size(), r.rest_head.size()));
    CHECK(rest == r.rest_head);
    CHECK(sg->breaks.back().y == r.a3 - 1);
  }
}

TEST_CASE("{1,34,45} breaks exactly") {
  auto sg = classify(Basis{34, 45}, 11);
  REQUIRE(sg);
  CHECK(ys(*sg) == std::vector<i64>{11, 22, 33, 44});
}

TEST_CASE("break_order") {
  CHECK(break_order(Basis{14, 33}, 8, 2, 22).order == 4);
  CHECK(break_order(Basis{6, 13}, 4, 2, 9).canonical());
  CHECK(break_order(Basis{30, 38}, 8, 3, 13).order == 6);
  CHECK_THROWS_AS(break_order(Basis{14, 33}, 8, 2, 21), InvalidInput);
}

TEST_CASE("sg_series worked examples") {
  auto s = sg_series(Basis{38, 97});
  REQUIRE(s.size() == 3);
  CHECK(s[0].n == 19);
  CHECK(s[0].p == 2);
  CHECK(ys(s[0]) == std::vector<i64>{71});
  CHECK(s[0].breaks[0].order == 4);
  CHECK(s[1].n == 15);
  CHECK(s[1].p == 4);
  CHECK(ys(s[1]) == std::vector<i64>{67});
  CHECK(s[1].breaks[0].order == 6);
  CHECK(s[2].n == 14);
  CHECK(s[2].p == 6);
  CHECK(ys(s[2]) == std::vector<i64>{67});
  CHECK(s[2].canonical());

  s = sg_series(Basis{30, 38});
  REQUIRE(s.size() == 3);
  CHECK(s[0].n == 8);
  CHECK(s[0].p == 3);
  REQUIRE(s[0].breaks.size() == 2);
  CHECK(s[0].breaks[0] == BreakInfo{13, 6, true});
  CHECK(s[0].breaks[1] == BreakInfo{21, 5, false});
  CHECK(s[1].n == 6);
  CHECK(s[1].p == 6);
  CHECK(ys(s[1]) == std::vector<i64>{11, 19, 27});
  CHECK(s[2].n == 4);
  CHECK(s[2].p == 10);
  CHECK(s[2].canonical());

  s = sg_series(Basis{8, 11});
  REQUIRE(s.size() == 2);
  CHECK(s[0].n == 3);
  CHECK(s[0].p == 2);
  CHECK_FALSE(s[0].canonical());
  CHECK(s[1].n == 2);
  CHECK(s[1].p == 4);
  CHECK(s[1].canonical());
}

TEST_CASE("underlying stride generator") {
  Underlying u = underlying_sg(Basis{6, 13}, 6);
  CHECK(u.sg.n == 4);
  CHECK(u.sg.p == 2);
  CHECK(u.k == 2);

  u = underlying_sg(Basis{8, 11}, 7);
  CHECK(u.sg.n == 2);
  CHECK(u.sg.p == 4);

  u = underlying_sg(Basis{39, 520}, 54);
  CHECK(u.sg.n == 37);
  CHECK(u.sg.p == 1);
  CHECK(u.k == 17);

  CHECK_THROWS_AS(underlying_sg(Basis{55, 954}, 54), InvalidInput);
}

TEST_CASE("canonical underlying SG persists for larger s") {
  for (i64 s = 7; s <= 15; ++s) {
    CAPTURE(s);
    Underlying u = underlying_sg(Basis{8, 11}, s);
    CHECK(u.sg.n == 2);
    CHECK(u.sg.p == 4);
    CHECK(u.sg.canonical());
  }
}

TEST_CASE("potential cover") {
  CHECK(potential_cover(*classify(Basis{39, 520}, 37), 54) == 9852);
  CHECK(potential_cover(*classify(Basis{55, 954}, 51), 54) == 4730);
  auto sg = *classify(Basis{14, 33}, 8);
  CHECK(potential_cover(sg, 8) == 33 + 22 - 1);
  CHECK_THROWS_AS(potential_cover(sg, 7), InvalidInput);
}

TEST_CASE("first break of {1,42,519} at n=37") {
  // The worked scan lists Y=488 and X=9830 for this set; classification and
  // brute force agree on y=488, so Y=487 and X=9829.
  auto sg = classify(Basis{42, 519}, 37);
  REQUIRE(sg);
  CHECK(sg->p == 1);
  CHECK(sg->first_break() == 488);
  CoverResult c = cover3(Basis{42, 519}, 54);
  CHECK(c.X == 9829);
  CHECK(c.Y == 487);
  CHECK(oracle::cover(Basis{42, 519}, 54) == 9829);
}

TEST_CASE("long stride generators") {
  Basis b = construct_long_sg(5, 20);
  CHECK(b == Basis{95, 100});
  auto sg = classify(b, 5);
  REQUIRE(sg);
  CHECK(sg->p == 18);
  CHECK(sg->first_break() == 9);

  CHECK(construct_long_sg(2, 2) == Basis{2, 4});
  b = construct_long_sg(4, 3);
  CHECK(b == Basis{8, 12});
  sg = classify(b, 4);
  REQUIRE(sg);
  CHECK(sg->p <= 2);

  CHECK_THROWS_AS(construct_long_sg(1, 5), InvalidInput);
  CHECK_THROWS_AS(construct_long_sg(5, 1), InvalidInput);
  for (i64 n = 2; n <= 12; ++n)
    for (i64 k = 2; k <= 12; ++k) {
      auto g = classify(construct_long_sg(n, k), n);
      REQUIRE(g);
      CHECK(g->p <= k - 1);
    }
}

TEST_CASE("order-0 characterization, all a2 <= 40, a3 <= 400") {
  for (i64 a2 = 2; a2 <= 40; ++a2)
    for (i64 a3 = a2 + 1; a3 <= 400; ++a3) {
      const i64 C2 = a3 / a2, C1 = a3 % a2;
      const i64 n = a2 + C2 - 2;
      if (n < 1) continue;
      auto sg = classify(Basis{a2, a3}, n);
      const bool expect = C1 == 0 || a2 - C2 <= C1;
      const bool got = sg && sg->p == 0;
      CAPTURE(a2);
      CAPTURE(a3);
      REQUIRE(got == expect);
      if (got) {
        REQUIRE(sg->first_break() == C2 * a2 - 1);
        REQUIRE(sg->canonical());
        // An order-0 set is never a higher-order generator for another n.
        for (const auto& other : sg_series(Basis{a2, a3})) REQUIRE(other.p == 0);
      }
    }
}

TEST_CASE("classify matches the definition, exhaustive small cases") {
  for (i64 a3 = 3; a3 <= 36; ++a3)
    for (i64 a2 = 2; a2 < a3; ++a2) {
      Basis b{a2, a3};
      std::vector<i64> series_n;
      for (const auto& sg : sg_series(b)) series_n.push_back(sg.n);
      for (i64 n = 1; n <= a2 + a3 / a2 + 2; ++n) {
        CAPTURE(a2);
        CAPTURE(a3);
        CAPTURE(n);
        auto want = oracle::sg_order(b, n);
        auto got = classify(b, n);
        REQUIRE(got.has_value() == want.has_value());
        REQUIRE(std::count(series_n.begin(), series_n.end(), n) == (want ? 1 : 0));
        if (!got) continue;
        REQUIRE(got->p == *want);
        REQUIRE(is_sg_of_order(b, n, *want));
        REQUIRE_FALSE(is_sg_of_order(b, n, *want + 1));
        auto br = oracle::breaks(b, n, *want);
        REQUIRE(br.size() == got->breaks.size());
        for (std::size_t i = 0; i < br.size(); ++i) {
          REQUIRE(br[i].y == got->breaks[i].y);
          REQUIRE(br[i].order == got->breaks[i].order);
        }
      }
      REQUIRE(series_n_max(b) >= (series_n.empty() ? 0 : series_n.front()));
    }
}

TEST_CASE("p_cap gives up early but agrees otherwise") {
  auto full = classify(Basis{30, 38}, 4);
  REQUIRE(full);
  CHECK_FALSE(classify(Basis{30, 38}, 4, 9));
  auto capped = classify(Basis{30, 38}, 4, 10);
  REQUIRE(capped);
  CHECK(capped->p == full->p);
}
