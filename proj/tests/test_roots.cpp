#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pythcubic/roots.hpp"

using namespace pythcubic;

TEST_CASE("minpoly sign at rational points") {
  Int a(7);
  CHECK(minpoly_sign(a, Rat(0)) == -1);       // constant term -1
  CHECK(minpoly_sign(a, Rat(-1)) == 1);       // f(-1) = 1 for every a
  CHECK(minpoly_sign(a, Rat(a + 1)) == -1);   // f(a+1) = -2a-3
  CHECK(minpoly_sign(a, Rat(a + 3)) == 1);    // f(a+3) = 2(a+3)^2 - 1
  CHECK(minpoly_sign(a, Rat(-2)) == -1);
}

TEST_CASE("isolating intervals land in the coarse brackets") {
  for (long a : {-1L, 0L, 1L, 2L, 5L, 12L}) {
    auto ivs = EmbeddingIntervals::isolate(Int(a), Rat(1, 10));
    CHECK(ivs.iv[0].lo >= Rat(a + 1));
    CHECK(ivs.iv[0].hi <= Rat(a + 3));
    CHECK(ivs.iv[1].lo >= Rat(-2));
    CHECK(ivs.iv[1].hi <= Rat(-1));
    CHECK(ivs.iv[2].lo >= Rat(-1));
    CHECK(ivs.iv[2].hi <= Rat(0));
    // pairwise disjoint
    CHECK(ivs.iv[1].hi <= ivs.iv[2].lo);
    CHECK(ivs.iv[2].hi <= ivs.iv[0].lo);
  }
}

TEST_CASE("a=7 refined intervals match the sharp estimates") {
  auto ivs = EmbeddingIntervals::isolate(Int(7), Rat(1, 100));
  CHECK(ivs.iv[0].strictly_inside(Rat(8), Rat(8) + Rat(2, 7)));
  CHECK(ivs.iv[2].strictly_inside(Rat(-1, 9), Rat(-1, 10)));
}

TEST_CASE("a=-1 gives three disjoint intervals inside (-2, 2)") {
  auto ivs = EmbeddingIntervals::isolate(Int(-1), Rat(1, 10));
  for (const auto& iv : ivs.iv) {
    CHECK(iv.strictly_inside(Rat(-2), Rat(2)));
    CHECK(iv.width() <= Rat(1, 10));
  }
}

TEST_CASE("refinement only shrinks and keeps the sign change") {
  Int a(9);
  auto ivs = EmbeddingIntervals::isolate(a, Rat(1, 4));
  auto before = ivs;
  ivs.refine_to(Rat(1, 1 << 20));
  for (int i = 0; i < 3; ++i) {
    CHECK(ivs.iv[i].lo >= before.iv[i].lo);
    CHECK(ivs.iv[i].hi <= before.iv[i].hi);
    CHECK(ivs.iv[i].width() <= Rat(1, 1 << 20));
    CHECK(minpoly_sign(a, ivs.iv[i].lo) != minpoly_sign(a, ivs.iv[i].hi));
  }
}

TEST_CASE("sharper estimates hold for a in [7, 100]") {
  // Spot checks here; the acceptance suite sweeps the full range.
  for (long a : {7L, 13L, 37L, 100L}) {
    Int ia(a);
    auto ivs = EmbeddingIntervals::isolate(ia, pow2_rat(-30));
    CHECK(ivs.iv[0].strictly_inside(Rat(ia + 1), Rat(ia + 1) + rat_frac(2, ia)));
    CHECK(ivs.iv[1].strictly_inside(Rat(-1) - rat_frac(1, ia + 1),
                                    Rat(-1) - rat_frac(1, ia + 2)));
    CHECK(ivs.iv[2].strictly_inside(rat_frac(-1, ia + 2), rat_frac(-1, ia + 3)));
  }
}

TEST_CASE("isolate validates inputs") {
  CHECK_THROWS_AS(EmbeddingIntervals::isolate(Int(-2), Rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(EmbeddingIntervals::isolate(Int(3), Rat(0)), std::invalid_argument);
}
