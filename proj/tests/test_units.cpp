#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pythcubic/indecomposable.hpp"
#include "pythcubic/units.hpp"
#include "pythcubic/verify.hpp"
#include "test_util.hpp"

using namespace pythcubic;
using pythcubic::testutil::rand_long;

TEST_CASE("unit_element generators and inverses") {
  for (long a : {-1L, 0L, 7L, 15L}) {
    auto f = Field::make(a);
    CHECK(unit_element(f, {1, 0}) == Elem::rho(f));
    CHECK(unit_element(f, {0, 1}) == Elem(f, a + 2, a, -1));
    CHECK(unit_element(f, {0, 0}) == Elem::one(f));
    CHECK(unit_element(f, {1, 0}) * unit_element(f, {-1, 0}) == Elem::one(f));
    CHECK(unit_element(f, {3, -2}) * unit_element(f, {-3, 2}) == Elem::one(f));
  }
}

TEST_CASE("rho^2 is totally positive and below the witness") {
  auto f = Field::make(15);
  Elem rho_sq = unit_element(f, {2, 0});
  CHECK(rho_sq == Elem::rho_sq(f));
  CHECK(is_totally_positive(rho_sq));
  CHECK(totally_geq(lower_bound_witness(f), rho_sq));
}

TEST_CASE("box units all have norm +-1") {
  std::mt19937_64 rng(2001);
  for (int i = 0; i < 20; ++i) {
    auto f = Field::make(rand_long(rng, -1, 40));
    long k = rand_long(rng, -6, 6), l = rand_long(rng, -6, 6);
    Int n = norm_of(unit_element(f, {k, l}));
    CHECK((n == 1 || n == -1));
  }
}

TEST_CASE("only 1 has all conjugates within a (and within 1)") {
  auto f = Field::make(7);
  auto small = units_in_conjugate_box(f, Rat(7), 10);
  REQUIRE(small.size() == 1);
  CHECK(small[0] == UnitExponent{0, 0});

  auto tiny = units_in_conjugate_box(f, Rat(1), 10);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0] == UnitExponent{0, 0});
}

TEST_CASE("representatives at a=-1 degenerate to the two exceptional elements") {
  auto f = Field::make(-1);
  auto reps = indecomposable_representatives(f);
  REQUIRE(reps.size() == 2);
  CHECK(std::count(reps.begin(), reps.end(), Elem::one(f)) == 1);
  CHECK(std::count(reps.begin(), reps.end(), Elem(f, 1, 1, 1)) == 1);
}

TEST_CASE("triangle ranges at a=3") {
  auto f = Field::make(3);
  auto tri = triangle_family(f);
  // v in [0,3], w in [5v+1, 4(v+1)]
  for (const Elem& e : tri) {
    Int v = -e.x();
    Int w = -e.y();
    CHECK(e.z() == v + 1);
    CHECK(v >= 0);
    CHECK(v <= 3);
    CHECK(w >= 5 * v + 1);
    CHECK(w <= 4 * (v + 1));
  }
  size_t expect = 0;
  for (long v = 0; v <= 3; ++v) expect += static_cast<size_t>(4 * (v + 1) - (5 * v + 1) + 1);
  CHECK(tri.size() == expect);
}

TEST_CASE("every representative is totally positive") {
  for (long a = -1; a <= 20; ++a) {
    auto f = Field::make(a);
    for (const Elem& e : indecomposable_representatives(f)) CHECK(is_totally_positive(e));
  }
}

TEST_CASE("reduced triangle at a=3 and a=4") {
  auto f3 = Field::make(3);
  auto pts3 = reduced_triangle(f3);
  REQUIRE(pts3.size() == 4);
  CHECK(triangle_element(f3, pts3[0]) == Elem(f3, 0, -1, 1));
  CHECK(triangle_element(f3, pts3[1]) == Elem(f3, 0, -2, 1));
  CHECK(triangle_element(f3, pts3[2]) == Elem(f3, 0, -3, 1));
  CHECK(triangle_element(f3, pts3[3]) == Elem(f3, -1, -7, 2));

  auto f4 = Field::make(4);
  for (const TrianglePoint& p : reduced_triangle(f4)) {
    CHECK(p.v >= 0);
    CHECK(p.v <= 1);
    CHECK(p.W >= p.v);
    CHECK(p.W <= 3 - 2 * p.v);
  }
}

TEST_CASE("reduced triangle sits inside the full family") {
  for (long a = 0; a <= 50; ++a) {
    auto f = Field::make(a);
    auto family = triangle_family(f);
    std::sort(family.begin(), family.end());
    for (const TrianglePoint& p : reduced_triangle(f)) {
      CHECK(std::binary_search(family.begin(), family.end(), triangle_element(f, p)));
    }
  }
}

TEST_CASE("norm monotonicity along the reduced triangle, small a") {
  for (long a = 3; a <= 12; ++a) {
    auto rep = verify_norm_monotonicity(a, a);
    CHECK(rep.all_pass());
  }
  // concrete instance at a=3
  auto f = Field::make(3);
  Int n01 = norm_of(triangle_element(f, {0, 1}));
  Int n11 = norm_of(triangle_element(f, {1, 1}));
  CHECK(triangle_element(f, {1, 1}) == Elem(f, -1, -7, 2));
  CHECK(n01 < n11);
}

TEST_CASE("unit growth trichotomy, small range") {
  auto rep = verify_unit_growth(7, 10, {.unit_box = 6});
  CHECK(rep.all_pass());
}

TEST_CASE("sigma-indecomposables below the witness at a=15") {
  auto f = Field::make(15);
  Elem gamma = lower_bound_witness(f);
  Elem rho = Elem::rho(f);
  Elem rho_p = galois_image(rho);
  Elem rho_pp = galois_image(rho_p);

  auto plus_minus_minus = sigma_indecomposables_below(f, {{1, -1, -1}}, gamma, 10);
  std::vector<Elem> expect_pmm = {rho, rho_p * rho_pp * (rho * rho - rho)};
  std::sort(expect_pmm.begin(), expect_pmm.end());
  CHECK(plus_minus_minus == expect_pmm);

  auto minus_plus_minus = sigma_indecomposables_below(f, {{-1, 1, -1}}, gamma, 10);
  std::vector<Elem> expect_mpm = {rho * rho_p * (rho_pp * rho_pp - rho_pp * 14)};
  CHECK(minus_plus_minus == expect_mpm);

  // The all-plus closure picks up 2 and 3 as sums of copies of 1.
  auto all_plus = sigma_elements_below(f, Signature::all_plus(), gamma, 10);
  std::vector<Elem> expect_app = {Elem::one(f), Elem::from_int(f, 2), Elem::from_int(f, 3)};
  CHECK(all_plus == expect_app);
}

TEST_CASE("brute-force indecomposables match the unit orbit, small a") {
  for (long a : {-1L, 0L, 1L}) {
    auto f = Field::make(a);
    Int bound = 20 * (Int(a) + 2);
    auto found = brute_force_indecomposables(f, bound);
    auto orbit = unit_orbit_up_to_trace(f, indecomposable_representatives(f), bound, 8);
    CHECK(found == orbit);
    CHECK(std::count(found.begin(), found.end(), Elem::one(f)) == 1);
    CHECK(std::count(found.begin(), found.end(), Elem::from_int(f, 2)) == 0);
  }
}

TEST_CASE("totally positive enumeration is complete against a direct filter") {
  // Cross-check the box enumeration on a small instance by verifying that
  // every sum of two members with small trace is found when its trace fits.
  auto f = Field::make(1);
  Int bound(15);
  auto all = totally_positive_up_to_trace(f, bound);
  CHECK(!all.empty());
  for (const Elem& e : all) {
    CHECK(is_totally_positive(e));
    CHECK(trace_of(e) <= bound);
  }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i; j < all.size(); ++j) {
      Elem s = all[i] + all[j];
      if (trace_of(s) > bound) continue;
      CHECK(std::binary_search(all.begin(), all.end(), s));
    }
  }
}
