#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pythcubic/sos.hpp"
#include "pythcubic/verify.hpp"
#include "test_util.hpp"

using namespace pythcubic;

namespace {

std::vector<Elem> squares_of(const std::vector<SquareCandidate>& cs) {
  std::vector<Elem> out;
  for (const auto& c : cs) out.push_back(c.square);
  return out;
}

}  // namespace

TEST_CASE("the only square below 1 is 1") {
  auto f = Field::make(5);
  auto sq = squares_below_bruteforce(Elem::one(f));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].square == Elem::one(f));
  CHECK(sq[0].root == Elem::one(f));
}

TEST_CASE("square census below the witness at a=15") {
  auto f = Field::make(15);
  auto sq = squares_of(squares_below_bruteforce(lower_bound_witness(f)));
  std::vector<Elem> expect = {
      Elem::one(f),
      Elem::from_int(f, 4),
      Elem::from_int(f, 9),
      Elem::rho_sq(f),
      Elem(f, 1, -2, 1),
      Elem(f, 241, 211, -14),
      Elem(f, 210, 181, -12),
      Elem(f, 239, 207, -13),
  };
  std::sort(expect.begin(), expect.end());
  CHECK(sq == expect);
}

TEST_CASE("square census below the witness at a=3 has the two extras") {
  auto f = Field::make(3);
  auto sq = squares_of(squares_below_bruteforce(lower_bound_witness(f)));
  REQUIRE(sq.size() == 10);
  CHECK(std::binary_search(sq.begin(), sq.end(), Elem(f, 20, 11, -3)));
  CHECK(std::binary_search(sq.begin(), sq.end(), Elem(f, 1, 2, 1)));
  // ... and both extras really are squares of order elements
  CHECK(std::binary_search(sq.begin(), sq.end(), Elem(f, 1, -2, 1)));
}

TEST_CASE("structured enumeration matches the box oracle") {
  for (long a : {3L, 4L, 5L, 9L, 15L}) {
    auto f = Field::make(a);
    Elem gamma = lower_bound_witness(f);
    auto brute = squares_of(squares_below_bruteforce(gamma));
    auto structured = squares_of(squares_below_structured(gamma));
    CHECK(brute == structured);
  }
}

TEST_CASE("census is monotone in the target") {
  auto f = Field::make(6);
  Elem small(f, 7, 0, 1);
  Elem large = small + Elem(f, 1, 1, -1).square() + Elem::from_int(f, 4);
  auto sq_small = squares_of(squares_below_bruteforce(small));
  auto sq_large = squares_of(squares_below_bruteforce(large));
  CHECK(std::includes(sq_large.begin(), sq_large.end(), sq_small.begin(), sq_small.end()));
}

TEST_CASE("every candidate square has trace at least 3") {
  for (long a = 3; a <= 8; ++a) {
    auto f = Field::make(a);
    for (const auto& c : squares_below_bruteforce(lower_bound_witness(f))) {
      CHECK(trace_of(c.square) >= 3);
      CHECK(is_totally_positive(c.square));
      CHECK(c.root.square() == c.square);
    }
  }
}

TEST_CASE("length of small rational integers") {
  auto f = Field::make(5);
  auto two = pythagoras_length(Elem::from_int(f, 2), 7);
  REQUIRE(two.has_value());
  CHECK(two->length == 2);
  CHECK(two->witness.resums_to_target());

  auto zero = pythagoras_length(Elem::zero(f), 7);
  REQUIRE(zero.has_value());
  CHECK(zero->length == 0);
  CHECK(zero->witness.parts.empty());
}

TEST_CASE("non totally positive targets are a domain error") {
  auto f = Field::make(5);
  CHECK_THROWS_AS(pythagoras_length(Elem::rho(f), 5), std::domain_error);
}

TEST_CASE("the witness needs exactly six squares, small a") {
  for (long a : {3L, 4L, 7L}) {
    auto f = Field::make(a);
    Elem gamma = lower_bound_witness(f);
    CHECK_FALSE(pythagoras_length(gamma, 5).has_value());
    auto six = pythagoras_length(gamma, 7);
    REQUIRE(six.has_value());
    CHECK(six->length == 6);
    CHECK(six->witness.resums_to_target());
  }
}

TEST_CASE("remainder element at a=2 needs five squares") {
  auto f = Field::make(2);
  auto res = pythagoras_length(witness_remainder(f), 12);
  REQUIRE(res.has_value());
  CHECK(res->length == 5);
}

TEST_CASE("sum-of-squares membership") {
  auto f3 = Field::make(3);
  CHECK(is_sum_of_squares(Elem::zero(f3)));
  CHECK_FALSE(is_sum_of_squares(Elem::rho(f3)));
  CHECK(is_sum_of_squares(lower_bound_witness(f3)));
}

TEST_CASE("witnesses resum for random sums of squares") {
  std::mt19937_64 rng(3001);
  for (int i = 0; i < 20; ++i) {
    auto f = Field::make(pythcubic::testutil::rand_long(rng, -1, 6));
    // Build a target that is a sum of k small squares, then decompose it.
    int k = static_cast<int>(pythcubic::testutil::rand_long(rng, 1, 4));
    Elem target = Elem::zero(f);
    for (int j = 0; j < k; ++j)
      target = target + pythcubic::testutil::rand_nonzero(rng, f, 2).square();
    auto res = pythagoras_length(target, 3 * k + 3);
    REQUIRE(res.has_value());
    CHECK(res->length <= k);
    CHECK(res->witness.resums_to_target());
    for (const SquareCandidate& p : res->witness.parts)
      CHECK(totally_geq(target, p.square));
  }
}
