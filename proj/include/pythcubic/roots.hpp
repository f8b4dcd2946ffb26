#pragma once

#include <array>

#include "pythcubic/interval.hpp"
#include "pythcubic/numeric.hpp"

namespace pythcubic {

// Sign of x^3 - a x^2 - (a+3) x - 1 at an exact rational point. The
// polynomial is irreducible over Q for every integer a (its only possible
// rational roots, +-1, are not roots), so the value is never zero at a
// rational argument; an assert guards the claim anyway.
int minpoly_sign(const Int& a, const Rat& t);

// Isolating intervals for the three real roots, ordered
//   iv[0]: rho   in (a+1, a+3)
//   iv[1]: rho'  in (-2, -1)
//   iv[2]: rho'' in (-1, 0)
// Endpoints are exact rationals; bisection keeps a sign change across each
// interval, which certifies that the root stays inside while refining.
struct EmbeddingIntervals {
  Int a;
  std::array<RatInterval, 3> iv;

  // Bisect from the coarse brackets above down to the requested width.
  static EmbeddingIntervals isolate(const Int& a, const Rat& width);

  // Continue bisecting until every interval has width <= width. Only
  // shrinks; never widens.
  void refine_to(const Rat& width);
};

}  // namespace pythcubic
