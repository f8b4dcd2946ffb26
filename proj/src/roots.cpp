#include "pythcubic/roots.hpp"

#include <cassert>
#include <stdexcept>

namespace pythcubic {

int minpoly_sign(const Int& a, const Rat& t) {
  // Horner: ((t - a) t - (a+3)) t - 1
  Rat v = t - Rat(a);
  v *= t;
  v -= Rat(a + 3);
  v *= t;
  v -= 1;
  int s = sign_of(v);
  assert(s != 0 && "minpoly has no rational roots");
  return s;
}

namespace {

// One bisection pass: halve the interval, keeping the half where the sign
// changes. sign_lo is the minpoly sign at iv.lo and is maintained.
void bisect_once(const Int& a, RatInterval& iv, int sign_lo) {
  Rat m = iv.mid();
  if (minpoly_sign(a, m) == sign_lo) {
    iv.lo = m;
  } else {
    iv.hi = m;
  }
}

void refine_interval(const Int& a, RatInterval& iv, const Rat& width) {
  int sign_lo = minpoly_sign(a, iv.lo);
  while (iv.width() > width) bisect_once(a, iv, sign_lo);
}

}  // namespace

EmbeddingIntervals EmbeddingIntervals::isolate(const Int& a, const Rat& width) {
  if (a < -1) throw std::invalid_argument("isolate: a must be >= -1");
  if (sign_of(width) <= 0) throw std::invalid_argument("isolate: width must be positive");
  EmbeddingIntervals e;
  e.a = a;
  e.iv[0] = RatInterval(Rat(a + 1), Rat(a + 3));
  e.iv[1] = RatInterval(Rat(-2), Rat(-1));
  e.iv[2] = RatInterval(Rat(-1), Rat(0));
  // Sanity: each bracket must see a sign change.
  for (const auto& iv : e.iv) {
    if (minpoly_sign(a, iv.lo) == minpoly_sign(a, iv.hi))
      throw std::logic_error("isolate: bracket lost the root");
  }
  e.refine_to(width);
  return e;
}

void EmbeddingIntervals::refine_to(const Rat& width) {
  for (auto& interval : iv) refine_interval(a, interval, width);
}

}  // namespace pythcubic
