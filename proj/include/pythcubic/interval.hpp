#pragma once

#include <algorithm>
#include <cassert>

#include "pythcubic/numeric.hpp"

namespace pythcubic {

// Closed interval with exact rational endpoints. All operations round
// outward by construction (endpoint arithmetic is exact), so an enclosure
// stays an enclosure.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) { assert(lo <= hi); }

  static RatInterval point(const Rat& v) { return {v, v}; }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  // max(|lo|, |hi|)
  Rat mag() const {
    Rat al = abs(lo), ah = abs(hi);
    return al > ah ? al : ah;
  }

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool strictly_inside(const Rat& a, const Rat& b) const { return a < lo && hi < b; }

  // +1 if entirely positive, -1 if entirely negative, 0 if the sign is
  // not yet decided (interval touches or straddles zero).
  int sign() const {
    if (sign_of(lo) > 0) return 1;
    if (sign_of(hi) < 0) return -1;
    return 0;
  }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator-() const { return {-hi, -lo}; }

  RatInterval operator+(const Rat& c) const { return {lo + c, hi + c}; }
  RatInterval operator-(const Rat& c) const { return {lo - c, hi - c}; }

  RatInterval operator*(const RatInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)),
            std::max(std::max(a, b), std::max(c, d))};
  }

  RatInterval scaled(const Rat& c) const {
    if (sign_of(c) >= 0) return {lo * c, hi * c};
    return {hi * c, lo * c};
  }

  // Tighter than (*this) * (*this): the result is never negative.
  RatInterval square() const {
    Rat a = lo * lo, b = hi * hi;
    if (sign_of(lo) >= 0) return {a, b};
    if (sign_of(hi) <= 0) return {b, a};
    return {Rat(0), std::max(a, b)};
  }
};

}  // namespace pythcubic
