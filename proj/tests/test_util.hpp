#pragma once

#include <random>

#include "pythcubic/element.hpp"

namespace pythcubic::testutil {

// Deterministic generators; every suite seeds its own engine so failures
// reproduce.
inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Elem rand_elem(std::mt19937_64& rng, const FieldPtr& f, long mag = 30) {
  return {f, rand_long(rng, -mag, mag), rand_long(rng, -mag, mag),
          rand_long(rng, -mag, mag)};
}

inline Elem rand_nonzero(std::mt19937_64& rng, const FieldPtr& f, long mag = 30) {
  while (true) {
    Elem e = rand_elem(rng, f, mag);
    if (!e.is_zero()) return e;
  }
}

}  // namespace pythcubic::testutil
