#pragma once

#include <optional>
#include <vector>

#include "pythcubic/element.hpp"

namespace pythcubic {

// A nonzero square totally below some target, together with its canonical
// root (first nonzero coordinate positive, so each square appears once).
struct SquareCandidate {
  Elem root;
  Elem square;

  bool operator==(const SquareCandidate& o) const { return square == o.square; }
  auto operator<=>(const SquareCandidate& o) const { return square <=> o.square; }
};

// A multiset of squares summing exactly to the target.
struct Decomposition {
  std::vector<SquareCandidate> parts;
  Elem target;

  // Re-add the parts in ring arithmetic and compare; independent of how
  // the decomposition was found.
  bool resums_to_target() const;
};

// Complete list of nonzero squares totally below target, by enumerating an
// outward-rounded coordinate box around the embedding bounds
// |sigma_i(omega)| <= sqrt(sigma_i(target)). Sorted by square.
std::vector<SquareCandidate> squares_below_bruteforce(const Elem& target);

// Same set assembled the structural way: totally positive units below the
// target, squares of sigma-indecomposables, and squares of same-signature
// sums of those. Relies on the representative list being complete; the
// box enumeration above is the independent check. Sorted by square.
std::vector<SquareCandidate> squares_below_structured(const Elem& target, long box = 10);

struct LengthResult {
  int length = 0;
  Decomposition witness;
};

// Least m <= max_m with target a sum of m nonzero squares, with a witness;
// std::nullopt when no such representation exists within max_m. The target
// must be zero (length 0) or totally positive; anything else throws
// std::domain_error. Exhaustive: candidates per residue are complete, so a
// std::nullopt at max_m rules out every representation of that size.
std::optional<LengthResult> pythagoras_length(const Elem& target, int max_m);

// Membership in the set of sums of squares, decided exactly: every nonzero
// square has trace >= 3, so trace(target)/3 caps the number of parts.
bool is_sum_of_squares(const Elem& target);

}  // namespace pythcubic
