#pragma once

#include <array>
#include <memory>

#include "pythcubic/numeric.hpp"
#include "pythcubic/roots.hpp"

namespace pythcubic {

using Coords = std::array<Int, 3>;

// Product of x1+y1*rho+z1*rho^2 and x2+y2*rho+z2*rho^2, reduced to the
// basis {1, rho, rho^2} via rho^3 = 1 + (a+3) rho + a rho^2.
Coords mul_coords(const Int& a, const Coords& u, const Coords& v);

// The ambient order Z[rho], rho a root of x^3 - a x^2 - (a+3) x - 1 with
// a >= -1. Immutable after construction; safe to share across threads.
//
// Construction isolates the three real roots to width 2^-20 and derives the
// coordinates of the automorphism image of rho, verifying both that the
// image satisfies the minimal polynomial and that it lands in (-2,-1) (the
// second real root), so the root labelling cannot silently drift.
class Field {
 public:
  static std::shared_ptr<const Field> make(const Int& a);
  static std::shared_ptr<const Field> make(long a) { return make(Int(a)); }

  const Int& a() const { return a_; }
  // Coefficients of the monic minimal polynomial x^3 + m2 x^2 + m1 x + m0.
  const std::array<Int, 3>& minpoly() const { return minpoly_; }
  Int discriminant_sqrt() const { return a_ * a_ + 3 * a_ + 9; }

  // Isolating intervals at width 2^-20, the starting point for all
  // adaptive sign determinations.
  const EmbeddingIntervals& base_intervals() const { return base_; }

  // Coordinates of sigma(rho) = -1 - rho^{-1} = (a+2) + a rho - rho^2 and
  // of its square, used to apply the automorphism coordinate-wise.
  const Coords& galois_rho() const { return galois_rho_; }
  const Coords& galois_rho_sq() const { return galois_rho_sq_; }

  bool operator==(const Field& o) const { return a_ == o.a_; }

 private:
  explicit Field(Int a);

  Int a_;
  std::array<Int, 3> minpoly_;
  EmbeddingIntervals base_;
  Coords galois_rho_;
  Coords galois_rho_sq_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace pythcubic
