#include "pythcubic/field.hpp"

#include <stdexcept>

#include "pythcubic/interval.hpp"

namespace pythcubic {

Coords mul_coords(const Int& a, const Coords& u, const Coords& v) {
  const Int& x1 = u[0];
  const Int& y1 = u[1];
  const Int& z1 = u[2];
  const Int& x2 = v[0];
  const Int& y2 = v[1];
  const Int& z2 = v[2];

  Int c0 = x1 * x2;
  Int c1 = x1 * y2 + y1 * x2;
  Int c2 = x1 * z2 + y1 * y2 + z1 * x2;
  Int c3 = y1 * z2 + z1 * y2;
  Int c4 = z1 * z2;

  // rho^3 = 1 + (a+3) rho + a rho^2
  // rho^4 = a + (a^2+3a+1) rho + (a^2+a+3) rho^2
  Int a2 = a * a;
  Coords r;
  r[0] = c0 + c3 + a * c4;
  r[1] = c1 + (a + 3) * c3 + (a2 + 3 * a + 1) * c4;
  r[2] = c2 + a * c3 + (a2 + a + 3) * c4;
  return r;
}

namespace {

// Evaluate x + y t + z t^2 over an interval enclosure of t.
RatInterval eval_coords_interval(const Coords& c, const RatInterval& t) {
  RatInterval r = t.square().scaled(Rat(c[2]));
  r = r + t.scaled(Rat(c[1]));
  return r + Rat(c[0]);
}

}  // namespace

Field::Field(Int a)
    : a_(std::move(a)),
      minpoly_{-a_, -(a_ + 3), Int(-1)},
      base_(EmbeddingIntervals::isolate(a_, pow2_rat(-20))) {
  // sigma(rho) = -1 - rho^{-1}, with rho^{-1} = rho^2 - a rho - (a+3).
  galois_rho_ = {a_ + 2, a_, Int(-1)};
  galois_rho_sq_ = mul_coords(a_, galois_rho_, galois_rho_);

  // The image must satisfy the minimal polynomial ...
  Coords cube = mul_coords(a_, galois_rho_sq_, galois_rho_);
  Coords residue;
  residue[0] = cube[0] - a_ * galois_rho_sq_[0] - (a_ + 3) * galois_rho_[0] - 1;
  residue[1] = cube[1] - a_ * galois_rho_sq_[1] - (a_ + 3) * galois_rho_[1];
  residue[2] = cube[2] - a_ * galois_rho_sq_[2] - (a_ + 3) * galois_rho_[2];
  if (residue[0] != 0 || residue[1] != 0 || residue[2] != 0)
    throw std::logic_error("Field: automorphism image fails the minimal polynomial");

  // ... and its value under the first embedding must land in (-2,-1),
  // i.e. the automorphism sends rho to the second root, not the third.
  RatInterval image = eval_coords_interval(galois_rho_, base_.iv[0]);
  if (!image.strictly_inside(Rat(-2), Rat(-1)))
    throw std::logic_error("Field: automorphism image not located in (-2,-1)");
}

FieldPtr Field::make(const Int& a) {
  if (a < -1) throw std::invalid_argument("Field: a must be >= -1");
  return std::shared_ptr<const Field>(new Field(a));
}

}  // namespace pythcubic
