#pragma once

#include <array>
#include <string>

#include "pythcubic/element.hpp"
#include "pythcubic/interval.hpp"

namespace pythcubic {

// Signs of the three real embeddings of a nonzero element, in the fixed
// order (rho, rho', rho''). Entries are +1 or -1; embeddings of nonzero
// elements are never zero.
struct Signature {
  std::array<int, 3> s{0, 0, 0};

  static Signature all_plus() { return {{1, 1, 1}}; }
  Signature negated() const { return {{-s[0], -s[1], -s[2]}}; }
  bool is_totally_positive() const { return s[0] > 0 && s[1] > 0 && s[2] > 0; }

  bool operator==(const Signature&) const = default;
  std::string to_string() const;  // "(+,-,-)"
};

// Enclosure of the i-th real embedding of e, evaluated over the given
// isolating intervals (i = 0, 1, 2 for rho, rho', rho'').
RatInterval embed_interval(const Coords& c, const RatInterval& root);

// Exact signature; refines the field's base intervals locally until every
// sign resolves. Throws std::domain_error on zero input.
Signature signature(const Elem& e);

// Exact sign of sigma_i(e) - c for rational c: -1, 0 or +1. Equality is
// possible only when e is the rational constant c itself.
int embed_compare(const Elem& e, int i, const Rat& c);

// Exact sign of sigma_i(e); never 0 unless e = 0 (then throws).
int embed_sign(const Elem& e, int i);

// Integer coordinate box guaranteed to contain every element whose i-th
// embedding lies in [lo[i], hi[i]] for all i. Inverts the power-basis
// embedding matrix in interval arithmetic (dividing by the exact integer
// determinant a^2+3a+9) and rounds outward.
struct CoordBox {
  std::array<Int, 3> lo, hi;
};
CoordBox coordinate_box(const Field& f, const std::array<Rat, 3>& lo,
                        const std::array<Rat, 3>& hi);

}  // namespace pythcubic
