#include "pythcubic/units.hpp"

#include <cstdlib>

namespace pythcubic {

namespace {

Elem signed_power(const Elem& base, long e) {
  if (e >= 0) return pow_elem(base, static_cast<unsigned long>(e));
  return pow_elem(invert_unit(base), static_cast<unsigned long>(-e));
}

}  // namespace

Elem unit_element(const FieldPtr& f, const UnitExponent& u) {
  Elem rho = Elem::rho(f);
  Elem rho_prime(f, Coords(f->galois_rho()));
  return signed_power(rho, u.k) * signed_power(rho_prime, u.l);
}

std::vector<UnitExponent> units_in_conjugate_box(const FieldPtr& f, const Rat& bound,
                                                 long box) {
  if (box < 1) throw std::invalid_argument("units_in_conjugate_box: box must be >= 1");
  std::vector<UnitExponent> out;
  for (long k = -box; k <= box; ++k) {
    for (long l = -box; l <= box; ++l) {
      UnitExponent u{k, l};
      Elem e = unit_element(f, u);
      bool inside = true;
      for (int i = 0; i < 3 && inside; ++i) {
        // |sigma_i(e)| <= bound
        inside = embed_compare(e, i, bound) <= 0 && embed_compare(e, i, -bound) >= 0;
      }
      if (inside) out.push_back(u);
    }
  }
  return out;
}

std::vector<UnitExponent> totally_positive_units_below(const FieldPtr& f,
                                                       const Elem& target, long box) {
  std::vector<UnitExponent> out;
  for (long k = -box; k <= box; ++k) {
    for (long l = -box; l <= box; ++l) {
      UnitExponent u{k, l};
      Elem e = unit_element(f, u);
      if (!is_totally_positive(e)) continue;
      if (totally_geq(target, e)) out.push_back(u);
    }
  }
  return out;
}

}  // namespace pythcubic
