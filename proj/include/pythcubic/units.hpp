#pragma once

#include <vector>

#include "pythcubic/element.hpp"
#include "pythcubic/embedding.hpp"

namespace pythcubic {

// Exponent pair for the unit rho^k * sigma(rho)^l. The pair (rho, sigma(rho))
// is the fundamental system, so together with signs these exponents reach
// every unit of the order; (0,0) is 1.
struct UnitExponent {
  long k = 0;
  long l = 0;

  bool operator==(const UnitExponent&) const = default;
  auto operator<=>(const UnitExponent&) const = default;
};

// The unit rho^k * sigma(rho)^l as an element; negative exponents go
// through exact unit inversion.
Elem unit_element(const FieldPtr& f, const UnitExponent& u);

// All (k,l) with |k|,|l| <= box whose unit has every conjugate of absolute
// value <= bound. Exact interval comparisons; sorted by (k,l).
std::vector<UnitExponent> units_in_conjugate_box(const FieldPtr& f, const Rat& bound,
                                                 long box);

// All (k,l) with |k|,|l| <= box whose unit is totally positive (exactly the
// even exponent pairs) and totally below the target. Sorted by (k,l).
std::vector<UnitExponent> totally_positive_units_below(const FieldPtr& f,
                                                       const Elem& target, long box);

}  // namespace pythcubic
