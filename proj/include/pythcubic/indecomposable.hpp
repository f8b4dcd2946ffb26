#pragma once

#include <vector>

#include "pythcubic/element.hpp"
#include "pythcubic/embedding.hpp"
#include "pythcubic/units.hpp"

namespace pythcubic {

// Index (v, W) into the reduced triangle family; the corresponding element
// is alpha(v, W) = -v - (v(a+2)+1+W) rho + (v+1) rho^2.
struct TrianglePoint {
  Int v;
  Int W;

  bool operator==(const TrianglePoint&) const = default;
  std::strong_ordering operator<=>(const TrianglePoint& o) const {
    if (int c = cmp(v, o.v); c != 0) return c <=> 0;
    return cmp(W, o.W) <=> 0;
  }
};

Elem triangle_element(const FieldPtr& f, const TrianglePoint& p);

// The full triangle family: -v - w rho + (v+1) rho^2 with 0 <= v <= a and
// v(a+2)+1 <= w <= (v+1)(a+1). Empty for a = -1.
std::vector<Elem> triangle_family(const FieldPtr& f);

// Representatives of all totally positive indecomposables up to totally
// positive unit multiples: 1, 1 + rho + rho^2, and the triangle family.
std::vector<Elem> indecomposable_representatives(const FieldPtr& f);

// The reduced triangle index set (a >= 0): with a = 3A + a0,
//   a0 in {1,2}: 0 <= v <= A   and v <= W <= a-2v-1
//   a0 = 0:      0 <= v <= A-1 and v <= W <= a-2v-1, plus (A, A).
// Every point maps into the full triangle via w = v(a+2)+1+W.
std::vector<TrianglePoint> reduced_triangle(const FieldPtr& f);

// All indecomposables (every signature) whose square is totally below
// target: beta = +-rho^k sigma(rho)^l * alpha over representatives,
// |k|,|l| <= box. Includes units (alpha = 1). Sorted, deduplicated.
std::vector<Elem> indecomposables_below(const FieldPtr& f, const Elem& target, long box);

// The subset of the above with the given signature.
std::vector<Elem> sigma_indecomposables_below(const FieldPtr& f, const Signature& sig,
                                              const Elem& target, long box);

// Closure of the above under same-signature sums, still filtered by
// omega^2 totally below target. This is the full set of elements of
// signature sig whose square is below target, granted the representative
// list is complete. Sorted, deduplicated.
std::vector<Elem> sigma_elements_below(const FieldPtr& f, const Signature& sig,
                                       const Elem& target, long box);

// Every totally positive element with trace <= bound, by complete box
// enumeration (outward-rounded coordinate box over the embedding cube).
// Sorted.
std::vector<Elem> totally_positive_up_to_trace(const FieldPtr& f, const Int& bound);

// Independent oracle: all totally positive elements with trace <= bound
// admitting no splitting into two totally positive parts. Intended for
// small a. Sorted.
std::vector<Elem> brute_force_indecomposables(const FieldPtr& f, const Int& bound);

// Totally positive unit multiples of the representatives with trace <=
// bound (unit exponents |k|,|l| <= box). Sorted, deduplicated.
std::vector<Elem> unit_orbit_up_to_trace(const FieldPtr& f,
                                         const std::vector<Elem>& reps, const Int& bound,
                                         long box);

}  // namespace pythcubic
