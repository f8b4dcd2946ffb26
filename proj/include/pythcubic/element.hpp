#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "pythcubic/field.hpp"

namespace pythcubic {

// (trace, s2, norm) of an element: the characteristic polynomial is
// t^3 - trace t^2 + s2 t - norm. All three conjugates are real, so the
// element is totally positive exactly when all three values are positive.
struct CharData {
  Int trace;
  Int s2;
  Int norm;

  bool operator==(const CharData&) const = default;
};

// An element x + y rho + z rho^2 of Z[rho]. Immutable value type.
class Elem {
 public:
  Elem(FieldPtr field, Int x, Int y, Int z)
      : field_(std::move(field)), c_{std::move(x), std::move(y), std::move(z)} {}
  Elem(FieldPtr field, Coords c) : field_(std::move(field)), c_(std::move(c)) {}

  static Elem zero(const FieldPtr& f) { return {f, 0, 0, 0}; }
  static Elem one(const FieldPtr& f) { return {f, 1, 0, 0}; }
  static Elem from_int(const FieldPtr& f, const Int& n) { return {f, n, 0, 0}; }
  static Elem rho(const FieldPtr& f) { return {f, 0, 1, 0}; }
  static Elem rho_sq(const FieldPtr& f) { return {f, 0, 0, 1}; }

  const FieldPtr& field() const { return field_; }
  const Coords& coords() const { return c_; }
  const Int& x() const { return c_[0]; }
  const Int& y() const { return c_[1]; }
  const Int& z() const { return c_[2]; }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  // An element is rational iff the rho and rho^2 coordinates vanish
  // (1, rho, rho^2 are linearly independent over Q).
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }

  Elem operator+(const Elem& o) const {
    check_same_field(o);
    return {field_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]};
  }
  Elem operator-(const Elem& o) const {
    check_same_field(o);
    return {field_, c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]};
  }
  Elem operator-() const { return {field_, -c_[0], -c_[1], -c_[2]}; }
  Elem operator*(const Elem& o) const {
    check_same_field(o);
    return {field_, mul_coords(field_->a(), c_, o.c_)};
  }
  Elem operator*(const Int& n) const { return {field_, c_[0] * n, c_[1] * n, c_[2] * n}; }

  Elem square() const { return *this * *this; }

  bool operator==(const Elem& o) const { return field_->a() == o.field_->a() && c_ == o.c_; }
  // Lexicographic coordinate order; used for canonical sorting only.
  std::strong_ordering operator<=>(const Elem& o) const {
    for (int i = 0; i < 3; ++i) {
      int c = cmp(c_[i], o.c_[i]);
      if (c != 0) return c <=> 0;
    }
    return std::strong_ordering::equal;
  }

  // "x + y*r + z*r^2" with zero terms dropped.
  std::string to_string() const;

 private:
  void check_same_field(const Elem& o) const {
    if (field_->a() != o.field_->a())
      throw std::invalid_argument("Elem: operands from different fields");
  }

  FieldPtr field_;
  Coords c_;
};

CharData char_data_coords(const Field& f, const Coords& c);
inline CharData char_data(const Elem& e) { return char_data_coords(*e.field(), e.coords()); }

inline Int trace_of(const Elem& e) {
  const Int& a = e.field()->a();
  return 3 * e.x() + a * e.y() + (a * a + 2 * a + 6) * e.z();
}
Int norm_of(const Elem& e);

bool is_totally_positive_coords(const Field& f, const Coords& c);
inline bool is_totally_positive(const Elem& e) {
  return is_totally_positive_coords(*e.field(), e.coords());
}

// e1 >= e2 in the total order: equal, or e1 - e2 totally positive.
bool totally_geq(const Elem& e1, const Elem& e2);

// The order automorphism rho -> sigma(rho); applying it three times is the
// identity. Norm, trace and s2 are invariant under it.
Elem galois_image(const Elem& e);

// Inverse of a unit (|norm| = 1); throws std::domain_error otherwise.
Elem invert_unit(const Elem& e);

// e^n for n >= 0 by repeated multiplication.
Elem pow_elem(const Elem& e, unsigned long n);

}  // namespace pythcubic
