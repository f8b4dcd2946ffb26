#include "pythcubic/element.hpp"

#include <sstream>

namespace pythcubic {

CharData char_data_coords(const Field& f, const Coords& c) {
  const Int& a = f.a();
  const Int& x = c[0];
  const Int& y = c[1];
  const Int& z = c[2];
  Int a2 = a * a;

  // Multiplication-by-element matrix on the basis {1, rho, rho^2}.
  Int m00 = x;
  Int m01 = z;
  Int m02 = y + a * z;
  Int m10 = y;
  Int m11 = x + (a + 3) * z;
  Int m12 = (a + 3) * y + (a2 + 3 * a + 1) * z;
  Int m20 = z;
  Int m21 = y + a * z;
  Int m22 = x + a * y + (a2 + a + 3) * z;

  CharData cd;
  cd.trace = m00 + m11 + m22;
  // Sum of principal 2x2 minors.
  cd.s2 = (m00 * m11 - m01 * m10) + (m00 * m22 - m02 * m20) + (m11 * m22 - m12 * m21);
  cd.norm = m00 * (m11 * m22 - m12 * m21) - m01 * (m10 * m22 - m12 * m20) +
            m02 * (m10 * m21 - m11 * m20);
  return cd;
}

Int norm_of(const Elem& e) { return char_data(e).norm; }

bool is_totally_positive_coords(const Field& f, const Coords& c) {
  if (c[0] == 0 && c[1] == 0 && c[2] == 0) return false;
  CharData cd = char_data_coords(f, c);
  return sign_of(cd.trace) > 0 && sign_of(cd.s2) > 0 && sign_of(cd.norm) > 0;
}

bool totally_geq(const Elem& e1, const Elem& e2) {
  Elem d = e1 - e2;
  return d.is_zero() || is_totally_positive(d);
}

Elem galois_image(const Elem& e) {
  const Field& f = *e.field();
  const Coords& g = f.galois_rho();
  const Coords& g2 = f.galois_rho_sq();
  Coords r;
  for (int i = 0; i < 3; ++i) r[i] = e.y() * g[i] + e.z() * g2[i];
  r[0] += e.x();
  return {e.field(), std::move(r)};
}

Elem invert_unit(const Elem& e) {
  Elem conj1 = galois_image(e);
  Elem conj2 = galois_image(conj1);
  Elem adj = conj1 * conj2;  // e * adj = norm(e)
  Int n = norm_of(e);
  if (n == 1) return adj;
  if (n == -1) return -adj;
  throw std::domain_error("invert_unit: element is not a unit");
}

Elem pow_elem(const Elem& e, unsigned long n) {
  Elem r = Elem::one(e.field());
  Elem base = e;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

std::string Elem::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* names[3] = {"", "r", "r^2"};
  for (int i = 0; i < 3; ++i) {
    if (c_[i] == 0) continue;
    Int v = c_[i];
    if (!first) {
      os << (sign_of(v) < 0 ? " - " : " + ");
      v = abs(v);
    }
    first = false;
    if (i == 0) {
      os << v.get_str();
    } else {
      if (v == -1)
        os << "-" << names[i];
      else if (v == 1)
        os << names[i];
      else
        os << v.get_str() << "*" << names[i];
    }
  }
  return os.str();
}

}  // namespace pythcubic
