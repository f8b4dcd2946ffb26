#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pythcubic {

// Exact arithmetic backbone. All ring and order computations use
// arbitrary-precision integers; interval endpoints are exact rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Int& n) { return mpz_sgn(n.get_mpz_t()); }
inline int sign_of(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// floor(sqrt(n)), n >= 0
inline Int isqrt_floor(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// num/den in canonical form (the two-argument mpq_class constructor does
// not reduce)
inline Rat rat_frac(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// 2^e as a rational, e may be negative
inline Rat pow2_rat(long e) {
  Rat r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

// A dyadic rational s with s >= sqrt(q), tight to about 2^-24. q >= 0.
inline Rat sqrt_upper_bound(const Rat& q) {
  if (sign_of(q) < 0) throw std::domain_error("sqrt_upper_bound: negative argument");
  constexpr unsigned long kScale = 24;
  Int num = q.get_num(), den = q.get_den();
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), 2 * kScale);
  Int quot = scaled / den;  // floor
  Int root = isqrt_floor(quot) + 1;
  Rat s(root);
  mpz_mul_2exp(s.get_den_mpz_t(), s.get_den_mpz_t(), kScale);
  s.canonicalize();
  return s;
}

inline std::string to_string(const Int& n) { return n.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace pythcubic
