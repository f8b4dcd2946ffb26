#include "pythcubic/indecomposable.hpp"

#include <algorithm>
#include <stdexcept>

namespace pythcubic {

namespace {

void sort_unique(std::vector<Elem>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Elem triangle_element(const FieldPtr& f, const TrianglePoint& p) {
  Int w = p.v * (f->a() + 2) + 1 + p.W;
  return {f, -p.v, -w, p.v + 1};
}

std::vector<Elem> triangle_family(const FieldPtr& f) {
  const Int& a = f->a();
  std::vector<Elem> out;
  for (Int v = 0; v <= a; ++v) {
    Int w_lo = v * (a + 2) + 1;
    Int w_hi = (v + 1) * (a + 1);
    for (Int w = w_lo; w <= w_hi; ++w) out.emplace_back(f, -v, -w, v + 1);
  }
  return out;
}

std::vector<Elem> indecomposable_representatives(const FieldPtr& f) {
  std::vector<Elem> out = triangle_family(f);
  out.push_back(Elem::one(f));
  out.emplace_back(f, 1, 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TrianglePoint> reduced_triangle(const FieldPtr& f) {
  const Int& a = f->a();
  if (a < 0) throw std::invalid_argument("reduced_triangle: needs a >= 0");
  Int A = a / 3;
  Int a0 = a % 3;
  std::vector<TrianglePoint> out;
  Int v_top = (a0 == 0) ? A - 1 : A;
  for (Int v = 0; v <= v_top; ++v) {
    for (Int W = v; W <= a - 2 * v - 1; ++W) out.push_back({v, W});
  }
  if (a0 == 0) out.push_back({A, A});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Representatives whose squared norm does not exceed the target's norm.
// beta^2 totally below target forces N(beta)^2 <= N(target), and unit
// multiples leave |N| unchanged, so this filter is lossless.
std::vector<Elem> reps_with_small_norm(const FieldPtr& f, const Elem& target) {
  Int target_norm = norm_of(target);
  std::vector<Elem> out;
  for (const Elem& rep : indecomposable_representatives(f)) {
    Int n = norm_of(rep);
    if (n * n <= target_norm) out.push_back(rep);
  }
  return out;
}

}  // namespace

// All beta = +-rho^k sigma(rho)^l * rep with beta^2 totally below target.
// Includes the pure units (rep = 1).
std::vector<Elem> indecomposables_below(const FieldPtr& f, const Elem& target,
                                        long box) {
  if (!is_totally_positive(target))
    throw std::domain_error("indecomposables_below: target must be totally positive");
  std::vector<Elem> out;
  std::vector<Elem> reps = reps_with_small_norm(f, target);
  for (long k = -box; k <= box; ++k) {
    for (long l = -box; l <= box; ++l) {
      Elem u = unit_element(f, {k, l});
      for (const Elem& rep : reps) {
        Elem beta = u * rep;
        if (!totally_geq(target, beta.square())) continue;
        out.push_back(beta);
        out.push_back(-beta);
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Elem> sigma_indecomposables_below(const FieldPtr& f, const Signature& sig,
                                              const Elem& target, long box) {
  std::vector<Elem> out;
  for (const Elem& beta : indecomposables_below(f, target, box)) {
    if (signature(beta) == sig) out.push_back(beta);
  }
  return out;
}

std::vector<Elem> sigma_elements_below(const FieldPtr& f, const Signature& sig,
                                       const Elem& target, long box) {
  std::vector<Elem> ground = sigma_indecomposables_below(f, sig, target, box);
  std::vector<Elem> out;

  // Depth-first over multisets of ground elements in nondecreasing index
  // order. Same-signature parts add up with aligned signs, so every
  // conjugate of a partial sum grows in absolute value as parts join;
  // once omega^2 fails to sit below target it fails forever, which makes
  // the cut below exhaustive.
  auto extend = [&](auto&& self, const Elem& sum, size_t from) -> void {
    for (size_t i = from; i < ground.size(); ++i) {
      Elem next = sum + ground[i];
      if (!totally_geq(target, next.square())) continue;
      out.push_back(next);
      self(self, next, i);
    }
  };
  extend(extend, Elem::zero(f), 0);
  sort_unique(out);
  return out;
}

std::vector<Elem> totally_positive_up_to_trace(const FieldPtr& f, const Int& bound) {
  std::vector<Elem> out;
  if (bound < 1) return out;
  Rat top(bound);
  CoordBox box = coordinate_box(*f, {Rat(0), Rat(0), Rat(0)}, {top, top, top});

  const Int& a = f->a();
  Int p2 = a * a + 2 * a + 6;  // trace(rho^2)
  for (Int z = box.lo[2]; z <= box.hi[2]; ++z) {
    for (Int y = box.lo[1]; y <= box.hi[1]; ++y) {
      // 0 < trace = 3x + a y + p2 z <= bound pins down the x range.
      Int rest = a * y + p2 * z;
      Int x_lo;
      mpz_fdiv_q(x_lo.get_mpz_t(), Int(-rest).get_mpz_t(), Int(3).get_mpz_t());
      x_lo += 1;  // strict: trace >= 1
      Int x_hi;
      mpz_fdiv_q(x_hi.get_mpz_t(), Int(bound - rest).get_mpz_t(), Int(3).get_mpz_t());
      x_lo = std::max(x_lo, box.lo[0]);
      x_hi = std::min(x_hi, box.hi[0]);
      for (Int x = x_lo; x <= x_hi; ++x) {
        Coords c{x, y, z};
        if (is_totally_positive_coords(*f, c)) out.emplace_back(f, std::move(c));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> brute_force_indecomposables(const FieldPtr& f, const Int& bound) {
  std::vector<Elem> all = totally_positive_up_to_trace(f, bound);
  // Scan splitting candidates in trace order; a part and its complement
  // are both totally positive, and the smaller-trace part comes first.
  std::vector<Elem> by_trace = all;
  std::stable_sort(by_trace.begin(), by_trace.end(), [](const Elem& p, const Elem& q) {
    return trace_of(p) < trace_of(q);
  });

  std::vector<Elem> out;
  for (const Elem& alpha : all) {
    Int t = trace_of(alpha);
    bool splits = false;
    for (const Elem& part : by_trace) {
      if (2 * trace_of(part) > t) break;
      Elem rest = alpha - part;
      if (is_totally_positive(rest)) {
        splits = true;
        break;
      }
    }
    if (!splits) out.push_back(alpha);
  }
  return out;
}

std::vector<Elem> unit_orbit_up_to_trace(const FieldPtr& f,
                                         const std::vector<Elem>& reps, const Int& bound,
                                         long box) {
  std::vector<Elem> out;
  for (long k = -box; k <= box; ++k) {
    for (long l = -box; l <= box; ++l) {
      Elem u = unit_element(f, {k, l});
      if (!is_totally_positive(u)) continue;
      for (const Elem& rep : reps) {
        Elem e = u * rep;
        if (trace_of(e) <= bound) out.push_back(e);
      }
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace pythcubic
