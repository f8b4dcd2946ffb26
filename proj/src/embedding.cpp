#include "pythcubic/embedding.hpp"

#include <stdexcept>

namespace pythcubic {

std::string Signature::to_string() const {
  std::string r = "(";
  for (int i = 0; i < 3; ++i) {
    r += (s[i] > 0 ? '+' : '-');
    if (i < 2) r += ',';
  }
  r += ')';
  return r;
}

RatInterval embed_interval(const Coords& c, const RatInterval& root) {
  RatInterval r = root.square().scaled(Rat(c[2]));
  r = r + root.scaled(Rat(c[1]));
  return r + Rat(c[0]);
}

namespace {

constexpr int kMaxRefinements = 256;

// Runs fn over successively refined isolating intervals until it reports a
// decision. fn returns true when done.
template <typename Fn>
void with_refinement(const Field& f, Fn&& fn) {
  EmbeddingIntervals ivs = f.base_intervals();
  Rat width = pow2_rat(-20);
  for (int round = 0; round < kMaxRefinements; ++round) {
    if (fn(ivs)) return;
    width /= 2;
    ivs.refine_to(width);
  }
  throw std::logic_error("embedding: sign failed to resolve (should be impossible)");
}

}  // namespace

Signature signature(const Elem& e) {
  if (e.is_zero()) throw std::domain_error("signature: zero element");
  Signature sig;
  with_refinement(*e.field(), [&](const EmbeddingIntervals& ivs) {
    bool done = true;
    for (int i = 0; i < 3; ++i) {
      if (sig.s[i] != 0) continue;
      sig.s[i] = embed_interval(e.coords(), ivs.iv[i]).sign();
      if (sig.s[i] == 0) done = false;
    }
    return done;
  });
  return sig;
}

int embed_compare(const Elem& e, int i, const Rat& c) {
  if (e.is_rational()) {
    Rat v(e.x());
    if (v < c) return -1;
    if (v > c) return 1;
    return 0;
  }
  // sigma_i(e) is irrational, so it differs from c and the loop resolves.
  int result = 0;
  with_refinement(*e.field(), [&](const EmbeddingIntervals& ivs) {
    RatInterval iv = embed_interval(e.coords(), ivs.iv[i]);
    if (iv.lo > c) {
      result = 1;
      return true;
    }
    if (iv.hi < c) {
      result = -1;
      return true;
    }
    return false;
  });
  return result;
}

int embed_sign(const Elem& e, int i) {
  if (e.is_zero()) throw std::domain_error("embed_sign: zero element");
  return embed_compare(e, i, Rat(0));
}

CoordBox coordinate_box(const Field& f, const std::array<Rat, 3>& lo,
                        const std::array<Rat, 3>& hi) {
  EmbeddingIntervals ivs = f.base_intervals();

  // Embedding matrix rows V[i] = (1, r_i, r_i^2) as interval enclosures.
  RatInterval one = RatInterval::point(Rat(1));
  std::array<std::array<RatInterval, 3>, 3> V;
  for (int i = 0; i < 3; ++i) {
    V[i] = {one, ivs.iv[i], ivs.iv[i].square()};
  }

  // V^{-1}[j][i] = cofactor(i,j) / det(V). The determinant is the
  // Vandermonde (rho'-rho)(rho''-rho)(rho''-rho'), which for this ordering
  // equals +sqrt(disc) = a^2+3a+9 exactly; assert the enclosure agrees.
  auto minor_det = [&](int i, int j) {
    int r0 = (i == 0) ? 1 : 0, r1 = (i == 2) ? 1 : 2;
    int c0 = (j == 0) ? 1 : 0, c1 = (j == 2) ? 1 : 2;
    return V[r0][c0] * V[r1][c1] - V[r0][c1] * V[r1][c0];
  };
  RatInterval det = V[0][0] * minor_det(0, 0) - V[0][1] * minor_det(0, 1) +
                    V[0][2] * minor_det(0, 2);
  Rat det_exact(f.discriminant_sqrt());
  if (!det.contains(det_exact))
    throw std::logic_error("coordinate_box: determinant enclosure mismatch");

  CoordBox box;
  for (int j = 0; j < 3; ++j) {
    RatInterval acc = RatInterval::point(Rat(0));
    for (int i = 0; i < 3; ++i) {
      int sgn = ((i + j) % 2 == 0) ? 1 : -1;
      RatInterval inv_ji = minor_det(i, j).scaled(Rat(sgn));
      acc = acc + inv_ji * RatInterval(lo[i], hi[i]);
    }
    // Divide by the exact determinant and round outward.
    box.lo[j] = floor_rat(acc.lo / det_exact);
    box.hi[j] = ceil_rat(acc.hi / det_exact);
  }
  return box;
}

}  // namespace pythcubic
