#include "pythcubic/sos.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "pythcubic/embedding.hpp"
#include "pythcubic/indecomposable.hpp"

namespace pythcubic {

bool Decomposition::resums_to_target() const {
  Elem sum = Elem::zero(target.field());
  for (const SquareCandidate& p : parts) {
    if (p.root * p.root != p.square) return false;
    sum = sum + p.square;
  }
  return sum == target;
}

namespace {

bool canonical_sign(const Coords& c) {
  for (const Int& v : c) {
    int s = sign_of(v);
    if (s != 0) return s > 0;
  }
  return false;  // zero has no sign
}

std::vector<SquareCandidate> collect_squares(const Elem& target,
                                             const std::vector<Elem>& roots) {
  std::vector<SquareCandidate> out;
  for (const Elem& r : roots) {
    if (r.is_zero()) continue;
    Elem canon = canonical_sign(r.coords()) ? r : -r;
    Elem sq = canon.square();
    if (!totally_geq(target, sq)) continue;
    out.push_back({canon, sq});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<SquareCandidate> squares_below_bruteforce(const Elem& target) {
  if (!is_totally_positive(target))
    throw std::domain_error("squares_below: target must be totally positive");
  const FieldPtr& f = target.field();

  // sqrt upper bounds of the conjugates of the target.
  EmbeddingIntervals ivs = f->base_intervals();
  std::array<Rat, 3> lo, hi;
  for (int i = 0; i < 3; ++i) {
    Rat bound = sqrt_upper_bound(embed_interval(target.coords(), ivs.iv[i]).hi);
    lo[i] = -bound;
    hi[i] = bound;
  }
  CoordBox box = coordinate_box(*f, lo, hi);

  std::vector<Elem> roots;
  for (Int x = box.lo[0]; x <= box.hi[0]; ++x)
    for (Int y = box.lo[1]; y <= box.hi[1]; ++y)
      for (Int z = box.lo[2]; z <= box.hi[2]; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        roots.emplace_back(f, x, y, z);
      }
  return collect_squares(target, roots);
}

std::vector<SquareCandidate> squares_below_structured(const Elem& target, long box) {
  if (!is_totally_positive(target))
    throw std::domain_error("squares_below: target must be totally positive");
  const FieldPtr& f = target.field();

  // Opposite signatures square identically, so the four classes with
  // leading + cover everything.
  static const Signature kClasses[4] = {
      {{1, 1, 1}}, {{1, 1, -1}}, {{1, -1, 1}}, {{1, -1, -1}}};
  std::vector<Elem> roots;
  for (const Signature& sig : kClasses) {
    std::vector<Elem> omegas = sigma_elements_below(f, sig, target, box);
    roots.insert(roots.end(), omegas.begin(), omegas.end());
  }
  return collect_squares(target, roots);
}

namespace {

struct SearchState {
  std::vector<SquareCandidate> cands;  // sorted by decreasing trace
  std::vector<Int> traces;
  std::unordered_set<std::string> memo;
  std::vector<int> path;

  static constexpr size_t kMemoCap = 1 << 22;

  std::string key(const Coords& c, int budget, size_t from) const {
    std::string k = c[0].get_str();
    k += ',';
    k += c[1].get_str();
    k += ',';
    k += c[2].get_str();
    k += ';';
    k += std::to_string(budget);
    k += ';';
    k += std::to_string(from);
    return k;
  }

  // Is residue a sum of at most `budget` squares drawn from cands[from..]?
  // Residue is zero or totally positive on entry.
  bool search(const Elem& residue, int budget, size_t from) {
    if (residue.is_zero()) return true;
    if (budget == 0) return false;
    // Parts from index `from` on have trace <= traces[from]; too little
    // total trace cannot reach the residue.
    if (from >= cands.size()) return false;
    Int t = trace_of(residue);
    if (t > budget * traces[from]) return false;

    // Only failures are memoized: a success unwinds the whole search at
    // once, and a cached success would come back without its path.
    std::string k = key(residue.coords(), budget, from);
    if (memo.contains(k)) return false;

    for (size_t i = from; i < cands.size(); ++i) {
      if (traces[i] > t) continue;  // square alone already too big
      Elem rest = residue - cands[i].square;
      if (!rest.is_zero() && !is_totally_positive(rest)) continue;
      path.push_back(static_cast<int>(i));
      if (search(rest, budget - 1, i)) return true;
      path.pop_back();
    }
    if (memo.size() >= kMemoCap) memo.clear();
    memo.insert(std::move(k));
    return false;
  }
};

}  // namespace

std::optional<LengthResult> pythagoras_length(const Elem& target, int max_m) {
  if (max_m < 0) throw std::invalid_argument("pythagoras_length: max_m must be >= 0");
  if (target.is_zero()) return LengthResult{0, {{}, target}};
  if (!is_totally_positive(target))
    throw std::domain_error("pythagoras_length: target must be totally positive or zero");

  SearchState st;
  st.cands = squares_below_bruteforce(target);
  std::sort(st.cands.begin(), st.cands.end(),
            [](const SquareCandidate& p, const SquareCandidate& q) {
              return trace_of(p.square) > trace_of(q.square);
            });
  st.traces.reserve(st.cands.size());
  for (const SquareCandidate& c : st.cands) st.traces.push_back(trace_of(c.square));

  // Iterative deepening gives the minimal m; reusing the memo across
  // depths would be unsound (entries are depth-relative), so it is reset.
  for (int m = 1; m <= max_m; ++m) {
    st.memo.clear();
    st.path.clear();
    if (st.search(target, m, 0)) {
      Decomposition witness{{}, target};
      for (int idx : st.path) witness.parts.push_back(st.cands[idx]);
      return LengthResult{static_cast<int>(witness.parts.size()), std::move(witness)};
    }
  }
  return std::nullopt;
}

bool is_sum_of_squares(const Elem& target) {
  if (target.is_zero()) return true;
  if (!is_totally_positive(target)) return false;
  Int t = trace_of(target);
  Int cap = (t + 2) / 3;  // every nonzero square has trace >= 3
  if (!cap.fits_sint_p())
    throw std::overflow_error("is_sum_of_squares: trace bound out of range");
  return pythagoras_length(target, static_cast<int>(cap.get_si())).has_value();
}

}  // namespace pythcubic
