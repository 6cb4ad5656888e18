#pragma once

#include <array>
#include <optional>
#include <vector>

#include "stackvc/instance.hpp"
#include "stackvc/rational.hpp"

namespace stackvc {

// Price thresholds for one priceable vertex given fixed prefix prices.
// Pricing at or below `lower` keeps the vertex in a minimum cover no matter
// how the suffix is priced; pricing above `upper` excludes it from every
// minimum cover. For the last priceable vertex the two always coincide.
struct Bounds {
  Rational lower;
  Rational upper;
  // Set when the scan stopped early because the running same-side maximum
  // overtook the running other-side minimum.
  std::optional<int> crossing_position;
};

// Scan state at one position: alpha is the running maximum of the gap over
// same-side vertices (starts at 0, clamping the lower bound at a free
// price); beta is the running minimum over other-side vertices (empty means
// no other-side vertex seen yet, the +infinity sentinel). Alpha never
// decreases and beta never increases along a scan.
struct GapState {
  Rational alpha;
  std::optional<Rational> beta;
  int position = 0;
};

// Cursor over the active (uncut) suffix of the path. Positions start()..
// cursor() have been cut-checked under the prices fixed so far; their
// weights are accumulated per bipartition side. Whenever a position
// strictly satisfies the cover condition, the path is cut right after it:
// the cover of the prefix is then forced, and the remainder restarts with
// empty sums. No position in start()..cursor() strictly satisfies the
// cover condition.
class CutContext {
 public:
  CutContext() = default;

  int start() const { return start_; }
  int cursor() const { return cursor_; }
  const PriceVector& prefix_prices() const { return prices_; }

  // Fixes the price of the next unpriced priceable vertex, which must lie
  // beyond the cursor.
  void push_price(const PathInstance& inst, const Rational& price);

  // Cut-scans positions cursor()+1 .. upto. Every priceable vertex in that
  // range must already carry a price. When given, `cuts` collects every
  // position right after which the path was cut.
  void advance_to(const PathInstance& inst, int upto,
                  std::vector<int>* cuts = nullptr);

  // Accumulated weight of one bipartition class over start()..cursor().
  const Rational& side_sum(Side side) const {
    return sums_[side == Side::Odd ? 1 : 0];
  }

 private:
  PriceVector prices_;
  int start_ = 1;
  int cursor_ = 0;
  std::array<Rational, 2> sums_{};
};

// Signed threshold at v for pricing p_i: the weight of the prefix part
// opposite p_i's side minus the weight of p_i's own side, over the active
// suffix up to v, with p_i counted as weight 0 and earlier priceable
// vertices at their fixed prices. A same-side v satisfies the weak cover
// condition iff the price is at most gap(v); an other-side v satisfies it
// strictly iff the price exceeds gap(v).
Rational gap(const CutContext& ctx, const PathInstance& inst, int i, int v);

// Value-returning wrapper around CutContext::advance_to.
CutContext advance_cut(CutContext ctx, const PathInstance& inst, int upto,
                       std::vector<int>* cuts = nullptr);

// Scans v from p_i to the predecessor of p_{i+1} (to v_n for i = k),
// folding gaps into alpha/beta. If alpha overtakes beta at v the bounds
// collapse there: both equal beta when v is on p_i's side, alpha otherwise.
// Otherwise the segment end yields (alpha, beta) for i < k; for i = k both
// bounds equal alpha when v_n is on p_k's side, beta otherwise.
// Requires the context to carry exactly i-1 prefix prices, cut-checked to
// the predecessor of p_i. An optional trace records the per-vertex states.
Bounds compute_bounds(const CutContext& ctx, const PathInstance& inst, int i,
                      std::vector<GapState>* trace = nullptr);

}  // namespace stackvc
