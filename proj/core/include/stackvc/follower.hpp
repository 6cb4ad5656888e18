#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stackvc/instance.hpp"
#include "stackvc/rational.hpp"

namespace stackvc {

// The follower buys a minimum-weight vertex cover of the weighted path and,
// among all minimum covers, one maximizing the leader's revenue (the sum of
// weights at priceable positions in the cover).
struct CoverResult {
  std::vector<int> cover;  // 1-based positions, ascending
  Rational total_weight;
  Rational leader_revenue;
};

namespace detail {

// One DP pass over the path. State per position and in/out status is the
// pair (weight, -revenue), minimized lexicographically; on exact ties the
// cover excluding the vertex under comparison wins, which makes the output
// deterministic. W must be an exact ordered field or integer type.
template <typename W>
struct MinCoverOutcome {
  W weight;
  W revenue;
  std::vector<int> cover;  // filled only when reconstruct = true
};

template <typename W>
MinCoverOutcome<W> min_cover_path(const std::vector<W>& weights,
                                  const std::vector<std::uint8_t>& priceable,
                                  bool reconstruct) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) throw std::invalid_argument("empty path");

  struct State {
    W w;
    W nr;  // negated revenue, so lexicographic min favors the leader
  };
  auto less = [](const State& a, const State& b) {
    return a.w < b.w || (a.w == b.w && a.nr < b.nr);
  };

  auto cost = [&](int pos) {
    State c{weights[pos - 1], W(0)};
    if (priceable[pos - 1]) c.nr = -weights[pos - 1];
    return c;
  };

  // backpointer[pos]: predecessor status chosen when pos is in the cover.
  std::vector<std::uint8_t> came_from_in(reconstruct ? n + 1 : 0, 0);

  State c1 = cost(1);
  State in{c1.w, c1.nr};
  State out{W(0), W(0)};
  for (int pos = 2; pos <= n; ++pos) {
    // Taking pos: predecessor free; exact tie prefers excluding pos-1.
    State base = less(in, out) ? in : out;
    bool from_in = less(in, out);
    State c = cost(pos);
    State next_in{base.w + c.w, base.nr + c.nr};
    // Skipping pos: the edge (pos-1, pos) forces pos-1 into the cover.
    State next_out = in;
    if (reconstruct) came_from_in[pos] = from_in ? 1 : 0;
    in = next_in;
    out = next_out;
  }

  bool take_last = less(in, out);  // tie prefers excluding v_n
  State best = take_last ? in : out;
  MinCoverOutcome<W> result{best.w, -best.nr, {}};
  if (!reconstruct) return result;

  std::vector<int> cover;
  bool current_in = take_last;
  for (int pos = n; pos >= 1; --pos) {
    if (current_in) {
      cover.push_back(pos);
      current_in = came_from_in[pos] != 0;
    } else {
      current_in = true;  // predecessor of an excluded vertex is included
    }
  }
  std::reverse(cover.begin(), cover.end());
  result.cover = std::move(cover);
  return result;
}

}  // namespace detail

// Leader-favoring minimum-weight vertex cover. A single vertex has no edges,
// so n = 1 yields the empty cover.
CoverResult min_cover(const WeightedPath& path);

// All covers attaining the minimum weight, as ascending position lists in
// ascending lexicographic order. Exhaustive; n must not exceed the limit.
std::vector<std::vector<int>> enumerate_min_covers(
    const std::vector<Rational>& weights, int limit = 20);

// Cover condition at a position: the prefix weight of the position's side
// is at most (strictly below, if strict) the prefix weight of the other side.
bool satisfies_cover_condition(const WeightedPath& path, int position,
                               bool strict);

}  // namespace stackvc
