#include "stackvc/follower.hpp"

#include <bit>

namespace stackvc {

CoverResult min_cover(const WeightedPath& path) {
  for (const Rational& w : path.weights)
    if (w < 0) throw std::invalid_argument("negative weight");
  auto outcome = detail::min_cover_path<Rational>(path.weights, path.priceable,
                                                  /*reconstruct=*/true);
  return CoverResult{std::move(outcome.cover), std::move(outcome.weight),
                     std::move(outcome.revenue)};
}

std::vector<std::vector<int>> enumerate_min_covers(
    const std::vector<Rational>& weights, int limit) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) throw std::invalid_argument("empty path");
  if (n > limit) throw std::invalid_argument("path too long to enumerate");

  const std::uint32_t count = 1u << n;
  const std::uint32_t edge_mask = n >= 2 ? (count >> 1) - 1 : 0;  // bits 0..n-2

  // weight_of[mask] built by the low-bit recurrence: one addition per mask.
  std::vector<Rational> weight_of(count);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    int low = std::countr_zero(mask);
    weight_of[mask] = weight_of[mask & (mask - 1)] + weights[low];
  }

  Rational best;
  bool have_best = false;
  std::vector<std::uint32_t> argmin;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    // Edge (i, i+1) is covered iff bit i or bit i+1 is set.
    if (((mask | (mask >> 1)) & edge_mask) != edge_mask) continue;
    if (!have_best || weight_of[mask] < best) {
      best = weight_of[mask];
      have_best = true;
      argmin.clear();
    }
    if (weight_of[mask] == best) argmin.push_back(mask);
  }

  std::vector<std::vector<int>> covers;
  covers.reserve(argmin.size());
  for (std::uint32_t mask : argmin) {
    std::vector<int> positions;
    for (int pos = 1; pos <= n; ++pos)
      if (mask & (1u << (pos - 1))) positions.push_back(pos);
    covers.push_back(std::move(positions));
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

bool satisfies_cover_condition(const WeightedPath& path, int position,
                               bool strict) {
  if (position < 1 || position > path.n())
    throw std::out_of_range("position out of range");
  Rational same = 0;
  Rational other = 0;
  for (int pos = 1; pos <= position; ++pos) {
    if (same_side(pos, position))
      same += path.weights[pos - 1];
    else
      other += path.weights[pos - 1];
  }
  return strict ? same < other : same <= other;
}

}  // namespace stackvc
