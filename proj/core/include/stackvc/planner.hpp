#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stackvc/bounds.hpp"
#include "stackvc/instance.hpp"

namespace stackvc {

// Bounds of every priceable vertex computed under benchmark prices: each
// earlier vertex priced at its own lower bound. This makes per-vertex
// revenues comparable before any real price is chosen.
struct BenchmarkTable {
  std::vector<Bounds> bounds;              // bounds[ord-1]
  std::vector<std::uint8_t> same_side_next;  // entry i-1: p_{i+1} on p_i's side
};

BenchmarkTable benchmark_bounds(const PathInstance& inst);

// Per-vertex choice of how the follower's cover should treat p_i:
//   O1  renounce p_i, widening the next vertex's bounds
//   O2  keep p_i in the cover at its lower bound
//   O3  keep p_i at its upper bound, sacrificing p_{i+1}
// ForcedByPredecessor marks the vertex consumed by an O3 at i-1.
enum class OptionChoice : std::uint8_t { O1, O2, O3, ForcedByPredecessor };

using OptionPlan = std::vector<OptionChoice>;

const char* option_name(OptionChoice choice);

// Benchmark revenues of the options at one vertex; disengaged optional is
// the -infinity sentinel for options unavailable in the current regime.
// When p_{i+1} lies on p_i's side only O2 is live; at i = k likewise.
struct OptionRevenues {
  std::optional<Rational> o1;
  std::optional<Rational> o2;
  std::optional<Rational> o3;
};

// Single-track appraisal of the options at vertex i from scalar suffix
// maxima r_next = R[i+1] and r_next2 = R[i+2] (both 0 beyond k). It prices
// O1's boost and O3's sacrifice as flat +/- width adjustments on the suffix
// value, which assumes the suffix optimum moves one-for-one with shifts of
// p_{i+1}'s bounds. That assumption fails when the suffix argmax renounces
// its first vertex, so this appraisal can err at i <= k-2 (both directions);
// revenue_table uses the exact two-track recursion below instead. Kept as a
// desk-checkable reference and display helper.
OptionRevenues option_revenues(const BenchmarkTable& table, int i,
                               const Rational& r_next, const Rational& r_next2);

// Exact suffix values. A prefix that prices p_j at an offset from its own
// resolved bounds shifts both of p_{j+1}'s bounds by the same signed amount,
// and equal offsets yield identical downstream bounds; hence the best
// revenue from p_i..p_k depends on the whole prefix only through the shift
// s of p_i's bounds, as V_i(s) = max(A_i, B_i + s): renouncing p_i (O1)
// yields a value independent of s, while selling p_i (O2 at its lower
// bound, O3 at its upper) collects s on top. R[i] stores V_i(0), so R[1] is
// the exact optimum; per_vertex stores each live option's contribution to
// V_i(0) (O1 carries no +s term, O2/O3 move one-for-one with s). R is
// 1-based with two zero entries past k so R[i+1] and R[i+2] are always
// addressable.
struct RevenueTable {
  std::vector<Rational> R;
  std::vector<OptionRevenues> per_vertex;

  const Rational& r(int i) const { return R[i]; }
};

RevenueTable revenue_table(const BenchmarkTable& table);

// One revenue-maximizing plan. Option ties break toward the lower option
// index; an O3 at i forces ForcedByPredecessor at i+1.
OptionPlan compare_options(const PathInstance& inst, const BenchmarkTable& table);

}  // namespace stackvc
