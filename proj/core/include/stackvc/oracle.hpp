#pragma once

#include <cstdint>

#include "stackvc/bounds.hpp"
#include "stackvc/instance.hpp"

namespace stackvc {

// Brute-force ground truth at desk scale. The oracle shares only the
// instance and follower primitives with the solver; it never calls into the
// bounds, planner, or pricer machinery it is meant to arbitrate.

struct GridSpec {
  Rational max_price;
  Rational step = 1;

  // Default grid: integer prices 0..total fixed weight + 1. Any higher
  // price forces exclusion, so larger grids add nothing.
  static GridSpec for_instance(const PathInstance& inst);

  // Number of points in {0, step, 2*step, ...} not exceeding max_price.
  std::uint64_t point_count() const;
};

struct OracleSolution {
  Rational revenue;
  PriceVector witness;  // lexicographically smallest argmax
  std::uint64_t follower_calls = 0;
};

// Exhausts all grid price vectors, budgeted in follower calls.
OracleSolution oracle_solve(const PathInstance& inst, const GridSpec& grid,
                            std::uint64_t budget = 10'000'000);

// Definitional bounds for p_i under the given prefix prices:
//   lower = max grid price kept in some minimum cover for EVERY grid suffix
//   upper = max grid price kept in some minimum cover for SOME grid suffix
// Membership is tested by weight: p_i lies in some minimum cover iff the
// cheapest cover forced to contain it matches the unrestricted minimum.
Bounds oracle_bounds(const PathInstance& inst, const PriceVector& prefix, int i,
                     const GridSpec& grid, std::uint64_t budget = 10'000'000);

// True iff refining the default integer grid by the given factor does not
// improve oracle revenue. Guards the integrality assumption behind step-1
// verification batteries.
bool grid_sufficiency_check(const PathInstance& inst, int refinement,
                            std::uint64_t budget = 10'000'000);

}  // namespace stackvc
