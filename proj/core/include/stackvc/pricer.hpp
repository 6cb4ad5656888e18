#pragma once

#include <stdexcept>
#include <vector>

#include "stackvc/follower.hpp"
#include "stackvc/instance.hpp"
#include "stackvc/planner.hpp"

namespace stackvc {

// The pipeline promised a revenue the follower then failed to pay. Always a
// bug, never an input problem.
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Solution {
  PriceVector prices;
  Rational revenue;
  CoverResult cover;
  OptionPlan plan;
  std::vector<int> excluded;  // priceable ordinals absent from the cover
};

// Turns a plan into prices by a second forward pass: bounds are recomputed
// under the true prices fixed so far (benchmark-era cuts are discarded),
// then p_i is priced at its lower bound for O2 and at its upper bound
// otherwise. Exclusion prices stay finite: the upper bound already keeps
// the vertex out of the follower's chosen cover.
PriceVector resolve_prices(const PathInstance& inst, const OptionPlan& plan);

// Full pipeline: benchmark bounds, option comparison, price resolution,
// then one follower run that must reproduce the planned revenue exactly.
Solution solve(const PathInstance& inst);

}  // namespace stackvc
