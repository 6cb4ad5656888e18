#pragma once

#include <nlohmann/json.hpp>

#include "stackvc/instance.hpp"
#include "stackvc/pricer.hpp"

namespace stackvc {

// Rationals cross the JSON boundary as exact strings ("13", "7/2"); numbers
// would silently round.

nlohmann::json instance_to_json(const PathInstance& inst);
PathInstance instance_from_json(const nlohmann::json& j);

nlohmann::json cover_to_json(const CoverResult& cover);

// Schema: { "prices": [rational strings], "revenue": rational string,
//           "cover": [1-based positions], "cover_weight": rational string,
//           "plan": [option names] }
nlohmann::json solution_to_json(const Solution& solution);

}  // namespace stackvc
