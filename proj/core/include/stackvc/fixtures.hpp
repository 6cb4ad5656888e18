#pragma once

#include <optional>
#include <string_view>

#include "stackvc/instance.hpp"

namespace stackvc {

// Built-in worked example: nine vertices, two priceable vertices on
// opposite sides. Optimal revenue 13 at prices (13, 11); reference values
// are pinned in the test suite.
PathInstance figure1();

std::optional<PathInstance> fixture_by_name(std::string_view name);

}  // namespace stackvc
