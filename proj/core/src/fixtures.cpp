#include "stackvc/fixtures.hpp"

namespace stackvc {

PathInstance figure1() {
  return parse_instance("F 1\nF 5\nP\nF 9\nF 8\nP\nF 3\nF 2\nF 6\n");
}

std::optional<PathInstance> fixture_by_name(std::string_view name) {
  if (name == "figure1") return figure1();
  return std::nullopt;
}

}  // namespace stackvc
