#include "stackvc/json_io.hpp"

namespace stackvc {

using nlohmann::json;

json instance_to_json(const PathInstance& inst) {
  json vertices = json::array();
  for (const Vertex& v : inst.vertices()) {
    if (v.kind == VertexKind::Priceable)
      vertices.push_back(json{{"kind", "priceable"}});
    else
      vertices.push_back(json{{"kind", "fixed"}, {"weight", format_rational(v.weight)}});
  }
  return json{{"vertices", std::move(vertices)}};
}

PathInstance instance_from_json(const json& j) {
  std::vector<Vertex> vertices;
  for (const json& jv : j.at("vertices")) {
    std::string kind = jv.at("kind").get<std::string>();
    if (kind == "priceable") {
      vertices.push_back(Vertex::priceable());
    } else if (kind == "fixed") {
      vertices.push_back(
          Vertex::fixed(parse_rational(jv.at("weight").get<std::string>())));
    } else {
      throw std::invalid_argument("unknown vertex kind: '" + kind + "'");
    }
  }
  return PathInstance(std::move(vertices));
}

json cover_to_json(const CoverResult& cover) {
  return json{{"cover", cover.cover},
              {"cover_weight", format_rational(cover.total_weight)},
              {"revenue", format_rational(cover.leader_revenue)}};
}

json solution_to_json(const Solution& solution) {
  json prices = json::array();
  for (const Rational& p : solution.prices) prices.push_back(format_rational(p));
  json plan = json::array();
  for (OptionChoice choice : solution.plan) plan.push_back(option_name(choice));
  return json{{"prices", std::move(prices)},
              {"revenue", format_rational(solution.revenue)},
              {"cover", solution.cover.cover},
              {"cover_weight", format_rational(solution.cover.total_weight)},
              {"plan", std::move(plan)}};
}

}  // namespace stackvc
