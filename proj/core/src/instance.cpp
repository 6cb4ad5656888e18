#include "stackvc/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace stackvc {

PathInstance::PathInstance(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("empty path");
  for (size_t i = 0; i < vertices_.size(); ++i) {
    Vertex& v = vertices_[i];
    if (v.kind == VertexKind::Fixed) {
      if (v.weight < 0) throw std::invalid_argument("negative weight");
      v.priceable_index = 0;
    } else {
      if (i > 0 && vertices_[i - 1].kind == VertexKind::Priceable)
        throw std::invalid_argument("adjacent priceable vertices");
      v.weight = 0;
      priceable_positions_.push_back(static_cast<std::int32_t>(i + 1));
      v.priceable_index = static_cast<std::int32_t>(priceable_positions_.size());
    }
  }
}

const Vertex& PathInstance::at(int position) const {
  if (position < 1 || position > n())
    throw std::out_of_range("vertex position out of range");
  return vertices_[position - 1];
}

int PathInstance::priceable_position(int ordinal) const {
  if (ordinal < 1 || ordinal > k())
    throw std::out_of_range("priceable ordinal out of range");
  return priceable_positions_[ordinal - 1];
}

Rational PathInstance::total_fixed_weight() const {
  Rational total = 0;
  for (const Vertex& v : vertices_)
    if (v.kind == VertexKind::Fixed) total += v.weight;
  return total;
}

PathInstance parse_instance(const std::string& text) {
  std::vector<Vertex> vertices;
  std::istringstream in(text);
  std::string raw;
  int line_number = 0;
  int previous_priceable_line = 0;
  bool previous_was_priceable = false;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t");
    line = line.substr(first, last - first + 1);
    if (line[0] == '#') continue;

    if (line == "P") {
      if (previous_was_priceable)
        throw ParseError(line_number,
                         "adjacent priceable vertices (previous on line " +
                             std::to_string(previous_priceable_line) + ")");
      vertices.push_back(Vertex::priceable());
      previous_was_priceable = true;
      previous_priceable_line = line_number;
      continue;
    }
    if (line.size() >= 2 && line[0] == 'F' && (line[1] == ' ' || line[1] == '\t')) {
      std::string body = line.substr(2);
      size_t b = body.find_first_not_of(" \t");
      if (b == std::string::npos) throw ParseError(line_number, "missing weight");
      Rational w;
      try {
        w = parse_rational(body.substr(b));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_number, e.what());
      }
      if (w < 0) throw ParseError(line_number, "negative weight");
      vertices.push_back(Vertex::fixed(std::move(w)));
      previous_was_priceable = false;
      continue;
    }
    throw ParseError(line_number, "malformed line: '" + line + "'");
  }
  if (vertices.empty()) throw ParseError(line_number, "no vertices");
  return PathInstance(std::move(vertices));
}

std::string serialize_instance(const PathInstance& inst) {
  std::string out;
  for (const Vertex& v : inst.vertices()) {
    if (v.kind == VertexKind::Priceable)
      out += "P\n";
    else
      out += "F " + format_rational(v.weight) + "\n";
  }
  return out;
}

Side side_of_position(int position) {
  return (position - 1) % 2 == 0 ? Side::Even : Side::Odd;
}

Side side_of(const PathInstance& inst, int position) {
  if (position < 1 || position > inst.n())
    throw std::out_of_range("vertex position out of range");
  return side_of_position(position);
}

bool same_side(int position_a, int position_b) {
  return (position_a - position_b) % 2 == 0;
}

WeightedPath with_prices(const PathInstance& inst, const PriceVector& prices) {
  if (static_cast<int>(prices.size()) != inst.k())
    throw std::invalid_argument("price vector length does not match k");
  for (const Rational& p : prices)
    if (p < 0) throw std::invalid_argument("negative price");
  WeightedPath path;
  path.weights.reserve(inst.n());
  path.priceable.reserve(inst.n());
  for (const Vertex& v : inst.vertices()) {
    if (v.kind == VertexKind::Priceable) {
      path.weights.push_back(prices[v.priceable_index - 1]);
      path.priceable.push_back(1);
    } else {
      path.weights.push_back(v.weight);
      path.priceable.push_back(0);
    }
  }
  return path;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

// Unbiased uniform draw from [0, bound] with a fixed rejection scheme, so
// generated instances are reproducible across standard library versions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound_inclusive) {
  if (bound_inclusive == std::numeric_limits<std::uint64_t>::max()) return rng();
  std::uint64_t range = bound_inclusive + 1;
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % range;
  for (;;) {
    std::uint64_t draw = rng();
    if (draw < limit) return draw % range;
  }
}

}  // namespace

PathInstance generate_random(int n, int k, std::int64_t max_weight,
                             std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");
  int max_k = (n + 1) / 2;
  if (k < 0 || k > max_k)
    throw std::invalid_argument("k exceeds the non-adjacent placement capacity");

  std::mt19937_64 rng(seed);

  // Placements of k non-adjacent positions in 1..n biject with k-subsets of
  // 1..n-k+1 via x_i = y_i + (i-1); the subset is drawn with Floyd's method.
  int m = n - k + 1;
  std::vector<char> chosen(m + 1, 0);
  for (int j = m - k + 1; j <= m; ++j) {
    int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j - 1))) + 1;
    if (chosen[t])
      chosen[j] = 1;
    else
      chosen[t] = 1;
  }
  std::vector<int> positions;
  positions.reserve(k);
  int rank = 0;
  for (int y = 1; y <= m; ++y)
    if (chosen[y]) positions.push_back(y + rank++);

  std::vector<Vertex> vertices;
  vertices.reserve(n);
  size_t next = 0;
  for (int pos = 1; pos <= n; ++pos) {
    if (next < positions.size() && positions[next] == pos) {
      vertices.push_back(Vertex::priceable());
      ++next;
    } else {
      std::uint64_t w = uniform_below(rng, static_cast<std::uint64_t>(max_weight));
      vertices.push_back(Vertex::fixed(Rational(w)));
    }
  }
  return PathInstance(std::move(vertices));
}

}  // namespace stackvc
