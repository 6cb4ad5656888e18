#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "stackvc/rational.hpp"

namespace stackvc {

// A game instance is a path v_1..v_n whose vertices either carry a fixed
// nonnegative weight or are priceable by the leader. No two priceable
// vertices are adjacent. Positions and priceable ordinals are 1-based.

enum class VertexKind : std::uint8_t { Fixed, Priceable };

struct Vertex {
  VertexKind kind = VertexKind::Fixed;
  Rational weight;                    // meaningful iff kind == Fixed
  std::int32_t priceable_index = 0;   // 1..k, meaningful iff kind == Priceable

  static Vertex fixed(Rational w) {
    return Vertex{VertexKind::Fixed, std::move(w), 0};
  }
  static Vertex priceable() { return Vertex{VertexKind::Priceable, Rational(0), 0}; }
};

// Bipartition class of a path vertex: parity of its distance to v_1.
// Adjacent vertices always lie on opposite sides.
enum class Side : std::uint8_t { Even, Odd };

class PathInstance {
 public:
  // Validates and takes ownership; assigns priceable indices left to right.
  explicit PathInstance(std::vector<Vertex> vertices);

  int n() const { return static_cast<int>(vertices_.size()); }
  int k() const { return static_cast<int>(priceable_positions_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& at(int position) const;  // 1-based, range-checked

  // Position of the i-th priceable vertex, 1-based ordinal.
  int priceable_position(int ordinal) const;
  const std::vector<std::int32_t>& priceable_positions() const {
    return priceable_positions_;
  }

  Rational total_fixed_weight() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::int32_t> priceable_positions_;
};

// Leader prices, indexed by priceable ordinal (prices[j-1] is p_j's price).
using PriceVector = std::vector<Rational>;

// A fully weighted path: fixed weights plus substituted prices, with flags
// marking the priceable positions for revenue accounting.
struct WeightedPath {
  std::vector<Rational> weights;        // weights[pos-1]
  std::vector<std::uint8_t> priceable;  // priceable[pos-1] != 0 iff priced

  int n() const { return static_cast<int>(weights.size()); }
};

struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

// Line format, one vertex per line, top-to-bottom = left-to-right:
//   F <weight>   fixed vertex, weight a nonnegative decimal or a/b rational
//   P            priceable vertex
// '#'-prefixed lines and blank lines are ignored.
PathInstance parse_instance(const std::string& text);
std::string serialize_instance(const PathInstance& inst);

Side side_of_position(int position);
Side side_of(const PathInstance& inst, int position);
bool same_side(int position_a, int position_b);

// Substitutes prices into the path; fixed vertices keep their weight and
// priceable vertex p_j weighs prices[j-1].
WeightedPath with_prices(const PathInstance& inst, const PriceVector& prices);

// Deterministic for a fixed seed. Priceable positions are drawn uniformly
// among all placements of k pairwise non-adjacent positions; fixed weights
// are uniform integers in [0, max_weight].
PathInstance generate_random(int n, int k, std::int64_t max_weight,
                             std::uint64_t seed);

// Stateless seed mixer used to derive independent per-instance seeds from a
// base seed and an index, so batched runs are order-independent.
std::uint64_t splitmix64(std::uint64_t x);

}  // namespace stackvc
