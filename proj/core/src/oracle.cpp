#include "stackvc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

#include "stackvc/follower.hpp"

namespace stackvc {

namespace {

// Scaled values above this do not get the int64 engine; sums over desk-scale
// paths then stay far from overflow.
constexpr std::int64_t kScaledLimit = std::int64_t(1) << 40;

template <typename W>
W plain_min_weight(const std::vector<W>& w) {
  const int n = static_cast<int>(w.size());
  W in = w[0];
  W out{};
  for (int pos = 2; pos <= n; ++pos) {
    W next_in = std::min(in, out) + w[pos - 1];
    W next_out = in;
    in = std::move(next_in);
    out = std::move(next_out);
  }
  return std::min(in, out);
}

template <typename W>
W forced_min_weight(const std::vector<W>& w, int forced_pos) {
  const int n = static_cast<int>(w.size());
  std::optional<W> in = w[0];
  std::optional<W> out = W{};
  if (forced_pos == 1) out.reset();
  for (int pos = 2; pos <= n; ++pos) {
    std::optional<W> best;
    if (in && (!out || *in < *out))
      best = in;
    else
      best = out;
    std::optional<W> next_in;
    if (best) next_in = *best + w[pos - 1];
    std::optional<W> next_out = in;
    if (pos == forced_pos) next_out.reset();
    in = std::move(next_in);
    out = std::move(next_out);
  }
  if (in && (!out || *in < *out)) return *in;
  if (!out) throw std::logic_error("forced cover DP lost all states");
  return *out;
}

// p lies in some minimum cover iff forcing it costs nothing extra.
template <typename W>
bool in_some_min_cover(const std::vector<W>& w, int pos) {
  return forced_min_weight(w, pos) == plain_min_weight(w);
}

std::uint64_t pow_capped(std::uint64_t base, int exponent, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (int e = 0; e < exponent; ++e) {
    if (base == 0) return 0;
    if (result > cap / base) return cap + 1;
    result *= base;
  }
  return result;
}

// Everything the engines consume, either as exact rationals or as int64
// values scaled by a common denominator.
template <typename W>
struct EngineInput {
  std::vector<W> weights;  // per position; priceable slots start at 0
  std::vector<std::uint8_t> flags;
  std::vector<int> ppos;  // 1-based positions of p_1..p_k
  std::vector<W> grid;    // ascending price values
};

EngineInput<Rational> rational_input(const PathInstance& inst,
                                     const GridSpec& grid, std::uint64_t points) {
  EngineInput<Rational> input;
  input.weights.reserve(inst.n());
  input.flags.reserve(inst.n());
  for (const Vertex& v : inst.vertices()) {
    input.weights.push_back(v.kind == VertexKind::Fixed ? v.weight : Rational(0));
    input.flags.push_back(v.kind == VertexKind::Priceable ? 1 : 0);
  }
  for (int pos : inst.priceable_positions()) input.ppos.push_back(pos);
  input.grid.reserve(points);
  for (std::uint64_t j = 0; j < points; ++j)
    input.grid.push_back(grid.step * Rational(j));
  return input;
}

// Attempts to clear denominators with one common scale so the int64 engine
// applies. Returns the scale, or nullopt when any value lands too high.
std::optional<BigInt> try_scale(const EngineInput<Rational>& in,
                                const PriceVector& extra,
                                EngineInput<std::int64_t>* out,
                                std::vector<std::int64_t>* extra_out) {
  BigInt common_den = 1;
  auto fold = [&common_den](const Rational& v) {
    common_den = boost::multiprecision::lcm(common_den, denominator(v));
  };
  for (const Rational& v : in.weights) fold(v);
  for (const Rational& v : in.grid) fold(v);
  for (const Rational& v : extra) fold(v);

  auto scale_one = [&common_den](const Rational& v, std::int64_t* scaled) {
    BigInt s = numerator(v) * (common_den / denominator(v));
    if (s < 0 || s > kScaledLimit) return false;
    *scaled = s.convert_to<std::int64_t>();
    return true;
  };
  out->weights.resize(in.weights.size());
  out->grid.resize(in.grid.size());
  extra_out->resize(extra.size());
  for (size_t j = 0; j < in.weights.size(); ++j)
    if (!scale_one(in.weights[j], &out->weights[j])) return std::nullopt;
  for (size_t j = 0; j < in.grid.size(); ++j)
    if (!scale_one(in.grid[j], &out->grid[j])) return std::nullopt;
  for (size_t j = 0; j < extra.size(); ++j)
    if (!scale_one(extra[j], &(*extra_out)[j])) return std::nullopt;
  out->flags = in.flags;
  out->ppos = in.ppos;
  return common_den;
}

template <typename W>
struct ExhaustiveResult {
  W revenue{};
  std::vector<W> witness;
  std::uint64_t calls = 0;
};

// Enumerates all grid assignments in ascending lexicographic order; strict
// improvement keeps the lexicographically smallest argmax.
template <typename W>
ExhaustiveResult<W> exhaustive_solve(EngineInput<W> input) {
  const int k = static_cast<int>(input.ppos.size());
  ExhaustiveResult<W> result;
  std::vector<W> current(k, W{});
  bool have = false;
  auto recurse = [&](auto&& self, int ord) -> void {
    if (ord == k) {
      auto dp = detail::min_cover_path<W>(input.weights, input.flags, false);
      ++result.calls;
      if (!have || dp.revenue > result.revenue) {
        result.revenue = dp.revenue;
        result.witness = current;
        have = true;
      }
      return;
    }
    for (const W& price : input.grid) {
      current[ord] = price;
      input.weights[input.ppos[ord] - 1] = price;
      self(self, ord + 1);
    }
  };
  recurse(recurse, 0);
  return result;
}

struct BoundsAccumulator {
  bool lower_set = false;
  bool upper_set = false;
  Rational lower;
  Rational upper;
};

// Shared body of oracle_bounds: candidate prices ascending, suffixes
// exhausted per candidate.
template <typename W>
void scan_bounds(EngineInput<W> input, const std::vector<W>& prefix, int i,
                 const std::vector<Rational>& grid_as_rational,
                 BoundsAccumulator* acc, std::uint64_t* calls) {
  const int k = static_cast<int>(input.ppos.size());
  for (int j = 0; j < i - 1; ++j)
    input.weights[input.ppos[j] - 1] = prefix[j];
  const int target_pos = input.ppos[i - 1];

  for (size_t c = 0; c < input.grid.size(); ++c) {
    input.weights[target_pos - 1] = input.grid[c];
    bool all_ok = true;
    bool any_ok = false;
    auto recurse = [&](auto&& self, int ord) -> bool {  // false = stop early
      if (ord == k) {
        *calls += 2;
        bool member = in_some_min_cover(input.weights, target_pos);
        all_ok = all_ok && member;
        any_ok = any_ok || member;
        return !(any_ok && !all_ok);  // nothing further can change either flag
      }
      for (const W& price : input.grid) {
        input.weights[input.ppos[ord] - 1] = price;
        if (!self(self, ord + 1)) return false;
      }
      return true;
    };
    recurse(recurse, i);
    if (all_ok) {
      acc->lower = grid_as_rational[c];
      acc->lower_set = true;
    }
    if (any_ok) {
      acc->upper = grid_as_rational[c];
      acc->upper_set = true;
    }
  }
}

}  // namespace

GridSpec GridSpec::for_instance(const PathInstance& inst) {
  return GridSpec{inst.total_fixed_weight() + 1, Rational(1)};
}

std::uint64_t GridSpec::point_count() const {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  if (max_price < 0) return 0;
  Rational q = max_price / step;
  BigInt c = numerator(q) / denominator(q) + 1;
  BigInt cap = std::numeric_limits<std::uint64_t>::max();
  if (c > cap) return std::numeric_limits<std::uint64_t>::max();
  return c.convert_to<std::uint64_t>();
}

OracleSolution oracle_solve(const PathInstance& inst, const GridSpec& grid,
                            std::uint64_t budget) {
  const int k = inst.k();
  const std::uint64_t points = grid.point_count();
  if (points == 0) throw std::invalid_argument("empty price grid");
  if (pow_capped(points, k, budget) > budget)
    throw std::invalid_argument("oracle budget exceeded");

  EngineInput<Rational> input = rational_input(inst, grid, points);

  EngineInput<std::int64_t> scaled;
  std::vector<std::int64_t> none;
  if (auto scale = try_scale(input, {}, &scaled, &none)) {
    ExhaustiveResult<std::int64_t> r = exhaustive_solve(std::move(scaled));
    OracleSolution out;
    out.revenue = Rational(BigInt(r.revenue), *scale);
    out.witness.reserve(r.witness.size());
    for (std::int64_t w : r.witness) out.witness.push_back(Rational(BigInt(w), *scale));
    out.follower_calls = r.calls;
    return out;
  }

  ExhaustiveResult<Rational> r = exhaustive_solve(std::move(input));
  return OracleSolution{std::move(r.revenue), std::move(r.witness), r.calls};
}

Bounds oracle_bounds(const PathInstance& inst, const PriceVector& prefix, int i,
                     const GridSpec& grid, std::uint64_t budget) {
  const int k = inst.k();
  if (i < 1 || i > k) throw std::out_of_range("priceable ordinal out of range");
  if (static_cast<int>(prefix.size()) != i - 1)
    throw std::invalid_argument("prefix must price exactly p_1..p_{i-1}");
  for (const Rational& p : prefix)
    if (p < 0) throw std::invalid_argument("negative prefix price");

  const std::uint64_t points = grid.point_count();
  if (points == 0) throw std::invalid_argument("empty price grid");
  std::uint64_t evals = pow_capped(points, k - i + 1, budget);
  if (evals > budget / 2) throw std::invalid_argument("oracle budget exceeded");

  EngineInput<Rational> input = rational_input(inst, grid, points);
  std::vector<Rational> grid_points = input.grid;

  BoundsAccumulator acc;
  std::uint64_t calls = 0;

  EngineInput<std::int64_t> scaled;
  std::vector<std::int64_t> scaled_prefix;
  if (try_scale(input, prefix, &scaled, &scaled_prefix)) {
    scan_bounds(std::move(scaled), scaled_prefix, i, grid_points, &acc, &calls);
  } else {
    scan_bounds(std::move(input), prefix, i, grid_points, &acc, &calls);
  }

  if (!acc.lower_set || !acc.upper_set)
    throw std::logic_error("price 0 must always admit inclusion");
  return Bounds{std::move(acc.lower), std::move(acc.upper), std::nullopt};
}

bool grid_sufficiency_check(const PathInstance& inst, int refinement,
                            std::uint64_t budget) {
  if (refinement < 1) throw std::invalid_argument("refinement must be positive");
  GridSpec coarse = GridSpec::for_instance(inst);
  OracleSolution base = oracle_solve(inst, coarse, budget);
  GridSpec fine{coarse.max_price, Rational(1, refinement)};
  OracleSolution refined = oracle_solve(inst, fine, budget);
  return refined.revenue == base.revenue;
}

}  // namespace stackvc
