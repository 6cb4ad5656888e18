#include "stackvc/bounds.hpp"

#include <stdexcept>

namespace stackvc {

namespace {

int parity_class(int position) { return (position - 1) & 1; }

// Weight of a position under partially fixed prices: fixed vertices keep
// their weight, priced vertices carry their price. Unpriced priceable
// vertices must not be touched by callers.
const Rational& weight_under(const PathInstance& inst, const PriceVector& prices,
                             int position) {
  const Vertex& v = inst.at(position);
  if (v.kind == VertexKind::Fixed) return v.weight;
  int ordinal = v.priceable_index;
  if (ordinal > static_cast<int>(prices.size()))
    throw std::logic_error("unpriced priceable vertex in scan range");
  return prices[ordinal - 1];
}

}  // namespace

void CutContext::push_price(const PathInstance& inst, const Rational& price) {
  int ordinal = static_cast<int>(prices_.size()) + 1;
  if (ordinal > inst.k()) throw std::invalid_argument("all prices already fixed");
  if (price < 0) throw std::invalid_argument("negative price");
  if (inst.priceable_position(ordinal) <= cursor_)
    throw std::logic_error("priceable vertex already behind the cursor");
  prices_.push_back(price);
}

void CutContext::advance_to(const PathInstance& inst, int upto,
                            std::vector<int>* cuts) {
  if (upto > inst.n()) throw std::out_of_range("cut scan beyond path end");
  for (int pos = cursor_ + 1; pos <= upto; ++pos) {
    sums_[parity_class(pos)] += weight_under(inst, prices_, pos);
    const Rational& same = sums_[parity_class(pos)];
    const Rational& other = sums_[1 - parity_class(pos)];
    if (same < other) {
      // Strict cover condition: the prefix cover is forced; cut after pos.
      start_ = pos + 1;
      sums_[0] = 0;
      sums_[1] = 0;
      if (cuts) cuts->push_back(pos);
    }
  }
  if (upto > cursor_) cursor_ = upto;
}

Rational gap(const CutContext& ctx, const PathInstance& inst, int i, int v) {
  if (i < 1 || i > inst.k()) throw std::out_of_range("priceable ordinal out of range");
  int p_i = inst.priceable_position(i);
  if (v < p_i) throw std::invalid_argument("gap is defined from p_i onward");
  if (v > inst.n()) throw std::out_of_range("position beyond path end");
  if (ctx.cursor() >= p_i)
    throw std::invalid_argument("context cursor already past p_i");

  const int same = parity_class(p_i);
  std::array<Rational, 2> sums{ctx.side_sum(Side::Even), ctx.side_sum(Side::Odd)};
  for (int pos = ctx.cursor() + 1; pos <= v; ++pos) {
    if (pos == p_i) continue;  // the vertex being priced counts as weight 0
    sums[parity_class(pos)] += weight_under(inst, ctx.prefix_prices(), pos);
  }
  return sums[1 - same] - sums[same];
}

CutContext advance_cut(CutContext ctx, const PathInstance& inst, int upto,
                       std::vector<int>* cuts) {
  ctx.advance_to(inst, upto, cuts);
  return ctx;
}

Bounds compute_bounds(const CutContext& ctx, const PathInstance& inst, int i,
                      std::vector<GapState>* trace) {
  if (i < 1 || i > inst.k()) throw std::out_of_range("priceable ordinal out of range");
  if (static_cast<int>(ctx.prefix_prices().size()) != i - 1)
    throw std::invalid_argument("context must fix exactly i-1 prefix prices");
  const int p_i = inst.priceable_position(i);
  if (ctx.cursor() != p_i - 1)
    throw std::invalid_argument("context must be cut-checked to the predecessor of p_i");

  const int segment_end = i < inst.k() ? inst.priceable_position(i + 1) - 1 : inst.n();
  const int same = parity_class(p_i);

  std::array<Rational, 2> sums{ctx.side_sum(Side::Even), ctx.side_sum(Side::Odd)};
  Rational alpha = 0;
  std::optional<Rational> beta;

  for (int v = p_i; v <= segment_end; ++v) {
    if (v != p_i) sums[parity_class(v)] += weight_under(inst, ctx.prefix_prices(), v);
    Rational g = sums[1 - same] - sums[same];
    bool v_same_side = parity_class(v) == same;
    if (v_same_side) {
      if (g > alpha) alpha = g;
    } else {
      if (!beta || g < *beta) beta = g;
    }
    if (trace) trace->push_back(GapState{alpha, beta, v});
    if (beta && alpha > *beta) {
      // Collapse: no price separates guaranteed from achievable inclusion.
      Rational pinned = v_same_side ? *beta : alpha;
      return Bounds{pinned, pinned, v};
    }
  }

  if (i < inst.k()) {
    if (!beta) throw std::logic_error("segment before p_{i+1} has no other-side vertex");
    return Bounds{alpha, *beta, std::nullopt};
  }
  if (parity_class(inst.n()) == same) return Bounds{alpha, alpha, std::nullopt};
  if (!beta) throw std::logic_error("other-side path end never scanned");
  return Bounds{*beta, *beta, std::nullopt};
}

}  // namespace stackvc
