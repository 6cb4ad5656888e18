#include "stackvc/pricer.hpp"

#include "stackvc/bounds.hpp"

namespace stackvc {

PriceVector resolve_prices(const PathInstance& inst, const OptionPlan& plan) {
  const int k = inst.k();
  if (static_cast<int>(plan.size()) != k)
    throw std::invalid_argument("plan length does not match instance");

  PriceVector prices;
  prices.reserve(k);
  CutContext ctx;
  if (k == 0) return prices;
  ctx.advance_to(inst, inst.priceable_position(1) - 1);
  for (int i = 1; i <= k; ++i) {
    Bounds b = compute_bounds(ctx, inst, i);
    const Rational& price =
        plan[i - 1] == OptionChoice::O2 ? b.lower : b.upper;
    prices.push_back(price);
    ctx.push_price(inst, price);
    if (i < k) ctx.advance_to(inst, inst.priceable_position(i + 1) - 1);
  }
  return prices;
}

Solution solve(const PathInstance& inst) {
  BenchmarkTable table = benchmark_bounds(inst);
  RevenueTable revenues = revenue_table(table);
  OptionPlan plan = compare_options(inst, table);
  PriceVector prices = resolve_prices(inst, plan);

  CoverResult cover = min_cover(with_prices(inst, prices));
  const Rational& planned = revenues.R[1];
  if (cover.leader_revenue != planned)
    throw InternalError("follower paid " + format_rational(cover.leader_revenue) +
                        " but the plan promised " + format_rational(planned));

  std::vector<int> excluded;
  {
    size_t cover_idx = 0;
    for (int ord = 1; ord <= inst.k(); ++ord) {
      int pos = inst.priceable_position(ord);
      while (cover_idx < cover.cover.size() && cover.cover[cover_idx] < pos)
        ++cover_idx;
      if (cover_idx >= cover.cover.size() || cover.cover[cover_idx] != pos)
        excluded.push_back(ord);
    }
  }
  return Solution{std::move(prices), cover.leader_revenue, std::move(cover),
                  std::move(plan), std::move(excluded)};
}

}  // namespace stackvc
