#include "stackvc/planner.hpp"

#include <stdexcept>

namespace stackvc {

BenchmarkTable benchmark_bounds(const PathInstance& inst) {
  BenchmarkTable table;
  const int k = inst.k();
  if (k == 0) return table;
  table.bounds.reserve(k);
  table.same_side_next.reserve(k);

  CutContext ctx;
  ctx.advance_to(inst, inst.priceable_position(1) - 1);
  for (int i = 1; i <= k; ++i) {
    Bounds b = compute_bounds(ctx, inst, i);
    table.bounds.push_back(b);
    table.same_side_next.push_back(
        i < k && same_side(inst.priceable_position(i), inst.priceable_position(i + 1)));
    ctx.push_price(inst, b.lower);  // benchmark price
    if (i < k) ctx.advance_to(inst, inst.priceable_position(i + 1) - 1);
  }
  return table;
}

OptionRevenues option_revenues(const BenchmarkTable& table, int i,
                               const Rational& r_next, const Rational& r_next2) {
  const int k = static_cast<int>(table.bounds.size());
  if (i < 1 || i > k) throw std::out_of_range("priceable ordinal out of range");
  const Bounds& b = table.bounds[i - 1];

  OptionRevenues rev;
  rev.o2 = b.lower + r_next;
  if (i == k || table.same_side_next[i - 1]) return rev;  // only O2 is live

  rev.o1 = (b.upper - b.lower) + r_next;
  if (i + 1 == k || !table.same_side_next[i]) {
    // Sacrificing p_{i+1} at its upper bound widens (or ends) the suffix.
    Rational boost = i + 1 < k
                         ? table.bounds[i].upper - table.bounds[i].lower + r_next2
                         : Rational(0);
    rev.o3 = b.upper + boost;
  } else {
    rev.o3 = b.upper - (table.bounds[i].upper - table.bounds[i].lower) + r_next2;
  }
  return rev;
}

namespace {

// V_j(s) = max(A_j, B_j + s), where a disengaged track is -infinity. A_j is
// the best renounce-first value (independent of the incoming shift s of
// p_j's bounds), B_j the best sell-first value (collects s on top).
struct SuffixValue {
  std::optional<Rational> a;
  std::optional<Rational> b;

  std::optional<Rational> at(const Rational& s) const {
    std::optional<Rational> v = a;
    if (b) {
      Rational shifted = *b + s;
      if (!v || shifted > *v) v = shifted;
    }
    return v;
  }
};

Rational width_of(const Bounds& b) { return b.upper - b.lower; }

}  // namespace

RevenueTable revenue_table(const BenchmarkTable& table) {
  const int k = static_cast<int>(table.bounds.size());
  RevenueTable rt;
  rt.R.assign(k + 3, Rational(0));
  rt.per_vertex.assign(k, OptionRevenues{});

  // suffix[j-1] holds (A_j, B_j); two sentinel entries past k mean "no
  // vertices left", worth 0 whatever the shift.
  std::vector<SuffixValue> suffix(k + 2);
  suffix[k] = SuffixValue{Rational(0), std::nullopt};
  suffix[k + 1] = SuffixValue{Rational(0), std::nullopt};

  for (int i = k; i >= 1; --i) {
    const Bounds& here = table.bounds[i - 1];
    const SuffixValue& next = suffix[i];
    OptionRevenues rev;

    // O2: sell p_i at its (shifted) lower bound; the offset-zero price
    // leaves p_{i+1}'s bounds exactly at their table values.
    rev.o2 = here.lower + *next.at(Rational(0));

    if (i < k && !table.same_side_next[i - 1]) {
      // O1: renounce p_i at its upper bound, lifting p_{i+1}'s bounds by
      // this vertex's width. The incoming shift is re-exported through the
      // renounce price, so the value carries no +s term.
      rev.o1 = *next.at(width_of(here));

      // O3: sell p_i at its upper bound; p_{i+1} is consumed at its own
      // upper bound, shifting p_{i+2}'s bounds by p_{i+1}'s width, with the
      // sign set by which side p_{i+2} lies on.
      if (i + 1 == k) {
        rev.o3 = here.upper;
      } else {
        Rational next_width = width_of(table.bounds[i]);
        if (table.same_side_next[i]) next_width = -next_width;
        rev.o3 = here.upper + *suffix[i + 1].at(next_width);
      }
    }

    rt.per_vertex[i - 1] = rev;
    SuffixValue& own = suffix[i - 1];
    own.a = rev.o1;
    own.b = rev.o2;
    if (rev.o3 && *rev.o3 > *own.b) own.b = *rev.o3;
    rt.R[i] = *own.at(Rational(0));
  }
  return rt;
}

const char* option_name(OptionChoice choice) {
  switch (choice) {
    case OptionChoice::O1: return "O1";
    case OptionChoice::O2: return "O2";
    case OptionChoice::O3: return "O3";
    case OptionChoice::ForcedByPredecessor: return "ForcedByPredecessor";
  }
  throw std::logic_error("unknown option");
}

OptionPlan compare_options(const PathInstance& inst, const BenchmarkTable& table) {
  const int k = inst.k();
  if (static_cast<int>(table.bounds.size()) != k)
    throw std::invalid_argument("benchmark table does not match instance");

  RevenueTable rt = revenue_table(table);
  OptionPlan plan;
  plan.reserve(k);

  // Walk forward carrying the shift s of the current vertex's bounds
  // induced by the offsets already chosen. O1's value ignores s; O2/O3
  // collect it. Ties break toward the lower option index.
  Rational s(0);
  int i = 1;
  while (i <= k) {
    const OptionRevenues& rev = rt.per_vertex[i - 1];
    Rational v2 = *rev.o2 + s;
    Rational best = v2;
    if (rev.o1 && *rev.o1 > best) best = *rev.o1;
    Rational v3(0);
    if (rev.o3) {
      v3 = *rev.o3 + s;
      if (v3 > best) best = v3;
    }

    if (rev.o1 && *rev.o1 == best) {
      plan.push_back(OptionChoice::O1);
      s = table.bounds[i - 1].upper - table.bounds[i - 1].lower;
      i += 1;
    } else if (v2 == best) {
      plan.push_back(OptionChoice::O2);
      s = 0;
      i += 1;
    } else {
      if (!rev.o3 || v3 != best)
        throw std::logic_error("revenue table admits no maximizing option");
      plan.push_back(OptionChoice::O3);
      plan.push_back(OptionChoice::ForcedByPredecessor);
      if (i + 1 < k) {
        s = table.bounds[i].upper - table.bounds[i].lower;
        if (table.same_side_next[i]) s = -s;
      } else {
        s = 0;
      }
      i += 2;
    }
  }
  if (static_cast<int>(plan.size()) != k) throw std::logic_error("plan length mismatch");
  return plan;
}

}  // namespace stackvc
