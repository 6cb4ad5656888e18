#include <doctest.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stackvc/bounds.hpp"
#include "stackvc/fixtures.hpp"
#include "stackvc/follower.hpp"
#include "stackvc/instance.hpp"

using namespace stackvc;

namespace {

CutContext context_before(const PathInstance& inst, int ordinal,
                          const PriceVector& prefix) {
  CutContext ctx;
  for (const Rational& p : prefix) ctx.push_price(inst, p);
  ctx.advance_to(inst, inst.priceable_position(ordinal) - 1);
  return ctx;
}

}  // namespace

TEST_CASE("gap values on the nine-vertex example") {
  PathInstance inst = figure1();
  CutContext ctx = context_before(inst, 1, {});
  CHECK(ctx.side_sum(Side::Even) == Rational(1));
  CHECK(ctx.side_sum(Side::Odd) == Rational(5));
  CHECK(gap(ctx, inst, 1, 3) == Rational(4));
  CHECK(gap(ctx, inst, 1, 4) == Rational(13));
  CHECK(gap(ctx, inst, 1, 5) == Rational(5));
}

TEST_CASE("gap validates its arguments") {
  PathInstance inst = figure1();
  CutContext ctx = context_before(inst, 1, {});
  CHECK_THROWS_AS(gap(ctx, inst, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(gap(ctx, inst, 1, 10), std::out_of_range);
  CHECK_THROWS_AS(gap(ctx, inst, 3, 7), std::out_of_range);

  CutContext past;
  past.push_price(inst, Rational(5));
  past.advance_to(inst, 4);
  CHECK_THROWS_AS(gap(past, inst, 1, 5), std::invalid_argument);
}

TEST_CASE("gap changes by exactly the vertex weight, sign by side") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    PathInstance inst = generate_random(2 + static_cast<int>(seed % 11), 1, 9,
                                        splitmix64(seed));
    CutContext ctx = context_before(inst, 1, {});
    int p1 = inst.priceable_position(1);
    CAPTURE(seed);
    CHECK(gap(ctx, inst, 1, p1) ==
          ctx.side_sum(side_of(inst, p1) == Side::Even ? Side::Odd : Side::Even) -
              ctx.side_sum(side_of(inst, p1)));
    for (int v = p1 + 1; v <= inst.n(); ++v) {
      Rational delta = gap(ctx, inst, 1, v) - gap(ctx, inst, 1, v - 1);
      Rational w = inst.at(v).weight;
      if (same_side(v, p1))
        CHECK(delta == -w);
      else
        CHECK(delta == w);
    }
  }
}

TEST_CASE("advance_cut cuts exactly after strict positions") {
  PathInstance falling = parse_instance("F 5\nF 1\nF 7\n");
  std::vector<int> cuts;
  CutContext ctx = advance_cut(CutContext{}, falling, 2, &cuts);
  CHECK(ctx.start() == 3);
  CHECK(cuts == std::vector<int>{2});

  PathInstance rising = parse_instance("F 1\nF 5\nF 7\n");
  cuts.clear();
  ctx = advance_cut(CutContext{}, rising, 2, &cuts);
  CHECK(ctx.start() == 1);
  CHECK(cuts.empty());
}

TEST_CASE("advance_cut through the example prefix at price 5 finds no cut") {
  PathInstance inst = figure1();
  CutContext ctx;
  ctx.push_price(inst, Rational(5));
  std::vector<int> cuts;
  ctx.advance_to(inst, 5, &cuts);
  CHECK(ctx.start() == 1);
  CHECK(cuts.empty());
}

TEST_CASE("advance_cut at price 0 cuts the example prefix twice") {
  PathInstance inst = figure1();
  CutContext ctx;
  ctx.push_price(inst, Rational(0));
  std::vector<int> cuts;
  ctx.advance_to(inst, 5, &cuts);
  CHECK(cuts == std::vector<int>{3, 5});
  CHECK(ctx.start() == 6);
  CHECK(ctx.side_sum(Side::Even) == Rational(0));
  CHECK(ctx.side_sum(Side::Odd) == Rational(0));
}

TEST_CASE("cut segments solve independently") {
  // Splitting a fully priced path at every cut must preserve the total
  // minimum cover weight segment by segment.
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    std::uint64_t s = splitmix64(seed ^ 0xabcdefULL);
    int n = 2 + static_cast<int>(s % 11);
    PathInstance inst = generate_random(n, 0, 10, s);
    std::vector<int> cuts;
    advance_cut(CutContext{}, inst, n, &cuts);

    WeightedPath whole = with_prices(inst, {});
    Rational split_total = 0;
    int begin = 1;
    std::vector<int> boundaries = cuts;
    boundaries.push_back(n);
    for (int end : boundaries) {
      if (end < begin) continue;
      WeightedPath segment;
      segment.weights.assign(whole.weights.begin() + begin - 1,
                             whole.weights.begin() + end);
      segment.priceable.assign(segment.weights.size(), 0);
      split_total += min_cover(segment).total_weight;
      begin = end + 1;
    }
    CAPTURE(seed);
    CHECK(split_total == min_cover(whole).total_weight);
  }
}

TEST_CASE("push_price and advance_to validate their use") {
  PathInstance inst = figure1();
  CutContext ctx;
  CHECK_THROWS_AS(ctx.push_price(inst, Rational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(ctx.advance_to(inst, 10), std::out_of_range);

  ctx.push_price(inst, Rational(5));
  ctx.push_price(inst, Rational(3));
  CHECK_THROWS_AS(ctx.push_price(inst, Rational(1)), std::invalid_argument);

  // Scanning across a priceable vertex that has no price yet is a misuse.
  CutContext late;
  late.push_price(inst, Rational(5));
  CHECK_THROWS_AS(late.advance_to(inst, 6), std::logic_error);
}

TEST_CASE("compute_bounds on the nine-vertex example, first vertex") {
  PathInstance inst = figure1();
  CutContext ctx = context_before(inst, 1, {});
  std::vector<GapState> trace;
  Bounds b = compute_bounds(ctx, inst, 1, &trace);
  CHECK(b.lower == Rational(5));
  CHECK(b.upper == Rational(13));
  CHECK(!b.crossing_position.has_value());

  REQUIRE(trace.size() == 3);
  CHECK(trace[0].position == 3);
  CHECK(trace[0].alpha == Rational(4));
  CHECK(!trace[0].beta.has_value());
  CHECK(trace[1].alpha == Rational(4));
  CHECK(trace[1].beta == Rational(13));
  CHECK(trace[2].alpha == Rational(5));
  CHECK(trace[2].beta == Rational(13));
}

TEST_CASE("compute_bounds on the example's second vertex follows the prefix price") {
  PathInstance inst = figure1();

  Bounds at13 = compute_bounds(context_before(inst, 2, {Rational(13)}), inst, 2);
  CHECK(at13.lower == Rational(11));
  CHECK(at13.upper == Rational(11));

  Bounds at5 = compute_bounds(context_before(inst, 2, {Rational(5)}), inst, 2);
  CHECK(at5.lower == Rational(3));
  CHECK(at5.upper == Rational(3));
}

TEST_CASE("compute_bounds on a three-vertex path pins the single price") {
  PathInstance inst = parse_instance("F 1\nP\nF 2\n");
  Bounds b = compute_bounds(context_before(inst, 1, {}), inst, 1);
  CHECK(b.lower == Rational(3));
  CHECK(b.upper == Rational(3));
}

TEST_CASE("compute_bounds collapses at a crossing, other-side case") {
  PathInstance inst = parse_instance("F 10\nP\nF 1\nF 50\nF 1\n");
  std::vector<GapState> trace;
  Bounds b = compute_bounds(context_before(inst, 1, {}), inst, 1, &trace);
  CHECK(b.lower == Rational(10));
  CHECK(b.upper == Rational(10));
  CHECK(b.crossing_position == 5);
  CHECK(trace.back().position == 5);
}

TEST_CASE("compute_bounds collapses at a crossing, same-side case") {
  PathInstance inst = parse_instance("P\nF 1\nF 50\nF 100\nF 1\n");
  Bounds b = compute_bounds(context_before(inst, 1, {}), inst, 1);
  CHECK(b.lower == Rational(1));
  CHECK(b.upper == Rational(1));
  CHECK(b.crossing_position == 5);
}

TEST_CASE("compute_bounds validates the context") {
  PathInstance inst = figure1();
  CHECK_THROWS_AS(compute_bounds(CutContext{}, inst, 1), std::invalid_argument);
  CHECK_THROWS_AS(compute_bounds(CutContext{}, inst, 2), std::invalid_argument);
  CHECK_THROWS_AS(compute_bounds(context_before(inst, 1, {}), inst, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(compute_bounds(context_before(inst, 1, {}), inst, 0),
                  std::out_of_range);
}

TEST_CASE("scan state is monotone and bounds are ordered") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::uint64_t s = splitmix64(seed ^ 0x5eedULL);
    int n = 1 + static_cast<int>(s % 14);
    int kmax = std::min(3, (n + 1) / 2);
    int k = 1 + static_cast<int>(splitmix64(s) % static_cast<std::uint64_t>(kmax));
    PathInstance inst = generate_random(n, k, 9, s);
    CAPTURE(seed);

    CutContext ctx;
    for (int i = 1; i <= inst.k(); ++i) {
      ctx.advance_to(inst, inst.priceable_position(i) - 1);
      std::vector<GapState> trace;
      Bounds b = compute_bounds(ctx, inst, i, &trace);

      CHECK(b.lower >= 0);
      CHECK(b.lower <= b.upper);
      if (b.crossing_position || i == inst.k()) CHECK(b.lower == b.upper);

      for (size_t t = 1; t < trace.size(); ++t) {
        CHECK(trace[t].alpha >= trace[t - 1].alpha);
        if (trace[t - 1].beta.has_value()) {
          REQUIRE(trace[t].beta.has_value());
          CHECK(*trace[t].beta <= *trace[t - 1].beta);
        }
      }

      ctx.push_price(inst, b.lower);
    }
  }
}
