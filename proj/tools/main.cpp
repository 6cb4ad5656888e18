// Command-line front end: solve, follower, bounds, oracle, verify, gen, bench.
// Exit codes: 0 success, 1 verification found a mismatch, 2 bad input or
// usage, 3 internal solver error.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stackvc/bounds.hpp"
#include "stackvc/fixtures.hpp"
#include "stackvc/follower.hpp"
#include "stackvc/instance.hpp"
#include "stackvc/json_io.hpp"
#include "stackvc/oracle.hpp"
#include "stackvc/pricer.hpp"

using namespace stackvc;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

PathInstance load_instance(const std::string& file, const std::string& fixture) {
  if (!fixture.empty() && !file.empty())
    throw UsageError("give either an instance file or --fixture, not both");
  if (!fixture.empty()) {
    std::optional<PathInstance> inst = fixture_by_name(fixture);
    if (!inst) throw UsageError("unknown fixture: '" + fixture + "'");
    return *std::move(inst);
  }
  if (file.empty())
    throw UsageError("no instance given; pass a file, '-' for stdin, or --fixture");
  if (file == "-") return parse_instance(read_stream(std::cin));
  std::ifstream in(file);
  if (!in) throw UsageError("cannot open instance file: '" + file + "'");
  return parse_instance(read_stream(in));
}

PriceVector parse_prices(const std::string& csv) {
  PriceVector prices;
  if (csv.empty()) return prices;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) prices.push_back(parse_rational(item));
  return prices;
}

std::string join_rationals(const PriceVector& values) {
  std::string out = "[";
  for (size_t j = 0; j < values.size(); ++j) {
    if (j) out += ", ";
    out += format_rational(values[j]);
  }
  return out + "]";
}

std::string join_ints(const std::vector<int>& values) {
  std::string out = "[";
  for (size_t j = 0; j < values.size(); ++j) {
    if (j) out += ", ";
    out += std::to_string(values[j]);
  }
  return out + "]";
}

void print_solution(const Solution& sol) {
  std::cout << "revenue " << format_rational(sol.revenue) << "\n"
            << "prices " << join_rationals(sol.prices) << "\n"
            << "cover " << join_ints(sol.cover.cover) << "\n"
            << "cover weight " << format_rational(sol.cover.total_weight) << "\n"
            << "excluded priceables " << join_ints(sol.excluded) << "\n";
}

void print_explanation(const PathInstance& inst, const Solution& sol) {
  BenchmarkTable table = benchmark_bounds(inst);
  RevenueTable revenues = revenue_table(table);

  std::cout << "plan [";
  for (size_t j = 0; j < sol.plan.size(); ++j)
    std::cout << (j ? ", " : "") << option_name(sol.plan[j]);
  std::cout << "]\nbenchmark bounds:\n";
  for (int i = 1; i <= inst.k(); ++i) {
    const Bounds& b = table.bounds[i - 1];
    const OptionRevenues& rev = revenues.per_vertex[i - 1];
    std::cout << "  p_" << i << " pos " << inst.priceable_position(i)
              << " bounds [" << format_rational(b.lower) << ", "
              << format_rational(b.upper) << "]";
    if (b.crossing_position)
      std::cout << " crossing at " << *b.crossing_position;
    if (rev.o1) std::cout << " O1=" << format_rational(*rev.o1);
    if (rev.o2) std::cout << " O2=" << format_rational(*rev.o2);
    if (rev.o3) std::cout << " O3=" << format_rational(*rev.o3);
    std::cout << " -> " << option_name(sol.plan[i - 1]) << "\n";
  }

  std::cout << "resolved bounds:\n";
  CutContext ctx;
  if (inst.k() > 0) ctx.advance_to(inst, inst.priceable_position(1) - 1);
  for (int i = 1; i <= inst.k(); ++i) {
    std::vector<GapState> trace;
    Bounds b = compute_bounds(ctx, inst, i, &trace);
    std::cout << "  p_" << i << " bounds [" << format_rational(b.lower) << ", "
              << format_rational(b.upper) << "]";
    if (!trace.empty()) {
      std::cout << " alpha " << format_rational(trace.back().alpha);
      if (trace.back().beta)
        std::cout << " beta " << format_rational(*trace.back().beta);
    }
    std::cout << " price " << format_rational(sol.prices[i - 1]) << "\n";
    ctx.push_price(inst, sol.prices[i - 1]);
    if (i < inst.k()) ctx.advance_to(inst, inst.priceable_position(i + 1) - 1);
  }
}

int run_solve(const std::string& file, const std::string& fixture, bool as_json,
              bool explain) {
  PathInstance inst = load_instance(file, fixture);
  Solution sol = solve(inst);
  if (as_json) {
    std::cout << solution_to_json(sol).dump(2) << "\n";
    return 0;
  }
  print_solution(sol);
  if (explain) print_explanation(inst, sol);
  return 0;
}

int run_follower(const std::string& file, const std::string& fixture,
                 const std::string& prices_csv, bool as_json) {
  PathInstance inst = load_instance(file, fixture);
  CoverResult cover = min_cover(with_prices(inst, parse_prices(prices_csv)));
  if (as_json) {
    std::cout << cover_to_json(cover).dump(2) << "\n";
    return 0;
  }
  std::cout << "cover " << join_ints(cover.cover) << "\n"
            << "cover weight " << format_rational(cover.total_weight) << "\n"
            << "revenue " << format_rational(cover.leader_revenue) << "\n";
  return 0;
}

json bounds_to_json(int ordinal, int position, const Bounds& b) {
  json j{{"ordinal", ordinal},
         {"position", position},
         {"lower", format_rational(b.lower)},
         {"upper", format_rational(b.upper)}};
  if (b.crossing_position) j["crossing_position"] = *b.crossing_position;
  return j;
}

void print_bounds_line(int ordinal, int position, const Bounds& b) {
  std::cout << "p_" << ordinal << " pos " << position << " bounds ["
            << format_rational(b.lower) << ", " << format_rational(b.upper)
            << "]";
  if (b.crossing_position) std::cout << " crossing at " << *b.crossing_position;
  std::cout << "\n";
}

int run_bounds(const std::string& file, const std::string& fixture,
               const std::string& prices_csv, bool has_prices, bool as_json) {
  PathInstance inst = load_instance(file, fixture);

  if (has_prices) {
    // Bounds of the next unpriced vertex under an explicit prefix.
    PriceVector prefix = parse_prices(prices_csv);
    int i = static_cast<int>(prefix.size()) + 1;
    if (i > inst.k())
      throw UsageError("all priceable vertices are already priced by --prices");
    CutContext ctx;
    for (const Rational& p : prefix) ctx.push_price(inst, p);
    ctx.advance_to(inst, inst.priceable_position(i) - 1);
    Bounds b = compute_bounds(ctx, inst, i);
    if (as_json) {
      std::cout << json{{"bounds", json::array({bounds_to_json(
                            i, inst.priceable_position(i), b)})}}
                       .dump(2)
                << "\n";
    } else {
      print_bounds_line(i, inst.priceable_position(i), b);
    }
    return 0;
  }

  BenchmarkTable table = benchmark_bounds(inst);
  if (as_json) {
    json rows = json::array();
    for (int i = 1; i <= inst.k(); ++i)
      rows.push_back(
          bounds_to_json(i, inst.priceable_position(i), table.bounds[i - 1]));
    std::cout << json{{"bounds", std::move(rows)}}.dump(2) << "\n";
    return 0;
  }
  for (int i = 1; i <= inst.k(); ++i)
    print_bounds_line(i, inst.priceable_position(i), table.bounds[i - 1]);
  return 0;
}

int run_oracle(const std::string& file, const std::string& fixture,
               const std::string& max_price, const std::string& step,
               std::uint64_t budget, bool as_json) {
  PathInstance inst = load_instance(file, fixture);
  GridSpec grid = GridSpec::for_instance(inst);
  if (!max_price.empty()) grid.max_price = parse_rational(max_price);
  if (!step.empty()) grid.step = parse_rational(step);

  OracleSolution sol = oracle_solve(inst, grid, budget);
  CoverResult cover = min_cover(with_prices(inst, sol.witness));
  if (as_json) {
    json j{{"revenue", format_rational(sol.revenue)},
           {"prices", json::array()},
           {"cover", cover.cover},
           {"cover_weight", format_rational(cover.total_weight)},
           {"grid",
            {{"max_price", format_rational(grid.max_price)},
             {"step", format_rational(grid.step)},
             {"points", grid.point_count()}}},
           {"follower_calls", sol.follower_calls}};
    for (const Rational& p : sol.witness)
      j["prices"].push_back(format_rational(p));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "revenue " << format_rational(sol.revenue) << "\n"
            << "witness prices " << join_rationals(sol.witness) << "\n"
            << "cover " << join_ints(cover.cover) << "\n"
            << "cover weight " << format_rational(cover.total_weight) << "\n"
            << "grid max " << format_rational(grid.max_price) << " step "
            << format_rational(grid.step) << " points " << grid.point_count()
            << "\n"
            << "follower calls " << sol.follower_calls << "\n";
  return 0;
}

struct Mismatch {
  std::uint64_t index;
  std::string solver_revenue;
  std::string oracle_revenue;
  std::string file;
};

int run_verify(std::uint64_t count, int max_n, int max_k, std::int64_t max_weight,
               std::uint64_t seed, unsigned jobs, std::uint64_t budget) {
  if (max_n < 1) throw UsageError("--n must be at least 1");
  if (max_k < 0) throw UsageError("--k must be nonnegative");
  if (jobs == 0) jobs = 1;

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> passed{0};
  std::mutex sink;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> errors;

  auto worker = [&]() {
    for (;;) {
      std::uint64_t index = next.fetch_add(1);
      if (index >= count) return;
      // Independent per-instance seed so reruns and job counts do not
      // change which instances are drawn.
      std::uint64_t s = splitmix64(seed + index);
      int n = 1 + static_cast<int>(s % static_cast<std::uint64_t>(max_n));
      int cap = std::min(max_k, (n + 1) / 2);
      std::uint64_t s2 = splitmix64(s);
      int k = static_cast<int>(s2 % static_cast<std::uint64_t>(cap + 1));
      PathInstance inst = generate_random(n, k, max_weight, splitmix64(s2));
      try {
        Solution sol = solve(inst);
        OracleSolution brute =
            oracle_solve(inst, GridSpec::for_instance(inst), budget);
        if (sol.revenue == brute.revenue) {
          passed.fetch_add(1);
          continue;
        }
        std::string file = "counterexample_" + std::to_string(index) + ".path";
        {
          std::ofstream out(file);
          out << "# verify mismatch, instance index " << index << "\n"
              << "# solver revenue " << format_rational(sol.revenue)
              << ", oracle revenue " << format_rational(brute.revenue) << "\n"
              << serialize_instance(inst);
        }
        std::lock_guard<std::mutex> lock(sink);
        mismatches.push_back(Mismatch{index, format_rational(sol.revenue),
                                      format_rational(brute.revenue), file});
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(sink);
        errors.push_back("instance " + std::to_string(index) + ": " + e.what());
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  for (const std::string& e : errors) std::cerr << "error: " << e << "\n";
  for (const Mismatch& m : mismatches)
    std::cout << "MISMATCH index " << m.index << " solver " << m.solver_revenue
              << " oracle " << m.oracle_revenue << " -> " << m.file << "\n";
  std::cout << passed.load() << "/" << count << " pass\n";
  if (!errors.empty()) return 2;
  return mismatches.empty() ? 0 : 1;
}

int run_gen(int n, int k, std::int64_t max_weight, std::uint64_t seed,
            const std::string& out_file) {
  PathInstance inst = generate_random(n, k, max_weight, seed);
  std::string text = serialize_instance(inst);
  if (out_file.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_file);
  if (!out) throw UsageError("cannot write to '" + out_file + "'");
  out << text;
  return 0;
}

std::vector<std::int64_t> parse_sizes(const std::string& csv) {
  std::vector<std::int64_t> sizes;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    sizes.push_back(std::stoll(item));
  }
  return sizes;
}

int run_bench(const std::string& sizes_csv, double k_density,
              std::int64_t max_weight, std::uint64_t seed,
              const std::string& csv_file) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!csv_file.empty()) {
    file.open(csv_file);
    if (!file) throw UsageError("cannot write to '" + csv_file + "'");
    out = &file;
  }
  if (k_density < 0.0 || k_density > 0.5)
    throw UsageError("--k-density must lie in [0, 0.5]");

  *out << "n,k,wall_ns,ns_per_vertex\n";
  for (std::int64_t n : parse_sizes(sizes_csv)) {
    if (n < 1) throw UsageError("sizes must be positive");
    int k = static_cast<int>(std::min<std::int64_t>(
        static_cast<std::int64_t>(k_density * static_cast<double>(n)),
        (n + 1) / 2));
    PathInstance inst = generate_random(static_cast<int>(n), k, max_weight,
                                        splitmix64(seed ^ static_cast<std::uint64_t>(n)));
    auto begin = std::chrono::steady_clock::now();
    Solution sol = solve(inst);
    auto end = std::chrono::steady_clock::now();
    (void)sol;
    auto wall_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(end - begin).count();
    char per_vertex[64];
    std::snprintf(per_vertex, sizeof per_vertex, "%.3f",
                  static_cast<double>(wall_ns) / static_cast<double>(n));
    *out << n << "," << k << "," << wall_ns << "," << per_vertex << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Stackelberg pricing for vertex cover on path graphs"};
  app.require_subcommand(1);

  std::string file, fixture, prices_csv, max_price, step, out_file, csv_file;
  std::string sizes_csv = "100000,200000,400000,800000,1600000";
  bool as_json = false, explain = false;
  std::uint64_t budget = 10'000'000;
  std::uint64_t count = 100, seed = 1;
  int gen_n = 0, gen_k = 0, max_n = 10, max_k = 2;
  std::int64_t max_weight = 8;
  double k_density = 0.2;
  unsigned jobs = std::thread::hardware_concurrency();

  auto add_instance_options = [&](CLI::App* sub) {
    sub->add_option("file", file, "instance file ('-' for stdin)");
    sub->add_option("--fixture", fixture, "built-in instance name");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "price the path optimally");
  add_instance_options(solve_cmd);
  solve_cmd->add_flag("--json", as_json, "emit JSON");
  solve_cmd->add_flag("--explain", explain, "show bounds, gaps, and options");

  CLI::App* follower_cmd =
      app.add_subcommand("follower", "minimum cover at given prices");
  add_instance_options(follower_cmd);
  follower_cmd->add_option("--prices", prices_csv,
                           "comma-separated prices for p_1..p_k");
  follower_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "price thresholds per priceable vertex");
  add_instance_options(bounds_cmd);
  CLI::Option* bounds_prices = bounds_cmd->add_option(
      "--prices", prices_csv, "prefix prices; bounds of the next vertex");
  bounds_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive grid search ground truth");
  add_instance_options(oracle_cmd);
  oracle_cmd->add_option("--max-price", max_price, "grid maximum (rational)");
  oracle_cmd->add_option("--step", step, "grid step (rational)");
  oracle_cmd->add_option("--budget", budget, "follower-call budget");
  oracle_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "random battery: solver against the oracle");
  verify_cmd->add_option("--count", count, "number of instances");
  verify_cmd->add_option("--n", max_n, "maximum path length");
  verify_cmd->add_option("--k", max_k, "maximum priceable count");
  verify_cmd->add_option("--max-weight", max_weight, "maximum fixed weight");
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_option("--budget", budget, "oracle follower-call budget");

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--n", gen_n, "path length")->required();
  gen_cmd->add_option("--k", gen_k, "priceable count")->required();
  gen_cmd->add_option("--max-weight", max_weight, "maximum fixed weight");
  gen_cmd->add_option("--seed", seed, "seed");
  gen_cmd->add_option("-o,--output", out_file, "output file");

  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time solve across path lengths");
  bench_cmd->add_option("--sizes", sizes_csv, "comma-separated path lengths");
  bench_cmd->add_option("--k-density", k_density, "priceable fraction");
  bench_cmd->add_option("--max-weight", max_weight, "maximum fixed weight");
  bench_cmd->add_option("--seed", seed, "seed");
  bench_cmd->add_option("--csv", csv_file, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
    if (solve_cmd->parsed()) return run_solve(file, fixture, as_json, explain);
    if (follower_cmd->parsed())
      return run_follower(file, fixture, prices_csv, as_json);
    if (bounds_cmd->parsed())
      return run_bounds(file, fixture, prices_csv, bounds_prices->count() > 0,
                        as_json);
    if (oracle_cmd->parsed())
      return run_oracle(file, fixture, max_price, step, budget, as_json);
    if (verify_cmd->parsed())
      return run_verify(count, max_n, max_k, max_weight, seed, jobs, budget);
    if (gen_cmd->parsed())
      return run_gen(gen_n, gen_k, max_weight, seed, out_file);
    if (bench_cmd->parsed())
      return run_bench(sizes_csv, k_density, max_weight, seed, csv_file);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
