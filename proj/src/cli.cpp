#include "swapplanarity/cli.hpp"

#include <algorithm>
#include <cmath>
#include <csignal>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "swapplanarity/bench.hpp"
#include "swapplanarity/equiv.hpp"
#include "swapplanarity/errors.hpp"
#include "swapplanarity/generate.hpp"
#include "swapplanarity/io.hpp"
#include "swapplanarity/serve.hpp"
#include "swapplanarity/solve.hpp"

namespace swapplanarity {
namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return read_text_file(path);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

std::int64_t frac_to_grid(double frac, std::int64_t grid_size) {
  return std::llround(frac * static_cast<double>(grid_size));
}

std::uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

struct GenArgs {
  GenerationParams p;
  std::optional<std::int64_t> delta;
  std::optional<double> delta_frac;
  std::optional<std::int64_t> rho, lambda;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct SolveArgs {
  std::string in;
  int max_depth = 6;
  std::size_t max_states = 20'000'000;
  bool all = false;
};

struct BenchArgs {
  std::vector<int> n_values;
  std::vector<std::int64_t> deltas;
  std::vector<double> delta_fracs;
  std::vector<std::int64_t> thresholds{50, 100, 150, 200, 250, 300, 350, 400, 450, 500, 1000};
  int seeds = 100;
  std::int64_t threshold = 500;
  int max_restarts = 1000;
  std::uint64_t base_seed = 1;
  std::uint64_t stride = 1u << 20;
  std::string csv;
};

std::vector<std::int64_t> bench_deltas(const BenchArgs& b) {
  std::vector<std::int64_t> out = b.deltas;
  for (double f : b.delta_fracs) out.push_back(frac_to_grid(f, kDefaultGridSize));
  return out;
}

int cmd_gen(GenArgs& a, std::ostream& out, std::ostream& err) {
  GenerationParams& p = a.p;
  if (a.delta_frac) p.delta = frac_to_grid(*a.delta_frac, p.grid_size);
  if (a.delta) p.delta = *a.delta;
  const RenderMetrics defaults = default_metrics(p.delta);
  p.rho = a.rho.value_or(defaults.rho);
  p.lambda = a.lambda.value_or(defaults.lambda);
  p.seed = a.seed ? *a.seed : fresh_seed();
  err << "seed " << p.seed << "\n";
  const GeneratedLevel level = generate_level(p);
  write_output(a.out, to_json(level.instance), out);
  err << "n=" << level.instance.vertex_count() << " m=" << level.instance.edges.size()
      << " s=" << *level.report.min_swaps << " crossings=" << crossing_count(level.instance)
      << " minimal_solutions=" << level.report.solution_count
      << " attempts=" << level.point_stats.total_attempts
      << " restarts=" << level.point_stats.restarts << "\n";
  return kExitOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
  const PuzzleInstance inst = load_instance(read_input(a.in));
  SolveOptions so;
  so.max_depth = a.max_depth;
  so.max_states = a.max_states;
  out << to_json(min_swaps(inst, so), a.all);
  return kExitOk;
}

int cmd_verify(const std::string& in, std::ostream& out) {
  const PuzzleInstance inst = parse_instance(read_input(in));
  const auto problems = validate(inst);
  for (const auto& p : problems) out << "violation: " << p << "\n";
  if (problems.empty())
    out << "ok: n=" << inst.vertex_count() << " m=" << inst.edges.size()
        << " crossings=" << crossing_count(inst) << "\n";
  return static_cast<int>(std::min<std::size_t>(problems.size(), 125));
}

int cmd_equiv(const std::string& a_path, const std::string& b_path, std::ostream& out) {
  const PuzzleInstance a = load_instance(read_input(a_path));
  const PuzzleInstance b = load_instance(read_input(b_path));
  const EquivalenceCertificate cert = swap_equivalent(a, b);
  out << to_json(cert);
  switch (cert.verdict) {
    case Verdict::kEquivalent: return 0;
    case Verdict::kNotEquivalent: return 1;
    case Verdict::kInapplicable: return 2;
  }
  return kExitFailure;
}

int cmd_bench_thresholds(const BenchArgs& b, std::ostream& out) {
  const auto deltas = bench_deltas(b);
  ThresholdSweepConfig cfg;
  cfg.n_values = b.n_values;
  cfg.delta = deltas.empty() ? 1966 : deltas.front();
  cfg.thresholds = b.thresholds;
  cfg.seeds_per_cell = b.seeds;
  cfg.max_restarts = b.max_restarts;
  cfg.seeds = {b.base_seed, b.stride};
  const auto rows = threshold_sweep(cfg);
  write_output(b.csv, to_csv(rows), out);
  if (!b.csv.empty() && b.csv != "-") {
    out << "n,threshold,mean_attempts,median_attempts,mean_restarts,failures\n";
    for (const auto& s : summarize(rows))
      out << s.n << ',' << s.threshold << ',' << s.mean_attempts << ',' << s.median_attempts
          << ',' << s.mean_restarts << ',' << s.failures << "\n";
  }
  return kExitOk;
}

int cmd_bench_hull(const BenchArgs& b, std::ostream& out) {
  HullStatisticsConfig cfg;
  cfg.n_values = b.n_values;
  cfg.delta_values = bench_deltas(b);
  if (cfg.delta_values.empty()) cfg.delta_values = {1966};
  cfg.instances_per_cell = b.seeds;
  cfg.threshold = b.threshold;
  cfg.max_restarts = b.max_restarts;
  cfg.seeds = {b.base_seed, b.stride};
  write_output(b.csv, to_csv(hull_statistics(cfg)), out);
  return kExitOk;
}

PuzzleServer* g_server = nullptr;

extern "C" void stop_server(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(const ServeOptions& options, std::ostream& out, std::ostream& err) {
  PuzzleServer server(options);
  const int port = server.bind();
  if (port < 0) {
    err << "cannot bind " << options.host << ":" << options.port << "\n";
    return kExitFailure;
  }
  out << "listening on http://" << options.host << ":" << port << "/" << std::endl;
  g_server = &server;
  std::signal(SIGINT, stop_server);
  std::signal(SIGTERM, stop_server);
  const bool ok = server.listen_after_bind();
  g_server = nullptr;
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Swap Planarity puzzle toolkit: generate, solve, verify and compare instances"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a level and write its instance JSON");
  gen_cmd->add_option("--n", gen.p.n, "Vertex count")->capture_default_str();
  gen_cmd->add_option("--m", gen.p.m, "Edge count to keep (0: use --removed)")->capture_default_str();
  gen_cmd->add_option("--removed", gen.p.removed, "Edges to remove when --m is 0")
      ->capture_default_str();
  gen_cmd->add_option("--swaps,--s", gen.p.s, "Verified minimum swap count")->capture_default_str();
  auto* delta_opt = gen_cmd->add_option("--delta", gen.delta, "General-position separation (grid units)");
  gen_cmd->add_option("--delta-frac", gen.delta_frac, "Separation as a fraction of the grid side")
      ->excludes(delta_opt);
  gen_cmd->add_option("--rho", gen.rho, "Vertex radius (default 2 delta / 5)");
  gen_cmd->add_option("--lambda", gen.lambda, "Edge width (default rho / 2)");
  gen_cmd->add_option("--flips", gen.p.flips, "Lawson flips")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (random if omitted; echoed on stderr)");
  gen_cmd->add_option("--threshold", gen.p.threshold, "Point-sampling restart threshold")
      ->capture_default_str();
  gen_cmd->add_option("--max-restarts", gen.p.max_restarts)->capture_default_str();
  gen_cmd->add_option("--max-rounds", gen.p.max_shuffle_rounds, "Extra shuffle swaps allowed")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Minimum swaps to a crossing-free drawing");
  solve_cmd->add_option("--in", solve.in, "Instance file ('-' for stdin)")->required();
  solve_cmd->add_option("--max-depth", solve.max_depth)->capture_default_str();
  solve_cmd->add_option("--max-states", solve.max_states)->capture_default_str();
  solve_cmd->add_flag("--all", solve.all, "Include the minimal move sequences");

  std::string verify_in;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check instance invariants; exit code is the violation count");
  verify_cmd->add_option("--in", verify_in)->required();

  std::string equiv_a, equiv_b;
  auto* equiv_cmd = app.add_subcommand(
      "equiv", "Swap-equivalence: exit 0 equivalent, 1 not equivalent, 2 inapplicable");
  equiv_cmd->add_option("--a", equiv_a)->required();
  equiv_cmd->add_option("--b", equiv_b)->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Point-generation experiments as CSV");
  bench_cmd->require_subcommand(1);
  auto add_common = [&bench](CLI::App* c) {
    c->add_option("--n", bench.n_values, "Point counts")->required();
    c->add_option("--delta", bench.deltas, "Separations in grid units");
    c->add_option("--delta-frac", bench.delta_fracs, "Separations as grid fractions");
    c->add_option("--seeds", bench.seeds, "Runs per cell")->capture_default_str();
    c->add_option("--max-restarts", bench.max_restarts)->capture_default_str();
    c->add_option("--base-seed", bench.base_seed)->capture_default_str();
    c->add_option("--stride", bench.stride, "Seed distance between cells")->capture_default_str();
    c->add_option("--csv", bench.csv, "CSV output file (default stdout)");
  };
  auto* thresholds_cmd = bench_cmd->add_subcommand("thresholds", "Attempts against restart threshold");
  add_common(thresholds_cmd);
  thresholds_cmd->add_option("--thresholds", bench.thresholds)->capture_default_str();
  auto* hull_cmd = bench_cmd->add_subcommand("hull", "Interior hull points against n and delta");
  add_common(hull_cmd);
  hull_cmd->add_option("--threshold", bench.threshold)->capture_default_str();

  std::string fixture_name, fixture_out;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write a fixture instance");
  fixtures_cmd->add_option("--name", fixture_name)
      ->required()
      ->check(CLI::IsMember({"eight-cycle", "basic-construction"}));
  fixtures_cmd->add_option("--out", fixture_out);

  std::size_t vector_count = 10000;
  std::uint64_t vector_seed = 7;
  std::string vector_out;
  auto* vectors_cmd =
      app.add_subcommand("vectors", "Predicate test vectors for client-side parity checks");
  vectors_cmd->add_option("--count", vector_count)->capture_default_str();
  vectors_cmd->add_option("--seed", vector_seed)->capture_default_str();
  vectors_cmd->add_option("--out", vector_out);

  ServeOptions serve;
  std::string levels_dir, ui_dir;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP API and static UI hosting");
  serve_cmd->add_option("--host", serve.host)->capture_default_str();
  serve_cmd->add_option("--port", serve.port)->capture_default_str();
  serve_cmd->add_option("--levels", levels_dir, "Level cache directory");
  serve_cmd->add_option("--ui", ui_dir, "Directory served at /");
  serve_cmd->add_option("--max-depth", serve.max_depth)->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*verify_cmd) return cmd_verify(verify_in, out);
    if (*equiv_cmd) return cmd_equiv(equiv_a, equiv_b, out);
    if (*thresholds_cmd) return cmd_bench_thresholds(bench, out);
    if (*hull_cmd) return cmd_bench_hull(bench, out);
    if (*fixtures_cmd) {
      const PuzzleInstance inst = fixture_name == "eight-cycle" ? make_eight_cycle_fixture()
                                                                : make_basic_construction_fixture();
      write_output(fixture_out, to_json(inst), out);
      return kExitOk;
    }
    if (*vectors_cmd) {
      write_output(vector_out, predicate_test_vectors(vector_count, vector_seed), out);
      return kExitOk;
    }
    if (*serve_cmd) {
      serve.levels_dir = levels_dir;
      serve.ui_dir = ui_dir;
      return cmd_serve(serve, out, err);
    }
  } catch (const InstanceFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const InvalidInstance& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace swapplanarity
