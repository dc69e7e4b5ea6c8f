#include "bdvd/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdvd/decomposition.hpp"
#include "bdvd/errors.hpp"
#include "bdvd/exact_solver.hpp"
#include "bdvd/io.hpp"
#include "bdvd/kernelization.hpp"

namespace bdvd::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitRefused = 2;
constexpr int kExitParseError = 3;

struct CommonOpts {
  std::string input;
  int degree = 0;
  std::string format = "auto";
};

struct KernelizeOpts : CommonOpts {
  std::string kernel_out;
  std::string sets_out;
  std::string stats_out;
  bool exact = false;
  int max_exact = 24;
};

struct SolveOpts : CommonOpts {
  int max_exact = 24;
};

struct VerifyOpts : CommonOpts {
  std::string sets_path;
};

struct GenOpts {
  int n = 0;
  long long m = 0;
  std::uint64_t seed = 0;
  std::string model = "gnm";
  std::string output;
  std::string format = "dimacs";
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::ParseError, "cannot write '" + path + "'");
  return out;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input", opts.input, "instance file")->required();
  cmd->add_option("--degree", opts.degree, "degree bound d")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--format", opts.format, "auto|dimacs|plain")
      ->default_val("auto");
}

int run_kernelize(const KernelizeOpts& opts) {
  GraphFormat resolved = GraphFormat::Plain;
  Graph g =
      parse_graph_file(opts.input, parse_format_name(opts.format), &resolved);

  auto t0 = std::chrono::steady_clock::now();
  KernelResult result = kernelize(g, opts.degree);
  auto t1 = std::chrono::steady_clock::now();
  double wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  bool exact_refused = false;
  std::optional<int> alpha_kernel;
  if (opts.exact) {
    if (result.kernel.vertex_count() > opts.max_exact) {
      exact_refused = true;
    } else {
      ExactConfig cfg;
      cfg.max_vertices = opts.max_exact;
      alpha_kernel = optimum_size(result.kernel, opts.degree, cfg);
    }
  }

  if (!opts.kernel_out.empty()) {
    auto out = open_out(opts.kernel_out);
    write_graph(out, result.kernel, resolved, /*label_comments=*/true);
  }
  if (!opts.sets_out.empty()) {
    auto out = open_out(opts.sets_out);
    write_sets(out, result.c_total, result.i_total);
  }

  std::ostringstream stats;
  stats << "n=" << g.vertex_count() << '\n'
        << "m=" << g.edge_count() << '\n'
        << "d=" << opts.degree << '\n'
        << "kernel_vertices=" << result.kernel.vertex_count() << '\n'
        << "kernel_edges=" << result.kernel.edge_count() << '\n'
        << "c_size=" << result.c_total.size() << '\n'
        << "i_size=" << result.i_total.size() << '\n'
        << "rounds=" << result.rounds << '\n'
        << "packing_upgrades=" << result.total_packing_upgrades() << '\n'
        << "repair_iterations=" << result.total_repair_iterations() << '\n'
        << "bound_factor=" << bound_factor(opts.degree) << '\n'
        << "packing_policy=greedy_ascending" << '\n'
        << "wall_ms=" << std::fixed << std::setprecision(3) << wall_ms << '\n';
  if (alpha_kernel) {
    double ratio = *alpha_kernel > 0 ? static_cast<double>(
                                           result.kernel.vertex_count()) /
                                           *alpha_kernel
                                     : 0.0;
    stats << "alpha_kernel=" << *alpha_kernel << '\n'
          << "bound_ratio=" << std::setprecision(3) << ratio << '\n';
  }

  std::cout << stats.str();
  if (!opts.stats_out.empty()) {
    auto out = open_out(opts.stats_out);
    out << stats.str();
  }

  if (exact_refused) {
    std::cerr << "refused: kernel has " << result.kernel.vertex_count()
              << " vertices, --exact cap is " << opts.max_exact << "\n";
    return kExitRefused;
  }
  return kExitOk;
}

int run_solve(const SolveOpts& opts) {
  Graph g = parse_graph_file(opts.input, parse_format_name(opts.format));
  KernelResult result = kernelize(g, opts.degree);
  if (result.kernel.vertex_count() > opts.max_exact) {
    std::cerr << "refused: kernel has " << result.kernel.vertex_count()
              << " vertices, exact cap is " << opts.max_exact << "\n";
    return kExitRefused;
  }
  ExactConfig cfg;
  cfg.max_vertices = opts.max_exact;
  VertexSet kernel_solution = solve_exact(result.kernel, opts.degree, cfg);
  VertexSet lifted = lift_solution(result, kernel_solution);

  std::cout << "solution_size=" << lifted.size() << '\n' << "solution=";
  for (std::size_t i = 0; i < lifted.size(); ++i)
    std::cout << (i ? " " : "") << lifted[i];
  std::cout << '\n';
  return kExitOk;
}

int run_verify(const VerifyOpts& opts) {
  Graph g = parse_graph_file(opts.input, parse_format_name(opts.format));
  auto [c, i] = parse_sets_file(opts.sets_path);
  for (int v : set_union(c, i)) {
    if (v < 0 || v >= g.vertex_count())
      raise(ErrorCode::VertexOutOfRange,
            "sets file mentions vertex " + std::to_string(v) +
                " outside the graph");
  }

  DBoundedDecomposition dec;
  dec.c = c;
  dec.i = i;  // any C/I overlap surfaces as a partition failure
  dec.t = set_difference(g.open_neighborhood(dec.i), dec.c);
  dec.j = set_difference(
      set_difference(set_difference(g.all_vertices(), dec.i), dec.c), dec.t);
  ValidationReport report = validate_decomposition(g, opts.degree, dec);

  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
  std::cout << "partition=" << verdict(report.partition_ok) << '\n'
            << "degree_bound=" << verdict(report.degree_bound_ok) << '\n'
            << "separation=" << verdict(report.separation_ok) << '\n'
            << "star_packing=" << verdict(report.packing_ok) << '\n';
  if (report.crown_checked)
    std::cout << "crown=" << verdict(report.crown_ok) << '\n';
  for (const auto& failure : report.failures)
    std::cout << "failure: " << failure << '\n';
  return report.all_ok() ? kExitOk : kExitVerifyFailed;
}

int run_gen(const GenOpts& opts) {
  if (opts.model != "gnm")
    raise(ErrorCode::ParseError, "unknown model '" + opts.model + "'");
  GraphFormat format = parse_format_name(opts.format);
  if (format == GraphFormat::Auto)
    raise(ErrorCode::ParseError, "gen needs a concrete output format");
  Graph g = random_gnm(opts.n, opts.m, opts.seed);
  if (opts.output.empty()) {
    write_graph(std::cout, g, format);
  } else {
    auto out = open_out(opts.output);
    write_graph(out, g, format);
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"bounded-degree vertex deletion kernelizer"};
  app.require_subcommand(1);

  KernelizeOpts kernelize_opts;
  auto* kernelize_cmd = app.add_subcommand(
      "kernelize", "shrink an instance, emitting kernel, sets and stats");
  add_common(kernelize_cmd, kernelize_opts);
  kernelize_cmd->add_option("--kernel-out", kernelize_opts.kernel_out,
                            "write the kernel graph here");
  kernelize_cmd->add_option("--sets-out", kernelize_opts.sets_out,
                            "write the C/I sets here");
  kernelize_cmd->add_option("--stats-out", kernelize_opts.stats_out,
                            "write the run stats here");
  kernelize_cmd->add_flag("--exact", kernelize_opts.exact,
                          "also solve the kernel exactly (size-capped)");
  kernelize_cmd->add_option("--max-exact", kernelize_opts.max_exact,
                            "vertex cap for --exact");

  SolveOpts solve_opts;
  auto* solve_cmd = app.add_subcommand(
      "solve", "kernelize, solve the kernel exactly and lift the solution");
  add_common(solve_cmd, solve_opts);
  solve_cmd->add_option("--max-exact", solve_opts.max_exact,
                        "vertex cap for the exact solver");

  VerifyOpts verify_opts;
  auto* verify_cmd =
      app.add_subcommand("verify", "validate a C/I sets file against an instance");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--sets", verify_opts.sets_path, "C/I sets file")
      ->required();

  GenOpts gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random instance");
  gen_cmd->add_option("--n", gen_opts.n, "vertex count")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--m", gen_opts.m, "edge count")
      ->required()
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen_opts.seed, "PRNG seed")->required();
  gen_cmd->add_option("--model", gen_opts.model, "random model")
      ->default_val("gnm");
  gen_cmd->add_option("--output", gen_opts.output, "output file (default stdout)");
  gen_cmd->add_option("--format", gen_opts.format, "dimacs|plain")
      ->default_val("dimacs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (kernelize_cmd->parsed()) return run_kernelize(kernelize_opts);
    if (solve_cmd->parsed()) return run_solve(solve_opts);
    if (verify_cmd->parsed()) return run_verify(verify_opts);
    if (gen_cmd->parsed()) return run_gen(gen_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::TooLarge:
      case ErrorCode::BudgetExceeded:
        return kExitRefused;
      default:
        return kExitParseError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bdvd");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace bdvd::cli
