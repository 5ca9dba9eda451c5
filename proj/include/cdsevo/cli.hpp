#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cdsevo/baselines.hpp"
#include "cdsevo/bench.hpp"
#include "cdsevo/evo.hpp"
#include "cdsevo/generators.hpp"
#include "cdsevo/graph_io.hpp"

namespace cdsevo::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kInfeasible = 2;

namespace detail {

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

inline std::string join_one_based(const VertexSet& s) {
  std::string out;
  for (Vertex v : s.to_vector()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v + 1);
  }
  return out;
}

inline void write_trace(std::ostream& out, const RunReport& report) {
  out << "iteration,best_feasible_size,archive_size,potential_k\n";
  for (const TracePoint& tp : report.trace) {
    out << tp.iteration << ',' << cdsevo::detail::opt_field(tp.best_feasible_size)
        << ',' << tp.archive_size << ','
        << cdsevo::detail::opt_field(tp.potential_k) << '\n';
  }
}

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<double> p;
  std::size_t max_retries = 1000;
  std::string out;
};

struct SolveArgs {
  std::string algo;
  std::string graph;
  std::string budget = "T1";
  std::uint64_t seed = 0;
  std::string trace;
  std::uint64_t trace_every = 0;
  bool diagnostics = false;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::string csv;
  std::string json;
};

struct BenchArgs {
  std::vector<std::string> models;
  std::vector<std::size_t> sizes;
  std::size_t instances = 1;
  std::uint64_t gen_seed = 0;
  std::vector<std::string> graphs;
  std::vector<std::string> solvers{"semo", "greedy"};
  std::vector<std::string> budgets{"T1"};
  std::size_t replicates = 10;
  std::uint64_t base_seed = 0;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t workers = 0;
  std::string out;
  std::string json;
};

inline int do_gen(const GenArgs& a, std::ostream& out) {
  GenSpec spec;
  spec.model = parse_model(a.model);
  spec.n = a.n;
  spec.seed = a.seed;
  spec.er_p = a.p;
  spec.max_retries = a.max_retries;
  const Graph g = generate(spec);
  if (a.out.empty()) {
    write_graph(out, g);
  } else {
    write_graph_file(a.out, g);
    out << "wrote " << a.out << " (n=" << g.vertex_count()
        << ", edges=" << g.edge_count() << ", delta=" << g.max_degree() << ")\n";
  }
  return kOk;
}

inline int do_solve(const SolveArgs& a, std::ostream& out) {
  const Solver solver = parse_solver(a.algo);
  const Budget budget = Budget::parse(a.budget);
  Instance inst;
  inst.id = std::filesystem::path(a.graph).stem().string();
  inst.model = "file";
  inst.graph = read_graph_file(a.graph);
  const Graph& g = inst.graph;
  require_solvable(g);

  RunConfig base;
  const std::uint64_t iterations = budget.resolve(g.vertex_count());
  if (!a.trace.empty()) {
    base.trace_every = a.trace_every > 0
                           ? a.trace_every
                           : std::max<std::uint64_t>(1, iterations / 1000);
  }
  if (a.diagnostics) {
    if (g.vertex_count() > a.oracle_cap) {
      throw std::invalid_argument("--diagnostics needs n <= oracle cap");
    }
    inst.m = exact_min_cds(g, a.oracle_cap).m;
    base.diagnostics_m = inst.m;
  }

  SolveOutcome res = solve_instance(inst, solver, budget, a.seed, &base, a.oracle_cap);
  const ResultRow& row = res.row;

  out << "algorithm: " << row.solver << '\n'
      << "graph: " << a.graph << " (n=" << g.vertex_count()
      << ", edges=" << g.edge_count() << ", delta=" << g.max_degree() << ")\n";
  if (is_evolutionary(solver)) {
    out << "budget: " << budget.label() << " = " << iterations << '\n'
        << "seed: " << a.seed << '\n';
  }
  out << "feasible: " << (row.feasible ? "yes" : "no") << '\n';
  if (row.feasible) {
    out << "size: " << *row.size << '\n'
        << "solution: " << join_one_based(*res.solution) << '\n';
  }
  if (row.first_feasible_iter) {
    out << "first_feasible_iteration: " << *row.first_feasible_iter << '\n';
  }
  out << "iterations: " << row.iterations << '\n';
  if (row.m) out << "m: " << *row.m << '\n';
  if (row.ratio) out << "ratio: " << cdsevo::detail::opt_field(row.ratio) << '\n';
  out << "wall_time_s: " << std::fixed << std::setprecision(6) << row.wall_time_s
      << std::defaultfloat << '\n';

  if (!a.trace.empty()) {
    std::ostringstream t;
    write_trace(t, res.run);
    write_text_file(a.trace, t.str());
  }
  if (!a.csv.empty()) {
    std::ostringstream c;
    write_csv(c, std::span<const ResultRow>(&row, 1));
    write_text_file(a.csv, c.str());
  }
  if (!a.json.empty()) write_text_file(a.json, to_json(row).dump(2) + "\n");
  return row.feasible ? kOk : kInfeasible;
}

inline ExperimentSpec make_experiment(const BenchArgs& a) {
  ExperimentSpec spec;
  for (const std::string& m : a.models) {
    const Model model = parse_model(m);
    for (std::size_t n : a.sizes) {
      for (std::size_t k = 0; k < a.instances; ++k) {
        GenSpec g;
        g.model = model;
        g.n = n;
        g.seed = a.gen_seed + k;
        spec.corpus.push_back({g});
      }
    }
  }
  for (const std::string& path : a.graphs) {
    spec.corpus.push_back({std::filesystem::path(path)});
  }
  if (spec.corpus.empty()) {
    throw std::invalid_argument("empty corpus: give --models/--sizes or --graph");
  }
  for (const std::string& s : a.solvers) spec.solvers.push_back(parse_solver(s));
  for (const std::string& b : a.budgets) spec.budgets.push_back(Budget::parse(b));
  spec.replicates = a.replicates;
  spec.base_seed = a.base_seed;
  spec.oracle_cap = a.oracle_cap;
  spec.workers = a.workers > 0 ? a.workers : workers_from_env();
  return spec;
}

inline void write_summary(std::ostream& out, std::span<const ResultRow> rows) {
  out << "instance solver budget feasible/runs mean_size m\n";
  for (const SummaryLine& s : summarize(rows)) {
    out << s.instance << ' ' << s.solver << ' ' << s.budget << ' '
        << s.feasible_runs << '/' << s.runs << ' ' << std::fixed
        << std::setprecision(3) << s.mean_size << std::defaultfloat << ' '
        << (s.m ? std::to_string(*s.m) : "-") << '\n';
  }
}

inline int do_bench(const BenchArgs& a, std::ostream& out) {
  const ExperimentSpec spec = make_experiment(a);
  const std::vector<ResultRow> rows = run_experiment(spec);
  std::ostringstream csv;
  write_csv(csv, rows);
  if (a.out.empty()) {
    out << csv.str();
  } else {
    write_text_file(a.out, csv.str());
    write_summary(out, rows);
  }
  if (!a.json.empty()) {
    write_text_file(a.json, to_json(std::span<const ResultRow>(rows)).dump(2) + "\n");
  }
  const bool all_feasible =
      std::all_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.feasible; });
  return all_feasible ? kOk : kInfeasible;
}

}  // namespace detail

/// Entry point for the `cdsevo` executable: subcommands gen, solve, bench.
/// Returns 0 on success, 2 when some run ended without a feasible solution,
/// 1 on usage or I/O errors.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Evolutionary and baseline solvers for minimum connected dominating set"};
  app.require_subcommand(1);

  detail::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random connected graph");
  gen_cmd->add_option("--model", gen.model, "ba | er")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--p", gen.p, "ER edge probability (default ln(n)/n)");
  gen_cmd->add_option("--max-retries", gen.max_retries, "ER connectivity retries");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  detail::SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one solver on a graph file");
  solve_cmd->add_option("--algo", solve.algo, "semo | gsemo | greedy | exact")->required();
  solve_cmd->add_option("--graph", solve.graph, "Graph file")->required();
  solve_cmd->add_option("--budget", solve.budget, "T1 | T2 | T3 | eT1 | <iterations>");
  solve_cmd->add_option("--seed", solve.seed, "Run seed");
  solve_cmd->add_option("--trace", solve.trace, "Write the search trace as CSV");
  solve_cmd->add_option("--trace-every", solve.trace_every,
                        "Trace cadence (default budget/1000)");
  solve_cmd->add_flag("--diagnostics", solve.diagnostics,
                      "Run the exact oracle and trace potential K");
  solve_cmd->add_option("--oracle-cap", solve.oracle_cap, "Largest n for the exact oracle");
  solve_cmd->add_option("--csv", solve.csv, "Write the result row as CSV");
  solve_cmd->add_option("--json", solve.json, "Write the result row as JSON");

  detail::BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment sweep and emit CSV");
  bench_cmd->add_option("--models", bench.models, "Generated models: ba, er")->delimiter(',');
  bench_cmd->add_option("--sizes", bench.sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--instances", bench.instances, "Instances per model and size");
  bench_cmd->add_option("--gen-seed", bench.gen_seed, "First generator seed");
  bench_cmd->add_option("--graph", bench.graphs, "Extra graph files");
  bench_cmd->add_option("--solvers", bench.solvers, "semo,gsemo,greedy,exact")->delimiter(',');
  bench_cmd->add_option("--budgets", bench.budgets, "T1,T2,T3,eT1 or integers")->delimiter(',');
  bench_cmd->add_option("--replicates", bench.replicates, "Seeded runs per EA budget");
  bench_cmd->add_option("--base-seed", bench.base_seed, "Run seeds are base-seed + replicate");
  bench_cmd->add_option("--oracle-cap", bench.oracle_cap,
                        "Largest n for the exact oracle (0 disables)");
  bench_cmd->add_option("--workers", bench.workers,
                        "Worker threads (default CDSEVO_WORKERS or 1)");
  bench_cmd->add_option("--out", bench.out, "CSV output file (default stdout)");
  bench_cmd->add_option("--json", bench.json, "Also write rows as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*gen_cmd) return detail::do_gen(gen, out);
    if (*solve_cmd) return detail::do_solve(solve, out);
    return detail::do_bench(bench, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace cdsevo::cli
