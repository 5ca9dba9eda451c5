#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cdsevo/baselines.hpp"
#include "cdsevo/evo.hpp"
#include "cdsevo/generators.hpp"
#include "cdsevo/graph.hpp"
#include "cdsevo/graph_io.hpp"

namespace cdsevo {

enum class Solver { Semo, Gsemo, Greedy, Exact };

inline std::string to_string(Solver s) {
  switch (s) {
    case Solver::Semo:
      return "semo";
    case Solver::Gsemo:
      return "gsemo";
    case Solver::Greedy:
      return "greedy";
    case Solver::Exact:
      return "exact";
  }
  return "?";
}

inline Solver parse_solver(const std::string& s) {
  if (s == "semo") return Solver::Semo;
  if (s == "gsemo") return Solver::Gsemo;
  if (s == "greedy") return Solver::Greedy;
  if (s == "exact") return Solver::Exact;
  throw std::invalid_argument("unknown solver '" + s +
                              "' (expected semo|gsemo|greedy|exact)");
}

inline bool is_evolutionary(Solver s) {
  return s == Solver::Semo || s == Solver::Gsemo;
}

/// One CSV/JSON record. Absent optionals serialize as empty CSV fields and
/// JSON nulls.
struct ResultRow {
  std::string instance;
  std::string model;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::string solver;
  std::string budget;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> size;
  bool feasible = false;
  std::optional<std::uint64_t> first_feasible_iter;
  std::uint64_t iterations = 0;
  double wall_time_s = 0.0;
  std::optional<std::size_t> m;
  std::optional<double> ratio;
};

inline constexpr const char* kCsvHeader =
    "instance,model,n,delta,solver,budget,seed,size,feasible,"
    "first_feasible_iter,iterations,wall_time_s,m,ratio";

namespace detail {

template <typename T>
std::string opt_field(const std::optional<T>& v) {
  if (!v) return "";
  std::ostringstream s;
  if constexpr (std::is_floating_point_v<T>) s << std::fixed << std::setprecision(6);
  s << *v;
  return s.str();
}

template <typename T>
nlohmann::json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace detail

inline void write_csv_row(std::ostream& out, const ResultRow& r) {
  out << r.instance << ',' << r.model << ',' << r.n << ',' << r.delta << ','
      << r.solver << ',' << r.budget << ',' << detail::opt_field(r.seed) << ','
      << detail::opt_field(r.size) << ',' << (r.feasible ? "true" : "false")
      << ',' << detail::opt_field(r.first_feasible_iter) << ',' << r.iterations
      << ',' << std::fixed << std::setprecision(6) << r.wall_time_s
      << std::defaultfloat << ',' << detail::opt_field(r.m) << ','
      << detail::opt_field(r.ratio) << '\n';
}

inline void write_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << kCsvHeader << '\n';
  for (const ResultRow& r : rows) write_csv_row(out, r);
}

inline nlohmann::json to_json(const ResultRow& r) {
  return nlohmann::json{{"instance", r.instance},
                        {"model", r.model},
                        {"n", r.n},
                        {"delta", r.delta},
                        {"solver", r.solver},
                        {"budget", r.budget},
                        {"seed", detail::opt_json(r.seed)},
                        {"size", detail::opt_json(r.size)},
                        {"feasible", r.feasible},
                        {"first_feasible_iter", detail::opt_json(r.first_feasible_iter)},
                        {"iterations", r.iterations},
                        {"wall_time_s", r.wall_time_s},
                        {"m", detail::opt_json(r.m)},
                        {"ratio", detail::opt_json(r.ratio)}};
}

inline nlohmann::json to_json(std::span<const ResultRow> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ResultRow& r : rows) arr.push_back(to_json(r));
  return arr;
}

/// A named graph plus its provenance and, when the oracle applies, m.
struct Instance {
  std::string id;
  std::string model;
  Graph graph;
  std::optional<std::size_t> m;
};

struct SolveOutcome {
  ResultRow row;
  std::optional<VertexSet> solution;
  RunReport run;  // populated for evolutionary solvers only
};

/// Runs one solver on one instance and fills a ResultRow. Any returned set is
/// re-checked with is_cds; a set that fails the check is reported infeasible.
inline SolveOutcome solve_instance(const Instance& inst, Solver solver,
                                   const Budget& budget, std::uint64_t seed,
                                   const RunConfig* base_cfg = nullptr,
                                   std::size_t oracle_cap = kDefaultOracleCap) {
  const Graph& g = inst.graph;
  SolveOutcome out;
  ResultRow& row = out.row;
  row.instance = inst.id;
  row.model = inst.model;
  row.n = g.vertex_count();
  row.delta = g.max_degree();
  row.solver = to_string(solver);
  row.m = inst.m;

  const auto start = std::chrono::steady_clock::now();
  switch (solver) {
    case Solver::Semo:
    case Solver::Gsemo: {
      RunConfig cfg = base_cfg ? *base_cfg : RunConfig{};
      cfg.algorithm = solver == Solver::Semo ? Algorithm::Semo : Algorithm::Gsemo;
      cfg.budget = budget;
      cfg.seed = seed;
      out.run = run(g, cfg);
      out.solution = out.run.solution;
      row.budget = budget.label();
      row.seed = seed;
      row.iterations = out.run.iterations_used;
      row.first_feasible_iter = out.run.first_feasible_iteration;
      break;
    }
    case Solver::Greedy: {
      GreedyResult gr = greedy_cds(g);
      row.budget = "-";
      row.iterations = gr.steps.size();
      out.solution = std::move(gr.set);
      break;
    }
    case Solver::Exact: {
      ExactResult ex = exact_min_cds(g, oracle_cap);
      row.budget = "-";
      row.iterations = ex.subsets_examined;
      row.m = ex.m;
      out.solution = std::move(ex.optimum);
      break;
    }
  }
  row.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (out.solution && is_cds(g, *out.solution)) {
    row.feasible = true;
    row.size = out.solution->size();
    if (row.m) row.ratio = static_cast<double>(*row.size) / static_cast<double>(*row.m);
  } else {
    out.solution.reset();
  }
  return out;
}

struct InstanceSource {
  std::variant<GenSpec, std::filesystem::path> source;

  std::string id() const {
    if (const auto* spec = std::get_if<GenSpec>(&source)) {
      return to_string(spec->model) + "-n" + std::to_string(spec->n) + "-s" +
             std::to_string(spec->seed);
    }
    return std::get<std::filesystem::path>(source).stem().string();
  }
};

inline Instance load_instance(const InstanceSource& src, std::size_t oracle_cap) {
  Instance inst;
  inst.id = src.id();
  if (const auto* spec = std::get_if<GenSpec>(&src.source)) {
    inst.model = to_string(spec->model);
    inst.graph = generate(*spec);
  } else {
    inst.model = "file";
    inst.graph = read_graph_file(std::get<std::filesystem::path>(src.source));
  }
  if (inst.graph.vertex_count() <= oracle_cap) {
    inst.m = exact_min_cds(inst.graph, oracle_cap).m;
  }
  return inst;
}

struct ExperimentSpec {
  std::vector<InstanceSource> corpus;
  std::vector<Solver> solvers;
  std::vector<Budget> budgets;
  std::size_t replicates = 1;
  std::uint64_t base_seed = 0;
  /// The oracle runs (and ratios are reported) for instances with n <= cap;
  /// 0 disables it.
  std::size_t oracle_cap = kDefaultOracleCap;
  std::size_t workers = 1;
};

/// Worker count from CDSEVO_WORKERS, defaulting to 1.
inline std::size_t workers_from_env() {
  const char* v = std::getenv("CDSEVO_WORKERS");
  if (v == nullptr || *v == '\0') return 1;
  try {
    const long parsed = std::stol(v);
    return parsed < 1 ? 1 : static_cast<std::size_t>(parsed);
  } catch (const std::exception&) {
    return 1;
  }
}

/// Runs the cross product instances x solvers x budgets x replicates.
/// Evolutionary runs use seed base_seed + replicate; greedy and exact are
/// deterministic and run once per instance. Rows come back in canonical
/// order (corpus, solver, budget, replicate as listed),
/// independent of the worker count. A run that throws is recorded as an
/// infeasible row rather than aborting the sweep.
inline std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  if (spec.solvers.empty()) throw std::invalid_argument("no solvers given");

  std::vector<Instance> instances;
  instances.reserve(spec.corpus.size());
  for (const InstanceSource& src : spec.corpus) {
    instances.push_back(load_instance(src, spec.oracle_cap));
    const Instance& inst = instances.back();
    for (Solver s : spec.solvers) {
      if (s == Solver::Exact && inst.graph.vertex_count() > spec.oracle_cap) {
        throw std::invalid_argument("exact solver requested on " + inst.id +
                                    " with n above the oracle cap");
      }
    }
  }

  struct Job {
    std::size_t instance;
    Solver solver;
    Budget budget;
    std::optional<std::uint64_t> seed;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (Solver s : spec.solvers) {
      if (!is_evolutionary(s)) {
        jobs.push_back({i, s, Budget{}, std::nullopt});
        continue;
      }
      if (spec.budgets.empty()) throw std::invalid_argument("no budgets given");
      for (const Budget& b : spec.budgets) {
        for (std::size_t r = 0; r < spec.replicates; ++r) {
          jobs.push_back({i, s, b, spec.base_seed + r});
        }
      }
    }
  }

  std::vector<ResultRow> rows(jobs.size());
  auto execute = [&](std::size_t j) {
    const Job& job = jobs[j];
    const Instance& inst = instances[job.instance];
    try {
      rows[j] = solve_instance(inst, job.solver, job.budget, job.seed.value_or(0),
                               nullptr, spec.oracle_cap)
                    .row;
      if (!job.seed) rows[j].seed.reset();
    } catch (const std::exception&) {
      ResultRow r;
      r.instance = inst.id;
      r.model = inst.model;
      r.n = inst.graph.vertex_count();
      r.delta = inst.graph.max_degree();
      r.solver = to_string(job.solver);
      r.budget = is_evolutionary(job.solver) ? job.budget.label() : "-";
      r.seed = job.seed;
      r.m = inst.m;
      rows[j] = std::move(r);
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, spec.workers);
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs.size(); ++j) execute(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) execute(j);
      });
    }
  }
  return rows;
}

/// Per (instance, solver, budget) aggregate of a result table.
struct SummaryLine {
  std::string instance;
  std::string solver;
  std::string budget;
  std::size_t runs = 0;
  std::size_t feasible_runs = 0;
  double mean_size = 0.0;  // over feasible runs
  std::optional<std::size_t> m;
  std::size_t delta = 0;
};

inline std::vector<SummaryLine> summarize(std::span<const ResultRow> rows) {
  std::vector<SummaryLine> out;
  std::map<std::tuple<std::string, std::string, std::string>, std::size_t> index;
  for (const ResultRow& r : rows) {
    auto key = std::make_tuple(r.instance, r.solver, r.budget);
    auto [it, inserted] = index.try_emplace(key, out.size());
    if (inserted) {
      out.push_back({r.instance, r.solver, r.budget, 0, 0, 0.0, r.m, r.delta});
    }
    SummaryLine& s = out[it->second];
    ++s.runs;
    if (r.feasible && r.size) {
      s.mean_size += (static_cast<double>(*r.size) - s.mean_size) /
                     static_cast<double>(++s.feasible_runs);
    }
  }
  return out;
}

}  // namespace cdsevo
