#pragma once

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdsevo/graph.hpp"
#include "cdsevo/objectives.hpp"
#include "cdsevo/rng.hpp"
#include "cdsevo/vertex_set.hpp"

namespace cdsevo {

struct Individual {
  VertexSet bits;
  Evaluation eval;

  static Individual of(const Graph& g, VertexSet bits) {
    Evaluation e = evaluate(g, bits);
    return Individual{std::move(bits), e};
  }
};

enum class OfferResult { Accepted, Rejected };

/// Pareto archive of mutually incomparable individuals.
///
/// Members are kept sorted by ascending f1 (hence strictly descending f2), and
/// no two members share an f1 value.
class Population {
 public:
  Population() = default;
  explicit Population(Individual initial) { members_.push_back(std::move(initial)); }

  /// Rejects x if some member is strictly better. Otherwise inserts x and
  /// drops every member that x weakly dominates, including exact ties, so an
  /// offspring with equal objectives replaces the incumbent.
  OfferResult offer(Individual x) {
    for (const Individual& z : members_) {
      if (better(z.eval, x.eval)) return OfferResult::Rejected;
    }
    std::erase_if(members_, [&](const Individual& z) {
      return weakly_better(x.eval, z.eval);
    });
    auto pos = std::lower_bound(
        members_.begin(), members_.end(), x.eval.f1,
        [](const Individual& z, std::size_t f1) { return z.eval.f1 < f1; });
    members_.insert(pos, std::move(x));
    return OfferResult::Accepted;
  }

  std::span<const Individual> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  const Individual* find_f1(std::size_t f1) const {
    auto it = std::find_if(members_.begin(), members_.end(),
                           [&](const Individual& z) { return z.eval.f1 == f1; });
    return it == members_.end() ? nullptr : &*it;
  }

  /// The member with f1 == 2, if any. The unique-f1 rule makes it unique.
  const Individual* best_feasible() const { return find_f1(2); }

  std::vector<Evaluation> evaluations() const {
    std::vector<Evaluation> out;
    out.reserve(members_.size());
    for (const Individual& z : members_) out.push_back(z.eval);
    return out;
  }

 private:
  std::vector<Individual> members_;
};

inline OfferResult archive_offer(Population& p, Individual x) {
  return p.offer(std::move(x));
}

/// Flips exactly one bit chosen uniformly at random.
inline VertexSet mutate_one_bit(const VertexSet& x, Rng& rng) {
  if (x.universe() == 0) throw std::invalid_argument("mutate: empty universe");
  VertexSet y = x;
  y.flip(static_cast<Vertex>(rng.below(x.universe())));
  return y;
}

/// Flips each bit independently with probability 1/n. May return x unchanged.
inline VertexSet mutate_per_bit(const VertexSet& x, Rng& rng) {
  if (x.universe() == 0) throw std::invalid_argument("mutate: empty universe");
  const double rate = 1.0 / static_cast<double>(x.universe());
  VertexSet y = x;
  for (Vertex v = 0; v < x.universe(); ++v) {
    if (rng.bernoulli(rate)) y.flip(v);
  }
  return y;
}

enum class Algorithm { Semo, Gsemo };

inline std::string to_string(Algorithm a) {
  return a == Algorithm::Semo ? "semo" : "gsemo";
}

/// Iteration budget, either fixed or derived from the instance size:
/// T1 = n(n-1)(n-2), T2 = n^2, T3 = ceil(n^2 ln n), eT1 = ceil(e * T1).
struct Budget {
  enum class Kind { Fixed, T1, T2, T3, ET1 };

  Kind kind = Kind::T1;
  std::uint64_t iterations = 0;

  static Budget fixed(std::uint64_t t) { return {Kind::Fixed, t}; }
  static Budget preset(Kind k) { return {k, 0}; }

  std::uint64_t resolve(std::size_t n) const {
    const auto nn = static_cast<std::uint64_t>(n);
    const std::uint64_t t1 = n >= 2 ? nn * (nn - 1) * (nn - 2) : 0;
    switch (kind) {
      case Kind::Fixed:
        return iterations;
      case Kind::T1:
        return t1;
      case Kind::T2:
        return nn * nn;
      case Kind::T3:
        return n < 2 ? 0
                     : static_cast<std::uint64_t>(std::ceil(
                           static_cast<double>(nn * nn) *
                           std::log(static_cast<double>(nn))));
      case Kind::ET1:
        return static_cast<std::uint64_t>(
            std::ceil(std::numbers::e * static_cast<double>(t1)));
    }
    return 0;
  }

  std::string label() const {
    switch (kind) {
      case Kind::Fixed:
        return std::to_string(iterations);
      case Kind::T1:
        return "T1";
      case Kind::T2:
        return "T2";
      case Kind::T3:
        return "T3";
      case Kind::ET1:
        return "eT1";
    }
    return "?";
  }

  /// Parses "T1", "T2", "T3", "eT1" or a nonnegative integer.
  static Budget parse(const std::string& s) {
    if (s == "T1") return preset(Kind::T1);
    if (s == "T2") return preset(Kind::T2);
    if (s == "T3") return preset(Kind::T3);
    if (s == "eT1") return preset(Kind::ET1);
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](unsigned char c) { return std::isdigit(c); })) {
      throw std::invalid_argument("invalid budget '" + s + "'");
    }
    return fixed(std::stoull(s));
  }

  friend bool operator==(const Budget&, const Budget&) = default;
};

struct RunConfig {
  Algorithm algorithm = Algorithm::Semo;
  Budget budget;
  std::uint64_t seed = 0;
  /// Record a trace point every this many iterations; 0 disables tracing.
  std::uint64_t trace_every = 0;
  /// Optimum size, when known; enables potential K in the trace.
  std::optional<std::size_t> diagnostics_m;
};

struct TracePoint {
  std::uint64_t iteration = 0;
  std::optional<std::size_t> best_feasible_size;
  std::size_t archive_size = 0;
  std::optional<std::size_t> potential_k;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct RunReport {
  std::optional<VertexSet> solution;
  std::size_t solution_size = 0;
  std::uint64_t iterations_used = 0;
  std::optional<std::uint64_t> first_feasible_iteration;
  std::vector<TracePoint> trace;
  /// Objective values of the final archive, ascending f1.
  std::vector<Evaluation> final_archive;
  double wall_time = 0.0;
};

namespace detail {

inline TracePoint trace_point(const Graph& g, const RunConfig& cfg,
                              const Population& pop, std::uint64_t t) {
  TracePoint tp;
  tp.iteration = t;
  if (const Individual* best = pop.best_feasible()) {
    tp.best_feasible_size = best->eval.f2;
  }
  tp.archive_size = pop.size();
  if (cfg.diagnostics_m) {
    const auto evals = pop.evaluations();
    tp.potential_k = potential_k(evals, *cfg.diagnostics_m, g.max_degree());
  }
  return tp;
}

}  // namespace detail

/// Runs the Pareto-archive search for exactly budget.resolve(n) iterations,
/// starting from the archive {empty set}. Each iteration picks a parent
/// uniformly from the archive, mutates it (one-bit flip for SEMO, per-bit
/// flips at rate 1/n for GSEMO) and offers the child to the archive. The
/// result is the archive member with f1 == 2, or no solution if none exists.
///
/// `observer(const Population&, std::uint64_t iteration)` is called after
/// every iteration.
template <typename Observer>
RunReport run(const Graph& g, const RunConfig& cfg, Observer&& observer) {
  require_solvable(g);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.vertex_count();
  const std::uint64_t budget = cfg.budget.resolve(n);

  Rng selection = Rng::stream(cfg.seed, 0);
  Rng mutation = Rng::stream(cfg.seed, 1);
  Population pop(Individual::of(g, VertexSet(n)));

  RunReport report;
  if (cfg.trace_every > 0) report.trace.push_back(detail::trace_point(g, cfg, pop, 0));

  for (std::uint64_t t = 1; t <= budget; ++t) {
    const Individual& parent = pop.members()[selection.below(pop.size())];
    VertexSet child = cfg.algorithm == Algorithm::Semo
                          ? mutate_one_bit(parent.bits, mutation)
                          : mutate_per_bit(parent.bits, mutation);
    pop.offer(Individual::of(g, std::move(child)));

    bool record = cfg.trace_every > 0 && t % cfg.trace_every == 0;
    if (!report.first_feasible_iteration && pop.best_feasible()) {
      report.first_feasible_iteration = t;
      record = record || cfg.trace_every > 0;
    }
    if (record) report.trace.push_back(detail::trace_point(g, cfg, pop, t));
    observer(std::as_const(pop), t);
  }

  report.iterations_used = budget;
  if (const Individual* best = pop.best_feasible()) {
    report.solution = best->bits;
    report.solution_size = best->eval.f2;
  }
  report.final_archive = pop.evaluations();
  report.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

inline RunReport run(const Graph& g, const RunConfig& cfg) {
  return run(g, cfg, [](const Population&, std::uint64_t) {});
}

}  // namespace cdsevo
