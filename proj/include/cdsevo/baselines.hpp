#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdsevo/graph.hpp"
#include "cdsevo/objectives.hpp"
#include "cdsevo/vertex_set.hpp"

namespace cdsevo {

struct GreedyStep {
  Vertex chosen_vertex = 0;
  std::size_t f1_before = 0;
  std::size_t f1_after = 0;

  friend bool operator==(const GreedyStep&, const GreedyStep&) = default;
};

struct GreedyResult {
  VertexSet set;
  std::vector<GreedyStep> steps;
};

/// The vertex v outside C maximizing f1(C) - f1(C + v), smallest id on ties.
/// Empty when C already contains every vertex.
inline std::optional<GreedyStep> greedy_step(const Graph& g, const VertexSet& c,
                                             std::size_t f1_before) {
  std::optional<GreedyStep> best;
  VertexSet trial = c;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c.contains(v)) continue;
    trial.insert(v);
    const std::size_t f1 = evaluate(g, trial).f1;
    trial.erase(v);
    if (!best || f1 < best->f1_after) best = GreedyStep{v, f1_before, f1};
  }
  return best;
}

/// One-stage greedy: from the empty set, repeatedly add the vertex with the
/// largest f1 decrease until f1 reaches 2.
inline GreedyResult greedy_cds(const Graph& g) {
  require_solvable(g);
  GreedyResult result{VertexSet(g.vertex_count()), {}};
  std::size_t f1 = evaluate(g, result.set).f1;
  while (f1 > 2) {
    const auto step = greedy_step(g, result.set, f1);
    if (!step) throw std::logic_error("greedy_cds: ran out of vertices");
    result.set.insert(step->chosen_vertex);
    result.steps.push_back(*step);
    f1 = step->f1_after;
  }
  return result;
}

struct ExactResult {
  VertexSet optimum;
  std::size_t m = 0;
  std::uint64_t subsets_examined = 0;
};

inline constexpr std::size_t kDefaultOracleCap = 20;

namespace detail {

inline bool mask_connected(std::uint64_t mask,
                           const std::vector<std::uint64_t>& closed) {
  if (mask == 0) return false;
  std::uint64_t reached = mask & (~mask + 1);
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= closed[static_cast<std::size_t>(std::countr_zero(f))];
    }
    next &= mask & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == mask;
}

}  // namespace detail

/// Minimum connected dominating set by exhaustive search over subsets of
/// increasing size. Sets that fail to dominate V are discarded before the
/// connectivity test. Refuses graphs with more than max_n vertices.
inline ExactResult exact_min_cds(const Graph& g,
                                 std::size_t max_n = kDefaultOracleCap) {
  const std::size_t n = g.vertex_count();
  if (n > max_n) {
    throw std::invalid_argument("exact oracle: n = " + std::to_string(n) +
                                " exceeds cap " + std::to_string(max_n));
  }
  if (n == 0 || n > 63) {
    throw std::invalid_argument("exact oracle supports 1 <= n <= 63");
  }
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");

  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= std::uint64_t{1} << w;
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  ExactResult result;
  for (std::size_t k = 1; k <= n; ++k) {
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s <= all) {
      ++result.subsets_examined;
      std::uint64_t covered = 0;
      for (std::uint64_t b = s; b != 0; b &= b - 1) {
        covered |= closed[static_cast<std::size_t>(std::countr_zero(b))];
      }
      if (covered == all && detail::mask_connected(s, closed)) {
        result.optimum = VertexSet::from_mask(n, s);
        result.m = k;
        return result;
      }
      // Next k-subset in colexicographic order.
      const std::uint64_t low = s & (~s + 1);
      const std::uint64_t ripple = s + low;
      if (ripple == 0) break;
      s = (((ripple ^ s) >> 2) / low) | ripple;
    }
  }
  throw std::logic_error("exact oracle: no CDS found in a connected graph");
}

/// Checks, for every C with f1(C) > 2, that the greedy step v_C satisfies
///   f1(C + v_C) <= f1(C) - 1                      and
///   f1(C + v_C) <= (1 - 1/m) f1(C) + 2/m + 1,
/// the latter compared exactly as m*f1' <= (m-1)*f1 + m + 2.
inline bool verify_improvement_bound(const Graph& g, std::size_t m) {
  const std::size_t n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("verify_improvement_bound: n must be <= 12");
  if (m < 1) throw std::invalid_argument("optimum size m must be >= 1");
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet c = VertexSet::from_mask(n, mask);
    const std::size_t f1 = evaluate(g, c).f1;
    if (f1 <= 2) continue;
    const auto step = greedy_step(g, c, f1);
    if (!step) return false;
    if (step->f1_after + 1 > f1) return false;
    if (m * step->f1_after > (m - 1) * f1 + m + 2) return false;
  }
  return true;
}

}  // namespace cdsevo
