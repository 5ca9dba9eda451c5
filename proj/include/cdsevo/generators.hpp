#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdsevo/graph.hpp"
#include "cdsevo/rng.hpp"

namespace cdsevo {

enum class Model { BA, ER };

inline std::string to_string(Model m) { return m == Model::BA ? "ba" : "er"; }

inline Model parse_model(const std::string& s) {
  if (s == "ba") return Model::BA;
  if (s == "er") return Model::ER;
  throw std::invalid_argument("unknown model '" + s + "' (expected ba|er)");
}

struct GenSpec {
  Model model = Model::BA;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  /// Edge probability for ER; defaults to ln(n)/n.
  std::optional<double> er_p{};
  /// Edges attached per new BA vertex. Only 2 is supported.
  std::size_t ba_m = 2;
  /// ER resampling cap before giving up on connectivity.
  std::size_t max_retries = 1000;
};

inline double default_er_probability(std::size_t n) {
  return std::log(static_cast<double>(n)) / static_cast<double>(n);
}

/// Barabasi-Albert growth from the 4-cycle 1-2-3-4-1. Each new vertex links to
/// two distinct existing vertices drawn without replacement, each with
/// probability proportional to its degree before the step.
inline Graph gen_ba(const GenSpec& spec) {
  if (spec.n < 4) throw std::invalid_argument("BA model needs n >= 4");
  if (spec.ba_m != 2) throw std::invalid_argument("BA model supports ba_m = 2 only");
  Rng rng(splitmix64(spec.seed));
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  std::vector<std::size_t> degree(spec.n, 0);
  degree[0] = degree[1] = degree[2] = degree[3] = 2;

  auto draw = [&](std::size_t existing, std::size_t total,
                  std::optional<Vertex> skip) {
    std::uint64_t r = rng.below(total);
    for (Vertex v = 0; v < existing; ++v) {
      if (skip && *skip == v) continue;
      if (r < degree[v]) return v;
      r -= degree[v];
    }
    throw std::logic_error("gen_ba: degree sampling fell through");
  };

  std::size_t degree_sum = 8;
  for (Vertex t = 4; t < spec.n; ++t) {
    const Vertex a = draw(t, degree_sum, std::nullopt);
    const Vertex b = draw(t, degree_sum - degree[a], a);
    edges.emplace_back(a, t);
    edges.emplace_back(b, t);
    ++degree[a];
    ++degree[b];
    degree[t] = 2;
    degree_sum += 4;
  }
  return Graph(spec.n, std::move(edges));
}

/// Connected G(n, p) by rejection: resample until connected, giving up after
/// max_retries draws.
inline Graph gen_er_connected(const GenSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("ER model needs n >= 2");
  const double p = spec.er_p.value_or(default_er_probability(spec.n));
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("ER edge probability must be in (0, 1]");
  }
  if (spec.max_retries < 1) throw std::invalid_argument("max_retries must be >= 1");
  Rng rng(splitmix64(spec.seed));
  for (std::size_t attempt = 0; attempt < spec.max_retries; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < spec.n; ++u) {
      for (Vertex v = u + 1; v < spec.n; ++v) {
        if (rng.bernoulli(p)) edges.emplace_back(u, v);
      }
    }
    Graph g(spec.n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("ER: no connected graph after " +
                           std::to_string(spec.max_retries) +
                           " draws (p too small for n = " +
                           std::to_string(spec.n) + ")");
}

inline Graph generate(const GenSpec& spec) {
  return spec.model == Model::BA ? gen_ba(spec) : gen_er_connected(spec);
}

}  // namespace cdsevo
