#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdsevo/vertex_set.hpp"

namespace cdsevo {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Construction rejects self-loops, parallel edges and out-of-range ids.
/// Connectivity is not required here; solver entry points check it through
/// require_solvable().
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw std::invalid_argument("edge endpoint out of range: " +
                                    std::to_string(u + 1) + " " +
                                    std::to_string(v + 1));
      }
      if (u == v) {
        throw std::invalid_argument("self-loop at vertex " +
                                    std::to_string(u + 1));
      }
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end());
        dup != edges.end()) {
      throw std::invalid_argument("parallel edge " +
                                  std::to_string(dup->first + 1) + " " +
                                  std::to_string(dup->second + 1));
    }
    for (const auto& [u, v] : edges) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      max_degree_ = std::max(max_degree_, nbrs.size());
    }
    edges_ = std::move(edges);
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  /// Sorted neighbor list of v.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// Edges with first < second, sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

 private:
  std::size_t n_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[b] = a;
    --components_;
  }

  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_;
};

inline void check_universe(const Graph& g, const VertexSet& c) {
  if (c.universe() != g.vertex_count()) {
    throw std::invalid_argument("vertex set universe does not match graph");
  }
}

}  // namespace detail

/// True iff a BFS from vertex 0 reaches every vertex. The empty graph counts
/// as connected.
inline bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

/// Validates the preconditions shared by the solvers: connected, n >= 3.
inline void require_solvable(const Graph& g) {
  if (g.vertex_count() < 3) {
    throw std::invalid_argument("graph must have at least 3 vertices");
  }
  if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
}

/// p(C): number of connected components of the induced subgraph G[C].
/// Zero for the empty set.
inline std::size_t component_count_induced(const Graph& g, const VertexSet& c) {
  detail::check_universe(g, c);
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex s : c.to_vector()) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w] && c.contains(w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

/// q(C): number of connected components of the spanning subgraph on all n
/// vertices whose edges are those with at least one endpoint in C. Equals n
/// for the empty set.
inline std::size_t component_count_closed(const Graph& g, const VertexSet& c) {
  detail::check_universe(g, c);
  detail::DisjointSets sets(g.vertex_count());
  for (Vertex u : c.to_vector()) {
    for (Vertex w : g.neighbors(u)) sets.unite(u, w);
  }
  return sets.components();
}

/// Direct connected-dominating-set check: nonempty, every vertex outside C has
/// a neighbor in C, and G[C] is connected.
inline bool is_cds(const Graph& g, const VertexSet& c) {
  detail::check_universe(g, c);
  if (c.empty()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c.contains(v)) continue;
    const auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(),
                     [&](Vertex w) { return c.contains(w); })) {
      return false;
    }
  }
  return component_count_induced(g, c) == 1;
}

}  // namespace cdsevo
