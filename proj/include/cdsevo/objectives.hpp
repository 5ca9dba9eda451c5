#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>

#include "cdsevo/graph.hpp"

namespace cdsevo {

/// Bi-objective fitness of a vertex set C. Both objectives are minimized.
///
/// f1 = p(C) + q(C) measures distance from feasibility: it is at least 2 for
/// every nonempty set and equals 2 exactly when C is a connected dominating
/// set. f2 = |C| is the solution size.
struct Evaluation {
  std::size_t f1 = 0;
  std::size_t f2 = 0;
  std::size_t p = 0;
  std::size_t q = 0;

  friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

inline Evaluation evaluate(const Graph& g, const VertexSet& c) {
  Evaluation e;
  e.p = component_count_induced(g, c);
  e.q = component_count_closed(g, c);
  e.f1 = e.p + e.q;
  e.f2 = c.size();
  return e;
}

/// Exact classification of a against b on (f1, f2).
///
/// With two minimized objectives, "weakly better and not equal" is the same
/// as "better", so the four outcomes partition all pairs. Use weakly_better()
/// for the non-strict relation.
enum class Dominance { Better, Equal, Worse, Incomparable };

inline bool weakly_better(const Evaluation& a, const Evaluation& b) noexcept {
  return a.f1 <= b.f1 && a.f2 <= b.f2;
}

inline bool better(const Evaluation& a, const Evaluation& b) noexcept {
  return weakly_better(a, b) && (a.f1 < b.f1 || a.f2 < b.f2);
}

inline Dominance compare(const Evaluation& a, const Evaluation& b) noexcept {
  const bool ab = weakly_better(a, b);
  const bool ba = weakly_better(b, a);
  if (ab && ba) return Dominance::Equal;
  if (ab) return Dominance::Better;
  if (ba) return Dominance::Worse;
  return Dominance::Incomparable;
}

// Analysis diagnostics. Both need the optimum size m, so they are only usable
// when an exact oracle has been run; the search itself never consults them.

/// Right-hand side of the good-individual constraint:
/// (n - 2 - m) * (1 - 1/m)^size + m + 2.
inline double good_individual_bound(std::size_t n, std::size_t m,
                                    std::size_t size) {
  if (m < 1) throw std::invalid_argument("optimum size m must be >= 1");
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return (nd - 2.0 - md) * std::pow(1.0 - 1.0 / md, static_cast<double>(size)) +
         md + 2.0;
}

inline bool is_good_individual(const Evaluation& e, std::size_t n,
                               std::size_t m) {
  return static_cast<double>(e.f1) <= good_individual_bound(n, m, e.f2);
}

/// m * ln(Delta) + 2m + 2, the budget on f1 + f2 that defines potential K.
inline double potential_k_budget(std::size_t m, std::size_t max_degree) {
  if (m < 1) throw std::invalid_argument("optimum size m must be >= 1");
  if (max_degree < 1) throw std::invalid_argument("max degree must be >= 1");
  const double md = static_cast<double>(m);
  return md * std::log(static_cast<double>(max_degree)) + 2.0 * md + 2.0;
}

/// Potential K: smallest f1 among archive members with f1 + f2 within
/// potential_k_budget(m, max_degree). Empty when no member qualifies.
inline std::optional<std::size_t> potential_k(std::span<const Evaluation> archive,
                                              std::size_t m,
                                              std::size_t max_degree) {
  const double budget = potential_k_budget(m, max_degree);
  std::optional<std::size_t> k;
  for (const Evaluation& e : archive) {
    if (static_cast<double>(e.f1 + e.f2) <= budget && (!k || e.f1 < *k)) {
      k = e.f1;
    }
  }
  return k;
}

}  // namespace cdsevo
