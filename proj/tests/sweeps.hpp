#pragma once

// Lattice sweeps over the good-individual constraint, shared by the unit and
// acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "cdsevo/objectives.hpp"

namespace sweeps {

struct SweepResult {
  std::size_t points_checked = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

/// (n, m, Delta) triples a connected graph can realize: 1 <= Delta <= n-1,
/// 1 <= m <= n-2, and n <= (Delta+1) m since each CDS vertex dominates at
/// most Delta+1 vertices.
inline bool realizable(std::size_t n, std::size_t m, std::size_t delta) {
  return n >= 3 && m >= 1 && m <= n - 2 && delta >= 1 && delta <= n - 1 &&
         n <= (delta + 1) * m;
}

/// Good individual with f1 >= 2m+2 has size <= m ln Delta.
inline SweepResult sweep_size_bound(std::size_t max_n, std::size_t max_m,
                                std::size_t max_delta) {
  SweepResult r;
  for (std::size_t n = 3; n <= max_n; ++n) {
    for (std::size_t m = 1; m <= max_m; ++m) {
      for (std::size_t d = 1; d <= max_delta; ++d) {
        if (!realizable(n, m, d)) continue;
        const double cap = static_cast<double>(m) * std::log(static_cast<double>(d));
        for (std::size_t f1 = 2; f1 <= n; ++f1) {
          for (std::size_t f2 = 0; f2 <= n; ++f2) {
            cdsevo::Evaluation e;
            e.f1 = f1;
            e.f2 = f2;
            if (!cdsevo::is_good_individual(e, n, m) || f1 < 2 * m + 2) continue;
            ++r.points_checked;
            if (static_cast<double>(f2) > cap) {
              if (r.violations++ == 0) {
                r.first_violation = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                    " delta=" + std::to_string(d) + " f1=" +
                                    std::to_string(f1) + " f2=" + std::to_string(f2);
              }
            }
          }
        }
      }
    }
  }
  return r;
}

/// Every point weakly below a good point is good.
inline SweepResult sweep_closure(std::size_t max_n, std::size_t max_m) {
  SweepResult r;
  for (std::size_t n = 3; n <= max_n; ++n) {
    for (std::size_t m = 1; m <= std::min(max_m, n - 2); ++m) {
      for (std::size_t f1 = 2; f1 <= n; ++f1) {
        for (std::size_t f2 = 0; f2 <= n; ++f2) {
          cdsevo::Evaluation top;
          top.f1 = f1;
          top.f2 = f2;
          if (!cdsevo::is_good_individual(top, n, m)) continue;
          for (std::size_t g1 = 2; g1 <= f1; ++g1) {
            for (std::size_t g2 = 0; g2 <= f2; ++g2) {
              cdsevo::Evaluation below;
              below.f1 = g1;
              below.f2 = g2;
              ++r.points_checked;
              if (!cdsevo::is_good_individual(below, n, m) && r.violations++ == 0) {
                r.first_violation = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                    " (" + std::to_string(g1) + "," + std::to_string(g2) +
                                    ") below (" + std::to_string(f1) + "," +
                                    std::to_string(f2) + ")";
              }
            }
          }
        }
      }
    }
  }
  return r;
}

}  // namespace sweeps
