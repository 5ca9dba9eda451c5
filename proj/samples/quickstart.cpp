// Generates a small BA graph, runs SEMO with the T1 budget and compares the
// result with the greedy baseline and the exact optimum.
#include <cmath>
#include <iostream>

#include "cdsevo/cdsevo.hpp"

int main() {
  using namespace cdsevo;

  const Graph g = gen_ba({.model = Model::BA, .n = 16, .seed = 42});
  const ExactResult exact = exact_min_cds(g);
  const GreedyResult greedy = greedy_cds(g);

  RunConfig cfg;
  cfg.algorithm = Algorithm::Semo;
  cfg.budget = Budget::preset(Budget::Kind::T1);
  cfg.seed = 7;
  const RunReport report = run(g, cfg);

  const double bound =
      (2.0 + std::log(static_cast<double>(g.max_degree()))) * static_cast<double>(exact.m);
  std::cout << "n=" << g.vertex_count() << " edges=" << g.edge_count()
            << " delta=" << g.max_degree() << '\n'
            << "optimum m=" << exact.m << '\n'
            << "greedy size=" << greedy.set.size() << '\n';
  if (report.solution) {
    std::cout << "semo size=" << report.solution_size << " after "
              << report.iterations_used << " iterations (first feasible at "
              << *report.first_feasible_iteration << ")\n";
  } else {
    std::cout << "semo found no feasible set\n";
  }
  std::cout << "ratio bound (2 + ln delta) * m = " << bound << '\n';
  return 0;
}
