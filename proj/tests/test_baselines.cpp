#include <gtest/gtest.h>

#include <cmath>

#include "cdsevo/baselines.hpp"
#include "cdsevo/generators.hpp"
#include "oracles.hpp"

using namespace cdsevo;

TEST(Greedy, StarTakesCenterInOneStep) {
  const GreedyResult r = greedy_cds(oracle::star(4));
  EXPECT_EQ(r.set, VertexSet(5, {0}));
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_EQ(r.steps[0], (GreedyStep{0, 5, 2}));
}

TEST(Greedy, PathP5) {
  // Single-vertex values of f1 from the empty set (f1 = 5):
  // v1 -> 5, v2 -> 4, v3 -> 4, v4 -> 4, v5 -> 5; the tie goes to v2.
  const GreedyResult r = greedy_cds(oracle::path(5));
  EXPECT_EQ(r.set.size(), 3u);
  EXPECT_EQ(r.set, VertexSet(5, {1, 2, 3}));
  ASSERT_FALSE(r.steps.empty());
  EXPECT_EQ(r.steps[0], (GreedyStep{1, 5, 4}));
}

TEST(Greedy, CompleteGraphNeedsOneVertex) {
  for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(greedy_cds(oracle::complete(n)).set.size(), 1u);
}

TEST(Greedy, RejectsDisconnected) {
  EXPECT_THROW(greedy_cds(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST(Greedy, StepsStrictlyDecreaseAndMeetRatio) {
  auto suite = oracle::small_suite();
  for (std::uint64_t s = 0; s < 10; ++s) {
    suite.push_back({"BA12", gen_ba({.model = Model::BA, .n = 12, .seed = s})});
  }
  for (const auto& [name, g] : suite) {
    const GreedyResult r = greedy_cds(g);
    EXPECT_TRUE(is_cds(g, r.set)) << name;
    EXPECT_EQ(evaluate(g, r.set).f1, 2u) << name;
    EXPECT_LE(r.steps.size(), g.vertex_count() - 2) << name;
    for (const GreedyStep& st : r.steps) EXPECT_LE(st.f1_after + 1, st.f1_before) << name;
    const std::size_t m = oracle::min_cds_size(g);
    EXPECT_LE(static_cast<double>(r.set.size()),
              (2 + std::log(static_cast<double>(g.max_degree()))) * static_cast<double>(m))
        << name;
  }
}

TEST(Exact, Examples) {
  const ExactResult p5 = exact_min_cds(oracle::path(5));
  EXPECT_EQ(p5.m, 3u);
  EXPECT_EQ(p5.optimum, VertexSet(5, {1, 2, 3}));
  EXPECT_EQ(exact_min_cds(oracle::cycle(5)).m, 3u);
  const ExactResult star = exact_min_cds(oracle::star(4));
  EXPECT_EQ(star.m, 1u);
  EXPECT_EQ(star.optimum, VertexSet(5, {0}));
  EXPECT_EQ(exact_min_cds(oracle::petersen()).m, 4u);
  EXPECT_EQ(exact_min_cds(oracle::path(2)).m, 1u);
}

TEST(Exact, RefusesAboveCap) {
  EXPECT_THROW(exact_min_cds(oracle::path(21)), std::invalid_argument);
  EXPECT_THROW(exact_min_cds(oracle::path(8), 7), std::invalid_argument);
  EXPECT_NO_THROW(exact_min_cds(oracle::path(21), 21));
  EXPECT_THROW(exact_min_cds(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST(Exact, MatchesBruteForceAndNoSmallerCdsExists) {
  auto suite = oracle::small_suite();
  for (std::uint64_t s = 0; s < 5; ++s) {
    suite.push_back({"ER14", gen_er_connected({.model = Model::ER, .n = 14, .seed = s})});
  }
  for (const auto& [name, g] : suite) {
    const ExactResult r = exact_min_cds(g);
    EXPECT_TRUE(is_cds(g, r.optimum)) << name;
    EXPECT_EQ(r.optimum.size(), r.m) << name;
    EXPECT_EQ(r.m, oracle::min_cds_size(g)) << name;
    EXPECT_GT(r.subsets_examined, 0u);
  }
}

TEST(ImprovementBound, HoldsOnNamedGraphs) {
  EXPECT_TRUE(verify_improvement_bound(oracle::path(5), 3));
  EXPECT_TRUE(verify_improvement_bound(oracle::cycle(6), exact_min_cds(oracle::cycle(6)).m));
  const Graph k23 = oracle::complete_bipartite(2, 3);
  EXPECT_TRUE(verify_improvement_bound(k23, exact_min_cds(k23).m));
  EXPECT_THROW(verify_improvement_bound(oracle::path(13), 11), std::invalid_argument);
}

// Checking the multiplicative bound against a deliberately wrong m must be
// able to fail; otherwise the sweep would be vacuous.
TEST(ImprovementBound, DetectsViolationWithWrongOptimum) {
  const Graph p10 = oracle::path(10);
  EXPECT_TRUE(verify_improvement_bound(p10, 8));
  EXPECT_FALSE(verify_improvement_bound(p10, 1));
}

// -q is submodular: the decrease of q from adding v shrinks as the base grows.
TEST(ClosedCount, NegationIsSubmodular) {
  Rng rng(9);
  for (const auto& [name, g] : oracle::small_suite()) {
    const std::size_t n = g.vertex_count();
    for (int trial = 0; trial < 400; ++trial) {
      const std::uint64_t b_mask = rng.next() & oracle::all_vertices(n);
      const std::uint64_t a_mask = b_mask & rng.next();
      const Vertex v = rng.below(n);
      if ((b_mask >> v) & 1U) continue;
      VertexSet a = VertexSet::from_mask(n, a_mask);
      VertexSet b = VertexSet::from_mask(n, b_mask);
      const auto qa = component_count_closed(g, a);
      const auto qb = component_count_closed(g, b);
      a.insert(v);
      b.insert(v);
      ASSERT_GE(qa - component_count_closed(g, a), qb - component_count_closed(g, b))
          << name;
    }
  }
}
