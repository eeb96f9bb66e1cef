#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"

using namespace lajoin;
using oracle::I64;

namespace {

SearchConfig quick(double budget = 60) {
  SearchConfig c;
  c.time_budget = budget;
  return c;
}

void expect_witness(const SolveReport& r, const Graph& G) {
  ASSERT_TRUE(r.witness.has_value());
  const auto o = oracle::colouring(G, r.witness->labels());
  EXPECT_TRUE(o.proper);
  ASSERT_TRUE(r.chi_la.has_value());
  EXPECT_EQ(o.colours, *r.chi_la);
}

// same vertices, edges listed in another order
Graph shuffled(const Graph& G, std::uint64_t seed) {
  std::vector<EdgeRef> e = G.edges();
  std::mt19937_64 rng(seed);
  std::shuffle(e.begin(), e.end(), rng);
  return Graph(G.roles(), e, G.family());
}

std::vector<Graph> small_zoo() {
  return {cycle(3),
          cycle(4),
          cycle(5),
          path(3),
          path(5),
          complete(4),
          complete_bipartite(1, 3),
          complete_bipartite(2, 3),
          join(path(2), null_graph(1)),
          join(path(2), null_graph(2)),
          join(path(2), null_graph(3)),
          join(path(3), null_graph(1)),
          join(cycle(3), null_graph(1)),
          join(path(4), null_graph(1)),
          join(cycle(4), null_graph(1)),
          delete_edge(complete(4), EdgeRef(0, 1))};
}

}  // namespace

TEST(Solver, KnownValues) {
  struct Case {
    Graph G;
    int chi;
  };
  const std::vector<Case> cases = {{cycle(3), 3},
                                   {join(path(4), null_graph(1)), 4},
                                   {path(3), 3},
                                   {join(path(2), null_graph(2)), 3},
                                   {join(cycle(3), null_graph(2)), 4}};
  for (const auto& c : cases) {
    const auto r = exact_chi_la(c.G, quick());
    EXPECT_TRUE(r.proven_optimal) << c.G.family().str();
    EXPECT_EQ(r.chi_la, c.chi) << c.G.family().str();
    EXPECT_EQ(r.status(), "optimal");
    expect_witness(r, c.G);
  }
}

TEST(Solver, AgreesWithBruteForceUpTo8Edges) {
  for (const auto& G : small_zoo()) {
    if (G.size() > 8) continue;
    const auto want = oracle::chi_la(G);
    const auto r = exact_chi_la(G, quick());
    ASSERT_TRUE(r.proven_optimal) << G.family().str();
    EXPECT_EQ(r.chi_la, want) << G.family().str();
    if (want) expect_witness(r, G);
  }
}

TEST(Solver, NeverBelowChromaticNumber) {
  for (const auto& G : small_zoo()) {
    if (G.size() > 8) continue;
    const auto r = exact_chi_la(G, quick());
    ASSERT_TRUE(r.chi_la.has_value());
    EXPECT_GE(*r.chi_la, oracle::chromatic(G)) << G.family().str();
    EXPECT_EQ(r.lower_bound, oracle::chromatic(G)) << G.family().str();
  }
}

TEST(Solver, PruningAndOrderInvariance) {
  for (const auto& G : small_zoo()) {
    if (G.size() > 8) continue;
    const auto base = exact_chi_la(G, quick());
    for (bool sym : {false, true})
      for (auto eo : {EdgeOrder::DegreeDesc, EdgeOrder::Input})
        for (auto lo : {LabelOrder::LargeFirst, LabelOrder::SmallFirst}) {
          SearchConfig c = quick();
          c.symmetry_pruning = sym;
          c.edge_order = eo;
          c.label_order = lo;
          const auto r = exact_chi_la(G, c);
          ASSERT_TRUE(r.proven_optimal);
          ASSERT_EQ(r.chi_la, base.chi_la) << G.family().str();
        }
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph H = shuffled(G, seed);
      const auto r = exact_chi_la(H, quick());
      ASSERT_EQ(r.chi_la, base.chi_la) << G.family().str() << " seed " << seed;
      expect_witness(r, H);
    }
  }
}

TEST(Solver, SymmetryOnlyOnRegularGraphs) {
  EXPECT_TRUE(exact_chi_la(cycle(5), quick()).symmetry_used);
  EXPECT_FALSE(exact_chi_la(path(5), quick()).symmetry_used);
  SearchConfig off = quick();
  off.symmetry_pruning = false;
  EXPECT_FALSE(exact_chi_la(cycle(5), off).symmetry_used);
}

TEST(Solver, ThreadCountDoesNotChangeTheWitness) {
  for (const Graph& G : {join(path(4), null_graph(1)), join(cycle(3), null_graph(2)), join(path(2), null_graph(4)),
                         join(path(6), null_graph(1))}) {
    SearchConfig one = quick(), four = quick();
    one.threads = 1;
    four.threads = 4;
    const auto a = exact_chi_la(G, one), b = exact_chi_la(G, four);
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(a.chi_la, b.chi_la);
    EXPECT_EQ(a.witness->labels(), b.witness->labels()) << G.family().str();
  }
}

TEST(Solver, TargetStopsEarly) {
  SearchConfig c = quick();
  c.target_colors = 4;
  const auto r = exact_chi_la(join(path(4), null_graph(1)), c);
  EXPECT_TRUE(r.target_reached);
  ASSERT_TRUE(r.chi_la.has_value());
  EXPECT_LE(*r.chi_la, 4);
  expect_witness(r, join(path(4), null_graph(1)));
}

TEST(Solver, TimeoutIsHonest) {
  // a star on 12 edges: every labeling is proper, nothing prunes, 12! leaves
  const Graph S = complete_bipartite(1, 12);
  SearchConfig c = quick(0.3);
  const auto r = exact_chi_la(S, c);
  EXPECT_TRUE(r.timed_out);
  EXPECT_FALSE(r.proven_optimal);
  EXPECT_EQ(r.status(), "timeout");
  if (r.witness) expect_witness(r, S);
  EXPECT_LT(r.elapsed_s, 5.0);
}

TEST(Solver, Rejections) {
  EXPECT_THROW(exact_chi_la(path(2), quick()), usage_error);
  EXPECT_THROW(exact_chi_la(join(cycle(6), null_graph(5)), quick()), usage_error);
  SearchConfig bad = quick();
  bad.time_budget = 0;
  EXPECT_THROW(exact_chi_la(cycle(3), bad), usage_error);
  SearchConfig big = quick();
  big.max_edges = 0;
  EXPECT_THROW(exact_chi_la(cycle(3), big), usage_error);
}

// a target below the optimum is never reported as reached; the full search still proves the optimum
TEST(Solver, UnreachableTarget) {
  SearchConfig c = quick();
  c.target_colors = 2;
  const auto r = exact_chi_la(cycle(3), c);
  EXPECT_FALSE(r.target_reached);
  EXPECT_TRUE(r.proven_optimal);
  EXPECT_EQ(r.chi_la, 3);
}

TEST(Solver, EnvironmentBudget) {
  ::setenv("LAJOIN_TIME_BUDGET", "7.5", 1);
  EXPECT_DOUBLE_EQ(default_time_budget(), 7.5);
  EXPECT_DOUBLE_EQ(SearchConfig{}.time_budget, 7.5);
  ::setenv("LAJOIN_TIME_BUDGET", "soon", 1);
  EXPECT_THROW(default_time_budget(), usage_error);
  ::setenv("LAJOIN_TIME_BUDGET", "-1", 1);
  EXPECT_THROW(default_time_budget(), usage_error);
  ::unsetenv("LAJOIN_TIME_BUDGET");
  EXPECT_DOUBLE_EQ(default_time_budget(), 60.0);
}
