#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace lajoin;
using oracle::I64;

namespace {

std::vector<I64> distinct_sums(const ConstructionResult& r) {
  return oracle::colouring(r.graph(), r.labeling.labels()).distinct;
}

void expect_proper(const ConstructionResult& r, int colours) {
  const auto o = oracle::colouring(r.graph(), r.labeling.labels());
  EXPECT_TRUE(o.proper) << r.family;
  EXPECT_EQ(o.colours, colours) << r.family;
  EXPECT_EQ(r.claimed_chi_la, colours) << r.family;
  EXPECT_EQ(o.distinct, r.claimed_colors) << r.family;
}

std::vector<I64> sums_of(const ConstructionResult& r, Side s) {
  const auto all = oracle::sums(r.graph(), r.labeling.labels());
  std::vector<I64> out;
  for (int i = 1; i <= r.graph().count(s); ++i) out.push_back(all[r.graph().vertex(Role{s, i})]);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Request req(const std::string& fam, Params p, const std::string& edge = "") {
  Request r;
  r.family = fam;
  r.params = std::move(p);
  r.edge = edge;
  return r;
}

}  // namespace

// ------------------------------------------------------------------ golden tables

struct Golden {
  const char* file;
  Request request;
};

TEST(Golden, MatricesMatchStoredTablesCellForCell) {
  const std::vector<Golden> g = {
      {"p6_o8.csv", req("path-join-null", {{"m", 3}, {"N", 8}})},
      {"p6_o5.csv", req("path-join-null", {{"m", 3}, {"N", 5}})},
      {"p7_o3.csv", req("path7-join-null3", {})},
      {"c6_o5.csv", req("cycle-join-null", {{"m", 3}, {"n", 3}})},
      {"c7_o6.csv", req("odd-cycle-join-even-null", {{"n", 3}})},
      {"c6_c5.csv", req("cycle-join-cycle", {{"m", 3}, {"n", 3}})},
  };
  for (const auto& x : g) {
    const auto r = construct(x.request);
    const std::string want = slurp(std::string(LAJOIN_GOLDEN_DIR) + "/" + x.file);
    ASSERT_FALSE(want.empty()) << x.file;
    EXPECT_EQ(export_matrix(r.labeling, r.layout).csv(), want) << x.file;
  }
}

// ------------------------------------------------------------------ path joins

TEST(PathJoinNull, WorkedExamples) {
  expect_proper(label_path_join_null(3, 8), 3);
  EXPECT_EQ(distinct_sums(label_path_join_null(3, 8)), (std::vector<I64>{177, 208, 274}));
  EXPECT_EQ(distinct_sums(label_path_join_null(3, 5)), (std::vector<I64>{86, 123, 129}));
  // row u1 of P6 v O8: join labels 11,8,45,15,41,21,35,27 plus the path edge 5
  const auto r = label_path_join_null(3, 8);
  const Graph& G = r.graph();
  std::vector<I64> row;
  for (int j = 1; j <= 8; ++j) row.push_back(r.labeling.label(G.u(1), G.v(j)));
  EXPECT_EQ(row, (std::vector<I64>{11, 8, 45, 15, 41, 21, 35, 27}));
  EXPECT_EQ(r.labeling.label(G.u(1), G.u(2)), 5);
  EXPECT_EQ(r.labeling.sum(G.u(1)), 208);
}

TEST(PathJoinNull, CitedCornersAreReportedNotBuilt) {
  try {
    label_path_join_null(2, 1);
    FAIL() << "P4 v O1 has no construction";
  } catch (const cited_case& c) {
    EXPECT_EQ(c.claimed(), 4);
    EXPECT_FALSE(c.route().empty());
  }
  EXPECT_THROW(label_path_join_null(1, 3), cited_case);
  EXPECT_THROW(label_path_join_null(0, 3), usage_error);
}

TEST(PathJoinNull, SmallRangeAllThreeColours) {
  for (int m = 2; m <= 6; ++m)
    for (int N = 2; N <= 9; ++N) expect_proper(label_path_join_null(m, N), 3);
}

TEST(PathJoinCycle, WorkedExamples) {
  const auto r = label_path_join_cycle(3, 3);
  expect_proper(r, 5);
  EXPECT_EQ(sums_of(r, Side::V), (std::vector<I64>{201, 199, 198, 199, 198}));
  // u sums are those of P6 v O5
  EXPECT_EQ(sums_of(r, Side::U), sums_of(label_path_join_null(3, 5), Side::U));
  expect_proper(label_path_join_cycle(2, 2), 5);
  expect_proper(label_path_join_cycle(1, 2), 5);
  EXPECT_THROW(label_path_join_cycle(2, 1), usage_error);
}

TEST(PathJoinComplete, TriangleClosedForms) {
  for (I64 m = 1; m <= 6; ++m) {
    const auto r = label_path_join_complete(static_cast<int>(m), 2);
    expect_proper(r, 4);
    std::vector<I64> want{9 * m - 2, 11 * m - 2, 8 * m * m + 3 * m, 8 * m * m + 7 * m};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(distinct_sums(r), want) << m;
  }
}

TEST(PathJoinComplete, LargerCliques) {
  expect_proper(label_path_join_complete(2, 4), 6);
  expect_proper(label_path_join_complete(2, 5), 7);  // r = 2n - 1 with n = 3: 2n + 1 colours
  for (int m = 1; m <= 4; ++m)
    for (int r = 3; r <= 8; ++r) expect_proper(label_path_join_complete(m, r), r + 2);
}

// ------------------------------------------------------------------ cycle joins

TEST(CycleJoinNull, WorkedExamples) {
  EXPECT_EQ(distinct_sums(label_cycle_join_null(3, 3)), (std::vector<I64>{93, 129, 136}));
  EXPECT_EQ(distinct_sums(label_cycle_join_null(2, 2)), (std::vector<I64>{28, 42, 45}));
  EXPECT_THROW(label_cycle_join_null(2, 1), cited_case);  // wheel
}

// the cycle version lifts every u sum of the path version by 2n + 1
TEST(CycleJoinNull, LinkedToPathJoinNull) {
  for (int m = 2; m <= 7; ++m)
    for (int n = 2; n <= 7; ++n) {
      const auto c = label_cycle_join_null(m, n);
      const auto p = label_path_join_null(m, 2 * n - 1);
      const auto cu = sums_of(c, Side::U), pu = sums_of(p, Side::U);
      for (size_t i = 0; i < cu.size(); ++i) ASSERT_EQ(cu[i] - pu[i], 2 * n + 1) << m << "," << n << " u" << i + 1;
      expect_proper(c, 3);
    }
}

TEST(OddCycleJoinEvenNull, WorkedExamples) {
  const auto r = label_odd_cycle_join_even_null(3);
  expect_proper(r, 4);
  EXPECT_EQ(distinct_sums(r), (std::vector<I64>{152, 175, 200, 216}));
  std::vector<I64> cyc(r.labeling.labels().begin(), r.labeling.labels().begin() + 7);
  EXPECT_EQ(cyc, (std::vector<I64>{1, 33, 9, 41, 17, 49, 25}));
  expect_proper(label_odd_cycle_join_even_null(1), 4);
  for (int n = 1; n <= 8; ++n) expect_proper(label_odd_cycle_join_even_null(n), 4);
}

TEST(OddCycleJoinEvenNullMinusEdge, CycleEdgesKeepFourColours) {
  for (int n = 2; n <= 3; ++n)
    for (int i = 1; i <= 2 * n + 1; ++i) {
      const std::string e = "u" + std::to_string(i) + "-u" + std::to_string(i % (2 * n + 1) + 1);
      const auto r = label_odd_cycle_join_even_null_minus_edge(n, e);
      EXPECT_TRUE(oracle::colouring(r.graph(), r.labeling.labels()).proper) << e;
      EXPECT_EQ(oracle::colouring(r.graph(), r.labeling.labels()).colours, 4) << e;
    }
}

TEST(CycleJoinNullMinusEdge, EveryCycleAndJoinEdgeSmall) {
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n) {
      const Graph G = join(cycle(2 * m), null_graph(2 * n - 1));
      for (int k = 0; k < G.size(); ++k) {
        const std::string e = G.edge_name(k);
        const auto r = label_cycle_join_null_minus_edge(m, n, e);
        ASSERT_TRUE(r.deletion_check && r.deletion_check->ok) << m << "," << n << " " << e;
        const auto o = oracle::colouring(r.graph(), r.labeling.labels());
        ASSERT_TRUE(o.proper) << e;
        ASSERT_EQ(o.colours, 3) << e;
        ASSERT_EQ(r.graph().size(), G.size() - 1);
      }
    }
}

TEST(CycleJoinNullMinusEdge, JoinEdgeComplementSums) {
  // before deletion the complement puts 4m^2 n - 2m^2 + m on every v_j, and label 1 on u_2m v_1
  const int m = 3, n = 3;
  const auto r = label_cycle_join_null_minus_edge(m, n, "u6-v1");
  ASSERT_TRUE(r.parent.has_value());
  const Graph& P = r.parent->graph();
  EXPECT_EQ(r.parent->label(P.u(6), P.v(1)), 1);
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(r.parent->sum(P.v(j)), 4 * m * m * n - 2 * m * m + m);
}

TEST(CycleJoinCycle, WorkedExamples) {
  const auto r = label_cycle_join_cycle(3, 3);
  expect_proper(r, 5);
  EXPECT_EQ(sums_of(r, Side::V), (std::vector<I64>{209, 207, 206, 207, 206}));
  EXPECT_EQ(sums_of(r, Side::U), sums_of(label_cycle_join_null(3, 3), Side::U));
  const auto s = label_cycle_join_cycle(2, 2);
  expect_proper(s, 5);
  // summing the n = 2 labels directly gives 79, 78, 77 on the triangle
  EXPECT_EQ(sums_of(s, Side::V), (std::vector<I64>{79, 78, 77}));
  for (int m = 2; m <= 6; ++m)
    for (int n = 2; n <= 6; ++n) expect_proper(label_cycle_join_cycle(m, n), 5);
}

TEST(CycleJoinCycleMinusEdge, CycleEdgesCertified) {
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n)
      for (int i = 1; i <= 2 * m; ++i) {
        const std::string e = "u" + std::to_string(i) + "-u" + std::to_string(i % (2 * m) + 1);
        const auto r = label_cycle_join_cycle_minus_edge(m, n, e);
        ASSERT_TRUE(r.deletion_check && r.deletion_check->ok) << e;
        const auto o = oracle::colouring(r.graph(), r.labeling.labels());
        ASSERT_TRUE(o.proper);
        ASSERT_EQ(o.colours, 5);
      }
  EXPECT_THROW(label_cycle_join_cycle_minus_edge(3, 3, "v1-v2"), open_problem);
  EXPECT_THROW(label_cycle_join_cycle_minus_edge(3, 3, "u1-v1"), open_problem);
}

TEST(CycleJoinComplete, WorkedExamples) {
  expect_proper(label_cycle_join_complete(2, 5), 7);
  const auto r = label_cycle_join_complete(3, 5);
  expect_proper(r, 7);
  EXPECT_EQ(r.labeling.sum(r.graph().u(1)), 93);
  EXPECT_EQ(r.labeling.sum(r.graph().u(3)), 93);
  EXPECT_THROW(label_cycle_join_complete(2, 4), usage_error);
  for (int m = 2; m <= 4; ++m)
    for (int rr = 5; rr <= 11; rr += 2) expect_proper(label_cycle_join_complete(m, rr), rr + 2);
}

TEST(CompleteJoinOddCycle, WorkedExamples) {
  expect_proper(label_complete_join_odd_cycle(1, 2), 5);
  for (I64 n = 1; n <= 4; ++n)
    for (I64 m = 2; m <= 5; ++m) {
      const auto r = label_complete_join_odd_cycle(static_cast<int>(n), static_cast<int>(m));
      expect_proper(r, static_cast<int>(2 * n + 3));
      const Graph& G = r.graph();
      // u side is the cycle C_{2m-1}, v side is K_2n
      const I64 gap = r.labeling.sum(G.v(1)) - r.labeling.sum(G.u(1));
      // the closed form bounds the gap from below (it assumes the smallest possible f+(v1))
      const I64 bound = 4 * m * (m * n + m - 2 + n * n - 2 * n) + n + 2;
      EXPECT_GT(bound, 0);
      EXPECT_GE(gap, bound) << n << "," << m;
      for (int i = 1; i + 2 <= 2 * n; i += 2) EXPECT_LT(r.labeling.sum(G.v(i)), r.labeling.sum(G.v(i + 2)));
      for (int i = 1; i <= 2 * n; i += 2) EXPECT_LT(r.labeling.sum(G.v(i)), r.labeling.sum(G.v(i + 1)));
    }
}

// ------------------------------------------------------------------ building blocks

TEST(AntimagicComplete, DistinctSums) {
  EXPECT_EQ(antimagic_complete(3).labels(), (std::vector<I64>{1, 2, 3}));
  for (int r = 3; r <= 12; ++r) {
    const auto f = antimagic_complete(r);
    const auto o = oracle::colouring(f.graph(), f.labels());
    EXPECT_TRUE(o.proper) << r;
    EXPECT_EQ(o.colours, r) << r;
  }
  EXPECT_EQ(oracle::chi_la(complete(4)), 4);  // brute force over 6! labelings agrees
  EXPECT_THROW(antimagic_complete(2), usage_error);
}

TEST(ThreeColourOddCycle, Sums) {
  EXPECT_EQ(three_color_odd_cycle(3).sums(), (std::vector<I64>{5, 4, 3}));
  // 3m-1 at u1, 2m on even positions, 2m-1 on the other odd ones
  EXPECT_EQ(three_color_odd_cycle(5).sums(), (std::vector<I64>{8, 6, 5, 6, 5}));
  for (int len = 3; len <= 31; len += 2)
    EXPECT_EQ(oracle::colouring(three_color_odd_cycle(len).graph(), three_color_odd_cycle(len).labels()).colours, 3);
  EXPECT_THROW(three_color_odd_cycle(4), usage_error);
}

// ------------------------------------------------------------------ generic joins

TEST(GenericJoin, NullOverC4) {
  const auto C4 = std::make_shared<const Graph>(cycle(4));
  const EdgeLabeling f(C4, {1, 2, 3, 4});  // sums 5,3,5,7
  const auto r = label_generic_join_null(f, 2);
  expect_proper(r, 4);
  const auto v = sums_of(r, Side::V);
  EXPECT_TRUE(oracle::all_equal(v));
  EXPECT_THROW(label_generic_join_null(f, 3), usage_error);  // parity
}

TEST(GenericJoin, ExclusionValueIsRejected) {
  // K6 with n = 4 forbids f+(u) = (6-4)(2*15+24+1)/2 = 55; hunt for a proper labeling that hits it
  const auto K6 = std::make_shared<const Graph>(complete(6));
  std::vector<I64> lab(15);
  std::iota(lab.begin(), lab.end(), 1);
  std::mt19937_64 rng(5);
  bool hit = false;
  for (int t = 0; t < 200000 && !hit; ++t) {
    std::shuffle(lab.begin(), lab.end(), rng);
    const auto o = oracle::colouring(*K6, lab);
    const auto s = oracle::sums(*K6, lab);
    hit = o.proper && std::count(s.begin(), s.end(), 55) == 1;
  }
  ASSERT_TRUE(hit);
  try {
    label_generic_join_null(EdgeLabeling(K6, lab), 4);
    FAIL() << "excluded sum accepted";
  } catch (const usage_error& e) {
    EXPECT_NE(std::string(e.what()).find("u"), std::string::npos);
  }
}

TEST(GenericJoin, CompleteBipartiteOverP4) {
  const auto P4 = std::make_shared<const Graph>(path(4));
  const EdgeLabeling f(P4, {3, 1, 2});  // sums 3,4,3,2; P4 has no 2-colour labeling
  const auto r = label_generic_join_complete_bipartite(f, 2, 4);
  expect_proper(r, 5);
  EXPECT_THROW(label_generic_join_complete_bipartite(f, 3, 3), usage_error);
  EXPECT_THROW(label_generic_join_complete_bipartite(f, 2, 3), usage_error);
}

TEST(GenericJoin, CycleOverK3) {
  const auto r = label_generic_join_cycle(antimagic_complete(3), 3);
  expect_proper(r, 6);
  EXPECT_THROW(label_generic_join_cycle(antimagic_complete(3), 4), usage_error);
}

// ------------------------------------------------------------------ registry and sweep

TEST(Registry, UnknownAndMalformed) {
  EXPECT_THROW(construct(req("no-such-family", {})), usage_error);
  EXPECT_THROW(construct(req("path-join-null", {{"m", 3}})), usage_error);
  EXPECT_THROW(construct(req("path-join-null", {{"m", 3}, {"N", 5}, {"r", 2}})), usage_error);
  EXPECT_THROW(construct(req("path-join-null", {{"m", 3}, {"N", 5}}, "u1-u2")), usage_error);
  EXPECT_THROW(parse_base_spec("complete"), usage_error);
  EXPECT_EQ(families().size(), 17u);
  int swept = 0;
  for (const auto& d : families()) swept += d.in_sweep;
  EXPECT_EQ(swept, 13);
}

TEST(Registry, FamilySizeMatchesGraph) {
  for (const auto& d : families()) {
    if (!d.in_sweep) continue;
    for (const auto& r : sweep_points(d.name, {}, 120)) {
      ASSERT_EQ(family_size(r), family_graph(r).size()) << r.str();
      ASSERT_EQ(family_size(r), construct(r).labeling.q()) << r.str();
    }
  }
}

TEST(Sweep, EveryGeneratorUpTo150Edges) {
  int points = 0;
  for (const auto& d : families()) {
    if (!d.in_sweep) continue;
    for (const auto& p : sweep_points(d.name, {}, 150)) {
      const auto r = construct(p);
      const auto& lab = r.labeling.labels();
      ASSERT_EQ(*std::min_element(lab.begin(), lab.end()), 1) << r.family;
      ASSERT_EQ(*std::max_element(lab.begin(), lab.end()), r.labeling.q()) << r.family;
      const auto o = oracle::colouring(r.graph(), lab);
      ASSERT_TRUE(o.proper) << r.family;
      ASSERT_EQ(o.colours, r.claimed_chi_la) << r.family;
      ASSERT_EQ(o.distinct, r.claimed_colors) << r.family;
      if (r.deletion_check) {
        ASSERT_TRUE(r.deletion_check->ok) << r.family;
      }
      ++points;
    }
  }
  EXPECT_GT(points, 300);
}

TEST(Confirm, KnownPoints) {
  SearchConfig cfg;
  cfg.time_budget = 60;
  const auto a = confirm_theorem(req("path-join-null", {{"m", 2}, {"N", 1}}), cfg);
  EXPECT_EQ(a.verdict, ConfirmVerdict::Matched);
  EXPECT_EQ(a.exact, 4);
  const auto b = confirm_theorem(req("cycle-join-null", {{"m", 3}, {"n", 3}}), cfg);
  EXPECT_EQ(b.verdict, ConfirmVerdict::Matched);
  EXPECT_EQ(b.method, "chromatic-bound");
  const auto c = confirm_theorem(req("odd-cycle-join-even-null", {{"n", 1}}), cfg);
  EXPECT_EQ(c.verdict, ConfirmVerdict::Matched);
  EXPECT_EQ(c.method, "exact-solver");
  EXPECT_EQ(c.exact, 4);
  const auto d = confirm_theorem(req("cycle-join-cycle", {{"m", 3}, {"n", 3}}), cfg);
  EXPECT_EQ(d.verdict, ConfirmVerdict::Matched);
}
