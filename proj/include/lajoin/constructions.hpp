#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chromatic.hpp"
#include "labeling.hpp"
#include "magic.hpp"
#include "matrix.hpp"

namespace lajoin {

struct ConstructionResult {
  std::string family;  // e.g. "cycle-join-null(m=3,n=3)"
  EdgeLabeling labeling;
  std::vector<std::int64_t> claimed_colors;  // closed forms, sorted, distinct
  int claimed_chi_la = 0;
  bool tight = true;  // false: the colour count is only an upper bound
  std::string case_tag;
  RowOrder layout = RowOrder::Parity;
  // deletions: the labelled parent graph, the removed edge (same vertex ids), and the certificate
  std::optional<EdgeLabeling> parent;
  std::optional<EdgeRef> deleted;
  std::optional<ConditionCheck> deletion_check;

  const Graph& graph() const { return labeling.graph(); }
};

using I64 = std::int64_t;

namespace detail {

inline std::vector<I64> distinct(std::vector<I64> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// the same labels on another graph with identical roles and edge set (C_3 vs K_3 and the like)
inline EdgeLabeling rehome(const EdgeLabeling& f, GraphPtr target) {
  const Graph& S = f.graph();
  LabelBuilder b(target);
  for (int k = 0; k < S.size(); ++k) {
    const auto& e = S.edge(k);
    b.put(target->vertex(S.role(e.a)), target->vertex(S.role(e.b)), f.label(k));
  }
  return b.finish();
}

// P_{2m}: label of u_i u_{i+1}
inline I64 path_edge(I64 m, I64 i) { return i % 2 ? 2 * m - (i + 1) / 2 : i / 2; }

// P_{2m} v O_2
inline I64 join_null_two(I64 m, I64 i, I64 j) {
  if (j == 1) {
    if (i % 2) return 2 * m + (i - 1) / 2;
    return i == 2 * m ? 6 * m - 1 : 6 * m - (i + 2) / 2;
  }
  return i % 2 ? 5 * m - (i + 1) / 2 : 3 * m + (i - 2) / 2;
}

// P_{2m} v O_{2n}, m,n >= 2
inline I64 join_null_even(I64 m, I64 n, I64 i, I64 j) {
  const bool odd = i % 2;
  const I64 k = (i + 1) / 2;  // u_{2k-1} or u_{2k}
  if (j == 1) {
    if (odd) return k == m ? 2 * m : 4 * m - k;
    return k == m ? 4 * m * n + 2 * m - 1 : 4 * m * n + m - 1 - k;
  }
  if (j == 2) {
    if (odd) return k == m ? 3 * m : 3 * m - k;
    return 4 * m * n + m - 2 + k;
  }
  if (j == 3) {
    if (odd) return 4 * m * n - m + k - 1;
    return k == m ? 4 * m : 4 * m + k;
  }
  if (j % 2 == 0) {
    const I64 J = j / 2;
    return odd ? (2 * J + 1) * m - 1 + k : (4 * n + 3 - 2 * J) * m - k;
  }
  const I64 J = (j + 1) / 2;
  return odd ? (4 * n + 4 - 2 * J) * m - k : 2 * J * m - 1 + k;
}

// P_{2m} v O_{2n-1}, m,n >= 2
inline I64 join_null_odd(I64 m, I64 n, I64 i, I64 j) {
  const bool odd = i % 2;
  const I64 k = (i + 1) / 2;
  if (j == 1) {
    if (odd) return k == m ? 2 * m : 4 * m - k;
    return k == m ? 4 * m * n - 1 : 4 * m * n - 2 * m + k - 1;
  }
  if (j == 2) {
    if (odd) return k == m ? 3 * m : 3 * m - k;
    return 4 * m * n - m - 2 + k;
  }
  if (j == 2 * n - 1) return odd ? 2 * m * n + 2 * (k - 1) : 2 * m * n + 2 * m + 1 - 2 * k;
  if (j % 2) {
    const I64 J = (j + 1) / 2;
    return odd ? 4 * m * n + 2 * m - 2 * J * m - k : 2 * J * m + k - 1;
  }
  const I64 J = j / 2;
  return odd ? (2 * J + 1) * m + k - 1 : 4 * m * n + m - 2 * J * m - k;
}

// all join labels of P_{2m} v O_N for m >= 2, N >= 2
inline I64 path_null_join(I64 m, I64 N, I64 i, I64 j) {
  if (N == 2) return join_null_two(m, i, j);
  if (N % 2 == 0) return join_null_even(m, N / 2, i, j);
  return join_null_odd(m, (N + 1) / 2, i, j);
}

inline void label_path(LabelBuilder& b, const Graph& G, int m) {
  for (int i = 1; i < 2 * m; ++i) b.put(G.u(i), G.u(i + 1), path_edge(m, i));
}

inline void label_path_null_join(LabelBuilder& b, const Graph& G, int m, int N, I64 shift = 0) {
  for (int i = 1; i <= 2 * m; ++i)
    for (int j = 1; j <= N; ++j) b.put(G.u(i), G.v(j), path_null_join(m, N, i, j) + shift);
}

// C_{2m}: u_1u_2, ..., u_{2m}u_1
inline I64 even_cycle_edge(I64 m, I64 i) {
  if (i == 2 * m) return m + 1;
  return i % 2 ? m - (i - 1) / 2 : m + 1 + i / 2;
}

inline void label_even_cycle(LabelBuilder& b, const Graph& G, int m) {
  for (int i = 1; i <= 2 * m; ++i) b.put(G.u(i), G.u(i % (2 * m) + 1), even_cycle_edge(m, i));
}

// v-side odd cycle v_1..v_len with labels base + j/2 (even j) and top - (j-1)/2 (odd j)
inline void label_v_cycle(LabelBuilder& b, const Graph& G, int len, I64 base, I64 top) {
  for (int j = 1; j <= len; ++j) b.put(G.v(j), G.v(j % len + 1), j % 2 ? top - (j - 1) / 2 : base + j / 2);
}

// colex label of {a<b} (0-based) in K_r: C(b,2) + a + 1
inline I64 colex_label(I64 a, I64 b) { return b * (b - 1) / 2 + a + 1; }

// K_r edges on the v side, shifted
inline void label_v_clique(LabelBuilder& b, const Graph& G, int r, I64 shift) {
  for (int y = 2; y <= r; ++y)
    for (int x = 1; x < y; ++x) b.put(G.v(x), G.v(y), colex_label(x - 1, y - 1) + shift);
}

// h+(v_j) of the colex labeling of K_r (1-based j)
inline I64 clique_sum(I64 r, I64 j) {
  I64 s = 0;
  for (I64 x = 0; x < r; ++x)
    if (x != j - 1) s += colex_label(std::min(x, j - 1), std::max(x, j - 1));
  return s;
}

inline int cycle_position(const Graph& G, int len, const EdgeRef& e, Side side) {
  // 1-based k with e = w_k w_{k+1} (w_{len+1} = w_1), or 0
  const Role a = G.role(e.a), b = G.role(e.b);
  if (a.side != side || b.side != side) return 0;
  for (int k = 1; k <= len; ++k) {
    const int nxt = k % len + 1;
    if ((a.index == k && b.index == nxt) || (b.index == k && a.index == nxt)) return k;
  }
  return 0;
}

// vertex map rotating the u-side indices by `shift` (mod len) and swapping v_1 with v_swap
inline std::vector<int> rotation(const Graph& G, int len, int shift, int swap_v = 1) {
  std::vector<int> sigma(G.order());
  for (int x = 0; x < G.order(); ++x) {
    const Role r = G.role(x);
    if (r.side == Side::U) {
      sigma[x] = G.u((((r.index - 1 + shift) % len) + len) % len + 1);
    } else if (r.index == 1) {
      sigma[x] = G.v(swap_v);
    } else if (r.index == swap_v) {
      sigma[x] = G.v(1);
    } else {
      sigma[x] = x;
    }
  }
  return sigma;
}

inline ConstructionResult finish_deletion(ConstructionResult base, const EdgeLabeling& moved, const EdgeRef& e,
                                          std::vector<I64> colors, int claimed, bool tight, std::string tag,
                                          std::string family) {
  ConstructionResult r;
  r.family = std::move(family);
  r.deletion_check = check_deletion_certificate(moved, e);
  r.labeling = delete_labeled_edge(moved, e);
  r.parent = moved;
  r.deleted = e;
  r.claimed_colors = distinct(std::move(colors));
  r.claimed_chi_la = claimed;
  r.tight = tight;
  r.case_tag = std::move(tag);
  r.layout = base.layout;
  return r;
}

inline std::string fam(const std::string& name, std::initializer_list<std::pair<const char*, I64>> ps) {
  std::string s = name + "(";
  bool first = true;
  for (const auto& [k, v] : ps) {
    s += (first ? "" : ",") + std::string(k) + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace detail

// ---------------------------------------------------------------- small building blocks

inline EdgeLabeling antimagic_complete(int r) {
  if (r < 3) throw usage_error("antimagic_complete needs r >= 3 (got " + std::to_string(r) + ")");
  auto G = detail::share(complete(r));
  std::vector<I64> lab;
  for (const auto& e : G->edges()) lab.push_back(detail::colex_label(e.a, e.b));
  return EdgeLabeling(G, lab);
}

inline EdgeLabeling three_color_odd_cycle(int len) {
  if (len < 3 || len % 2 == 0) throw usage_error("three_color_odd_cycle needs an odd length >= 3 (got " + std::to_string(len) + ")");
  const int m = (len + 1) / 2;
  auto G = detail::share(cycle(len));
  LabelBuilder b(G);
  for (int k = 1; k <= len; ++k) b.put(G->u(k), G->u(k % len + 1), k % 2 ? 2 * m - (k + 1) / 2 : k / 2);
  return b.finish();
}

// ---------------------------------------------------------------- generic joins

namespace detail {
inline void need_proper(const EdgeLabeling& f, const char* who) {
  auto c = verify_local_antimagic(f);
  if (!c.ok()) throw usage_error(std::string(who) + ": base labeling is not local antimagic: " + c.reason);
}
inline void avoid(const EdgeLabeling& f, const std::vector<I64>& bad, const char* who) {
  for (int x = 0; x < f.graph().order(); ++x)
    for (I64 b : bad)
      if (f.sum(x) == b)
        throw usage_error(std::string(who) + ": f+(" + f.graph().role(x).str() + ") = " + std::to_string(b) +
                          " is an excluded value");
}
// the theorem's claim is exact only when the base already uses chi(G) colours
inline bool base_is_tight(const EdgeLabeling& f) {
  return verify_local_antimagic(f).color_count == chromatic_lower_bound(f.graph());
}
inline std::vector<I64> shifted_sums(const EdgeLabeling& f, I64 add) {
  std::vector<I64> s;
  for (int x = 0; x < f.graph().order(); ++x) s.push_back(f.sum(x) + add);
  return s;
}
}  // namespace detail

inline ConstructionResult label_generic_join_null(const EdgeLabeling& f, int n) {
  const Graph& G = f.graph();
  const I64 m = G.order(), e = G.size();
  if (m < 3) throw usage_error("generic-join-null: base order must be >= 3");
  if (n < 2) throw usage_error("generic-join-null: n must be >= 2");
  if ((m - n) % 2) throw usage_error("generic-join-null: base order and n must have equal parity");
  detail::need_proper(f, "generic-join-null");
  detail::avoid(f, {(m - n) * (2 * e + m * n + 1) / 2}, "generic-join-null");
  const MagicArray M = magic_rectangle(static_cast<int>(m), n);
  auto H = detail::share(join(G, null_graph(n)));
  LabelBuilder b(H);
  for (int k = 0; k < G.size(); ++k) b.put(G.edge(k).a, G.edge(k).b, f.label(k));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) b.put(i, static_cast<int>(m) + j, M.at(i, j) + e);
  ConstructionResult r;
  r.family = "generic-join-null(base=" + G.family().str() + ",n=" + std::to_string(n) + ")";
  r.labeling = b.finish();
  auto c = detail::shifted_sums(f, n * e + n * (m * n + 1) / 2);
  c.push_back(m * e + m * (m * n + 1) / 2);
  r.claimed_colors = detail::distinct(c);
  r.claimed_chi_la = verify_local_antimagic(f).color_count + 1;
  r.tight = detail::base_is_tight(f);
  r.case_tag = "magic-rectangle";
  r.layout = RowOrder::Natural;
  return r;
}

inline ConstructionResult label_generic_join_complete_bipartite(const EdgeLabeling& f, int m, int n) {
  const Graph& G = f.graph();
  const I64 p = G.order(), e = G.size();
  if (p % 2) throw usage_error("generic-join-complete-bipartite: base order must be even");
  if (m < 2 || n < 2 || m == n) throw usage_error("generic-join-complete-bipartite: need m != n, both >= 2");
  if ((m - n) % 2) throw usage_error("generic-join-complete-bipartite: m and n must have equal parity");
  detail::need_proper(f, "generic-join-complete-bipartite");
  const I64 s = m + n, A = p * s + 1;
  detail::avoid(f,
                {(p - m) * e + (p - s) * A / 2 + n * p * s + n * (I64(m) * n + 1) / 2,
                 (p - n) * e + (p - s) * A / 2 + m * p * s + m * (I64(m) * n + 1) / 2},
                "generic-join-complete-bipartite");
  const MagicArray M = magic_rectangle(static_cast<int>(p), static_cast<int>(s));
  const MagicArray N = magic_rectangle(m, n);
  auto H = detail::share(join(G, complete_bipartite(m, n)));
  LabelBuilder b(H);
  for (int k = 0; k < G.size(); ++k) b.put(G.edge(k).a, G.edge(k).b, f.label(k));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < s; ++j) b.put(i, static_cast<int>(p) + j, M.at(i, j) + e);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < n; ++k) b.put(static_cast<int>(p) + j, static_cast<int>(p) + m + k, e + p * s + N.at(j, k));
  ConstructionResult r;
  r.family = "generic-join-complete-bipartite(base=" + G.family().str() + ",m=" + std::to_string(m) +
             ",n=" + std::to_string(n) + ")";
  r.labeling = b.finish();
  auto c = detail::shifted_sums(f, s * e + s * A / 2);
  c.push_back(p * e + p * A / 2 + n * e + n * p * s + n * (I64(m) * n + 1) / 2);
  c.push_back(p * e + p * A / 2 + m * e + m * p * s + m * (I64(m) * n + 1) / 2);
  r.claimed_colors = detail::distinct(c);
  r.claimed_chi_la = verify_local_antimagic(f).color_count + 2;
  r.tight = detail::base_is_tight(f);
  r.case_tag = "two-magic-rectangles";
  r.layout = RowOrder::Natural;
  return r;
}

inline ConstructionResult label_generic_join_cycle(const EdgeLabeling& f, int m) {
  const Graph& G = f.graph();
  const I64 p = G.order(), e = G.size();
  if (p % 2 == 0) throw usage_error("generic-join-cycle: base order must be odd");
  if (m < 3) throw usage_error("generic-join-cycle: cycle length must be >= 3");
  if (m % 2 == 0) throw usage_error("generic-join-cycle: cycle length must be odd (the cycle labels are a bijection only then)");
  detail::need_proper(f, "generic-join-cycle");
  const I64 lead = (p - m) * (2 * e + p * m + 1) / 2 + 2 * (e + p * m);
  detail::avoid(f, {lead + m, lead + m + 1, lead + (3 * m + 1) / 2}, "generic-join-cycle");
  const MagicArray M = magic_rectangle(static_cast<int>(p), m);
  auto H = detail::share(join(G, cycle(m)));
  LabelBuilder b(H);
  for (int k = 0; k < G.size(); ++k) b.put(G.edge(k).a, G.edge(k).b, f.label(k));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < m; ++j) b.put(i, static_cast<int>(p) + j, M.at(i, j) + e);
  detail::label_v_cycle(b, *H, m, e + p * m, e + p * m + m);
  ConstructionResult r;
  r.family = "generic-join-cycle(base=" + G.family().str() + ",m=" + std::to_string(m) + ")";
  r.labeling = b.finish();
  auto c = detail::shifted_sums(f, m * e + m * (p * m + 1) / 2);
  const I64 v = p * e + p * (p * m + 1) / 2 + 2 * (e + p * m);
  c.insert(c.end(), {v + m, v + m + 1, v + (3 * m + 1) / 2});
  r.claimed_colors = detail::distinct(c);
  r.claimed_chi_la = verify_local_antimagic(f).color_count + 3;
  r.tight = detail::base_is_tight(f);
  r.case_tag = "magic-rectangle-plus-cycle";
  r.layout = RowOrder::Natural;
  return r;
}

// ---------------------------------------------------------------- path joins

inline ConstructionResult label_path_join_null(int m, int N) {
  if (m < 1 || N < 1) throw usage_error("path-join-null needs m >= 1 and N >= 1");
  if (m == 1)
    throw cited_case("P_2 v O_" + std::to_string(N) + " is K_{1,1," + std::to_string(N) + "}, settled by a cited result",
                     3, "solver");
  if (N == 1)
    throw cited_case("P_" + std::to_string(2 * m) + " v O_1 is a fan, settled by a cited result", m == 2 ? 4 : 3,
                     "solver");
  auto G = detail::share(join(path(2 * m), null_graph(N)));
  LabelBuilder b(G);
  detail::label_path(b, *G, m);
  detail::label_path_null_join(b, *G, m, N);
  ConstructionResult r;
  r.family = detail::fam("path-join-null", {{"m", m}, {"N", N}});
  r.labeling = b.finish();
  const I64 M = m;
  if (N == 2) {
    r.claimed_colors = detail::distinct({9 * M - 2, 11 * M - 2, 8 * M * M - M});
    r.case_tag = "null-2";
  } else if (N % 2 == 0) {
    const I64 n = N / 2;
    r.claimed_colors = detail::distinct(
        {M * (4 * n * n + n + 3) - n - 1, M * (4 * n * n + 7 * n + 1) - n - 1, M * (4 * M * n + 4 * M - 1)});
    r.case_tag = "null-even";
  } else {
    const I64 n = (N + 1) / 2;
    r.claimed_colors = detail::distinct(
        {M * (4 * n * n - 3 * n + 3) - n - 1, M * (4 * n * n + 3 * n - 1) - n, M * (4 * M * n + 2 * M - 1)});
    r.case_tag = "null-odd";
  }
  r.claimed_chi_la = 3;
  return r;
}

// the stored ad hoc labeling of P_7 v O_3
inline ConstructionResult label_path7_join_null3() {
  auto G = detail::share(join(path(7), null_graph(3)));
  LabelBuilder b(G);
  const int path_labels[] = {4, 1, 5, 2, 6, 3};
  for (int i = 1; i <= 6; ++i) b.put(G->u(i), G->u(i + 1), path_labels[i - 1]);
  const int rows[] = {1, 3, 5, 7, 2, 4, 6};
  const int grid[7][3] = {{12, 14, 21}, {15, 10, 20}, {19, 16, 8}, {13, 17, 18}, {27, 11, 22}, {9, 26, 23}, {24, 25, 7}};
  for (int r = 0; r < 7; ++r)
    for (int j = 0; j < 3; ++j) b.put(G->u(rows[r]), G->v(j + 1), grid[r][j]);
  ConstructionResult r;
  r.family = "path7-join-null3";
  r.labeling = b.finish();
  r.claimed_colors = {51, 65, 119};
  r.claimed_chi_la = 3;
  r.case_tag = "stored-table";
  return r;
}

inline ConstructionResult label_path_join_cycle(int m, int n) {
  if (m < 1) throw usage_error("path-join-cycle needs m >= 1");
  if (n < 2) throw usage_error("path-join-cycle needs n >= 2 (cycle C_{2n-1} of length >= 3)");
  const I64 M = m, n_ = n;
  auto G = detail::share(join(path(2 * m), cycle(2 * n - 1)));
  LabelBuilder b(G);
  ConstructionResult r;
  r.family = detail::fam("path-join-cycle", {{"m", m}, {"n", n}});
  if (m == 1) {
    for (int j = 1; j <= 2 * n - 1; ++j) {
      b.put(G->u(1), G->v(j), j);
      b.put(G->u(2), G->v(j), 4 * n - 1 - j);
    }
    b.put(G->u(1), G->u(2), 4 * n - 1);
    detail::label_v_cycle(b, *G, 2 * n - 1, 4 * n_ - 1, 6 * n_ - 2);
    r.claimed_colors = detail::distinct(
        {2 * n_ * n_ + 3 * n_ - 1, 6 * n_ * n_ - n_, 15 * n_ - 4, 14 * n_ - 4, 14 * n_ - 3});
    r.case_tag = "path-2";
  } else {
    detail::label_path(b, *G, m);
    detail::label_path_null_join(b, *G, m, 2 * n - 1);
    detail::label_v_cycle(b, *G, 2 * n - 1, 4 * M * n_ - 1, 4 * M * n_ + 2 * n_ - 2);
    const I64 v = M * (4 * M * n_ + 2 * M - 1) + 8 * M * n_;
    r.claimed_colors = detail::distinct({M * (4 * n_ * n_ - 3 * n_ + 3) - n_ - 1, M * (4 * n_ * n_ + 3 * n_ - 1) - n_,
                                         v + 3 * n_ - 3, v + 2 * n_ - 3, v + 2 * n_ - 2});
    r.case_tag = "extend-null-odd";
  }
  r.labeling = b.finish();
  r.claimed_chi_la = 5;
  return r;
}

// m = 1 and the K_{r+2} that results
inline ConstructionResult label_complete(int r) {
  ConstructionResult res;
  res.family = detail::fam("complete", {{"r", r}});
  res.labeling = antimagic_complete(r);
  std::vector<I64> c;
  for (int j = 1; j <= r; ++j) c.push_back(detail::clique_sum(r, j));
  res.claimed_colors = detail::distinct(c);
  res.claimed_chi_la = r;
  res.case_tag = "colex";
  res.layout = RowOrder::Natural;
  return res;
}

inline ConstructionResult label_path_join_complete(int m, int r) {
  if (m < 1 || r < 1) throw usage_error("path-join-complete needs m >= 1 and r >= 1");
  const I64 M = m;
  auto G = detail::share(join(path(2 * m), complete(r)));
  ConstructionResult res;
  res.family = detail::fam("path-join-complete", {{"m", m}, {"r", r}});
  if (m == 1) {
    // P_2 v K_r = K_{r+2}; vertex ids run u1,u2,v1..vr in order
    LabelBuilder b(G);
    for (int y = 1; y < G->order(); ++y)
      for (int x = 0; x < y; ++x) b.put(x, y, detail::colex_label(x, y));
    res.labeling = b.finish();
    std::vector<I64> c;
    for (int j = 1; j <= r + 2; ++j) c.push_back(detail::clique_sum(r + 2, j));
    res.claimed_colors = detail::distinct(c);
    res.claimed_chi_la = r + 2;
    res.case_tag = "complete-graph";
    res.layout = RowOrder::Natural;
    return res;
  }
  if (r == 1)
    throw cited_case("P_" + std::to_string(2 * m) + " v K_1 is a fan, settled by a cited result", m == 2 ? 4 : 3,
                     "solver");
  if (r == 3) {
    auto base = label_path_join_cycle(m, 2);
    res.labeling = detail::rehome(base.labeling, G);
    res.claimed_colors = base.claimed_colors;
    res.claimed_chi_la = 5;
    res.case_tag = "triangle-as-cycle";
    return res;
  }
  LabelBuilder b(G);
  detail::label_path(b, *G, m);
  if (r == 2) {
    for (int i = 1; i <= 2 * m; ++i)
      for (int j = 1; j <= 2; ++j)
        if (i != 2 * m) b.put(G->u(i), G->v(j), detail::join_null_two(M, i, j));
    b.put(G->u(2 * m), G->v(1), 4 * M - 1);
    b.put(G->u(2 * m), G->v(2), 6 * M - 1);
    b.put(G->v(1), G->v(2), 6 * M);
    res.labeling = b.finish();
    res.claimed_colors = detail::distinct({9 * M - 2, 11 * M - 2, 8 * M * M + 3 * M, 8 * M * M + 7 * M});
    res.claimed_chi_la = 4;
    res.case_tag = "clique-2";
    return res;
  }
  std::vector<I64> c;
  if (r % 2 == 0) {
    const I64 n = r / 2, shift = 4 * M * n + 2 * M - 1;
    detail::label_path_null_join(b, *G, m, r);
    detail::label_v_clique(b, *G, r, shift);
    c = {M * (4 * n * n + n + 3) - n - 1, M * (4 * n * n + 7 * n + 1) - n - 1};
    for (int j = 1; j <= r; ++j) c.push_back(detail::clique_sum(r, j) + M * (4 * M * n + 4 * M - 1) + (2 * n - 1) * shift);
    res.claimed_chi_la = r + 2;
    res.case_tag = "clique-even";
  } else {
    const I64 n = (r + 1) / 2, shift = 4 * M * n - 1;
    detail::label_path_null_join(b, *G, m, r);
    detail::label_v_clique(b, *G, r, shift);
    c = {M * (4 * n * n - 3 * n + 3) - n - 1, M * (4 * n * n + 3 * n - 1) - n};
    for (int j = 1; j <= r; ++j) c.push_back(detail::clique_sum(r, j) + M * (4 * M * n + 2 * M - 1) + (2 * n - 2) * shift);
    res.claimed_chi_la = r + 2;
    res.case_tag = "clique-odd";
  }
  res.labeling = b.finish();
  res.claimed_colors = detail::distinct(c);
  return res;
}

// ---------------------------------------------------------------- cycle joins

inline ConstructionResult label_cycle_join_null(int m, int n) {
  if (m < 2) throw usage_error("cycle-join-null needs m >= 2 (cycle C_{2m})");
  if (n < 1) throw usage_error("cycle-join-null needs n >= 1");
  if (n == 1) throw cited_case("C_" + std::to_string(2 * m) + " v O_1 is a wheel, settled by a cited result", 3, "solver");
  const I64 M = m, N = n;
  auto G = detail::share(join(cycle(2 * m), null_graph(2 * n - 1)));
  LabelBuilder b(G);
  detail::label_even_cycle(b, *G, m);
  detail::label_path_null_join(b, *G, m, 2 * n - 1, 1);
  ConstructionResult r;
  r.family = detail::fam("cycle-join-null", {{"m", m}, {"n", n}});
  r.labeling = b.finish();
  r.claimed_colors = detail::distinct(
      {M * (4 * N * N - 3 * N + 3) + N, M * (4 * N * N + 3 * N - 1) + N + 1, M * (4 * M * N + 2 * M + 1)});
  r.claimed_chi_la = 3;
  r.case_tag = "shifted-path-labels";
  return r;
}

inline ConstructionResult label_cycle_join_cycle(int m, int n) {
  if (m < 2 || n < 2) throw usage_error("cycle-join-cycle needs m, n >= 2");
  const I64 M = m, N = n;
  auto G = detail::share(join(cycle(2 * m), cycle(2 * n - 1)));
  const I64 v = M * (4 * M * N + 2 * M + 8 * N + 1);
  const I64 u1 = M * (4 * N * N - 3 * N + 3) + N, u2 = M * (4 * N * N + 3 * N - 1) + N + 1;
  ConstructionResult r;
  r.family = detail::fam("cycle-join-cycle", {{"m", m}, {"n", n}});
  r.claimed_chi_la = 5;
  {
    LabelBuilder b(G);
    detail::label_even_cycle(b, *G, m);
    detail::label_path_null_join(b, *G, m, 2 * n - 1, 1);
    detail::label_v_cycle(b, *G, 2 * n - 1, 4 * M * N, 4 * M * N + 2 * N - 1);
    r.labeling = b.finish();
    r.claimed_colors = detail::distinct({u1, u2, v + 3 * N - 1, v + 2 * N - 1, v + 2 * N});
    r.case_tag = "extend-cycle-null";
  }
  if (verify_local_antimagic(r.labeling).ok()) return r;
  // The u and v sums can meet (first at m=3, n=6). Slide the v-cycle labels down to
  // 2m+1..2m+2n-1 and the join labels up by 2n-1; label 1 stays on u_{2m-1}u_{2m}.
  const I64 s = 2 * N - 1;
  LabelBuilder b(G);
  detail::label_even_cycle(b, *G, m);
  detail::label_path_null_join(b, *G, m, 2 * n - 1, 1 + s);
  detail::label_v_cycle(b, *G, 2 * n - 1, 2 * M, 2 * M + 2 * N - 1);
  r.labeling = b.finish();
  const I64 du = 2 * N - 1, dv = 2 * M * s - 2 * (4 * M * N - 2 * M);
  const I64 vv = v + dv;
  r.claimed_colors =
      detail::distinct({u1 + du * s, u2 + du * s, vv + 3 * N - 1, vv + 2 * N - 1, vv + 2 * N});
  r.case_tag = "extend-cycle-null-low-v";
  return r;
}

inline ConstructionResult label_cycle_join_complete(int m, int r) {
  if (m < 2) throw usage_error("cycle-join-complete needs m >= 2");
  if (r < 1 || r % 2 == 0) throw usage_error("cycle-join-complete needs an odd clique order r (got " + std::to_string(r) + ")");
  if (r == 1) throw cited_case("C_" + std::to_string(2 * m) + " v K_1 is a wheel, settled by a cited result", 3, "solver");
  auto G = detail::share(join(cycle(2 * m), complete(r)));
  ConstructionResult res;
  res.family = detail::fam("cycle-join-complete", {{"m", m}, {"r", r}});
  if (r == 3) {
    auto base = label_cycle_join_cycle(m, 2);
    res.labeling = detail::rehome(base.labeling, G);
    res.claimed_colors = base.claimed_colors;
    res.claimed_chi_la = 5;
    res.case_tag = "triangle-as-cycle";
    return res;
  }
  const I64 M = m, N = (r + 1) / 2;
  LabelBuilder b(G);
  detail::label_even_cycle(b, *G, m);
  detail::label_path_null_join(b, *G, m, r, 1);
  detail::label_v_clique(b, *G, r, 4 * M * N);
  res.labeling = b.finish();
  std::vector<I64> c{M * (4 * N * N - 3 * N + 3) + N, M * (4 * N * N + 3 * N - 1) + N + 1};
  for (int j = 1; j <= r; ++j) c.push_back(detail::clique_sum(r, j) + M * (4 * M * N + 2 * M + 1) + 4 * M * N * (2 * N - 2));
  res.claimed_colors = detail::distinct(c);
  res.claimed_chi_la = r + 2;
  res.case_tag = "clique-odd";
  return res;
}

inline ConstructionResult label_odd_cycle_join_even_null(int n) {
  if (n < 1) throw usage_error("odd-cycle-join-even-null needs n >= 1");
  const I64 N = n, K = (2 * N + 1) * ((2 * N + 1) * (2 * N + 1) + 1) / 2;
  const MagicArray P = drop_column_and_rotate(siamese_magic_square(2 * n + 1), n);
  auto G = detail::share(join(cycle(2 * n + 1), null_graph(2 * n)));
  LabelBuilder b(G);
  for (int i = 1; i <= 2 * n + 1; ++i)
    for (int j = 1; j <= 2 * n; ++j) b.put(G->u(i), G->v(j), P.at(i - 1, j - 1));
  const int len = 2 * n + 1;
  for (int i = 1; i <= n + 1; ++i) b.put(G->u(2 * i - 1), G->u((2 * i - 1) % len + 1), 1 + 2 * (N + 1) * (i - 1));
  for (int i = 1; i <= n; ++i) b.put(G->u(2 * i), G->u(2 * i + 1), 1 + 2 * (N + 1) * (N + i));
  ConstructionResult r;
  r.family = detail::fam("odd-cycle-join-even-null", {{"n", n}});
  r.labeling = b.finish();
  r.claimed_colors = detail::distinct(
      {K, K + 1 - 2 * N * (N + 1), K + 1 + 2 * N * (N + 1), K + 1 + (4 + 2 * N) * (N + 1)});
  r.claimed_chi_la = 4;
  r.case_tag = "siamese";
  r.layout = RowOrder::Natural;
  return r;
}

inline ConstructionResult label_complete_join_odd_cycle(int n, int m) {
  if (n < 1) throw usage_error("complete-join-odd-cycle needs n >= 1 (clique K_{2n})");
  if (m < 2) throw usage_error("complete-join-odd-cycle needs m >= 2 (cycle C_{2m-1})");
  const I64 N = n, M = m, len = 2 * M - 1, shift = (2 * N + 1) * len;
  const MagicArray X = nearly_magic_rectangle(2 * n, 2 * m - 1);
  auto G = detail::share(join(cycle(2 * m - 1), complete(2 * n)));
  LabelBuilder b(G);
  const auto h = three_color_odd_cycle(2 * m - 1);
  for (int k = 0; k < h.q(); ++k) b.put(G->u(h.graph().role(h.graph().edge(k).a).index),
                                        G->u(h.graph().role(h.graph().edge(k).b).index), h.label(k));
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * m - 1; ++j) b.put(G->v(i), G->u(j), X.at(i - 1, j - 1) + len);
  // clique vertices in increasing colex sum get v_1, v_3, ..., v_{2n-1}, v_2, ..., v_{2n}
  std::vector<int> name(2 * n);
  for (int k = 0; k < 2 * n; ++k) name[k] = k < n ? 2 * k + 1 : 2 * (k - n) + 2;
  std::vector<I64> fplus(2 * n + 1, 0);  // shifted clique-edge sums by v index
  if (n == 1) {
    b.put(G->v(1), G->v(2), 1 + shift);
    fplus[1] = fplus[2] = 1 + shift;
  } else {
    for (int y = 1; y < 2 * n; ++y)
      for (int x = 0; x < y; ++x) {
        const I64 L = detail::colex_label(x, y) + shift;
        b.put(G->v(name[x]), G->v(name[y]), L);
        fplus[name[x]] += L;
        fplus[name[y]] += L;
      }
  }
  ConstructionResult r;
  r.family = detail::fam("complete-join-odd-cycle", {{"n", n}, {"m", m}});
  r.labeling = b.finish();
  const I64 colsum = N * (1 + 4 * M * N - 2 * N) + 2 * N * len;
  std::vector<I64> c{3 * M - 1 + colsum, 2 * M - 1 + colsum, 2 * M + colsum};
  for (int i = 1; i <= 2 * n; ++i)
    c.push_back(fplus[i] + len * len + N * len * len + M - (i % 2 ? 1 : 0));
  r.claimed_colors = detail::distinct(c);
  r.claimed_chi_la = static_cast<int>(2 * N + 3);
  r.case_tag = n == 1 ? "clique-2" : "nearly-magic";
  r.layout = RowOrder::Natural;
  return r;
}

// ---------------------------------------------------------------- deletions

namespace detail {

// Repair for deleting a join edge of C_{2m} v O_N when the complement route breaks the
// deletion certificate (it does at m=4, N=5). Keep the cycle labels on top, pick the two
// u-class sums so the certificate holds, and search the join matrix for those margins.
inline ConstructionResult join_edge_by_margins(const ConstructionResult& base, int m, int N, int a, int bv,
                                               const EdgeRef& e, const std::string& family) {
  const Graph& G = base.graph();
  const I64 M = m, NN = N, join = 2 * M * NN;
  std::vector<I64> cyc(2 * m + 1, 0);
  I64 cyc_total = 0;
  for (int i = 1; i <= 2 * m; ++i) {
    const I64 L = even_cycle_edge(M, i) + join;
    cyc[i] += L;
    cyc[i % (2 * m) + 1] += L;
    cyc_total += L;
  }
  const I64 J = join * (join + 1) / 2, sv = J / NN;
  const I64 S = (2 * cyc_total + J) / M;  // s_odd + s_even
  const I64 du = NN + 2, dv = 2 * M;
  I64 so = 0, se = 0;
  for (I64 x = 0;; ++x) {
    so = S / 2 - x;
    se = S - so;
    auto fine = [&](I64 s) { return s != sv && s - du != sv - dv && s + du != sv + dv; };
    if (so != se && fine(so) && fine(se)) break;
  }
  std::vector<I64> rows(2 * m);
  for (int i = 1; i <= 2 * m; ++i) rows[i - 1] = (i % 2 ? so : se) - cyc[i];
  std::vector<I64> cells;
  if (!anneal(2 * m, N, rows, sv, size_seed(2 * m, N, 7), cells))
    throw std::runtime_error("join-edge deletion: margin search exhausted for m=" + std::to_string(m));
  LabelBuilder b(base.labeling.graph_ptr());
  for (int i = 1; i <= 2 * m; ++i) b.put(G.u(i), G.u(i % (2 * m) + 1), even_cycle_edge(M, i) + join);
  int one_i = 0, one_j = 0;
  for (int i = 1; i <= 2 * m; ++i)
    for (int j = 1; j <= N; ++j) {
      const I64 L = cells[static_cast<size_t>(i - 1) * N + (j - 1)];
      b.put(G.u(i), G.v(j), L);
      if (L == 1) one_i = i, one_j = j;
    }
  auto f = b.finish();
  f = transport(f, rotation(G, 2 * m, 0, one_j));         // label 1 now on u_{one_i} v_1
  f = transport(f, rotation(G, 2 * m, a - one_i, bv));    // and on u_a v_bv
  return finish_deletion(base, f, e, {so - du, se - du, sv - dv}, 3, true, "join-edge-margins", family);
}

}  // namespace detail

inline ConstructionResult label_cycle_join_null_minus_edge(int m, int n, const std::string& edge = "") {
  auto base = label_cycle_join_null(m, n);
  const Graph& G = base.graph();
  const I64 M = m, N = n;
  const EdgeRef e = edge.empty() ? EdgeRef(G.u(2 * m - 1), G.u(2 * m)) : parse_edge(G, edge);
  if (G.edge_index(e) < 0) throw usage_error("edge " + edge + " is not in " + G.family().str());
  const std::string family = detail::fam("cycle-join-null-minus-edge", {{"m", m}, {"n", n}}) + "[" +
                             G.role(e.a).str() + "-" + G.role(e.b).str() + "]";
  if (const int k = detail::cycle_position(G, 2 * m, e, Side::U)) {
    // label 1 sits on u_{2m-1}u_{2m}; rotate it onto u_k u_{k+1}
    const auto moved = transport(base.labeling, detail::rotation(G, 2 * m, k - (2 * m - 1)));
    return detail::finish_deletion(base, moved, e,
                                   {4 * M * N * N - 3 * M * N + 3 * M - N - 1, 4 * M * N * N + 3 * M * N - M - N,
                                    4 * M * M * N + 2 * M * M - M},
                                   3, true, "cycle-edge", family);
  }
  // a join edge u_a v_b: complement puts label 1 on u_{2m}v_1
  const int a = G.role(e.a).side == Side::U ? G.role(e.a).index : G.role(e.b).index;
  const int bv = G.role(e.a).side == Side::V ? G.role(e.a).index : G.role(e.b).index;
  const auto cv = check_complement_valid(base.labeling);
  if (!cv.ok) throw std::logic_error("complement conditions fail: " + cv.reason);
  const auto h = complement_labeling(base.labeling);
  const auto moved = transport(h, detail::rotation(G, 2 * m, a - 2 * m, bv));
  auto res = detail::finish_deletion(base, moved, e,
                                     {4 * M * N * N + 7 * M * N - 3 * M - N, 4 * M * N * N + M * N + M - N - 1,
                                      4 * M * M * N - 2 * M * M - M},
                                     3, true, "join-edge-complement", family);
  if (res.deletion_check->ok) return res;
  return detail::join_edge_by_margins(base, m, 2 * n - 1, a, bv, e, family);
}

inline ConstructionResult label_cycle_join_cycle_minus_edge(int m, int n, const std::string& edge = "") {
  auto base = label_cycle_join_cycle(m, n);
  const Graph& G = base.graph();
  const I64 M = m, N = n;
  const EdgeRef e = edge.empty() ? EdgeRef(G.u(2 * m - 1), G.u(2 * m)) : parse_edge(G, edge);
  if (G.edge_index(e) < 0) throw usage_error("edge " + edge + " is not in " + G.family().str());
  const int k = detail::cycle_position(G, 2 * m, e, Side::U);
  if (!k)
    throw open_problem("deleting " + G.role(e.a).str() + "-" + G.role(e.b).str() +
                       " from C_{2m} v C_{2n-1}: only edges of the even cycle are settled; other edges are an open problem");
  const auto moved = transport(base.labeling, detail::rotation(G, 2 * m, k - (2 * m - 1)));
  // every sum drops by its degree; the low-v variant also moved the u and v sums
  const bool low = base.case_tag == "extend-cycle-null-low-v";
  const I64 s = low ? 2 * N - 1 : 0;
  const I64 du = (2 * N - 1) * s, dv = low ? 2 * M * s - 2 * (4 * M * N - 2 * M) : 0;
  const I64 v = M * (4 * M * N + 2 * M + 8 * N + 1) - 2 * M + dv;
  return detail::finish_deletion(
      base, moved, e,
      {M * (4 * N * N - 3 * N + 3) - N - 1 + du, M * (4 * N * N + 3 * N - 1) - N + du, v + 3 * N - 3, v + 2 * N - 3,
       v + 2 * N - 2},
      5, true, "cycle-edge",
      detail::fam("cycle-join-cycle-minus-edge", {{"m", m}, {"n", n}}) + "[" + G.role(e.a).str() + "-" +
          G.role(e.b).str() + "]");
}

// Only edges of the odd cycle carry the labels 1 and q, so only they admit the deletion certificate.
// Such a deletion leaves chi = 3, so the 4 colours are an upper bound there.
inline ConstructionResult label_odd_cycle_join_even_null_minus_edge(int n, const std::string& edge = "") {
  auto base = label_odd_cycle_join_even_null(n);
  const Graph& G = base.graph();
  const I64 N = n, K = (2 * N + 1) * ((2 * N + 1) * (2 * N + 1) + 1) / 2;
  const EdgeRef e = edge.empty() ? EdgeRef(G.u(1), G.u(2)) : parse_edge(G, edge);
  if (G.edge_index(e) < 0) throw usage_error("edge " + edge + " is not in " + G.family().str());
  const int len = 2 * n + 1;
  const int k = detail::cycle_position(G, len, e, Side::U);
  if (!k) {
    if (G.size() - 1 <= 12)
      throw cited_case("no certified construction for deleting a join edge; the claimed value is checked by search", 4,
                       "solver");
    throw open_problem("deleting the join edge " + G.role(e.a).str() + "-" + G.role(e.b).str() +
                       ": no labeling with label 1 on a join edge is available, and the graph is too large to search");
  }
  const auto moved = transport(base.labeling, detail::rotation(G, len, k - 1));
  const I64 du = 2 * N + 2, dv = 2 * N + 1;
  return detail::finish_deletion(base, moved, e,
                                 {K - dv, K + 1 - 2 * N * (N + 1) - du, K + 1 + 2 * N * (N + 1) - du,
                                  K + 1 + (4 + 2 * N) * (N + 1) - du},
                                 4, false, "cycle-edge",
                                 detail::fam("odd-cycle-join-even-null-minus-edge", {{"n", n}}) + "[" +
                                     G.role(e.a).str() + "-" + G.role(e.b).str() + "]");
}

}  // namespace lajoin
