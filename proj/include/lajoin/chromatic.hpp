#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace lajoin {

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> neighbour_masks(const Graph& G) {
  std::vector<Mask> nb(G.order(), 0);
  for (const auto& e : G.edges()) {
    nb[e.a] |= Mask{1} << e.b;
    nb[e.b] |= Mask{1} << e.a;
  }
  return nb;
}

// Bron-Kerbosch with pivoting; graphs here are tiny
inline void max_clique_rec(const std::vector<Mask>& nb, Mask R, Mask P, Mask X, int& best) {
  if (!P && !X) {
    best = std::max(best, std::popcount(R));
    return;
  }
  if (std::popcount(R) + std::popcount(P) <= best) return;
  const Mask PX = P | X;
  int pivot = std::countr_zero(PX);
  Mask cand = P & ~nb[pivot];
  while (cand) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    const Mask bit = Mask{1} << v;
    max_clique_rec(nb, R | bit, P & nb[v], X & nb[v], best);
    P &= ~bit;
    X |= bit;
  }
}

inline bool colour_rec(const std::vector<Mask>& nb, const std::vector<int>& order, std::vector<int>& col, size_t at,
                       int k, int used) {
  if (at == order.size()) return true;
  const int v = order[at];
  // new colour only one beyond those in use: kills colour-permutation symmetry
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    Mask m = nb[v];
    while (m) {
      const int w = std::countr_zero(m);
      m &= m - 1;
      if (col[w] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    col[v] = c;
    if (colour_rec(nb, order, col, at + 1, k, std::max(used, c + 1))) return true;
    col[v] = -1;
  }
  return false;
}

}  // namespace detail

inline int max_clique(const Graph& G) {
  if (G.order() > 64) throw usage_error("max_clique supports at most 64 vertices");
  if (G.order() == 0) return 0;
  auto nb = detail::neighbour_masks(G);
  const detail::Mask all = G.order() == 64 ? ~detail::Mask{0} : ((detail::Mask{1} << G.order()) - 1);
  int best = 0;
  detail::max_clique_rec(nb, 0, all, 0, best);
  return best;
}

inline bool is_colourable(const Graph& G, int k) {
  auto nb = detail::neighbour_masks(G);
  std::vector<int> order(G.order());
  for (int i = 0; i < G.order(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return G.degree(x) > G.degree(y); });
  std::vector<int> col(G.order(), -1);
  return detail::colour_rec(nb, order, col, 0, k, 0);
}

inline int chromatic_number_exact(const Graph& G, int max_vertices = 16) {
  if (G.order() > max_vertices)
    throw usage_error("graph has " + std::to_string(G.order()) + " vertices, above the exact limit of " +
                      std::to_string(max_vertices) + "; for joins use chi(A v B) = chi(A) + chi(B)");
  if (G.order() > 64) throw usage_error("exact chromatic number supports at most 64 vertices");
  if (G.order() == 0) return 0;
  if (G.size() == 0) return 1;
  for (int k = max_clique(G);; ++k)
    if (is_colourable(G, k)) return k;
}

namespace detail {

inline int family_chi(const Family& f) {
  using K = Family::Kind;
  switch (f.kind) {
    case K::Path: return 2;
    case K::Cycle: return f.params[0] % 2 ? 3 : 2;
    case K::Null: return 1;
    case K::Complete: return f.params[0];
    case K::CompleteBipartite: return 2;
    case K::Join: {
      const int a = family_chi(f.parts[0]), b = family_chi(f.parts[1]);
      return a > 0 && b > 0 ? a + b : -1;
    }
    default: return -1;
  }
}

}  // namespace detail

// chi when small enough to compute, otherwise the join additivity formula.
// For a deleted edge past the exact limit we only claim max(clique, chi(parent) - 1), a valid lower bound.
inline int chromatic_lower_bound(const Graph& G, int max_vertices = 16) {
  if (G.order() <= max_vertices) return chromatic_number_exact(G, max_vertices);
  const int direct = detail::family_chi(G.family());
  if (direct > 0) return direct;
  const Family* root = G.family().join_root();
  int lb = G.order() <= 64 ? max_clique(G) : 2;
  if (root && G.family().kind == Family::Kind::MinusEdge) {
    const Family& A = root->parts[0];
    const Family& B = root->parts[1];
    const auto& rem = *G.family().removed;
    // a single cycle edge removed from an odd cycle side leaves a path there
    if (G.family().parts[0].kind == Family::Kind::Join && rem.first.side == rem.second.side) {
      const Family& side = rem.first.side == Side::U ? A : B;
      const Family& rest = rem.first.side == Side::U ? B : A;
      const int rc = detail::family_chi(rest);
      if (side.kind == Family::Kind::Cycle && rc > 0) return std::max(lb, 2 + rc);
    }
    const int parent = detail::family_chi(*root);
    if (parent > 0) lb = std::max(lb, parent - 1);
  }
  return std::max(lb, 1);
}

}  // namespace lajoin
