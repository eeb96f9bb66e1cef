#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "chromatic.hpp"
#include "labeling.hpp"

namespace lajoin {

enum class EdgeOrder { DegreeDesc, Input };
enum class LabelOrder { LargeFirst, SmallFirst };

// seconds; LAJOIN_TIME_BUDGET overrides the built-in 60
inline double default_time_budget() {
  if (const char* s = std::getenv("LAJOIN_TIME_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end != s && *end == '\0' && v > 0) return v;
    throw usage_error(std::string("LAJOIN_TIME_BUDGET must be a positive number of seconds (got '") + s + "')");
  }
  return 60.0;
}

struct SearchConfig {
  int max_edges = 12;
  std::optional<int> target_colors;  // stop at the first labeling with at most this many colours
  bool symmetry_pruning = true;
  double time_budget = default_time_budget();
  EdgeOrder edge_order = EdgeOrder::DegreeDesc;
  LabelOrder label_order = LabelOrder::LargeFirst;
  int threads = 0;  // 0: hardware concurrency

  void validate() const {
    if (max_edges < 1) throw usage_error("max_edges must be >= 1");
    if (!(time_budget > 0)) throw usage_error("time budget must be positive");
    if (threads < 0) throw usage_error("thread count must be >= 0");
    if (target_colors && *target_colors < 1) throw usage_error("target colour count must be >= 1");
  }
};

struct SolveReport {
  std::optional<int> chi_la;  // best colour count found; exact when proven_optimal
  bool proven_optimal = false;
  bool timed_out = false;
  bool target_reached = false;
  int lower_bound = 0;  // chi(G)
  std::optional<EdgeLabeling> witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_s = 0;
  bool symmetry_used = false;

  std::string status() const {
    if (proven_optimal) return chi_la ? "optimal" : "no-labeling";
    if (timed_out) return "timeout";
    return "target-reached";
  }
};

namespace detail {

struct SearchShared {
  std::atomic<int> global_best{std::numeric_limits<int>::max()};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<int> decisive_root{std::numeric_limits<int>::max()};  // first root that hit the floor
  std::chrono::steady_clock::time_point deadline;
};

struct RootResult {
  int best = std::numeric_limits<int>::max();
  std::vector<int> labels;  // by search position
  std::uint64_t nodes = 0;
  bool complete = false;
};

// One worker's view of the search. Edges are visited in `order`; an endpoint's sum is final once
// its last edge gets a label, and only final sums are compared or counted.
class Searcher {
 public:
  Searcher(const Graph& G, const std::vector<int>& order, const SearchConfig& cfg, int floor, bool symmetric,
           SearchShared& shared)
      : cfg_(cfg), floor_(floor), symmetric_(symmetric), sh_(shared), q_(G.size()) {
    ends_.reserve(q_);
    for (int id : order) ends_.push_back(G.edge(id));
    const int n = G.order();
    rem_.assign(n, 0);
    sum_.assign(n, 0);
    for (const auto& e : ends_) {
      ++rem_[e.a];
      ++rem_[e.b];
    }
    nbrs_.assign(n, {});
    for (const auto& e : ends_) {
      nbrs_[e.a].push_back(e.b);
      nbrs_[e.b].push_back(e.a);
    }
    used_.assign(q_ + 2, 0);
    cnt_.assign(static_cast<size_t>(q_) * (q_ + 1) / 2 + 2, 0);
    cur_.assign(q_, 0);
    for (int v = 0; v < n; ++v)
      if (rem_[v] == 0 && cnt_[0]++ == 0) ++distinct_;  // isolated vertices all carry colour 0
    use_global_ = !cfg.target_colors;
    for (int L = 1; L <= q_; ++L) labels_.push_back(L);
    if (cfg.label_order == LabelOrder::LargeFirst) std::reverse(labels_.begin(), labels_.end());
  }

  RootResult run_root(int root_label, int root_index) {
    root_index_ = root_index;
    RootResult r;
    if (place(0, root_label)) {
      dfs(1);
      lift(0, root_label);
    }
    r.best = best_;
    r.labels = best_labels_;
    r.nodes = nodes_;
    r.complete = !aborted_;
    return r;
  }

 private:
  bool should_abort() {
    if (aborted_) return true;
    if ((nodes_ & 1023) == 0) {
      if (std::chrono::steady_clock::now() > sh_.deadline) {
        sh_.timed_out = true;
        sh_.stop = true;
      }
    }
    if (sh_.stop || sh_.decisive_root.load() < root_index_) aborted_ = true;
    return aborted_;
  }

  // count of distinct final sums plus whether any adjacent pair clashes
  bool finalize(int v) {
    for (int w : nbrs_[v])
      if (rem_[w] == 0 && w != v && sum_[w] == sum_[v]) return false;
    if (cnt_[sum_[v]]++ == 0) ++distinct_;
    return true;
  }
  void unfinalize(int v) {
    if (--cnt_[sum_[v]] == 0) --distinct_;
  }

  // assign label L at position k; false (and nothing changed) if this breaks properness or the bound
  bool place(int k, int L) {
    const auto& e = ends_[k];
    if (symmetric_ && cfg_.symmetry_pruning) {
      // complement pairs f with q+1-f; keep the member where label q sits before label 1
      if (L == 1 && !used_[q_]) return false;
      if (L == q_ && q_ > 1 && used_[1]) return false;
    }
    used_[L] = 1;
    cur_[k] = L;
    sum_[e.a] += L;
    sum_[e.b] += L;
    --rem_[e.a];
    --rem_[e.b];
    bool ok = true;
    int done = 0;
    if (rem_[e.a] == 0) {
      ok = finalize(e.a);
      if (ok) done |= 1;
    }
    if (ok && rem_[e.b] == 0) {
      ok = finalize(e.b);
      if (ok) done |= 2;
    }
    if (ok && (distinct_ >= best_ || (use_global_ && distinct_ > sh_.global_best.load(std::memory_order_relaxed)))) ok = false;
    if (!ok) {
      if (done & 2) unfinalize(e.b);
      if (done & 1) unfinalize(e.a);
      undo(k, L);
      return false;
    }
    return true;
  }
  void undo(int k, int L) {
    const auto& e = ends_[k];
    ++rem_[e.a];
    ++rem_[e.b];
    sum_[e.a] -= L;
    sum_[e.b] -= L;
    used_[L] = 0;
    cur_[k] = 0;
  }
  void lift(int k, int L) {
    const auto& e = ends_[k];
    if (rem_[e.b] == 0) unfinalize(e.b);
    if (rem_[e.a] == 0) unfinalize(e.a);
    undo(k, L);
  }

  void dfs(int k) {
    ++nodes_;
    if (should_abort()) return;
    if (k == q_) {
      // strictly better than anything this root has seen, by construction of the bound in place()
      best_ = distinct_;
      best_labels_ = cur_;
      int g = sh_.global_best.load();
      while (best_ < g && !sh_.global_best.compare_exchange_weak(g, best_)) {
      }
      if (best_ <= floor_ || (cfg_.target_colors && best_ <= *cfg_.target_colors)) {
        int d = sh_.decisive_root.load();
        while (root_index_ < d && !sh_.decisive_root.compare_exchange_weak(d, root_index_)) {
        }
        aborted_ = true;
        reached_floor_ = true;
      }
      return;
    }
    for (int L : labels_) {
      if (used_[L]) continue;
      if (!place(k, L)) continue;
      dfs(k + 1);
      lift(k, L);
      if (aborted_) return;
    }
  }

 public:
  bool reached_floor() const { return reached_floor_; }

 private:
  const SearchConfig& cfg_;
  int floor_;
  bool symmetric_;
  bool use_global_ = true;  // with a target, roots must not see each other or the witness depends on timing
  SearchShared& sh_;
  int q_;
  int root_index_ = 0;
  std::vector<EdgeRef> ends_;
  std::vector<int> rem_;
  std::vector<std::int64_t> sum_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<char> used_;
  std::vector<int> cnt_;
  std::vector<int> cur_;
  std::vector<int> labels_;
  int distinct_ = 0;
  int best_ = std::numeric_limits<int>::max();
  std::vector<int> best_labels_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool reached_floor_ = false;
};

inline std::vector<int> search_order(const Graph& G, EdgeOrder o) {
  std::vector<int> ord(G.size());
  std::iota(ord.begin(), ord.end(), 0);
  if (o == EdgeOrder::DegreeDesc) {
    auto key = [&](int id) {
      const auto& e = G.edge(id);
      return std::make_pair(std::max(G.degree(e.a), G.degree(e.b)), G.degree(e.a) + G.degree(e.b));
    };
    std::stable_sort(ord.begin(), ord.end(), [&](int x, int y) { return key(x) > key(y); });
  }
  return ord;
}

}  // namespace detail

// Exhaustive branch and bound over all bijections E -> [1..q].
// The root (label of the first edge in search order) is split across workers; each root keeps the
// first optimum it meets in its own DFS order and the merge takes the smallest count, then the smallest
// root, so the witness does not depend on the thread count. nodes_explored does.
inline SolveReport exact_chi_la(const Graph& G, const SearchConfig& cfg = {}) {
  cfg.validate();
  if (G.order() < 3) throw usage_error("local antimagic labelings need order >= 3 (got " + std::to_string(G.order()) + ")");
  if (G.size() > cfg.max_edges)
    throw usage_error("graph has " + std::to_string(G.size()) + " edges, above max_edges " + std::to_string(cfg.max_edges));
  if (G.size() == 0) throw usage_error("graph has no edges");
  const auto t0 = std::chrono::steady_clock::now();
  SolveReport rep;
  rep.lower_bound = chromatic_number_exact(G, 64);
  const bool symmetric = G.is_regular() && cfg.symmetry_pruning;
  rep.symmetry_used = symmetric;
  const auto order = detail::search_order(G, cfg.edge_order);
  const int q = G.size();

  detail::SearchShared sh;
  sh.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(cfg.time_budget));
  std::vector<int> roots;
  for (int L = 1; L <= q; ++L) roots.push_back(L);
  if (cfg.label_order == LabelOrder::LargeFirst) std::reverse(roots.begin(), roots.end());
  std::vector<detail::RootResult> results(roots.size());
  std::vector<char> hit_floor(roots.size(), 0);

  int workers = cfg.threads ? cfg.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min<int>(workers, static_cast<int>(roots.size()));
  std::atomic<int> next{0};
  auto work = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= static_cast<int>(roots.size())) return;
      if (sh.stop || sh.decisive_root.load() < r) {
        results[r].complete = false;
        continue;
      }
      detail::Searcher s(G, order, cfg, rep.lower_bound, symmetric, sh);
      results[r] = s.run_root(roots[r], r);
      hit_floor[r] = s.reached_floor();
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // roots after the decisive one were cut on purpose; anything else incomplete means time ran out
  const int decisive = sh.decisive_root.load();
  bool all_done = true;
  int best = std::numeric_limits<int>::max(), best_root = -1;
  for (int r = 0; r < static_cast<int>(roots.size()); ++r) {
    if (r > decisive) break;
    rep.nodes_explored += results[r].nodes;
    if (!results[r].complete && !hit_floor[r]) all_done = false;
    if (!results[r].labels.empty() && results[r].best < best) {
      best = results[r].best;
      best_root = r;
    }
  }
  rep.timed_out = sh.timed_out;
  if (best_root >= 0) {
    rep.chi_la = best;
    std::vector<std::int64_t> lab(q);
    for (int k = 0; k < q; ++k) lab[order[k]] = results[best_root].labels[k];
    rep.witness = EdgeLabeling(std::make_shared<const Graph>(G), lab);
  }
  rep.target_reached = cfg.target_colors && rep.chi_la && *rep.chi_la <= *cfg.target_colors;
  rep.proven_optimal = (rep.chi_la && *rep.chi_la <= rep.lower_bound) || (all_done && !rep.timed_out && decisive == std::numeric_limits<int>::max());
  if (rep.proven_optimal) rep.timed_out = false;
  rep.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace lajoin
