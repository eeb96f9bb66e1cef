#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace lajoin {

// labels[k] is the label of G.edge(k)
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  EdgeLabeling(GraphPtr g, std::vector<std::int64_t> labels) : g_(std::move(g)), labels_(std::move(labels)) {
    if (!g_) throw usage_error("labeling without a graph");
    if (static_cast<int>(labels_.size()) != g_->size())
      throw usage_error("labeling has " + std::to_string(labels_.size()) + " labels for " + std::to_string(g_->size()) +
                        " edges");
    sums_.assign(g_->order(), 0);
    for (int k = 0; k < g_->size(); ++k) {
      sums_[g_->edge(k).a] += labels_[k];
      sums_[g_->edge(k).b] += labels_[k];
    }
  }

  const Graph& graph() const { return *g_; }
  GraphPtr graph_ptr() const { return g_; }
  int q() const { return g_->size(); }
  const std::vector<std::int64_t>& labels() const { return labels_; }
  std::int64_t label(int edge_id) const { return labels_.at(edge_id); }
  std::int64_t label(int x, int y) const {
    const int id = g_->edge_index(x, y);
    if (id < 0) throw usage_error("no edge " + g_->role(x).str() + "-" + g_->role(y).str());
    return labels_[id];
  }
  // raw sums; meaningful as f+ only when the labels form a bijection
  std::int64_t sum(int v) const { return sums_.at(v); }
  const std::vector<std::int64_t>& sums() const { return sums_; }

  // first problem with the labels as a bijection onto [1..q], empty if none
  std::string bijection_problem() const {
    const int q = this->q();
    std::vector<int> seen(q + 1, -1);
    for (int k = 0; k < q; ++k) {
      const auto L = labels_[k];
      if (L < 1 || L > q)
        return "edge " + g_->edge_name(k) + " has label " + std::to_string(L) + " outside [1," + std::to_string(q) + "]";
      if (seen[L] >= 0) return "label " + std::to_string(L) + " used on " + g_->edge_name(seen[L]) + " and " + g_->edge_name(k);
      seen[L] = k;
    }
    return {};
  }
  bool is_bijection() const { return bijection_problem().empty(); }

 private:
  GraphPtr g_;
  std::vector<std::int64_t> labels_;
  std::vector<std::int64_t> sums_;
};

// Collects labels by endpoint; finish() insists every edge got exactly one.
class LabelBuilder {
 public:
  explicit LabelBuilder(GraphPtr g) : g_(std::move(g)), labels_(g_->size(), 0) {}
  const Graph& graph() const { return *g_; }
  void put(int x, int y, std::int64_t L) {
    const int id = g_->edge_index(x, y);
    if (id < 0) throw std::logic_error("no edge " + g_->role(x).str() + "-" + g_->role(y).str());
    if (labels_[id]) throw std::logic_error("edge " + g_->edge_name(id) + " labelled twice");
    labels_[id] = L;
  }
  EdgeLabeling finish() const {
    for (int k = 0; k < g_->size(); ++k)
      if (!labels_[k]) throw std::logic_error("edge " + g_->edge_name(k) + " left unlabelled");
    return EdgeLabeling(g_, labels_);
  }

 private:
  GraphPtr g_;
  std::vector<std::int64_t> labels_;
};

inline std::vector<std::int64_t> induced_sums(const EdgeLabeling& f) {
  const auto problem = f.bijection_problem();
  if (!problem.empty()) throw usage_error(problem);
  return f.sums();
}

enum class Verdict { Tight, Above, Below, NoBound };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Tight: return "tight";
    case Verdict::Above: return "above-bound";
    case Verdict::Below: return "below-bound";
    case Verdict::NoBound: return "no-bound";
  }
  return "?";
}

struct ColorClass {
  std::int64_t sum = 0;
  std::vector<int> vertices;
};

struct LabelingCertificate {
  bool bijection_ok = false;
  bool proper = false;
  std::vector<ColorClass> color_classes;  // ascending by sum
  int color_count = 0;
  std::optional<int> lower_bound;
  Verdict verdict = Verdict::NoBound;
  std::optional<std::pair<int, int>> conflict;  // adjacent pair with equal sums
  std::string reason;                           // empty when bijective and proper

  bool ok() const { return bijection_ok && proper; }
  std::vector<std::int64_t> colors() const {
    std::vector<std::int64_t> c;
    for (const auto& k : color_classes) c.push_back(k.sum);
    return c;
  }
};

// Never throws on a bad labeling; the certificate says what is wrong.
inline LabelingCertificate verify_local_antimagic(const EdgeLabeling& f, std::optional<int> lower_bound = {}) {
  const Graph& G = f.graph();
  LabelingCertificate c;
  c.reason = f.bijection_problem();
  c.bijection_ok = c.reason.empty();
  c.proper = true;
  for (int k = 0; k < G.size() && c.proper; ++k) {
    const auto& e = G.edge(k);
    if (f.sum(e.a) == f.sum(e.b)) {
      c.proper = false;
      c.conflict = std::make_pair(e.a, e.b);
      if (c.reason.empty())
        c.reason = "adjacent " + G.role(e.a).str() + " and " + G.role(e.b).str() + " both sum to " + std::to_string(f.sum(e.a));
    }
  }
  std::map<std::int64_t, std::vector<int>> by_sum;
  for (int v = 0; v < G.order(); ++v) by_sum[f.sum(v)].push_back(v);
  for (auto& [s, vs] : by_sum) c.color_classes.push_back(ColorClass{s, vs});
  c.color_count = static_cast<int>(c.color_classes.size());
  c.lower_bound = lower_bound;
  if (lower_bound) {
    if (c.color_count == *lower_bound) c.verdict = Verdict::Tight;
    else c.verdict = c.color_count > *lower_bound ? Verdict::Above : Verdict::Below;
  }
  return c;
}

inline EdgeLabeling complement_labeling(const EdgeLabeling& f) {
  std::vector<std::int64_t> g(f.labels().size());
  const std::int64_t q1 = f.q() + 1;
  for (size_t k = 0; k < g.size(); ++k) g[k] = q1 - f.labels()[k];
  return EdgeLabeling(f.graph_ptr(), g);
}

struct ConditionCheck {
  bool ok = true;
  std::optional<std::pair<int, int>> witness;
  std::string reason;
};

// (i) equal sums force equal degrees; (ii) unequal sums never differ by exactly (q+1)(deg x - deg y)
inline ConditionCheck check_complement_valid(const EdgeLabeling& f) {
  const Graph& G = f.graph();
  const std::int64_t q1 = f.q() + 1;
  for (int x = 0; x < G.order(); ++x)
    for (int y = x + 1; y < G.order(); ++y) {
      const std::int64_t dx = G.degree(x), dy = G.degree(y);
      if (f.sum(x) == f.sum(y)) {
        if (dx != dy)
          return {false, std::make_pair(x, y),
                  G.role(x).str() + " and " + G.role(y).str() + " share sum " + std::to_string(f.sum(x)) + " with degrees " +
                      std::to_string(dx) + " and " + std::to_string(dy)};
      } else if (q1 * (dx - dy) == f.sum(x) - f.sum(y)) {
        return {false, std::make_pair(x, y),
                G.role(x).str() + " and " + G.role(y).str() + " collide after complementing"};
      }
    }
  return {};
}

// Two colour classes of sizes X > Y with colours x < y need xX = yY = q(q+1)/2.
// True when no such x, y exist, i.e. a 2-colouring with these part sizes is impossible.
inline bool two_color_infeasible(std::int64_t q, std::int64_t X, std::int64_t Y) {
  if (X < 1 || Y < 1) throw usage_error("part sizes must be positive");
  if (X < Y) std::swap(X, Y);
  if (X == Y) return true;
  const std::int64_t T = q * (q + 1) / 2;
  if (T % X || T % Y) return true;
  return !(T / X < T / Y);
}

// Conditions for deleting a label-1 edge: f(e) = 1, every colour class has one degree,
// and both f+ - d and f+ + d stay distinct across classes.
inline ConditionCheck check_deletion_certificate(const EdgeLabeling& f, const EdgeRef& e) {
  const Graph& G = f.graph();
  const int id = G.edge_index(e);
  if (id < 0) return {false, std::nullopt, "edge is not in the graph"};
  if (f.label(id) != 1) return {false, std::nullopt, "edge " + G.edge_name(id) + " carries label " + std::to_string(f.label(id)) + ", not 1"};
  auto cert = verify_local_antimagic(f);
  if (!cert.ok()) return {false, cert.conflict, "labeling is not local antimagic: " + cert.reason};
  std::vector<int> deg(cert.color_classes.size());
  for (size_t a = 0; a < cert.color_classes.size(); ++a) {
    const auto& cls = cert.color_classes[a];
    deg[a] = G.degree(cls.vertices[0]);
    for (int v : cls.vertices)
      if (G.degree(v) != deg[a])
        return {false, std::make_pair(cls.vertices[0], v), "colour class " + std::to_string(cls.sum) + " mixes degrees"};
  }
  for (size_t a = 0; a < deg.size(); ++a)
    for (size_t b = a + 1; b < deg.size(); ++b) {
      const auto& A = cert.color_classes[a];
      const auto& B = cert.color_classes[b];
      if (A.sum - deg[a] == B.sum - deg[b])
        return {false, std::make_pair(A.vertices[0], B.vertices[0]), "classes " + std::to_string(A.sum) + " and " + std::to_string(B.sum) + " meet after subtracting degrees"};
      if (A.sum + deg[a] == B.sum + deg[b])
        return {false, std::make_pair(A.vertices[0], B.vertices[0]), "classes " + std::to_string(A.sum) + " and " + std::to_string(B.sum) + " meet after adding degrees"};
    }
  return {};
}

// G - e labelled by f - 1 (f(e) must be 1)
inline EdgeLabeling delete_labeled_edge(const EdgeLabeling& f, const EdgeRef& e) {
  const int id = f.graph().edge_index(e);
  if (id < 0) throw usage_error("edge is not in the graph");
  if (f.label(id) != 1) throw usage_error("only the edge labelled 1 can be removed this way");
  auto H = std::make_shared<const Graph>(delete_edge(f.graph(), e));
  std::vector<std::int64_t> lab;
  lab.reserve(H->size());
  for (const auto& x : H->edges()) lab.push_back(f.label(f.graph().edge_index(x)) - 1);
  return EdgeLabeling(H, lab);
}

// Moves f along the vertex bijection sigma (old id -> new id), which must be an automorphism of the graph.
inline EdgeLabeling transport(const EdgeLabeling& f, const std::vector<int>& sigma) {
  const Graph& G = f.graph();
  std::vector<std::int64_t> lab(G.size(), 0);
  for (int k = 0; k < G.size(); ++k) {
    const auto& e = G.edge(k);
    const int id = G.edge_index(sigma.at(e.a), sigma.at(e.b));
    if (id < 0) throw std::logic_error("vertex map is not an automorphism");
    lab[id] = f.label(k);
  }
  return EdgeLabeling(f.graph_ptr(), lab);
}

}  // namespace lajoin
