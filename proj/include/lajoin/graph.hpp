#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace lajoin {

enum class Side { U, V };

struct Role {
  Side side = Side::U;
  int index = 1;  // 1-based, as in u_1, v_1

  std::string str() const { return (side == Side::U ? "u" : "v") + std::to_string(index); }
  bool operator==(const Role&) const = default;
};

inline Role parse_role(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'u' && s[0] != 'v'))
    throw usage_error("bad vertex role '" + s + "' (expected u<k> or v<k>)");
  int k = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw usage_error("bad vertex role '" + s + "'");
    k = k * 10 + (s[i] - '0');
    if (k > 1000000) throw usage_error("vertex index too large in '" + s + "'");
  }
  if (k < 1) throw usage_error("vertex index must be >= 1 in '" + s + "'");
  return Role{s[0] == 'u' ? Side::U : Side::V, k};
}

// internal ids are 0-based; everything printed is 1-based
struct EdgeRef {
  int a = 0, b = 0;

  EdgeRef() = default;
  EdgeRef(int x, int y) {
    if (x == y) throw usage_error("edge endpoints must differ (got " + std::to_string(x + 1) + " twice)");
    a = std::min(x, y);
    b = std::max(x, y);
  }
  bool operator==(const EdgeRef&) const = default;
  auto operator<=>(const EdgeRef&) const = default;
};

struct Family {
  enum class Kind { Custom, Path, Cycle, Null, Complete, CompleteBipartite, Join, MinusEdge };
  Kind kind = Kind::Custom;
  std::vector<int> params;
  std::vector<Family> parts;        // join: {A, B}; minus-edge: {parent}
  std::optional<std::pair<Role, Role>> removed;

  std::string str() const {
    auto list = [&] {
      std::string s;
      for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
      return s;
    };
    switch (kind) {
      case Kind::Custom: return "custom";
      case Kind::Path: return "path(" + list() + ")";
      case Kind::Cycle: return "cycle(" + list() + ")";
      case Kind::Null: return "null(" + list() + ")";
      case Kind::Complete: return "complete(" + list() + ")";
      case Kind::CompleteBipartite: return "complete-bipartite(" + list() + ")";
      case Kind::Join: return "join(" + parts[0].str() + "," + parts[1].str() + ")";
      case Kind::MinusEdge:
        return "minus-edge(" + parts[0].str() + "," + removed->first.str() + "-" + removed->second.str() + ")";
    }
    return "custom";
  }

  bool is_join() const { return kind == Kind::Join; }
  // the join underneath any number of deletions
  const Family* join_root() const {
    const Family* f = this;
    while (f->kind == Kind::MinusEdge) f = &f->parts[0];
    return f->kind == Kind::Join ? f : nullptr;
  }
};

class Graph {
 public:
  Graph() = default;

  Graph(std::vector<Role> roles, const std::vector<EdgeRef>& edges, Family fam = {})
      : roles_(std::move(roles)), family_(std::move(fam)) {
    const int n = static_cast<int>(roles_.size());
    index_.assign(static_cast<size_t>(n) * n, -1);
    incident_.assign(n, {});
    for (size_t i = 0; i < roles_.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        if (roles_[i] == roles_[j]) throw usage_error("duplicate vertex role " + roles_[i].str());
    for (const auto& e : edges) {
      if (e.a < 0 || e.b >= n) throw usage_error("edge endpoint out of range");
      if (index_[slot(e.a, e.b)] >= 0)
        throw usage_error("duplicate edge " + roles_[e.a].str() + "-" + roles_[e.b].str());
      const int id = static_cast<int>(edges_.size());
      index_[slot(e.a, e.b)] = index_[slot(e.b, e.a)] = id;
      edges_.push_back(e);
      incident_[e.a].push_back(id);
      incident_[e.b].push_back(id);
    }
  }

  int order() const { return static_cast<int>(roles_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<EdgeRef>& edges() const { return edges_; }
  const EdgeRef& edge(int id) const { return edges_.at(id); }
  const Role& role(int v) const { return roles_.at(v); }
  const std::vector<Role>& roles() const { return roles_; }
  const Family& family() const { return family_; }
  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }
  const std::vector<int>& incident(int v) const { return incident_.at(v); }
  int other(int edge_id, int v) const {
    const auto& e = edges_[edge_id];
    return e.a == v ? e.b : e.a;
  }

  bool adjacent(int x, int y) const { return x != y && index_[slot(x, y)] >= 0; }
  // -1 when absent
  int edge_index(int x, int y) const { return x == y ? -1 : index_[slot(x, y)]; }
  int edge_index(const EdgeRef& e) const { return edge_index(e.a, e.b); }

  int find(const Role& r) const {
    for (int i = 0; i < order(); ++i)
      if (roles_[i] == r) return i;
    return -1;
  }
  int vertex(const Role& r) const {
    const int v = find(r);
    if (v < 0) throw usage_error("no vertex " + r.str() + " in " + family_.str());
    return v;
  }
  int u(int i) const { return vertex(Role{Side::U, i}); }
  int v(int j) const { return vertex(Role{Side::V, j}); }

  int count(Side s) const {
    return static_cast<int>(std::count_if(roles_.begin(), roles_.end(), [&](const Role& r) { return r.side == s; }));
  }

  bool is_regular() const {
    for (int i = 1; i < order(); ++i)
      if (degree(i) != degree(0)) return false;
    return true;
  }

  std::string edge_name(int id) const {
    const auto& e = edges_.at(id);
    return roles_[e.a].str() + "-" + roles_[e.b].str();
  }

 private:
  size_t slot(int x, int y) const { return static_cast<size_t>(x) * roles_.size() + y; }

  std::vector<Role> roles_;
  std::vector<EdgeRef> edges_;
  std::vector<int> index_;
  std::vector<std::vector<int>> incident_;
  Family family_;
};

using GraphPtr = std::shared_ptr<const Graph>;

namespace detail {
inline std::vector<Role> side_roles(Side s, int n) {
  std::vector<Role> r;
  for (int i = 1; i <= n; ++i) r.push_back(Role{s, i});
  return r;
}
inline void need(bool ok, const std::string& msg) {
  if (!ok) throw usage_error(msg);
}
}  // namespace detail

inline Graph path(int m) {
  detail::need(m >= 2, "path needs order >= 2 (got " + std::to_string(m) + ")");
  std::vector<EdgeRef> e;
  for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  return Graph(detail::side_roles(Side::U, m), e, Family{Family::Kind::Path, {m}, {}, {}});
}

inline Graph cycle(int m) {
  detail::need(m >= 3, "cycle needs order >= 3 (got " + std::to_string(m) + ")");
  std::vector<EdgeRef> e;
  for (int i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(m - 1, 0);
  return Graph(detail::side_roles(Side::U, m), e, Family{Family::Kind::Cycle, {m}, {}, {}});
}

inline Graph null_graph(int n) {
  detail::need(n >= 1, "null graph needs order >= 1 (got " + std::to_string(n) + ")");
  return Graph(detail::side_roles(Side::V, n), {}, Family{Family::Kind::Null, {n}, {}, {}});
}

// colex edge order: {1,2},{1,3},{2,3},{1,4},...
inline Graph complete(int r) {
  detail::need(r >= 1, "complete graph needs order >= 1 (got " + std::to_string(r) + ")");
  std::vector<EdgeRef> e;
  for (int j = 1; j < r; ++j)
    for (int i = 0; i < j; ++i) e.emplace_back(i, j);
  return Graph(detail::side_roles(Side::U, r), e, Family{Family::Kind::Complete, {r}, {}, {}});
}

inline Graph complete_bipartite(int m, int n) {
  detail::need(m >= 1 && n >= 1, "complete bipartite graph needs both parts >= 1");
  auto roles = detail::side_roles(Side::U, m);
  auto vs = detail::side_roles(Side::V, n);
  roles.insert(roles.end(), vs.begin(), vs.end());
  std::vector<EdgeRef> e;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) e.emplace_back(i, m + j);
  return Graph(roles, e, Family{Family::Kind::CompleteBipartite, {m, n}, {}, {}});
}

inline Graph build_family(Family::Kind kind, const std::vector<int>& params) {
  auto arity = [&](size_t k) {
    detail::need(params.size() == k, "wrong number of family parameters");
  };
  switch (kind) {
    case Family::Kind::Path: arity(1); return path(params[0]);
    case Family::Kind::Cycle: arity(1); return cycle(params[0]);
    case Family::Kind::Null: arity(1); return null_graph(params[0]);
    case Family::Kind::Complete: arity(1); return complete(params[0]);
    case Family::Kind::CompleteBipartite: arity(2); return complete_bipartite(params[0], params[1]);
    default: throw usage_error("build_family only builds path, cycle, null, complete, complete-bipartite");
  }
}

// A-side vertices become u_1..u_|A|, B-side v_1..v_|B|.
// Edge order: E(A), E(B), then u_i v_j row-major.
inline Graph join(const Graph& A, const Graph& B) {
  detail::need(A.order() >= 1 && B.order() >= 1, "join of an empty graph");
  const int p = A.order();
  std::vector<Role> roles = detail::side_roles(Side::U, p);
  auto vs = detail::side_roles(Side::V, B.order());
  roles.insert(roles.end(), vs.begin(), vs.end());
  std::vector<EdgeRef> e;
  for (const auto& x : A.edges()) e.push_back(x);
  for (const auto& x : B.edges()) e.emplace_back(x.a + p, x.b + p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < B.order(); ++j) e.emplace_back(i, p + j);
  return Graph(roles, e, Family{Family::Kind::Join, {}, {A.family(), B.family()}, {}});
}

inline Graph delete_edge(const Graph& G, const EdgeRef& del) {
  const int id = G.edge_index(del);
  if (id < 0) {
    std::string name = "?";
    if (del.a >= 0 && del.b < G.order()) name = G.role(del.a).str() + "-" + G.role(del.b).str();
    throw usage_error("edge " + name + " is not in " + G.family().str());
  }
  std::vector<EdgeRef> e;
  for (int i = 0; i < G.size(); ++i)
    if (i != id) e.push_back(G.edge(i));
  Family f{Family::Kind::MinusEdge, {}, {G.family()}, std::make_pair(G.role(del.a), G.role(del.b))};
  return Graph(G.roles(), e, f);
}

// "u3-u4", "u6-v1"
inline EdgeRef parse_edge(const Graph& G, const std::string& s) {
  const auto dash = s.find('-');
  if (dash == std::string::npos) throw usage_error("bad edge '" + s + "' (expected e.g. u3-u4)");
  return EdgeRef(G.vertex(parse_role(s.substr(0, dash))), G.vertex(parse_role(s.substr(dash + 1))));
}

}  // namespace lajoin
