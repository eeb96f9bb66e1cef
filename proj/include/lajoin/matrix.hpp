#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "labeling.hpp"

namespace lajoin {

enum class RowOrder { Natural, Parity };  // Parity: u1,u3,...,u2,u4,...

struct LabelingMatrix {
  std::vector<int> rows;  // vertex ids on the u side, in display order
  std::vector<int> cols;  // v side, v1..vN
  std::vector<std::vector<std::optional<std::int64_t>>> grid;  // empty where a join edge was deleted
  std::vector<std::int64_t> side;        // labels of u-u edges at each row vertex
  std::vector<std::int64_t> row_margin;  // f+(u)
  std::optional<std::vector<std::int64_t>> footer;  // labels of v-v edges at each column vertex
  std::vector<std::int64_t> col_margin;             // f+(v)
  std::string side_name = "u-side";

  std::string csv() const {
    std::ostringstream os;
    os << "";
    for (size_t j = 0; j < cols.size(); ++j) os << ",v" << (j + 1);
    os << ",from_u_edges,f+\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      os << row_names[i];
      for (const auto& x : grid[i]) {
        os << ',';
        if (x) os << *x;
        else os << '-';
      }
      os << ',' << side[i] << ',' << row_margin[i] << '\n';
    }
    if (footer) {
      os << "from_v_edges";
      for (auto x : *footer) os << ',' << x;
      os << ",,\n";
    }
    os << "f+";
    for (auto x : col_margin) os << ',' << x;
    os << ",,\n";
    return os.str();
  }

  std::string pretty() const {
    std::vector<std::vector<std::string>> t;
    std::vector<std::string> head{""};
    for (size_t j = 0; j < cols.size(); ++j) head.push_back("v" + std::to_string(j + 1));
    head.push_back("from " + side_name + " edges");
    head.push_back("f+(u)");
    t.push_back(head);
    for (size_t i = 0; i < rows.size(); ++i) {
      std::vector<std::string> r{row_names[i]};
      for (const auto& x : grid[i]) r.push_back(x ? std::to_string(*x) : "-");
      r.push_back(std::to_string(side[i]));
      r.push_back(std::to_string(row_margin[i]));
      t.push_back(r);
    }
    if (footer) {
      std::vector<std::string> r{"from v edges"};
      for (auto x : *footer) r.push_back(std::to_string(x));
      r.resize(head.size());
      t.push_back(r);
    }
    std::vector<std::string> r{"f+(v)"};
    for (auto x : col_margin) r.push_back(std::to_string(x));
    r.resize(head.size());
    t.push_back(r);
    std::vector<size_t> w(head.size(), 0);
    for (const auto& row : t)
      for (size_t j = 0; j < row.size(); ++j) w[j] = std::max(w[j], row[j].size());
    std::ostringstream os;
    for (size_t i = 0; i < t.size(); ++i) {
      for (size_t j = 0; j < t[i].size(); ++j) {
        if (j == 1 || j + 2 == t[i].size()) os << " |";
        os << (j ? " " : "") << std::setw(static_cast<int>(w[j])) << t[i][j];
      }
      os << '\n';
      // rule under the header and above the footer block
      if (i == 0 || i == rows.size()) {
        size_t total = 0;
        for (auto x : w) total += x + 1;
        os << std::string(total + 4, '-') << '\n';
      }
    }
    return os.str();
  }

  std::vector<std::string> row_names;
};

namespace detail {
inline std::string short_family(const Family& f) {
  using K = Family::Kind;
  const std::string p = f.params.empty() ? "" : std::to_string(f.params[0]);
  switch (f.kind) {
    case K::Path: return "P" + p;
    case K::Cycle: return "C" + p;
    case K::Complete: return "K" + p;
    case K::Null: return "O" + p;
    default: return "u-side";
  }
}
}  // namespace detail

inline LabelingMatrix export_matrix(const EdgeLabeling& f, RowOrder order = RowOrder::Natural) {
  const Graph& G = f.graph();
  const Family* root = G.family().join_root();
  if (!root) throw usage_error("matrix export needs a join graph (got " + G.family().str() + ")");
  const auto problem = f.bijection_problem();
  if (!problem.empty()) throw usage_error(problem);
  LabelingMatrix M;
  M.side_name = detail::short_family(root->parts[0]);
  std::vector<int> us, vs;
  for (int x = 0; x < G.order(); ++x) (G.role(x).side == Side::U ? us : vs).push_back(x);
  auto by_index = [&](int a, int b) { return G.role(a).index < G.role(b).index; };
  std::sort(us.begin(), us.end(), by_index);
  std::sort(vs.begin(), vs.end(), by_index);
  if (order == RowOrder::Parity)
    std::stable_partition(us.begin(), us.end(), [&](int x) { return G.role(x).index % 2 == 1; });
  M.rows = us;
  M.cols = vs;
  bool any_v_edges = false;
  std::vector<std::int64_t> footer(vs.size(), 0);
  for (size_t j = 0; j < vs.size(); ++j)
    for (int id : G.incident(vs[j]))
      if (G.role(G.other(id, vs[j])).side == Side::V) {
        footer[j] += f.label(id);
        any_v_edges = true;
      }
  for (int x : us) {
    M.row_names.push_back(G.role(x).str());
    std::vector<std::optional<std::int64_t>> row;
    for (int y : vs) {
      const int id = G.edge_index(x, y);
      row.push_back(id >= 0 ? std::optional<std::int64_t>(f.label(id)) : std::nullopt);
    }
    std::int64_t s = 0;
    for (int id : G.incident(x))
      if (G.role(G.other(id, x)).side == Side::U) s += f.label(id);
    M.grid.push_back(row);
    M.side.push_back(s);
    M.row_margin.push_back(f.sum(x));
  }
  if (any_v_edges) M.footer = footer;
  for (int y : vs) M.col_margin.push_back(f.sum(y));
  return M;
}

}  // namespace lajoin
