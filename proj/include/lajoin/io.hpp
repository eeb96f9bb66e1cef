#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "registry.hpp"

namespace lajoin {

using json = nlohmann::json;

inline constexpr const char* kSchema = "v1";

namespace detail {

// Recursive-descent reader for Family::str(): "join(path(6),null(5))",
// "minus-edge(join(cycle(6),null(5)),u5-u6)". Unknown text gives a Custom family.
class FamilyParser {
 public:
  explicit FamilyParser(const std::string& s) : s_(s) {}
  std::optional<Family> parse() {
    try {
      Family f = item();
      if (at_ != s_.size()) return std::nullopt;
      return f;
    } catch (const usage_error&) {
      return std::nullopt;
    }
  }

 private:
  std::string word() {
    const size_t b = at_;
    while (at_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[at_])) || s_[at_] == '-')) ++at_;
    return s_.substr(b, at_ - b);
  }
  void expect(char c) {
    if (at_ >= s_.size() || s_[at_] != c) throw usage_error("family syntax");
    ++at_;
  }
  Family item() {
    const std::string w = word();
    using K = Family::Kind;
    if (w == "custom") return {};
    expect('(');
    Family f;
    if (w == "join") {
      f.kind = K::Join;
      f.parts.push_back(item());
      expect(',');
      f.parts.push_back(item());
    } else if (w == "minus-edge") {
      f.kind = K::MinusEdge;
      f.parts.push_back(item());
      expect(',');
      const std::string e = word();
      const auto dash = e.find('-');
      if (dash == std::string::npos) throw usage_error("family syntax");
      f.removed = std::make_pair(parse_role(e.substr(0, dash)), parse_role(e.substr(dash + 1)));
    } else {
      static const std::map<std::string, K> kinds = {{"path", K::Path},
                                                     {"cycle", K::Cycle},
                                                     {"null", K::Null},
                                                     {"complete", K::Complete},
                                                     {"complete-bipartite", K::CompleteBipartite}};
      auto it = kinds.find(w);
      if (it == kinds.end()) throw usage_error("family syntax");
      f.kind = it->second;
      for (;;) {
        f.params.push_back(parse_int(word(), "family parameter"));
        if (at_ < s_.size() && s_[at_] == ',') {
          ++at_;
          continue;
        }
        break;
      }
    }
    expect(')');
    return f;
  }

  const std::string& s_;
  size_t at_ = 0;
};

inline json graph_body(const Graph& G) {
  json vs = json::array();
  for (int v = 0; v < G.order(); ++v) vs.push_back({{"id", v + 1}, {"role", G.role(v).str()}});
  json es = json::array();
  for (const auto& e : G.edges()) es.push_back({e.a + 1, e.b + 1});
  return {{"family", G.family().str()}, {"vertices", vs}, {"edges", es}};
}

inline void need_schema(const json& j, const std::string& kind) {
  if (!j.is_object()) throw usage_error("expected a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchema)
    throw usage_error("missing or unsupported \"schema\" (expected \"v1\")");
  if (j.contains("kind") && j["kind"] != kind)
    throw usage_error("expected a " + kind + " document, got " + j["kind"].dump());
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw usage_error(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw usage_error(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace detail

// ---------------------------------------------------------------- graphs

inline json graph_to_json(const Graph& G) {
  json j = detail::graph_body(G);
  j["schema"] = kSchema;
  j["kind"] = "graph";
  return j;
}

// Accepts both a standalone graph document and the "graph" member of a labeling.
inline Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw usage_error("graph must be a JSON object");
  const auto vs = j.contains("vertices") ? j["vertices"] : json();
  if (!vs.is_array() || vs.empty()) throw usage_error("graph needs a non-empty \"vertices\" array");
  const int n = static_cast<int>(vs.size());
  std::vector<Role> roles(n);
  std::vector<char> seen(n, 0);
  for (const auto& v : vs) {
    const int id = detail::field<int>(v, "id");
    if (id < 1 || id > n) throw usage_error("vertex id " + std::to_string(id) + " outside 1.." + std::to_string(n));
    if (seen[id - 1]) throw usage_error("duplicate vertex id " + std::to_string(id));
    seen[id - 1] = 1;
    roles[id - 1] = parse_role(detail::field<std::string>(v, "role"));
  }
  std::vector<EdgeRef> edges;
  const auto es = j.contains("edges") ? j["edges"] : json::array();
  if (!es.is_array()) throw usage_error("\"edges\" must be an array");
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw usage_error("each edge must be a pair of vertex ids");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 1 || a > n || b < 1 || b > n) throw usage_error("edge endpoint outside 1.." + std::to_string(n));
    edges.emplace_back(a - 1, b - 1);
  }
  Family fam;
  if (j.contains("family") && j["family"].is_string()) {
    const std::string s = j["family"].get<std::string>();
    if (auto f = detail::FamilyParser(s).parse()) fam = *f;
  }
  return Graph(roles, edges, fam);
}

// ---------------------------------------------------------------- labelings

struct LabelingDoc {
  EdgeLabeling labeling;
  std::optional<int> claimed_chi_la;
  std::vector<std::int64_t> claimed_colors;
  std::string family;
  RowOrder layout = RowOrder::Natural;
};

inline json labeling_to_json(const EdgeLabeling& f) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "labeling";
  j["graph"] = detail::graph_body(f.graph());
  j["q"] = f.q();
  j["labels"] = f.labels();
  j["sums"] = f.sums();  // aligned with graph.vertices
  return j;
}

inline json labeling_to_json(const ConstructionResult& r) {
  json j = labeling_to_json(r.labeling);
  j["family"] = r.family;
  j["case"] = r.case_tag;
  j["layout"] = r.layout == RowOrder::Parity ? "parity" : "natural";
  j["claimed"] = {{"chi_la", r.claimed_chi_la}, {"colors", r.claimed_colors}, {"tight", r.tight}};
  if (r.deleted) {
    const Graph& P = r.parent->graph();
    j["deleted_edge"] = {P.role(r.deleted->a).str(), P.role(r.deleted->b).str()};
    j["deletion_certificate"] = {{"ok", r.deletion_check->ok}, {"reason", r.deletion_check->reason}};
  }
  return j;
}

inline LabelingDoc labeling_from_json(const json& j) {
  detail::need_schema(j, "labeling");
  if (!j.contains("graph")) throw usage_error("labeling document has no \"graph\"");
  auto G = std::make_shared<const Graph>(graph_from_json(j["graph"]));
  const auto labels = detail::field<std::vector<std::int64_t>>(j, "labels");
  if (static_cast<int>(labels.size()) != G->size())
    throw usage_error("\"labels\" has " + std::to_string(labels.size()) + " entries for " + std::to_string(G->size()) + " edges");
  LabelingDoc d{EdgeLabeling(G, labels), std::nullopt, {}, ""};
  if (j.contains("claimed")) {
    const auto& c = j["claimed"];
    if (c.contains("chi_la")) d.claimed_chi_la = detail::field<int>(c, "chi_la");
    if (c.contains("colors")) d.claimed_colors = detail::field<std::vector<std::int64_t>>(c, "colors");
  }
  if (j.contains("family") && j["family"].is_string()) d.family = j["family"].get<std::string>();
  if (j.contains("layout") && j["layout"] == "parity") d.layout = RowOrder::Parity;
  return d;
}

// ---------------------------------------------------------------- certificates

inline json certificate_to_json(const LabelingCertificate& c, const Graph& G) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "certificate";
  j["bijection_ok"] = c.bijection_ok;
  j["proper"] = c.proper;
  j["color_count"] = c.color_count;
  j["colors"] = c.colors();
  json classes = json::array();
  for (const auto& k : c.color_classes) {
    json vs = json::array();
    for (int v : k.vertices) vs.push_back(G.role(v).str());
    classes.push_back({{"sum", k.sum}, {"vertices", vs}});
  }
  j["classes"] = classes;
  j["lower_bound"] = c.lower_bound ? json(*c.lower_bound) : json(nullptr);
  j["verdict"] = verdict_name(c.verdict);
  j["conflict"] = c.conflict ? json{G.role(c.conflict->first).str(), G.role(c.conflict->second).str()} : json(nullptr);
  j["reason"] = c.reason;
  return j;
}

// ---------------------------------------------------------------- magic arrays

inline std::string magic_csv(const MagicArray& M) {
  std::ostringstream os;
  for (int i = 0; i < M.rows; ++i) {
    for (int j = 0; j < M.cols; ++j) os << (j ? "," : "") << M.at(i, j);
    os << '\n';
  }
  return os.str();
}

inline json magic_to_json(const MagicArray& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows; ++i) {
    std::vector<std::int64_t> r;
    for (int j = 0; j < M.cols; ++j) r.push_back(M.at(i, j));
    rows.push_back(r);
  }
  json j;
  j["schema"] = kSchema;
  j["kind"] = "magic-array";
  j["type"] = kind_name(M.kind);
  j["rows"] = M.rows;
  j["cols"] = M.cols;
  j["entries"] = rows;
  j["row_constants"] = M.row_constants;
  j["col_constant"] = M.col_constant;
  return j;
}

inline MagicArray magic_from_json(const json& j) {
  detail::need_schema(j, "magic-array");
  MagicArray M;
  M.rows = detail::field<int>(j, "rows");
  M.cols = detail::field<int>(j, "cols");
  const std::string t = detail::field<std::string>(j, "type");
  if (t == "square") M.kind = MagicArray::Kind::Square;
  else if (t == "rectangle") M.kind = MagicArray::Kind::Rectangle;
  else if (t == "nearly-rectangle") M.kind = MagicArray::Kind::NearlyRectangle;
  else throw usage_error("unknown magic array type '" + t + "'");
  const auto rows = detail::field<std::vector<std::vector<std::int64_t>>>(j, "entries");
  if (static_cast<int>(rows.size()) != M.rows) throw usage_error("entries do not have " + std::to_string(M.rows) + " rows");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != M.cols) throw usage_error("a row does not have " + std::to_string(M.cols) + " entries");
    M.entries.insert(M.entries.end(), r.begin(), r.end());
  }
  M.row_constants = detail::field<std::vector<std::int64_t>>(j, "row_constants");
  M.col_constant = detail::field<std::int64_t>(j, "col_constant");
  return M;
}

// ---------------------------------------------------------------- solver and sweeps

// elapsed time is left out unless asked for, so reports can be diffed
inline json solve_report_to_json(const SolveReport& r, bool with_timing = false) {
  json j;
  j["schema"] = kSchema;
  j["kind"] = "solve-report";
  j["chi_la"] = r.chi_la ? json(*r.chi_la) : json(nullptr);
  j["status"] = r.status();
  j["proven_optimal"] = r.proven_optimal;
  j["timed_out"] = r.timed_out;
  j["lower_bound"] = r.lower_bound;
  j["symmetry_pruning"] = r.symmetry_used;
  if (with_timing) {
    j["nodes_explored"] = r.nodes_explored;
    j["elapsed_s"] = r.elapsed_s;
  }
  j["witness"] = r.witness ? labeling_to_json(*r.witness) : json(nullptr);
  return j;
}

inline json confirm_to_json(const ConfirmReport& r) {
  json j;
  j["family"] = r.family;
  j["verdict"] = verdict_name(r.verdict);
  j["q"] = r.q;
  j["claimed"] = r.claimed;
  j["observed"] = r.observed ? json(*r.observed) : json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  j["method"] = r.method;
  j["case"] = r.case_tag;
  j["detail"] = r.detail;
  return j;
}

// ---------------------------------------------------------------- files

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw usage_error(path + " is not valid JSON (byte " + std::to_string(e.byte) + ")");
  }
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write " + path);
  out << text;
  if (!out) throw usage_error("write failed for " + path);
}

}  // namespace lajoin
