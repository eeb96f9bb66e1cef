// lajoin: construct, verify and search local antimagic labelings of join graphs.
#include <atomic>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include <lajoin/lajoin.hpp>

using namespace lajoin;

namespace {

// exit statuses
constexpr int kOk = 0, kFail = 1, kUsage = 2;

// A failure that already knows its exit status and error code.
struct CliError {
  int status;
  std::string code;
  std::string detail;
  std::string extra = {};  // more key=value pairs
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

void report(const CliError& e) {
  std::cerr << "error=" << e.code << " detail=" << quote(e.detail) << (e.extra.empty() ? "" : " " + e.extra) << "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- shared family flags

struct FamilyFlags {
  std::string family, m, n, N, r, len, edge, base, base_file;

  void attach(CLI::App* app, bool ranges) {
    const std::string what = ranges ? "value or lo..hi" : "value";
    app->add_option("--m", m, "parameter m (" + what + ")");
    app->add_option("--n", n, "parameter n (" + what + ")");
    app->add_option("--N", N, "null-graph order N for path-join-null (" + what + ")");
    app->add_option("--r", r, "clique order r (" + what + ")");
    app->add_option("--len", len, "odd cycle length for three-color-odd-cycle");
    app->add_option("--edge", edge, "edge to delete for minus-edge families, e.g. u3-u4 or u6-v1");
    app->add_option("--base", base, "base labeling for generic families, e.g. complete:5, odd-cycle:7, path-join-null:m=2,N=2");
    app->add_option("--base-file", base_file, "base labeling JSON for generic families");
  }

  std::map<std::string, std::string> given() const {
    std::map<std::string, std::string> g;
    if (!m.empty()) g["m"] = m;
    if (!n.empty()) g["n"] = n;
    if (!N.empty()) g["N"] = N;
    if (!r.empty()) g["r"] = r;
    if (!len.empty()) g["len"] = len;
    return g;
  }

  Request request() const {
    Request q;
    q.family = family;
    for (const auto& [k, v] : given()) q.params[k] = detail::parse_int(v, "--" + k);
    q.edge = edge;
    q.base_spec = base;
    if (!base_file.empty()) q.base = labeling_from_json(read_json_file(base_file)).labeling;
    const FamilyDef& d = family_def(family);
    for (const auto& p : d.params)
      if (!q.params.count(p)) throw usage_error(family + " needs --" + p);
    if (d.takes_base && base.empty() && base_file.empty()) throw usage_error(family + " needs --base or --base-file");
    if (!d.takes_base && (!base.empty() || !base_file.empty())) throw usage_error(family + " does not take a base labeling");
    return q;
  }
};

std::string families_help() {
  std::string s = "families:\n";
  for (const auto& d : families()) {
    std::string ps;
    for (const auto& p : d.params) ps += " --" + p;
    if (d.takes_edge) ps += " [--edge]";
    if (d.takes_base) ps += " --base";
    s += "  " + d.name + ps + "  : " + d.graph + ", chi_la = " + d.claim + "\n";
  }
  return s;
}

SearchConfig solver_config(int max_edges, double budget, int threads) {
  SearchConfig c;
  c.max_edges = max_edges;
  if (budget > 0) c.time_budget = budget;
  c.threads = threads;
  return c;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  FamilyFlags fam;
  std::string out;
  std::string matrix_path;
  bool matrix = false;
  std::string format = "json";
  int max_edges = 12;
  double budget = 0;
};

std::string matrix_text(const EdgeLabeling& f, RowOrder order, const std::string& format) {
  const LabelingMatrix M = export_matrix(f, order);
  return format == "pretty" ? M.pretty() : M.csv();
}

// Cited corners with few edges are handed to the solver; its witness stands in for the construction.
ConstructionResult construct_or_solve(const Request& req, const SearchConfig& cfg) {
  try {
    return construct(req);
  } catch (const cited_case& c) {
    const Graph G = family_graph(req);
    if (G.size() > cfg.max_edges)
      throw CliError{kUsage, "cited", std::string(c.what()) + "; construction out of scope and q = " + std::to_string(G.size()) +
                                          " exceeds the solver limit " + std::to_string(cfg.max_edges)};
    const SolveReport s = exact_chi_la(G, cfg);
    if (!s.witness) throw CliError{kFail, "no-labeling", "exhaustive search found no local antimagic labeling"};
    ConstructionResult r;
    r.family = req.str();
    r.labeling = *s.witness;
    r.claimed_chi_la = c.claimed();
    r.claimed_colors = verify_local_antimagic(*s.witness).colors();
    r.tight = s.proven_optimal;
    r.case_tag = "cited-exact-solver";
    r.layout = RowOrder::Natural;
    return r;
  }
}

int run_gen(const GenArgs& a) {
  const Request req = a.fam.request();
  const ConstructionResult r = construct_or_solve(req, solver_config(a.max_edges, a.budget, 0));
  const auto cert = verify_local_antimagic(r.labeling);
  std::string matrix_out = a.matrix_path;
  if (a.matrix && matrix_out.empty() && !a.out.empty()) {
    matrix_out = a.out;
    if (matrix_out.size() > 5 && matrix_out.substr(matrix_out.size() - 5) == ".json") matrix_out.resize(matrix_out.size() - 5);
    matrix_out += ".matrix.csv";
  }
  if (a.format == "pretty") {
    std::cout << r.family << "  [" << r.case_tag << "]\n" << matrix_text(r.labeling, r.layout, "pretty");
    std::cout << "colours: " << cert.color_count << " (claimed " << r.claimed_chi_la << ")\n";
    if (!a.out.empty()) write_file(a.out, dump(labeling_to_json(r)));
  } else if (a.matrix && matrix_out.empty()) {
    // no file named anywhere: the matrix is the only thing on stdout
    std::cout << matrix_text(r.labeling, r.layout, "csv");
  } else {
    emit(dump(labeling_to_json(r)), a.out);
  }
  if (a.matrix && !matrix_out.empty()) write_file(matrix_out, matrix_text(r.labeling, r.layout, "csv"));
  if (!cert.ok()) throw CliError{kFail, "verification", cert.reason};
  if (cert.color_count != r.claimed_chi_la)
    throw CliError{kFail, "mismatch", "labeling has " + std::to_string(cert.color_count) + " colours, claimed " +
                                          std::to_string(r.claimed_chi_la)};
  if (r.deletion_check && !r.deletion_check->ok) throw CliError{kFail, "verification", "deletion certificate: " + r.deletion_check->reason};
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string file;
  int lower_bound = 0;
  bool chi = false;
  std::string format = "json";
};

int run_verify(const VerifyArgs& a) {
  const LabelingDoc d = labeling_from_json(read_json_file(a.file));
  std::optional<int> lb;
  if (a.lower_bound > 0) lb = a.lower_bound;
  if (a.chi) lb = chromatic_lower_bound(d.labeling.graph());
  const auto cert = verify_local_antimagic(d.labeling, lb);
  const Graph& G = d.labeling.graph();
  json j = certificate_to_json(cert, G);
  if (d.claimed_chi_la) {
    j["claimed_chi_la"] = *d.claimed_chi_la;
    j["claim_ok"] = cert.color_count == *d.claimed_chi_la &&
                    (d.claimed_colors.empty() || d.claimed_colors == cert.colors());
  }
  if (a.format == "pretty") {
    std::cout << (cert.ok() ? "proper" : "NOT proper") << ", " << cert.color_count << " colours:";
    for (auto c : cert.colors()) std::cout << ' ' << c;
    std::cout << "\n";
    if (lb) std::cout << "lower bound " << *lb << ": " << verdict_name(cert.verdict) << "\n";
  } else {
    std::cout << dump(j);
  }
  if (!cert.ok()) {
    std::string extra;
    if (cert.conflict) extra = "pair=" + G.role(cert.conflict->first).str() + "," + G.role(cert.conflict->second).str();
    throw CliError{kFail, cert.bijection_ok ? "not-proper" : "not-bijection", cert.reason, extra};
  }
  if (j.contains("claim_ok") && !j["claim_ok"].get<bool>())
    throw CliError{kFail, "mismatch", "colour count " + std::to_string(cert.color_count) + " differs from claimed " +
                                          std::to_string(*d.claimed_chi_la)};
  return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string graph_spec, graph_file, del;
  FamilyFlags fam;
  int max_edges = 12;
  int target = 0;
  bool no_symmetry = false;
  double budget = 0;
  int threads = 0;
  std::string edge_order = "degree", label_order = "large";
  bool timing = false;
  std::string out;
};

// "C3vO2", "P4 v O1", "K2,3", "K4"
Graph parse_graph_spec(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw usage_error("empty graph spec");
  std::optional<Graph> acc;
  for (const auto& tok : detail::split(s, 'v')) {
    if (tok.size() < 2) throw usage_error("bad graph term '" + tok + "' in '" + spec + "'");
    const char kind = tok[0];
    const std::string rest = tok.substr(1);
    Graph g;
    if (kind == 'K' && rest.find(',') != std::string::npos) {
      const auto parts = detail::split(rest, ',');
      if (parts.size() != 2) throw usage_error("bad term '" + tok + "'");
      g = complete_bipartite(detail::parse_int(parts[0], tok), detail::parse_int(parts[1], tok));
    } else {
      const int k = detail::parse_int(rest, tok);
      switch (kind) {
        case 'P': g = path(k); break;
        case 'C': g = cycle(k); break;
        case 'O': g = null_graph(k); break;
        case 'K': g = complete(k); break;
        default: throw usage_error("unknown graph letter '" + std::string(1, kind) + "' (use P, C, O, K)");
      }
    }
    acc = acc ? join(*acc, g) : g;
  }
  return *acc;
}

int run_solve(const SolveArgs& a) {
  const int sources = !a.graph_spec.empty() + !a.graph_file.empty() + !a.fam.family.empty();
  if (sources != 1) throw usage_error("give exactly one of --graph, --graph-file, --family");
  Graph G;
  if (!a.graph_spec.empty()) G = parse_graph_spec(a.graph_spec);
  else if (!a.graph_file.empty()) G = graph_from_json(read_json_file(a.graph_file));
  else G = family_graph(a.fam.request());
  if (!a.del.empty()) G = delete_edge(G, parse_edge(G, a.del));
  SearchConfig cfg = solver_config(a.max_edges, a.budget, a.threads);
  if (a.target > 0) cfg.target_colors = a.target;
  cfg.symmetry_pruning = !a.no_symmetry;
  if (a.edge_order == "input") cfg.edge_order = EdgeOrder::Input;
  if (a.label_order == "small") cfg.label_order = LabelOrder::SmallFirst;
  const SolveReport rep = exact_chi_la(G, cfg);
  json j = solve_report_to_json(rep, a.timing);
  j["graph"] = G.family().str();
  j["q"] = G.size();
  emit(dump(j), a.out);
  if (rep.witness) {
    const auto c = verify_local_antimagic(*rep.witness);
    if (!c.ok() || c.color_count != *rep.chi_la)
      throw CliError{kFail, "internal", "solver witness does not re-verify: " + c.reason};
  }
  if (!rep.chi_la && rep.proven_optimal) throw CliError{kFail, "no-labeling", "no local antimagic labeling exists"};
  if (rep.timed_out) std::cerr << "warning=timeout detail=" << quote("best found is not proven optimal") << "\n";
  return kOk;
}

// ---------------------------------------------------------------- matrix

struct MatrixArgs {
  std::string file;
  FamilyFlags fam;
  std::string format = "csv", row_order = "auto", out;
};

int run_matrix(const MatrixArgs& a) {
  if (a.file.empty() == a.fam.family.empty()) throw usage_error("give a labeling file or --family, not both");
  EdgeLabeling f;
  RowOrder layout = RowOrder::Natural;
  if (!a.file.empty()) {
    const LabelingDoc d = labeling_from_json(read_json_file(a.file));
    f = d.labeling;
    layout = d.layout;
  } else {
    const ConstructionResult r = construct(a.fam.request());
    f = r.labeling;
    layout = r.layout;
  }
  if (a.row_order == "natural") layout = RowOrder::Natural;
  if (a.row_order == "parity") layout = RowOrder::Parity;
  emit(matrix_text(f, layout, a.format), a.out);
  return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  FamilyFlags fam;
  bool all = false;
  int max_q = 400;
  int max_edges = 12;
  double budget = 0;
  int threads = 0;
  std::vector<std::string> bases;
  std::string format = "pretty", out;
};

int run_sweep(const SweepArgs& a) {
  std::vector<std::string> names;
  if (a.all) {
    if (!a.fam.family.empty()) throw usage_error("--all and --family are exclusive");
    for (const auto& d : families())
      if (d.in_sweep) names.push_back(d.name);
  } else {
    if (a.fam.family.empty()) throw usage_error("sweep needs --family or --all");
    names.push_back(a.fam.family);
  }
  if (!a.fam.edge.empty() || !a.fam.base_file.empty()) throw usage_error("sweep takes ranges and --base only");
  std::map<std::string, Range> ranges;
  for (const auto& [k, v] : a.fam.given()) ranges[k] = parse_range(v, "--" + k);
  std::vector<std::string> bases = a.bases;
  if (!a.fam.base.empty()) bases.push_back(a.fam.base);
  std::vector<Request> pts;
  for (const auto& name : names) {
    auto p = sweep_points(name, a.all ? std::map<std::string, Range>{} : ranges, a.max_q, bases);
    pts.insert(pts.end(), p.begin(), p.end());
  }
  SearchConfig cfg = solver_config(a.max_edges, a.budget, 1);
  struct Row {
    std::optional<ConfirmReport> rep;
    std::string skipped;
  };
  std::vector<Row> rows(pts.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < pts.size();) {
      try {
        rows[i].rep = confirm_theorem(pts[i], cfg);
      } catch (const cited_case& c) {
        rows[i].skipped = std::string("cited: ") + c.what();
      } catch (const open_problem& e) {
        rows[i].skipped = std::string("open: ") + e.what();
      }
    }
  };
  const int workers = a.threads ? a.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  int mismatches = 0, matched = 0, upper = 0, skipped = 0;
  std::ostringstream os;
  json arr = json::array();
  if (a.format == "csv") os << "family,q,claimed,observed,lower_bound,exact,method,verdict,detail\n";
  for (size_t i = 0; i < pts.size(); ++i) {
    const auto& row = rows[i];
    if (!row.rep) {
      ++skipped;
      if (a.format == "csv") os << quote(pts[i].str()) << ",,,,,,,skipped," << quote(row.skipped) << "\n";
      else if (a.format == "json") arr.push_back({{"family", pts[i].str()}, {"verdict", "skipped"}, {"detail", row.skipped}});
      else os << pts[i].str() << "  skipped  " << row.skipped << "\n";
      continue;
    }
    const ConfirmReport& r = *row.rep;
    if (r.verdict == ConfirmVerdict::Mismatch) ++mismatches;
    else if (r.verdict == ConfirmVerdict::Matched) ++matched;
    else ++upper;
    const std::string exact = r.exact ? std::to_string(*r.exact) : "";
    const std::string obs = r.observed ? std::to_string(*r.observed) : "";
    if (a.format == "csv") {
      os << quote(r.family) << ',' << r.q << ',' << r.claimed << ',' << obs << ',' << r.lower_bound << ',' << exact << ','
         << r.method << ',' << verdict_name(r.verdict) << ',' << quote(r.detail) << "\n";
    } else if (a.format == "json") {
      arr.push_back(confirm_to_json(r));
    } else {
      char buf[64];
      std::snprintf(buf, sizeof buf, "  q=%-4d chi_la=%-3s lb=%-3d ", r.q, obs.c_str(), r.lower_bound);
      os << r.family << buf << verdict_name(r.verdict) << " (" << r.method << ")" << (r.detail.empty() ? "" : "  " + r.detail)
         << "\n";
    }
  }
  if (a.format == "json") {
    json j{{"schema", kSchema},
           {"kind", "sweep"},
           {"rows", arr},
           {"summary", {{"matched", matched}, {"upper_bound_only", upper}, {"mismatch", mismatches}, {"skipped", skipped}}}};
    os << dump(j);
  } else if (a.format == "pretty") {
    os << "points=" << pts.size() << " matched=" << matched << " upper-bound-only=" << upper << " mismatch=" << mismatches
       << " skipped=" << skipped << "\n";
  }
  emit(os.str(), a.out);
  if (mismatches) throw CliError{kFail, "mismatch", std::to_string(mismatches) + " parameter point(s) disagree with the claim"};
  return kOk;
}

// ---------------------------------------------------------------- arrays

struct ArraysArgs {
  std::string kind;
  int order = 0, rows = 0, cols = 0, col = -1;
  std::string format = "csv", out;
};

int run_arrays(const ArraysArgs& a) {
  MagicArray M;
  if (a.kind == "siamese" || a.kind == "square") {
    if (a.order <= 0) throw usage_error(a.kind + " needs --order");
    M = a.kind == "siamese" ? siamese_magic_square(a.order) : magic_square(a.order);
  } else if (a.kind == "rectangle") {
    M = magic_rectangle(a.rows, a.cols);
  } else if (a.kind == "nearly") {
    M = nearly_magic_rectangle(a.rows, a.cols);
  } else {  // drop
    if (a.order <= 0) throw usage_error("drop needs --order");
    M = drop_column_and_rotate(siamese_magic_square(a.order), a.col >= 0 ? a.col : (a.order - 1) / 2);
  }
  // the dropped-column table is not magic; everything else is re-summed before it leaves
  if (a.kind != "drop") {
    const auto chk = check_magic_array(M);
    if (!chk.ok) throw CliError{kFail, "verification", chk.reason};
  }
  emit(a.format == "json" ? dump(magic_to_json(M)) : magic_csv(M), a.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lajoin: local antimagic labelings of join graphs"};
  app.require_subcommand(1);
  app.footer(families_help() +
             "\nexit status: 0 success, 1 verification failure or mismatch, 2 usage error.\n"
             "LAJOIN_TIME_BUDGET sets the default solver budget in seconds (60 if unset).");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "construct a labeling and write it as JSON");
  g->add_option("--family", gen.fam.family, "family name (see below)")->required();
  gen.fam.attach(g, false);
  g->add_option("-o,--out", gen.out, "labeling JSON path (stdout if omitted)");
  g->add_option("--matrix", gen.matrix_path, "also write the labeling matrix CSV (path optional)")->expected(0, 1);
  g->add_option("--format", gen.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  g->add_option("--max-edges", gen.max_edges, "solver limit for cited cases");
  g->add_option("--time-budget", gen.budget, "solver budget in seconds for cited cases");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "check a labeling JSON and print its certificate");
  v->add_option("file", ver.file, "labeling JSON")->required();
  v->add_option("--lower-bound", ver.lower_bound, "compare the colour count against this bound");
  v->add_flag("--chi", ver.chi, "use the chromatic number as the lower bound");
  v->add_option("--format", ver.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));

  SolveArgs sol;
  auto* s = app.add_subcommand("solve", "exact chi_la by exhaustive search (small graphs)");
  s->add_option("--graph", sol.graph_spec, "graph spec such as C3vO2, P4vO1, K2,3");
  s->add_option("--graph-file", sol.graph_file, "graph or labeling JSON");
  s->add_option("--family", sol.fam.family, "family name; the graph of that parameter point is searched");
  sol.fam.attach(s, false);
  s->add_option("--delete", sol.del, "delete this edge first, e.g. u1-v1");
  s->add_option("--max-edges", sol.max_edges, "refuse graphs with more edges (default 12)");
  s->add_option("--target", sol.target, "stop at the first labeling with at most this many colours");
  s->add_flag("--no-symmetry", sol.no_symmetry, "disable complement symmetry pruning");
  s->add_option("--time-budget", sol.budget, "seconds (default LAJOIN_TIME_BUDGET or 60)");
  s->add_option("--threads", sol.threads, "worker threads (0 = all cores)");
  s->add_option("--edge-order", sol.edge_order, "degree or input")->check(CLI::IsMember({"degree", "input"}));
  s->add_option("--label-order", sol.label_order, "large or small")->check(CLI::IsMember({"large", "small"}));
  s->add_flag("--timing", sol.timing, "include node count and elapsed time");
  s->add_option("-o,--out", sol.out, "report path (stdout if omitted)");

  MatrixArgs mat;
  auto* mx = app.add_subcommand("matrix", "print the labeling matrix of a join labeling");
  mx->add_option("file", mat.file, "labeling JSON");
  mx->add_option("--family", mat.fam.family, "construct instead of reading a file");
  mat.fam.attach(mx, false);
  mx->add_option("--format", mat.format, "csv or pretty")->check(CLI::IsMember({"csv", "pretty"}));
  mx->add_option("--row-order", mat.row_order, "auto, natural or parity")->check(CLI::IsMember({"auto", "natural", "parity"}));
  mx->add_option("-o,--out", mat.out, "output path (stdout if omitted)");

  SweepArgs sw;
  auto* sp = app.add_subcommand("sweep", "construct, verify and confirm every point in a parameter range");
  sp->add_option("--family", sw.fam.family, "family name");
  sw.fam.attach(sp, true);
  sp->add_flag("--all", sw.all, "every swept family over its full range");
  sp->add_option("--max-q", sw.max_q, "skip points with more edges (default 400)");
  sp->add_option("--max-edges", sw.max_edges, "exact search limit (default 12)");
  sp->add_option("--time-budget", sw.budget, "solver budget per point in seconds");
  sp->add_option("--threads", sw.threads, "parallel points (0 = all cores)");
  sp->add_option("--format", sw.format, "pretty, csv or json")->check(CLI::IsMember({"pretty", "csv", "json"}));
  sp->add_option("-o,--out", sw.out, "output path (stdout if omitted)");

  ArraysArgs ar;
  auto* a = app.add_subcommand("arrays", "magic squares, magic rectangles, nearly magic rectangles");
  a->add_option("--kind", ar.kind, "siamese, square, rectangle, nearly or drop")
      ->required()
      ->check(CLI::IsMember({"siamese", "square", "rectangle", "nearly", "drop"}));
  a->add_option("--order", ar.order, "square order");
  a->add_option("--rows", ar.rows, "rows");
  a->add_option("--cols", ar.cols, "columns");
  a->add_option("--col", ar.col, "column to drop (drop kind; default the middle column)");
  a->add_option("--format", ar.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  a->add_option("-o,--out", ar.out, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (auto& c : msg)
      if (c == '\n') c = ' ';
    report({kUsage, "usage", msg});
    return kUsage;
  }
  gen.matrix = g->count("--matrix") > 0;

  try {
    if (*g) return run_gen(gen);
    if (*v) return run_verify(ver);
    if (*s) return run_solve(sol);
    if (*mx) return run_matrix(mat);
    if (*sp) return run_sweep(sw);
    if (*a) return run_arrays(ar);
  } catch (const CliError& e) {
    report(e);
    return e.status;
  } catch (const cited_case& e) {
    report({kUsage, "cited", std::string(e.what()) + "; construction out of scope", "route=" + e.route()});
    return kUsage;
  } catch (const open_problem& e) {
    report({kUsage, "open-problem", e.what()});
    return kUsage;
  } catch (const usage_error& e) {
    report({kUsage, "usage", e.what()});
    return kUsage;
  } catch (const std::exception& e) {
    report({kFail, "internal", e.what()});
    return kFail;
  }
  return kUsage;
}
