// sgh — command-line surface for the signed-graph homomorphism toolkit.
//
// Every subcommand prints a JSON report (schema 1) on stdout. Exit codes:
//   0  the question was answered (including found:false / not equivalent)
//   2  the classifier answered UNKNOWN
//   1  input error (malformed file, unknown vertex, bad flags, caps)
// With --out DIR, certificate artifacts are written as separate files after
// an independent re-verification pass; the report lists their paths under
// "files". The environment variable SGH_MAX_VERTICES (default 24) caps the
// size of search targets at the switching-graph level.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgh/classify.hpp"
#include "sgh/excluder.hpp"
#include "sgh/graph.hpp"
#include "sgh/hom.hpp"
#include "sgh/minorder.hpp"
#include "sgh/poly.hpp"
#include "sgh/switching.hpp"
#include "sgh/wnu_witness.hpp"

namespace {

using nlohmann::json;
using namespace sgh;

// ---------------------------------------------------------------------------
// Small file / JSON helpers

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Collects certificate files for --out DIR and their paths for the report.
struct Outdir {
  std::optional<std::filesystem::path> dir;
  json files = json::object();

  explicit Outdir(const std::string& d) {
    if (!d.empty()) dir = d;
  }
  bool active() const { return dir.has_value(); }
  void write(const std::string& name, const std::string& text) {
    if (!dir) return;
    std::filesystem::create_directories(*dir);
    std::filesystem::path p = *dir / name;
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
    out << text;
    files[name] = p.string();
  }
  void attach(json& report) const {
    if (dir) report["files"] = files;
  }
};

json graph_payload(const BrGraph& g) { return json::parse(to_json_string(g)); }

json name_list(const std::vector<std::string>& names,
               const std::vector<int>& ids) {
  json a = json::array();
  for (int v : ids) a.push_back(names[static_cast<std::size_t>(v)]);
  return a;
}

json set_names(const std::vector<std::string>& names, VertexSet s) {
  json a = json::array();
  for (std::size_t v = 0; v < names.size(); ++v)
    if ((s >> v) & 1) a.push_back(names[v]);
  return a;
}

int resolve_vertex(const std::vector<std::string>& names,
                   const std::string& name, const std::string& where) {
  if (std::optional<int> v = find_vertex(names, name)) return *v;
  throw std::invalid_argument("unknown vertex '" + name + "' in " + where);
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Token scanning with exact column positions, for line/column diagnostics.

std::vector<std::pair<std::string, int>> tokens_with_cols(
    const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
      ++i;
    if (i >= body.size()) break;
    std::size_t j = i;
    while (j < body.size() &&
           !std::isspace(static_cast<unsigned char>(body[j])))
      ++j;
    out.emplace_back(body.substr(i, j - i), static_cast<int>(i) + 1);
    i = j;
  }
  return out;
}

// List files: one line per constrained vertex of G,
//   list <g-vertex> <target-vertex> [<target-vertex> ...]
// '#' starts a comment; vertices of G not mentioned keep the full list.
ListAssignment parse_list_file(const std::vector<std::string>& g_names,
                               const std::vector<std::string>& h_names,
                               const std::string& text) {
  ListAssignment lists =
      full_lists(static_cast<int>(g_names.size()),
                 static_cast<int>(h_names.size()));
  std::vector<bool> seen(g_names.size(), false);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_with_cols(line);
    if (toks.empty()) continue;
    if (toks[0].first != "list")
      throw ParseError("expected 'list', got '" + toks[0].first + "'", lineno,
                       toks[0].second);
    if (toks.size() < 2)
      throw ParseError("missing vertex name after 'list'", lineno,
                       toks[0].second + 5);
    std::optional<int> gv = find_vertex(g_names, toks[1].first);
    if (!gv)
      throw ParseError("unknown source vertex '" + toks[1].first + "'", lineno,
                       toks[1].second);
    if (seen[static_cast<std::size_t>(*gv)])
      throw ParseError("duplicate list for '" + toks[1].first + "'", lineno,
                       toks[1].second);
    seen[static_cast<std::size_t>(*gv)] = true;
    if (toks.size() < 3)
      throw ParseError("empty list for '" + toks[1].first +
                           "' (name at least one target vertex)",
                       lineno, toks[1].second);
    VertexSet allowed = 0;
    for (std::size_t k = 2; k < toks.size(); ++k) {
      std::optional<int> hv = find_vertex(h_names, toks[k].first);
      if (!hv)
        throw ParseError("unknown target vertex '" + toks[k].first + "'",
                         lineno, toks[k].second);
      allowed |= VertexSet{1} << *hv;
    }
    lists[static_cast<std::size_t>(*gv)] = allowed;
  }
  return lists;
}

// Order files: vertex names separated by whitespace/newlines, '#' comments.
std::vector<int> parse_order_file(const std::vector<std::string>& names,
                                  const std::string& text) {
  std::vector<int> order;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    for (const auto& [tok, col] : tokens_with_cols(line)) {
      std::optional<int> v = find_vertex(names, tok);
      if (!v) throw ParseError("unknown vertex '" + tok + "'", lineno, col);
      order.push_back(*v);
    }
  }
  return order;
}

int env_cap() {
  const char* s = std::getenv("SGH_MAX_VERTICES");
  if (s == nullptr || *s == '\0') return 24;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v <= 0 || v > 64)
    throw std::invalid_argument(
        "SGH_MAX_VERTICES must be an integer in [1, 64], got '" +
        std::string(s) + "'");
  return static_cast<int>(v);
}

void check_cap(int needed, const std::string& what) {
  int cap = env_cap();
  if (needed > cap)
    throw std::invalid_argument(
        what + " needs " + std::to_string(needed) +
        " vertices, over the search cap SGH_MAX_VERTICES=" +
        std::to_string(cap));
}

// The switching involution of any switching graph: copy i <-> copy i + n/2.
std::vector<int> cover_pairing(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i < n / 2 ? i + n / 2 : i - n / 2;
  return p;
}

json props_json(const PolyProps& p) {
  return json{{"idempotent", p.idempotent},
              {"conservative", p.conservative},
              {"semi_conservative", p.semi_conservative},
              {"wnu", p.wnu},
              {"nu3", p.nu3},
              {"symmetric", p.symmetric},
              {"parity_symmetric", p.parity_symmetric}};
}

json failures_json(const std::vector<PropFailure>& fails,
                   const std::vector<std::string>& names) {
  auto name_of = [&](int v) -> json {
    if (v < 0 || static_cast<std::size_t>(v) >= names.size()) return nullptr;
    return names[static_cast<std::size_t>(v)];
  };
  json out = json::array();
  for (const PropFailure& f : fails) {
    json triple_x = json::array(), triple_y = json::array();
    for (int v : f.x) triple_x.push_back(name_of(v));
    for (int v : f.y) triple_y.push_back(name_of(v));
    out.push_back(json{{"property", f.property},
                       {"x", triple_x},
                       {"y", triple_y},
                       {"fx", name_of(f.fx)},
                       {"fy", name_of(f.fy)},
                       {"detail", f.detail}});
  }
  return out;
}

json excluder_json(const ExcluderCertificate& cert,
                   const std::vector<std::string>& names) {
  json walks = json::array();
  for (const std::vector<int>& w : cert.walks) walks.push_back(name_list(names, w));
  json triple = json::array();
  for (int v : cert.triple) triple.push_back(names[static_cast<std::size_t>(v)]);
  return json{{"triple", triple}, {"target", cert.target}, {"walks", walks}};
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.

int cmd_pgraph(const std::string& path, const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  SwitchGraph p = switching_graph(h);
  json report{{"schema", 1},
              {"command", "pgraph"},
              {"input", path},
              {"base_vertices", p.base_n},
              {"vertices", p.graph.n},
              {"graph", graph_payload(p.graph)}};
  out.write("pgraph.json", to_json_string(p.graph));
  out.write("pgraph.brg", to_text(p.graph));
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_product_p(const std::string& path, const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  ProductP prod = product_with_P(h);
  json report{{"schema", 1},
              {"command", "product-p"},
              {"input", path},
              {"base_vertices", prod.base_n},
              {"vertices", prod.graph.n},
              {"graph", graph_payload(prod.graph)}};
  out.write("product_p.json", to_json_string(prod.graph));
  out.write("product_p.brg", to_text(prod.graph));
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_switch_eq(const std::string& path1, const std::string& path2,
                  const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph g1 = load_brgraph(path1);
  BrGraph g2 = load_brgraph(path2);
  std::optional<VertexSet> s = are_switch_equivalent(g1, g2);
  json report{{"schema", 1},
              {"command", "switch-eq"},
              {"inputs", json::array({path1, path2})},
              {"equivalent", s.has_value()}};
  if (s) {
    report["switch_set"] = set_names(g1.names, *s);
    // Re-verify before reporting: switching g1 at the set must give g2.
    if (!(switch_at(g1, *s) == g2))
      throw std::logic_error("switch set failed re-verification");
  }
  out.write("switch_eq.json", report.dump(2));
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_hom(const std::string& g_path, const std::string& h_path,
            const std::string& lists_path, bool switching,
            const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph g = load_brgraph(g_path);
  BrGraph h = load_brgraph(h_path);
  json report{{"schema", 1},
              {"command", "hom"},
              {"inputs", json::array({g_path, h_path})},
              {"switch", switching}};
  if (!switching) {
    ListAssignment lists =
        lists_path.empty()
            ? full_lists(g.n, h.n)
            : parse_list_file(g.names, h.names, read_file(lists_path));
    std::optional<std::vector<int>> m = list_hom(g, h, lists);
    report["found"] = m.has_value();
    if (m) {
      if (!is_homomorphism(g, h, *m))
        throw std::logic_error("homomorphism failed re-verification");
      json map = json::object();
      for (int v = 0; v < g.n; ++v)
        map[g.names[static_cast<std::size_t>(v)]] =
            h.names[static_cast<std::size_t>((*m)[static_cast<std::size_t>(v)])];
      report["map"] = map;
    }
  } else {
    std::optional<SwitchHom> sh;
    if (lists_path.empty()) {
      sh = switch_hom(g, h);
    } else {
      // Lists for the switch variant live over V(P(H)): use the ".1"/".2"
      // copy names. Every list must be closed under the switch involution.
      SwitchGraph p = switching_graph(h);
      ListAssignment lists =
          parse_list_file(g.names, p.graph.names, read_file(lists_path));
      sh = list_switch_hom(g, h, lists);
    }
    report["found"] = sh.has_value();
    if (sh) {
      if (!is_homomorphism(switch_at(g, sh->switch_set), h, sh->map))
        throw std::logic_error("switch-homomorphism failed re-verification");
      report["switch_set"] = set_names(g.names, sh->switch_set);
      json map = json::object();
      for (int v = 0; v < g.n; ++v)
        map[g.names[static_cast<std::size_t>(v)]] =
            h.names[static_cast<std::size_t>(sh->map[static_cast<std::size_t>(v)])];
      report["map"] = map;
    }
  }
  out.write("hom.json", report.dump(2));
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_core(const std::string& path, bool switching,
             const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  BrGraph c = switching ? switch_core_of(h) : core_of(h);
  json report{{"schema", 1},
              {"command", "core"},
              {"input", path},
              {"switch", switching},
              {"vertices", c.n},
              {"edge_slots", edge_slot_count(c)},
              {"graph", graph_payload(c)}};
  out.write("core.json", to_json_string(c));
  out.write("core.brg", to_text(c));
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_excluders(const std::string& path, const std::string& a,
                  const std::string& b, const std::string& c,
                  const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  Graph red = red_subgraph(h);
  std::array<int, 3> triple{resolve_vertex(h.names, a, path),
                            resolve_vertex(h.names, b, path),
                            resolve_vertex(h.names, c, path)};
  json report{{"schema", 1},
              {"command", "excluders"},
              {"input", path},
              {"relation", "red"},
              {"triple", json::array({a, b, c})}};
  json entries = json::array();
  bool all = true;
  for (int target = 0; target < 3; ++target) {
    std::optional<ExcluderCertificate> cert = find_excluder(red, triple, target);
    json entry{{"target", target}, {"found", cert.has_value()}};
    if (cert) {
      if (!validate_excluder(red, *cert))
        throw std::logic_error("excluder failed re-verification");
      entry["length"] = cert->walks[0].size() - 1;
      entry["walks"] = excluder_json(*cert, h.names)["walks"];
    } else {
      all = false;
    }
    entries.push_back(entry);
  }
  report["excluders"] = entries;
  report["permutable"] = all;
  out.write("excluders.json", report.dump(2));
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_triples(const std::string& path, const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  Graph red = red_subgraph(h);
  std::vector<PermutableTriple> ts = permutable_triples(red);
  json report{{"schema", 1},
              {"command", "triples"},
              {"input", path},
              {"relation", "red"},
              {"count", ts.size()}};
  json triples = json::array();
  for (const PermutableTriple& t : ts) {
    json names = json::array();
    for (int v : t.triple) names.push_back(h.names[static_cast<std::size_t>(v)]);
    triples.push_back(names);
  }
  report["triples"] = triples;
  if (out.active()) {
    json certs = json::array();
    for (const PermutableTriple& t : ts) {
      json one = json::array();
      for (const ExcluderCertificate& cert : t.certificates) {
        if (!validate_excluder(red, cert))
          throw std::logic_error("excluder failed re-verification");
        one.push_back(excluder_json(cert, h.names));
      }
      certs.push_back(one);
    }
    json full = report;
    full["certificates"] = certs;
    out.write("triples.json", full.dump(2));
  }
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_find_poly(const std::string& path, const std::string& props_csv,
                  const std::string& smap_path, const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  PolyProps props = parse_props(props_csv);
  std::optional<std::vector<int>> pairing;
  if (!smap_path.empty())
    pairing = parse_pairing(h.names, read_file(smap_path));
  if (props.semi_conservative && !pairing)
    throw std::invalid_argument(
        "property 'semi' needs the switch involution: pass --switch-map FILE");
  check_cap(h.n, "polymorphism search on '" + path + "'");
  PolySearchResult r =
      search_poly3(h, props, pairing ? &*pairing : nullptr);
  json report{{"schema", 1},
              {"command", "find-poly"},
              {"input", path},
              {"props", props_csv},
              {"found", r.poly.has_value()},
              {"stats", json{{"nodes", r.stats.nodes},
                             {"wipeouts", r.stats.wipeouts}}}};
  if (r.poly) {
    PropReport rep =
        check_props(*r.poly, props, pairing ? &*pairing : nullptr);
    if (!rep.all_ok())
      throw std::logic_error("polymorphism table failed re-verification");
    report["table_entries"] = r.poly->table.size();
    std::string table = to_table_text(*r.poly);
    if (h.n <= 8)
      report["table"] = table;
    else
      report["table_in_report"] = false;
    out.write("poly.table", table);
  } else {
    report["exhausted"] = r.exhausted;
  }
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_check_poly(const std::string& path, const std::string& table_path,
                   const std::string& smap_path, const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  Poly3 f = parse_poly3(h, read_file(table_path));
  std::optional<std::vector<int>> pairing;
  if (!smap_path.empty())
    pairing = parse_pairing(h.names, read_file(smap_path));
  PolyProps which;
  which.idempotent = which.conservative = which.wnu = which.nu3 =
      which.symmetric = true;
  which.semi_conservative = pairing.has_value();
  PropReport rep = check_props(f, which, pairing ? &*pairing : nullptr);
  json report{{"schema", 1},
              {"command", "check-poly"},
              {"inputs", json::array({path, table_path})},
              {"polymorphism", rep.polymorphism},
              {"checked", props_json(rep.requested)},
              {"holds", props_json(rep.holds)},
              {"all_ok", rep.all_ok()},
              {"failures", failures_json(rep.failures, h.names)}};
  out.write("check_poly.json", report.dump(2));
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_min_order(const std::string& path, const std::string& check_path,
                  const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph bg = load_brgraph(path);
  Graph g = underlying(bg);
  json report{{"schema", 1},
              {"command", "min-order"},
              {"input", path},
              {"relation", "underlying"}};
  if (!check_path.empty()) {
    std::vector<int> order = parse_order_file(g.names, read_file(check_path));
    MinOrderCheck check = is_min_ordering(g, order);
    report["checked"] = check_path;
    report["ok"] = check.ok;
    if (check.violation) {
      const UnderbarViolation& w = *check.violation;
      report["violation"] =
          json{{"a", g.names[static_cast<std::size_t>(w.a)]},
               {"a2", g.names[static_cast<std::size_t>(w.a2)]},
               {"b", g.names[static_cast<std::size_t>(w.b)]},
               {"b2", g.names[static_cast<std::size_t>(w.b2)]}};
    }
  } else {
    std::optional<MinOrdering> found = find_min_ordering(g);
    report["found"] = found.has_value();
    if (found) {
      if (!is_min_ordering(g, found->order).ok)
        throw std::logic_error("min-ordering failed re-verification");
      report["order"] = name_list(g.names, found->order);
      std::ostringstream txt;
      for (int v : found->order)
        txt << g.names[static_cast<std::size_t>(v)] << "\n";
      out.write("minorder.txt", txt.str());
    }
  }
  out.attach(report);
  emit(report);
  return 0;
}

json build_payload(const WnuBuild& b) {
  return json{{"h", graph_payload(b.h)},
              {"pgraph_vertices", b.p.graph.n},
              {"normalized_order", name_list(b.h.names, b.normalized_order)},
              {"table_entries", b.phi.table.size()},
              {"properties", json{{"idempotent", true},
                                  {"wnu", true},
                                  {"semi_conservative", true}}}};
}

void verify_build(const WnuBuild& b) {
  PolyProps want;
  want.idempotent = want.wnu = want.semi_conservative = true;
  std::vector<int> pairing = b.p.switch_perm();
  PropReport rep = check_props(b.phi, want, &pairing);
  if (!rep.all_ok())
    throw std::logic_error("constructed table failed re-verification");
}

int cmd_newmain_build(const std::string& witness_path,
                      const std::string& out_dir) {
  Outdir out(out_dir);
  WnuWitness w = witness_from_json(read_file(witness_path));
  validate_witness(w);
  WnuBuild b = build_from_witness(w);
  verify_build(b);
  json report = build_payload(b);
  report["schema"] = 1;
  report["command"] = "newmain-build";
  report["input"] = witness_path;
  out.write("h.brg", to_text(b.h));
  out.write("phi.table", to_table_text(b.phi));
  out.attach(report);
  emit(report);
  return 0;
}

int cmd_newmain_search(const std::string& path, const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  check_cap(2 * h.n, "witness search over the switching graph of '" + path +
                         "'");
  std::optional<WnuWitness> w = search_witness(h);
  json report{{"schema", 1},
              {"command", "newmain-search"},
              {"input", path},
              {"found", w.has_value()}};
  if (w) {
    WnuBuild b = build_from_witness(*w);
    verify_build(b);
    report["witness"] = json::parse(witness_to_json(*w));
    report["build"] = build_payload(b);
    out.write("witness.json", witness_to_json(*w));
    out.write("phi.table", to_table_text(b.phi));
  }
  out.attach(report);
  emit(report);
  return 0;
}

// Independent re-verification of classifier certificates before --out writes
// them: mutual switch-homomorphism for the switch-core, excluder validity for
// obstruction triples, check_props for polymorphism tables (flags chosen by
// the rule that produced the table), witness validity for witnesses.
void verify_verdict_artifacts(const BrGraph& h, const Verdict& v) {
  if (v.switch_core) {
    if (!switch_hom(h, *v.switch_core) || !switch_hom(*v.switch_core, h))
      throw std::logic_error("switch-core failed re-verification");
  }
  if (v.obstruction) {
    if (!v.obstruction_graph)
      throw std::logic_error("obstruction triple without its graph");
    for (const ExcluderCertificate& cert : v.obstruction->certificates)
      if (!validate_excluder(*v.obstruction_graph, cert))
        throw std::logic_error("obstruction excluder failed re-verification");
  }
  if (v.polymorphism) {
    PolyProps want;
    std::optional<std::vector<int>> pairing;
    if (v.rule == "wnu-witness" || v.rule == "semi-wnu-found") {
      want.idempotent = want.wnu = want.semi_conservative = true;
      pairing = cover_pairing(v.polymorphism->target.n);
    } else {
      want.conservative = want.nu3 = true;
    }
    PropReport rep =
        check_props(*v.polymorphism, want, pairing ? &*pairing : nullptr);
    if (!rep.all_ok())
      throw std::logic_error("verdict polymorphism failed re-verification");
  }
  if (v.witness) validate_witness(*v.witness);
}

int cmd_classify(const std::string& path, const std::string& problem,
                 const std::string& out_dir) {
  Outdir out(out_dir);
  BrGraph h = load_brgraph(path);
  ClassifyOptions opts;
  opts.max_search_vertices = env_cap();
  Verdict v;
  if (problem == "shom")
    v = classify_shom(h);
  else if (problem == "lphom")
    v = classify_lphom(h);
  else if (problem == "lshom")
    v = classify_lshom(h, opts);
  else
    throw std::invalid_argument("unknown problem '" + problem +
                                "' (expected shom, lphom or lshom)");
  json report = json::parse(verdict_to_json(v));
  report["schema"] = 1;
  report["command"] = "classify";
  report["input"] = path;
  if (out.active()) {
    verify_verdict_artifacts(h, v);
    out.write("verdict.json", report.dump(2));
    if (v.switch_core) out.write("switch_core.brg", to_text(*v.switch_core));
    if (v.polymorphism) out.write("poly.table", to_table_text(*v.polymorphism));
    if (v.witness) out.write("witness.json", witness_to_json(*v.witness));
  }
  out.attach(report);
  emit(report);
  return v.answer == Answer::Unknown ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sgh — exact homomorphism, polymorphism and complexity toolkit for "
      "signed (blue/red) graphs"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::string out_dir;

  // Shared option storage; each subcommand binds the subset it uses.
  std::string path1, path2, lists_path, smap_path, props_csv, check_path;
  std::string va, vb, vc, problem;
  bool flag_switch = false;

  auto add_out = [&out_dir](CLI::App* sc) {
    sc->add_option("--out", out_dir,
                   "Directory for certificate files (re-verified, then "
                   "written; paths appear under \"files\")");
  };

  CLI::App* pg = app.add_subcommand(
      "pgraph", "Build the switching graph P(H) of a br-graph");
  pg->add_option("H", path1, "br-graph file (text or JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  add_out(pg);
  pg->callback([&] { exit_code = cmd_pgraph(path1, out_dir); });

  CLI::App* pp = app.add_subcommand(
      "product-p", "Build the bipartite double cover H x P");
  pp->add_option("H", path1, "br-graph file")->required()->check(CLI::ExistingFile);
  add_out(pp);
  pp->callback([&] { exit_code = cmd_product_p(path1, out_dir); });

  CLI::App* se = app.add_subcommand(
      "switch-eq",
      "Decide whether two br-graphs on the same vertices are switching-"
      "equivalent");
  se->add_option("G1", path1, "first br-graph")->required()->check(CLI::ExistingFile);
  se->add_option("G2", path2, "second br-graph")->required()->check(CLI::ExistingFile);
  add_out(se);
  se->callback(
      [&] { exit_code = cmd_switch_eq(path1, path2, out_dir); });

  CLI::App* hm = app.add_subcommand(
      "hom",
      "Find a (list) homomorphism G -> H; with --switch, a switch-"
      "homomorphism (lists then use the P(H) copy names <v>.1 / <v>.2 and "
      "must be switch-closed)");
  hm->add_option("G", path1, "source br-graph")->required()->check(CLI::ExistingFile);
  hm->add_option("H", path2, "target br-graph")->required()->check(CLI::ExistingFile);
  hm->add_option("--lists", lists_path,
                 "list file: lines 'list <g-vertex> <target> ...'")
      ->check(CLI::ExistingFile);
  hm->add_flag("--switch", flag_switch, "decide switch-homomorphism instead");
  add_out(hm);
  hm->callback([&] {
    exit_code =
        cmd_hom(path1, path2, lists_path, flag_switch, out_dir);
  });

  CLI::App* co = app.add_subcommand(
      "core", "Compute the core (or with --switch, the switch-core)");
  co->add_option("H", path1, "br-graph file")->required()->check(CLI::ExistingFile);
  co->add_flag("--switch", flag_switch, "switch-core instead of hom-core");
  add_out(co);
  co->callback(
      [&] { exit_code = cmd_core(path1, flag_switch, out_dir); });

  CLI::App* ex = app.add_subcommand(
      "excluders",
      "Find excluders for a vertex triple in the red subgraph (purple counts "
      "as red)");
  ex->add_option("H", path1, "br-graph file")->required()->check(CLI::ExistingFile);
  ex->add_option("a", va, "first vertex")->required();
  ex->add_option("b", vb, "second vertex")->required();
  ex->add_option("c", vc, "third vertex")->required();
  add_out(ex);
  ex->callback([&] {
    exit_code = cmd_excluders(path1, va, vb, vc, out_dir);
  });

  CLI::App* tr = app.add_subcommand(
      "triples",
      "List all permutable triples of the red subgraph (purple counts as "
      "red)");
  tr->add_option("H", path1, "br-graph file")->required()->check(CLI::ExistingFile);
  add_out(tr);
  tr->callback([&] { exit_code = cmd_triples(path1, out_dir); });

  CLI::App* fp = app.add_subcommand(
      "find-poly",
      "Search for a ternary polymorphism with the given properties");
  fp->add_option("H", path1, "target br-graph")->required()->check(CLI::ExistingFile);
  fp->add_option("--props", props_csv,
                 "comma-separated: idempotent, conservative, semi, wnu, nu3")
      ->required();
  fp->add_option("--switch-map", smap_path,
                 "involution file ('pair <u> <v>' lines); required for semi")
      ->check(CLI::ExistingFile);
  add_out(fp);
  fp->callback([&] {
    exit_code =
        cmd_find_poly(path1, props_csv, smap_path, out_dir);
  });

  CLI::App* cp = app.add_subcommand(
      "check-poly",
      "Check a ternary table: edge preservation plus idempotent, "
      "conservative, wnu, nu3, symmetric, and (with --switch-map) "
      "semi-conservative");
  cp->add_option("H", path1, "target br-graph")->required()->check(CLI::ExistingFile);
  cp->add_option("TABLE", path2, "table file: lines 'f <x> <y> <z> -> <v>'")
      ->required()
      ->check(CLI::ExistingFile);
  cp->add_option("--switch-map", smap_path, "involution file for the semi check")
      ->check(CLI::ExistingFile);
  add_out(cp);
  cp->callback([&] {
    exit_code =
        cmd_check_poly(path1, path2, smap_path, out_dir);
  });

  CLI::App* mo = app.add_subcommand(
      "min-order",
      "Find the least min-ordering of the underlying graph, or check one");
  mo->add_option("G", path1, "br-graph file")->required()->check(CLI::ExistingFile);
  mo->add_option("--check", check_path,
                 "order file (vertex names in order); checks instead of "
                 "searching")
      ->check(CLI::ExistingFile);
  add_out(mo);
  mo->callback([&] {
    exit_code = cmd_min_order(path1, check_path, out_dir);
  });

  CLI::App* nb = app.add_subcommand(
      "newmain-build",
      "Build and verify the WNU table from a witness JSON file "
      "({h_plus, order, r, L, B})");
  nb->add_option("WITNESS", path1, "witness JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  add_out(nb);
  nb->callback(
      [&] { exit_code = cmd_newmain_build(path1, out_dir); });

  CLI::App* ns = app.add_subcommand(
      "newmain-search",
      "Search switchings and blue completions of H for a WNU witness");
  ns->add_option("H", path1, "br-graph file")->required()->check(CLI::ExistingFile);
  add_out(ns);
  ns->callback(
      [&] { exit_code = cmd_newmain_search(path1, out_dir); });

  CLI::App* cl = app.add_subcommand(
      "classify",
      "Classify the complexity of shom / lphom / lshom with target H "
      "(exit 0 = answered, 2 = UNKNOWN)");
  cl->add_option("H", path1, "target br-graph")->required()->check(CLI::ExistingFile);
  cl->add_option("--problem", problem, "one of: shom, lphom, lshom")
      ->required();
  add_out(cl);
  cl->callback(
      [&] { exit_code = cmd_classify(path1, problem, out_dir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << " (line " << e.line
              << ", column " << e.col << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
