#include "sgh/graph.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace sgh {

std::string_view colour_name(EdgeColour c) {
  switch (c) {
    case EdgeColour::Blue: return "blue";
    case EdgeColour::Red: return "red";
    case EdgeColour::Purple: return "purple";
  }
  return "?";
}

static void check_vertex_budget(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph size " + std::to_string(n) +
                                " exceeds the " + std::to_string(kMaxVertices) +
                                "-vertex limit");
}

Graph::Graph(int n_vertices) : Graph(n_vertices, default_names(n_vertices)) {}

Graph::Graph(int n_vertices, std::vector<std::string> vertex_names)
    : n(n_vertices), names(std::move(vertex_names)), adj(n_vertices, 0) {
  check_vertex_budget(n);
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("name list does not match vertex count");
}

void Graph::add_edge(int u, int v) {
  adj[u] |= vbit(v);
  adj[v] |= vbit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += set_size(adj[v]) + (has_loop(v) ? 1 : 0);
  return twice / 2;
}

void Graph::validate() const {
  if (static_cast<int>(adj.size()) != n || static_cast<int>(names.size()) != n)
    throw std::logic_error("graph arrays out of sync with vertex count");
  for (int v = 0; v < n; ++v) {
    if (adj[v] & ~full_set(n)) throw std::logic_error("edge to missing vertex");
    for (int u = v + 1; u < n; ++u)
      if (has_edge(v, u) != has_edge(u, v))
        throw std::logic_error("asymmetric adjacency");
  }
}

BrGraph::BrGraph(int n_vertices) : BrGraph(n_vertices, default_names(n_vertices)) {}

BrGraph::BrGraph(int n_vertices, std::vector<std::string> vertex_names)
    : n(n_vertices),
      names(std::move(vertex_names)),
      blue(n_vertices, 0),
      red(n_vertices, 0) {
  check_vertex_budget(n);
  if (static_cast<int>(names.size()) != n)
    throw std::invalid_argument("name list does not match vertex count");
}

void BrGraph::add_edge(int u, int v, EdgeColour c) {
  if (c != EdgeColour::Red) {
    blue[u] |= vbit(v);
    blue[v] |= vbit(u);
  }
  if (c != EdgeColour::Blue) {
    red[u] |= vbit(v);
    red[v] |= vbit(u);
  }
}

void BrGraph::validate() const {
  if (static_cast<int>(blue.size()) != n || static_cast<int>(red.size()) != n ||
      static_cast<int>(names.size()) != n)
    throw std::logic_error("graph arrays out of sync with vertex count");
  for (int v = 0; v < n; ++v) {
    if ((blue[v] | red[v]) & ~full_set(n))
      throw std::logic_error("edge to missing vertex");
    for (int u = v + 1; u < n; ++u) {
      if (has_blue(v, u) != has_blue(u, v) || has_red(v, u) != has_red(u, v))
        throw std::logic_error("asymmetric adjacency");
    }
  }
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));
  return names;
}

std::optional<int> find_vertex(const std::vector<std::string>& names,
                               std::string_view name) {
  for (int v = 0; v < static_cast<int>(names.size()); ++v)
    if (names[v] == name) return v;
  return std::nullopt;
}

Graph underlying(const BrGraph& g) {
  Graph out(g.n, g.names);
  for (int v = 0; v < g.n; ++v) out.adj[v] = g.blue[v] | g.red[v];
  return out;
}

Graph blue_subgraph(const BrGraph& g) {
  Graph out(g.n, g.names);
  out.adj = g.blue;
  return out;
}

Graph red_subgraph(const BrGraph& g) {
  Graph out(g.n, g.names);
  out.adj = g.red;
  return out;
}

Graph purple_subgraph(const BrGraph& g) {
  Graph out(g.n, g.names);
  for (int v = 0; v < g.n; ++v) out.adj[v] = g.blue[v] & g.red[v];
  return out;
}

BrGraph as_purple(const Graph& g) {
  BrGraph out(g.n, g.names);
  out.blue = g.adj;
  out.red = g.adj;
  return out;
}

// Maps old vertex ids to new ones for an induced subgraph on `keep`.
static std::vector<int> reindex_map(int n, VertexSet keep) {
  std::vector<int> to_new(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v)
    if (keep & vbit(v)) to_new[v] = next++;
  return to_new;
}

static VertexSet compress(VertexSet mask, const std::vector<int>& to_new) {
  VertexSet out = 0;
  for (VertexSet m = mask; m;) {
    int v = first_vertex(m);
    m &= m - 1;
    if (to_new[v] >= 0) out |= vbit(to_new[v]);
  }
  return out;
}

Graph induced(const Graph& g, VertexSet keep) {
  keep &= full_set(g.n);
  auto to_new = reindex_map(g.n, keep);
  Graph out(set_size(keep));
  for (int v = 0; v < g.n; ++v) {
    if (to_new[v] < 0) continue;
    out.names[to_new[v]] = g.names[v];
    out.adj[to_new[v]] = compress(g.adj[v] & keep, to_new);
  }
  return out;
}

BrGraph induced(const BrGraph& g, VertexSet keep) {
  keep &= full_set(g.n);
  auto to_new = reindex_map(g.n, keep);
  BrGraph out(set_size(keep));
  for (int v = 0; v < g.n; ++v) {
    if (to_new[v] < 0) continue;
    out.names[to_new[v]] = g.names[v];
    out.blue[to_new[v]] = compress(g.blue[v] & keep, to_new);
    out.red[to_new[v]] = compress(g.red[v] & keep, to_new);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen = 0;
  for (int start = 0; start < g.n; ++start) {
    if (seen & vbit(start)) continue;
    VertexSet comp = vbit(start);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet m = frontier; m;) {
        int v = first_vertex(m);
        m &= m - 1;
        next |= g.adj[v];
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> components(const BrGraph& g) {
  return components(underlying(g));
}

std::optional<Parity> bipartition(const Graph& g) {
  Parity side(g.n, -1);
  for (int start = 0; start < g.n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;  // least vertex of its component
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (VertexSet m = g.adj[v]; m;) {
        int u = first_vertex(m);
        m &= m - 1;
        if (u == v) return std::nullopt;  // loop
        if (side[u] < 0) {
          side[u] = side[v] ^ 1;
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  return side;
}

// ---- Parsing ----------------------------------------------------------------

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + msg),
      line(line),
      col(col) {}

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

// Splits one line into whitespace-separated tokens, dropping '#' comments.
std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back({std::string(line.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<EdgeColour> colour_from_token(std::string_view t) {
  if (t == "b" || t == "blue") return EdgeColour::Blue;
  if (t == "r" || t == "red") return EdgeColour::Red;
  if (t == "p" || t == "purple") return EdgeColour::Purple;
  return std::nullopt;
}

// Accumulates vertices/edges by name before sizes are known.
struct GraphBuilder {
  std::vector<std::string> names;
  std::vector<std::tuple<int, int, EdgeColour>> edges;

  int intern(const std::string& name, int line, int col) {
    if (auto v = find_vertex(names, name)) return *v;
    if (static_cast<int>(names.size()) >= kMaxVertices)
      throw ParseError("too many vertices (limit " +
                           std::to_string(kMaxVertices) + ")",
                       line, col);
    names.push_back(name);
    return static_cast<int>(names.size()) - 1;
  }

  BrGraph build() const {
    BrGraph g(static_cast<int>(names.size()), names);
    for (auto [u, v, c] : edges) g.add_edge(u, v, c);
    return g;
  }
};

}  // namespace

BrGraph parse_brgraph_text(std::string_view text) {
  GraphBuilder b;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    if (kw.text == "vertex") {
      if (toks.size() != 2)
        throw ParseError("expected: vertex NAME", lineno, kw.col);
      if (find_vertex(b.names, toks[1].text))
        throw ParseError("duplicate vertex '" + toks[1].text + "'", lineno,
                         toks[1].col);
      b.intern(toks[1].text, lineno, toks[1].col);
    } else if (kw.text == "edge") {
      if (toks.size() != 4)
        throw ParseError("expected: edge NAME NAME b|r|p", lineno, kw.col);
      auto colour = colour_from_token(toks[3].text);
      if (!colour)
        throw ParseError("unknown colour '" + toks[3].text + "' (want b|r|p)",
                         lineno, toks[3].col);
      int u = b.intern(toks[1].text, lineno, toks[1].col);
      int v = b.intern(toks[2].text, lineno, toks[2].col);
      b.edges.emplace_back(u, v, *colour);
    } else {
      throw ParseError("unknown directive '" + kw.text + "'", lineno, kw.col);
    }
  }
  return b.build();
}

BrGraph parse_brgraph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  GraphBuilder b;
  try {
    for (const auto& v : j.value("vertices", nlohmann::json::array())) {
      const auto name = v.get<std::string>();
      if (find_vertex(b.names, name))
        throw ParseError("duplicate vertex '" + name + "'", 1, 1);
      b.intern(name, 1, 1);
    }
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
      auto colour = colour_from_token(e.at("c").get<std::string>());
      if (!colour)
        throw ParseError("unknown colour '" + e.at("c").get<std::string>() +
                             "' (want b|r|p)",
                         1, 1);
      int u = b.intern(e.at("u").get<std::string>(), 1, 1);
      int v = b.intern(e.at("v").get<std::string>(), 1, 1);
      b.edges.emplace_back(u, v, *colour);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what(), 1, 1);
  }
  return b.build();
}

BrGraph parse_brgraph(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_brgraph_json(text) : parse_brgraph_text(text);
  }
  return BrGraph{};  // empty input: empty graph
}

BrGraph load_brgraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_brgraph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line, e.col);
  }
}

// Lists each edge once (u <= v), colours merged back into b/r/p.
static std::vector<std::tuple<int, int, EdgeColour>> edge_list(const BrGraph& g) {
  std::vector<std::tuple<int, int, EdgeColour>> out;
  for (int u = 0; u < g.n; ++u)
    for (int v = u; v < g.n; ++v) {
      if (!g.has_any(u, v)) continue;
      EdgeColour c = g.has_purple(u, v) ? EdgeColour::Purple
                     : g.has_blue(u, v) ? EdgeColour::Blue
                                        : EdgeColour::Red;
      out.emplace_back(u, v, c);
    }
  return out;
}

std::string to_text(const BrGraph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.n; ++v) out << "vertex " << g.names[v] << "\n";
  for (auto [u, v, c] : edge_list(g))
    out << "edge " << g.names[u] << " " << g.names[v] << " "
        << colour_name(c)[0] << "\n";
  return out.str();
}

std::string to_json_string(const BrGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.names;
  j["edges"] = nlohmann::json::array();
  for (auto [u, v, c] : edge_list(g))
    j["edges"].push_back({{"u", g.names[u]},
                          {"v", g.names[v]},
                          {"c", std::string(1, colour_name(c)[0])}});
  return j.dump(2);
}

}  // namespace sgh
