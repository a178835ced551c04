#pragma once

// Core graph types for the toolkit: plain (uncoloured) graphs and
// blue/red-coloured graphs ("br-graphs"). Both are undirected, loops allowed.
// An edge that is simultaneously blue and red is called purple.
//
// Vertex sets are uint64_t bitmasks, so everything here is capped at 64
// vertices. That is deliberate: the algorithms downstream are exponential and
// the interesting instances are small, so we trade generality for very cheap
// set operations.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sgh {

inline constexpr int kMaxVertices = 64;

using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

// All vertices 0..n-1.
inline constexpr VertexSet full_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

// Least element of a non-empty set.
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

enum class EdgeColour { Blue, Red, Purple };

std::string_view colour_name(EdgeColour c);

// Plain undirected graph on vertices 0..n-1. adj[v] is the neighbour mask of
// v; a loop at v is bit v of adj[v]. The symmetry invariant (u in adj[v] iff
// v in adj[u]) is maintained by add_edge and checked by validate().
struct Graph {
  int n = 0;
  std::vector<std::string> names;
  std::vector<VertexSet> adj;

  Graph() = default;
  explicit Graph(int n_vertices);
  Graph(int n_vertices, std::vector<std::string> vertex_names);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
  bool has_loop(int v) const { return has_edge(v, v); }
  int edge_count() const;  // loops count once

  // Throws std::logic_error if sizes or symmetry are broken.
  void validate() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Blue/red graph. blue[v] / red[v] are per-colour neighbour masks; a purple
// edge is present in both. The underlying graph is the union.
struct BrGraph {
  int n = 0;
  std::vector<std::string> names;
  std::vector<VertexSet> blue, red;

  BrGraph() = default;
  explicit BrGraph(int n_vertices);
  BrGraph(int n_vertices, std::vector<std::string> vertex_names);

  void add_edge(int u, int v, EdgeColour c);
  bool has_blue(int u, int v) const { return (blue[u] >> v) & 1; }
  bool has_red(int u, int v) const { return (red[u] >> v) & 1; }
  bool has_purple(int u, int v) const { return has_blue(u, v) && has_red(u, v); }
  bool has_any(int u, int v) const { return has_blue(u, v) || has_red(u, v); }
  VertexSet purple(int v) const { return blue[v] & red[v]; }

  void validate() const;

  friend bool operator==(const BrGraph&, const BrGraph&) = default;
};

// "0", "1", ... placeholder names for programmatic construction.
std::vector<std::string> default_names(int n);

// Index of the vertex with the given name, if any.
std::optional<int> find_vertex(const std::vector<std::string>& names,
                               std::string_view name);

// ---- Derived views ---------------------------------------------------------

Graph underlying(const BrGraph& g);         // blue-or-red edges
Graph blue_subgraph(const BrGraph& g);      // blue edges only (incl. purple)
Graph red_subgraph(const BrGraph& g);       // red edges only (incl. purple)
Graph purple_subgraph(const BrGraph& g);    // edges that are both

// Treats every edge of g as purple. Useful because a plain graph and its
// all-purple colouring have the same homomorphisms and polymorphisms.
BrGraph as_purple(const Graph& g);

// Induced subgraph on `keep`, vertices reindexed in ascending order of their
// original ids; names are carried over.
Graph induced(const Graph& g, VertexSet keep);
BrGraph induced(const BrGraph& g, VertexSet keep);

// Connected components (of the underlying graph for BrGraph), ordered by
// least contained vertex. Isolated vertices form their own components.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components(const BrGraph& g);

// Per-vertex side assignment (0/1) of a proper 2-colouring, or nullopt if the
// graph has a loop or an odd cycle. Canonical choice: the least vertex of
// every connected component gets side 0, so the result is deterministic even
// for disconnected graphs.
using Parity = std::vector<int>;
std::optional<Parity> bipartition(const Graph& g);

// ---- Text and JSON formats -------------------------------------------------

// Line-oriented text format:
//   # comment (to end of line)
//   vertex NAME
//   edge NAME NAME b|r|p
// Vertices may be declared implicitly by first mention in an edge; explicit
// duplicate declarations are an error. Colours may also be spelled out
// (blue/red/purple). Repeated edges merge colours (b then r makes purple).
//
// JSON format (auto-detected by a leading '{'):
//   {"vertices": ["u", "v"], "edges": [{"u": "u", "v": "v", "c": "b"}]}

struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line, int col);
};

BrGraph parse_brgraph_text(std::string_view text);
BrGraph parse_brgraph_json(std::string_view text);
BrGraph parse_brgraph(std::string_view text);  // sniffs the format

// Reads the file and parses it; the filename is prepended to error messages.
BrGraph load_brgraph(const std::string& path);

std::string to_text(const BrGraph& g);
std::string to_json_string(const BrGraph& g);

}  // namespace sgh
