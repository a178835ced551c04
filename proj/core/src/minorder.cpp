#include "sgh/minorder.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgh {

namespace {

// pos[v] = position of v in the order; validates the permutation.
std::vector<int> positions_of(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n)
    throw std::invalid_argument("order must list every vertex exactly once");
  std::vector<int> pos(g.n, -1);
  for (int k = 0; k < g.n; ++k) {
    int v = order[k];
    if (v < 0 || v >= g.n || pos[v] >= 0)
      throw std::invalid_argument("order must list every vertex exactly once");
    pos[v] = k;
  }
  return pos;
}

// Side labels for the quantification scope: the canonical bipartition when
// the graph is loop-free bipartite, otherwise one class (full scope).
std::vector<int> side_labels(const Graph& g) {
  if (auto parts = bipartition(g)) return *parts;
  return std::vector<int>(g.n, 0);
}

std::optional<UnderbarViolation> violation_impl(const Graph& g,
                                                const std::vector<int>& pos,
                                                const std::vector<int>& side) {
  const int n = g.n;
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (pos[a] > pos[a2] || side[a] != side[a2]) continue;
      for (int b = 0; b < n; ++b) {
        if (!g.has_edge(b, a2) || g.has_edge(a, b)) continue;
        for (int b2 = 0; b2 < n; ++b2) {
          if (pos[b] > pos[b2] || side[b] != side[b2]) continue;
          if (g.has_edge(a, b2))
            return UnderbarViolation{a, a2, b, b2};
        }
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<UnderbarViolation> underbar_violation(
    const Graph& g, const std::vector<int>& order) {
  return violation_impl(g, positions_of(g, order), side_labels(g));
}

bool min_is_polymorphism(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos = positions_of(g, order);
  std::vector<int> side = side_labels(g);
  auto lower = [&pos](int u, int v) { return pos[u] <= pos[v] ? u : v; };
  const int n = g.n;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (side[u] != side[v]) continue;
      for (int u2 = 0; u2 < n; ++u2) {
        if (!g.has_edge(u, u2)) continue;
        for (int v2 = 0; v2 < n; ++v2) {
          if (!g.has_edge(v, v2)) continue;
          if (!g.has_edge(lower(u, v), lower(u2, v2))) return false;
        }
      }
    }
  return true;
}

MinOrderCheck is_min_ordering(const Graph& g, const std::vector<int>& order) {
  MinOrderCheck result;
  result.violation = underbar_violation(g, order);
  result.ok = !result.violation.has_value();
  if (result.ok != min_is_polymorphism(g, order))
    throw std::logic_error(
        "the under-bar identity and the binary-min polymorphism check "
        "disagree");
  return result;
}

namespace {

// After appending `v` (the new highest vertex), any fresh violating
// quadruple has v in the a2 slot, up to the (a,a2)/(b,b2) symmetry of the
// identity: check (x, v, y, y2) over already-placed x, y, y2 (v included).
bool prefix_ok(const Graph& g, const std::vector<int>& placed,
               const std::vector<int>& pos, const std::vector<int>& side,
               int v) {
  for (int x : placed) {
    if (side[x] != side[v]) continue;
    for (int y : placed) {
      if (!g.has_edge(y, v) || g.has_edge(x, y)) continue;
      for (int y2 : placed) {
        if (pos[y] > pos[y2] || side[y] != side[y2]) continue;
        if (g.has_edge(x, y2)) return false;
      }
    }
  }
  return true;
}

bool extend_order(const Graph& g, std::vector<int>& placed,
                  std::vector<int>& pos, const std::vector<int>& side) {
  if (static_cast<int>(placed.size()) == g.n) return true;
  for (int v = 0; v < g.n; ++v) {
    if (pos[v] >= 0) continue;
    pos[v] = static_cast<int>(placed.size());
    placed.push_back(v);
    if (prefix_ok(g, placed, pos, side, v) &&
        extend_order(g, placed, pos, side))
      return true;
    placed.pop_back();
    pos[v] = -1;
  }
  return false;
}

// Same recursion as extend_order, but visits every completion instead of
// stopping at the first. Returns true once the visitor asks to stop.
bool walk_orders(const Graph& g, std::vector<int>& placed,
                 std::vector<int>& pos, const std::vector<int>& side,
                 const std::function<bool(const std::vector<int>&)>& visit) {
  if (static_cast<int>(placed.size()) == g.n) return visit(placed);
  for (int v = 0; v < g.n; ++v) {
    if (pos[v] >= 0) continue;
    pos[v] = static_cast<int>(placed.size());
    placed.push_back(v);
    bool stop = prefix_ok(g, placed, pos, side, v) &&
                walk_orders(g, placed, pos, side, visit);
    placed.pop_back();
    pos[v] = -1;
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::optional<MinOrdering> find_min_ordering(const Graph& g) {
  std::vector<int> placed;
  std::vector<int> pos(g.n, -1);
  std::vector<int> side = side_labels(g);
  if (!extend_order(g, placed, pos, side)) return std::nullopt;
  MinOrdering m{g, placed};
  if (!is_min_ordering(g, m.order).ok)
    throw std::logic_error(
        "min-ordering search returned an order that fails certification");
  return m;
}

bool for_each_min_ordering(
    const Graph& g, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> placed;
  placed.reserve(g.n);
  std::vector<int> pos(g.n, -1);
  std::vector<int> side = side_labels(g);
  return walk_orders(g, placed, pos, side, visit);
}

MinOrdering leaf_lift(const MinOrdering& m, int leaf) {
  const Graph& g = m.graph;
  if (leaf < 0 || leaf >= g.n)
    throw std::invalid_argument("leaf vertex out of range");
  for (int v = 0; v < g.n; ++v)
    if (g.has_loop(v))
      throw std::invalid_argument(
          "the leaf re-ordering applies to loop-free graphs");
  if (set_size(g.adj[leaf]) != 1)
    throw std::invalid_argument("vertex is not a leaf (degree must be 1)");
  std::vector<int> pos = positions_of(g, m.order);
  if (!is_min_ordering(g, m.order).ok)
    throw std::invalid_argument("the given order is not a min-ordering");

  int hub = first_vertex(g.adj[leaf]);
  VertexSet others = g.adj[hub] & ~vbit(leaf);
  if (!others) return m;  // the leaf is its neighbour's only neighbour

  int highest = -1;
  for (VertexSet s = others; s;) {
    int v = first_vertex(s);
    s &= s - 1;
    if (highest < 0 || pos[v] > pos[highest]) highest = v;
  }

  std::vector<int> lifted;
  lifted.reserve(g.n);
  for (int v : m.order) {
    if (v == leaf) continue;
    lifted.push_back(v);
    if (v == highest) lifted.push_back(leaf);
  }
  MinOrdering out{g, std::move(lifted)};
  if (!is_min_ordering(g, out.order).ok)
    throw std::logic_error(
        "leaf re-ordering broke the min-ordering, which the re-ordering "
        "lemma rules out");
  return out;
}

}  // namespace sgh
