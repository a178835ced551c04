#include "sgh/switching.hpp"

#include <numeric>

namespace sgh {

BrGraph switch_at(const BrGraph& g, VertexSet s) {
  if (s & ~full_set(g.n))
    throw std::invalid_argument("switch set contains unknown vertices");
  BrGraph out(g.n, g.names);
  for (int v = 0; v < g.n; ++v) {
    // Edges from v that cross the cut swap colours; a loop never crosses
    // (both endpoints are v).
    VertexSet cross = (s & vbit(v)) ? ~s : s;
    cross &= full_set(g.n);
    out.blue[v] = (g.blue[v] & ~cross) | (g.red[v] & cross);
    out.red[v] = (g.red[v] & ~cross) | (g.blue[v] & cross);
  }
  return out;
}

std::optional<VertexSet> are_switch_equivalent(const BrGraph& g1,
                                               const BrGraph& g2) {
  if (g1.n != g2.n || g1.names != g2.names)
    throw std::invalid_argument(
        "switch equivalence needs two colourings of the same vertex set");
  const int n = g1.n;

  // Loops and purpleness are invariant under switching; presence of an edge
  // (in either colour) is too.
  for (int v = 0; v < n; ++v) {
    if (g1.has_blue(v, v) != g2.has_blue(v, v) ||
        g1.has_red(v, v) != g2.has_red(v, v))
      return std::nullopt;
    if ((g1.blue[v] | g1.red[v]) != (g2.blue[v] | g2.red[v]))
      return std::nullopt;
    if (g1.purple(v) != g2.purple(v)) return std::nullopt;
  }

  // Remaining freedom: pure-coloured non-loop edges force the endpoints to
  // the same side of the cut (colours equal) or opposite sides (swapped).
  // 2-label the constraint components by BFS from their least vertex.
  std::vector<int> label(n, -1);
  std::vector<std::vector<std::pair<int, int>>> constraints(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g1.has_any(u, v) || g1.has_purple(u, v)) continue;
      int want_diff = g1.has_blue(u, v) != g2.has_blue(u, v) ? 1 : 0;
      constraints[u].push_back({v, want_diff});
      constraints[v].push_back({u, want_diff});
    }

  VertexSet result = 0;
  for (int root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    label[root] = 0;
    std::vector<int> queue{root};
    std::vector<int> comp{root};
    bool split = false;
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (auto [u, diff] : constraints[v]) {
        int want = label[v] ^ diff;
        if (label[u] < 0) {
          label[u] = want;
          queue.push_back(u);
          comp.push_back(u);
        } else if (label[u] != want) {
          return std::nullopt;  // inconsistent cycle of constraints
        }
        split |= diff != 0;
      }
    }
    // Canonical choice per component: all-same-side components stay put;
    // split components switch the side containing their least vertex (the
    // root, which carries label 0).
    if (split)
      for (int v : comp)
        if (label[v] == 0) result |= vbit(v);
  }

  if (switch_at(g1, result) == g2) return result;
  return std::nullopt;
}

std::vector<int> SwitchGraph::switch_perm() const {
  std::vector<int> perm(2 * base_n);
  for (int pv = 0; pv < 2 * base_n; ++pv) perm[pv] = switch_map(pv);
  return perm;
}

SwitchGraph switching_graph(const BrGraph& h) {
  if (2 * h.n > kMaxVertices)
    throw std::invalid_argument("switching graph would exceed the vertex limit");
  std::vector<std::string> names(2 * h.n);
  for (int v = 0; v < h.n; ++v) {
    names[v] = h.names[v] + ".1";
    names[h.n + v] = h.names[v] + ".2";
  }
  SwitchGraph out;
  out.base = h;
  out.base_n = h.n;
  out.graph = BrGraph(2 * h.n, std::move(names));
  auto add_for_colour = [&](EdgeColour c, EdgeColour swapped, auto has) {
    for (int u = 0; u < h.n; ++u)
      for (int v = u; v < h.n; ++v) {
        if (!has(u, v)) continue;
        if (u == v) {
          // Loops copy unchanged; the crossing collapses to one edge of the
          // swapped colour between the two copies.
          out.graph.add_edge(out.copy1(u), out.copy1(u), c);
          out.graph.add_edge(out.copy2(u), out.copy2(u), c);
          out.graph.add_edge(out.copy1(u), out.copy2(u), swapped);
        } else {
          out.graph.add_edge(out.copy1(u), out.copy1(v), c);
          out.graph.add_edge(out.copy2(u), out.copy2(v), c);
          out.graph.add_edge(out.copy1(u), out.copy2(v), swapped);
          out.graph.add_edge(out.copy2(u), out.copy1(v), swapped);
        }
      }
  };
  add_for_colour(EdgeColour::Blue, EdgeColour::Red,
                 [&](int u, int v) { return h.has_blue(u, v); });
  add_for_colour(EdgeColour::Red, EdgeColour::Blue,
                 [&](int u, int v) { return h.has_red(u, v); });
  return out;
}

std::vector<int> ProductP::parity_switch_perm() const {
  std::vector<int> perm(2 * base_n);
  for (int pv = 0; pv < 2 * base_n; ++pv) perm[pv] = parity_switch(pv);
  return perm;
}

ProductP product_with_P(const BrGraph& h) {
  if (2 * h.n > kMaxVertices)
    throw std::invalid_argument("product with P would exceed the vertex limit");
  std::vector<std::string> names(2 * h.n);
  for (int v = 0; v < h.n; ++v) {
    names[v] = h.names[v] + ".0";
    names[h.n + v] = h.names[v] + ".1";
  }
  ProductP out;
  out.base = h;
  out.base_n = h.n;
  out.graph = BrGraph(2 * h.n, std::move(names));
  for (int u = 0; u < h.n; ++u)
    for (int v = u; v < h.n; ++v) {
      if (h.has_blue(u, v)) {
        out.graph.add_edge(out.at(u, 0), out.at(v, 1), EdgeColour::Blue);
        if (u != v) out.graph.add_edge(out.at(u, 1), out.at(v, 0), EdgeColour::Blue);
      }
      if (h.has_red(u, v)) {
        out.graph.add_edge(out.at(u, 0), out.at(v, 1), EdgeColour::Red);
        if (u != v) out.graph.add_edge(out.at(u, 1), out.at(v, 0), EdgeColour::Red);
      }
    }
  return out;
}

}  // namespace sgh
