#include "sgh/wnu_witness.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgh {

namespace {

// pos[v] = position of v; validates that `order` is a permutation.
std::vector<int> order_positions(int n, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("order must list every vertex exactly once");
  std::vector<int> pos(n, -1);
  for (int k = 0; k < n; ++k) {
    int v = order[k];
    if (v < 0 || v >= n || pos[v] >= 0)
      throw std::invalid_argument("order must list every vertex exactly once");
    pos[v] = k;
  }
  return pos;
}

VertexSet leaf_set(const Graph& g) {
  VertexSet leaves = 0;
  for (int v = 0; v < g.n; ++v)
    if (!g.has_loop(v) && set_size(g.adj[v]) == 1) leaves |= vbit(v);
  return leaves;
}

// The edge set the removal condition derives from (order, r, leaves): every
// edge with both endpoints strictly above r, plus every edge at a removed
// leaf. Pairs come out canonical: u < v, lexicographically sorted.
std::vector<std::pair<int, int>> derived_removed_blue(
    const BrGraph& h_plus, const std::vector<int>& pos, int r,
    VertexSet removed_leaves) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < h_plus.n; ++u)
    for (VertexSet s = h_plus.blue[u] >> u >> 1; s;) {
      int v = u + 1 + first_vertex(s);
      s &= s - 1;
      bool both_above = pos[u] > pos[r] && pos[v] > pos[r];
      bool at_removed_leaf = ((removed_leaves >> u) | (removed_leaves >> v)) & 1;
      if (both_above || at_removed_leaf) out.emplace_back(u, v);
    }
  return out;
}

// (u, v) -> (min, max) on each pair, then sorted; rejects repeats and
// out-of-range endpoints.
std::vector<std::pair<int, int>> canonical_pairs(
    int n, std::vector<std::pair<int, int>> pairs) {
  for (auto& [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("removed_blue endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end())
    throw std::invalid_argument("removed_blue lists an edge twice");
  return pairs;
}

int majority_index(int i1, int i2, int i3) {
  return (i1 == i2 || i1 == i3) ? i1 : i2;
}

}  // namespace

void validate_witness(const WnuWitness& w) {
  const BrGraph& hp = w.h_plus;
  hp.validate();
  for (int v = 0; v < hp.n; ++v) {
    if (hp.has_any(v, v))
      throw std::invalid_argument("h_plus must be loop-free");
    if (hp.blue[v] != hp.red[v])
      throw std::invalid_argument("h_plus must be purely purple");
  }
  std::vector<int> pos = order_positions(hp.n, w.order);
  if (!is_min_ordering(underlying(hp), w.order).ok)
    throw std::invalid_argument("order is not a min-ordering of h_plus");
  if (w.r < 0 || w.r >= hp.n)
    throw std::invalid_argument("boundary vertex out of range");
  if (w.removed_leaves & ~full_set(hp.n))
    throw std::invalid_argument("removed leaf out of range");
  if (w.removed_leaves & ~leaf_set(underlying(hp)))
    throw std::invalid_argument("removed_leaves must have degree 1");
  auto given = canonical_pairs(hp.n, w.removed_blue);
  if (given != derived_removed_blue(hp, pos, w.r, w.removed_leaves))
    throw std::invalid_argument(
        "removed_blue must be exactly the edges with both endpoints above "
        "the boundary vertex plus the edges at removed leaves");
}

WnuBuild build_from_witness(const WnuWitness& w) {
  validate_witness(w);

  BrGraph h = w.h_plus;
  for (auto [u, v] : w.removed_blue) {
    h.blue[u] &= ~vbit(v);
    h.blue[v] &= ~vbit(u);
  }

  // Re-order so that every removed leaf hanging off a support strictly below
  // the boundary vertex sits above that support's other neighbours; the
  // first-relevant-index rule below needs removed leaves to be reached last.
  Graph g = underlying(w.h_plus);
  MinOrdering m{g, w.order};
  for (VertexSet s = w.removed_leaves; s;) {
    int leaf = first_vertex(s);
    s &= s - 1;
    int support = first_vertex(g.adj[leaf]);
    std::vector<int> pos = order_positions(g.n, m.order);
    if (pos[support] < pos[w.r]) m = leaf_lift(m, leaf);
  }
  std::vector<int> pos = order_positions(g.n, m.order);

  // A loop-free graph passing the min-ordering check is bipartite (the
  // bottom vertex of any cycle would violate the identity); guard anyway.
  auto parity = bipartition(g);
  if (!parity) throw std::invalid_argument("h_plus must be bipartite");

  // Vertices strictly above the boundary that keep both colours everywhere:
  // on triples drawn from these, the copy index can take the majority.
  VertexSet interior = 0;
  for (int v = 0; v < g.n; ++v)
    if (pos[v] > pos[w.r] && !((w.removed_leaves >> v) & 1)) interior |= vbit(v);
  auto in_interior = [interior](int v) { return (interior >> v) & 1; };

  SwitchGraph p = switching_graph(h);
  Poly3 phi(p.graph);
  const int big_n = p.graph.n;
  for (int x = 0; x < big_n; ++x)
    for (int y = 0; y < big_n; ++y)
      for (int z = 0; z < big_n; ++z) {
        int a1 = p.base_of(x), a2 = p.base_of(y), a3 = p.base_of(z);
        int q1 = (*parity)[a1], q2 = (*parity)[a2], q3 = (*parity)[a3];
        int value;
        if (q1 == q2 && q2 == q3) {
          // Constant side: order-minimum base. Copy index: majority on the
          // all-equal and all-interior triples, else the first entry
          // achieving the minimum.
          int low = a1;
          if (pos[a2] < pos[low]) low = a2;
          if (pos[a3] < pos[low]) low = a3;
          int idx;
          if ((a1 == a2 && a2 == a3) ||
              (in_interior(a1) && in_interior(a2) && in_interior(a3)))
            idx = majority_index(p.copy_index_of(x), p.copy_index_of(y),
                                 p.copy_index_of(z));
          else
            idx = p.copy_index_of(a1 == low ? x : (a2 == low ? y : z));
          value = idx == 1 ? p.copy1(low) : p.copy2(low);
        } else {
          // Mixed sides: project onto the first entry whose side two share.
          value = (q1 == q2 || q1 == q3) ? x : y;
        }
        phi.set(x, y, z, value);
      }

  PolyProps want;
  want.idempotent = true;
  want.wnu = true;
  want.semi_conservative = true;
  std::vector<int> pairing = p.switch_perm();
  PropReport report = check_props(phi, want, &pairing);
  if (!report.all_ok()) {
    std::string why = report.failures.empty()
                          ? "a requested property failed"
                          : report.failures.front().detail;
    throw std::logic_error("the assembled table fails verification: " + why);
  }
  return WnuBuild{std::move(h), std::move(p), std::move(phi),
                  std::move(m.order)};
}

std::optional<WnuWitness> search_witness(const BrGraph& h) {
  h.validate();
  for (int v = 0; v < h.n; ++v)
    if (h.has_any(v, v))
      throw std::invalid_argument(
          "the witness construction applies to loop-free graphs");

  const VertexSet all = full_set(h.n);
  for (VertexSet switched = 0;; ++switched) {
    BrGraph h2 = switch_at(h, switched);
    bool blue_within_red = true;
    for (int v = 0; v < h.n && blue_within_red; ++v)
      if (h2.blue[v] & ~h2.red[v]) blue_within_red = false;
    if (!blue_within_red) {
      if (switched == all) break;
      continue;
    }

    // Purple completion: with blue inside red the underlying graph is the
    // red one; restoring blue everywhere gives the candidate h_plus.
    BrGraph hp(h.n, h.names);
    hp.blue = h2.red;
    hp.red = h2.red;

    // The edges whose blue the switched graph is missing: any witness must
    // derive exactly these.
    std::vector<std::pair<int, int>> missing;
    for (int u = 0; u < h.n; ++u)
      for (VertexSet s = hp.blue[u] >> u >> 1; s;) {
        int v = u + 1 + first_vertex(s);
        s &= s - 1;
        if (!h2.has_blue(u, v)) missing.emplace_back(u, v);
      }

    Graph g = underlying(hp);
    // Only leaves whose sole edge is missing blue can be removed leaves;
    // any other choice derives an edge that is not missing.
    std::vector<int> candidates;
    for (VertexSet s = leaf_set(g); s;) {
      int leaf = first_vertex(s);
      s &= s - 1;
      int support = first_vertex(g.adj[leaf]);
      int lo = std::min(leaf, support), hi = std::max(leaf, support);
      if (std::binary_search(missing.begin(), missing.end(),
                             std::make_pair(lo, hi)))
        candidates.push_back(leaf);
    }

    std::optional<WnuWitness> found;
    for_each_min_ordering(g, [&](const std::vector<int>& order) {
      std::vector<int> pos(g.n);
      for (int k = 0; k < g.n; ++k) pos[order[k]] = k;
      for (int k = 0; k < g.n && !found; ++k) {
        int r = order[k];
        const VertexSet last = full_set(static_cast<int>(candidates.size()));
        for (VertexSet mask = 0;; ++mask) {
          VertexSet removed = 0;
          for (std::size_t i = 0; i < candidates.size(); ++i)
            if ((mask >> i) & 1) removed |= vbit(candidates[i]);
          if (derived_removed_blue(hp, pos, r, removed) == missing) {
            WnuWitness w{hp, order, r, removed, missing};
            try {
              build_from_witness(w);
              found = std::move(w);
              break;
            } catch (const std::logic_error&) {
              // the formula does not cover this witness; keep searching
            }
          }
          if (mask == last) break;
        }
      }
      return found.has_value();
    });
    if (found) return found;
    if (switched == all) break;
  }
  return std::nullopt;
}

std::string witness_to_json(const WnuWitness& w) {
  validate_witness(w);
  const auto& names = w.h_plus.names;
  nlohmann::json j;
  j["h_plus"] = nlohmann::json::parse(to_json_string(w.h_plus));
  j["order"] = nlohmann::json::array();
  for (int v : w.order) j["order"].push_back(names[v]);
  j["r"] = names[w.r];
  j["L"] = nlohmann::json::array();
  for (VertexSet s = w.removed_leaves; s;) {
    int v = first_vertex(s);
    s &= s - 1;
    j["L"].push_back(names[v]);
  }
  j["B"] = nlohmann::json::array();
  for (auto [u, v] : w.removed_blue)
    j["B"].push_back({names[u], names[v]});
  return j.dump(2);
}

WnuWitness witness_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, 1);
  }
  WnuWitness w;
  try {
    w.h_plus = parse_brgraph_json(j.at("h_plus").dump());
    auto vertex_id = [&w](const std::string& name, const char* where) {
      auto v = find_vertex(w.h_plus.names, name);
      if (!v)
        throw ParseError("unknown vertex '" + name + "' in " + where, 1, 1);
      return *v;
    };
    for (const auto& name : j.at("order"))
      w.order.push_back(vertex_id(name.get<std::string>(), "order"));
    w.r = vertex_id(j.at("r").get<std::string>(), "r");
    for (const auto& name : j.at("L"))
      w.removed_leaves |= vbit(vertex_id(name.get<std::string>(), "L"));
    for (const auto& pair : j.at("B")) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("every B entry must be a two-name array", 1, 1);
      w.removed_blue.emplace_back(vertex_id(pair.at(0).get<std::string>(), "B"),
                                  vertex_id(pair.at(1).get<std::string>(), "B"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad witness JSON: ") + e.what(), 1, 1);
  }
  w.removed_blue = canonical_pairs(w.h_plus.n, std::move(w.removed_blue));
  validate_witness(w);
  return w;
}

}  // namespace sgh
