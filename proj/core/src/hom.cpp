#include "sgh/hom.hpp"

#include <algorithm>

namespace sgh {

ListAssignment full_lists(int g_n, int h_n) {
  return ListAssignment(g_n, full_set(h_n));
}

bool is_homomorphism(const BrGraph& g, const BrGraph& h,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != g.n) return false;
  for (int v = 0; v < g.n; ++v)
    if (map[v] < 0 || map[v] >= h.n) return false;
  for (int u = 0; u < g.n; ++u)
    for (int v = u; v < g.n; ++v) {
      if (g.has_blue(u, v) && !h.has_blue(map[u], map[v])) return false;
      if (g.has_red(u, v) && !h.has_red(map[u], map[v])) return false;
    }
  return true;
}

namespace {

// MAC solver for hom(g, h) with lists. Domains are bitmasks over V(h).
class HomSearch {
 public:
  HomSearch(const BrGraph& g, const BrGraph& h, const ListAssignment& lists)
      : g_(g), h_(h), dom_(lists) {}

  std::optional<std::vector<int>> solve() {
    // Unary prefilter: a loop at v must land on a matching loop.
    VertexSet blue_loops = 0, red_loops = 0;
    for (int a = 0; a < h_.n; ++a) {
      if (h_.has_blue(a, a)) blue_loops |= vbit(a);
      if (h_.has_red(a, a)) red_loops |= vbit(a);
    }
    for (int v = 0; v < g_.n; ++v) {
      if (g_.has_blue(v, v)) dom_[v] &= blue_loops;
      if (g_.has_red(v, v)) dom_[v] &= red_loops;
      if (!dom_[v]) return std::nullopt;
    }
    if (!propagate(full_set(g_.n))) return std::nullopt;
    if (!dfs()) return std::nullopt;
    std::vector<int> map(g_.n);
    for (int v = 0; v < g_.n; ++v) map[v] = first_vertex(dom_[v]);
    if (!is_homomorphism(g_, h_, map))
      throw std::logic_error("hom search produced a non-homomorphism");
    return map;
  }

 private:
  // {a : some b in targets is c-adjacent to a}; adjacency is symmetric, so
  // the union of neighbour masks is exactly the supported set.
  static VertexSet supported(const std::vector<VertexSet>& adj,
                             VertexSet targets) {
    VertexSet out = 0;
    while (targets) {
      out |= adj[first_vertex(targets)];
      targets &= targets - 1;
    }
    return out;
  }

  // Delta-driven arc consistency: while some vertex's domain changed, refit
  // the domains of its graph neighbours against it, per colour.
  bool propagate(VertexSet dirty) {
    while (dirty) {
      int w = first_vertex(dirty);
      dirty &= ~vbit(w);
      VertexSet blue_ok = supported(h_.blue, dom_[w]);
      VertexSet red_ok = supported(h_.red, dom_[w]);
      for (VertexSet m = (g_.blue[w] | g_.red[w]) & ~vbit(w); m;) {
        int u = first_vertex(m);
        m &= m - 1;
        VertexSet next = dom_[u];
        if (g_.has_blue(u, w)) next &= blue_ok;
        if (g_.has_red(u, w)) next &= red_ok;
        if (next != dom_[u]) {
          if (!next) return false;
          trail_.push_back({u, dom_[u]});
          dom_[u] = next;
          dirty |= vbit(u);
        }
      }
    }
    return true;
  }

  bool dfs() {
    int var = -1, best = kMaxVertices + 1;
    for (int v = 0; v < g_.n; ++v) {
      int size = set_size(dom_[v]);
      if (size > 1 && size < best) {
        best = size;
        var = v;
      }
    }
    if (var < 0) return true;  // all singleton and arc-consistent
    for (VertexSet m = dom_[var]; m;) {
      int a = first_vertex(m);
      m &= m - 1;
      size_t mark = trail_.size();
      trail_.push_back({var, dom_[var]});
      dom_[var] = vbit(a);
      if (propagate(vbit(var)) && dfs()) return true;
      while (trail_.size() > mark) {
        dom_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
    }
    return false;
  }

  const BrGraph& g_;
  const BrGraph& h_;
  std::vector<VertexSet> dom_;
  std::vector<std::pair<int, VertexSet>> trail_;
};

void validate_lists(const ListAssignment& lists, int g_n, int h_n) {
  if (static_cast<int>(lists.size()) != g_n)
    throw std::invalid_argument("list assignment must cover every vertex");
  for (VertexSet l : lists) {
    if (!l) throw std::invalid_argument("empty list");
    if (l & ~full_set(h_n))
      throw std::invalid_argument("list mentions vertices outside the target");
  }
}

// Visits size-k subsets of 0..n-1 as masks, in lexicographic order of their
// sorted element lists. Returns the fn result that stopped the scan, if any.
template <typename Fn>
std::optional<BrGraph> scan_subsets(int n, int k, Fn fn) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexSet mask = 0;
    for (int v : pick) mask |= vbit(v);
    if (auto hit = fn(mask)) return hit;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::optional<std::vector<int>> list_hom(const BrGraph& g, const BrGraph& h,
                                         const ListAssignment& lists) {
  validate_lists(lists, g.n, h.n);
  if (g.n == 0) return std::vector<int>{};
  if (h.n == 0) return std::nullopt;
  return HomSearch(g, h, lists).solve();
}

namespace {

std::optional<SwitchHom> switch_hom_with_lists(const BrGraph& g,
                                               const BrGraph& h,
                                               const ListAssignment& lists) {
  SwitchGraph p = switching_graph(h);
  auto psi = list_hom(g, p.graph, lists);
  if (!psi) return std::nullopt;
  SwitchHom out;
  out.map.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    if ((*psi)[v] >= h.n) out.switch_set |= vbit(v);
    out.map[v] = p.base_of((*psi)[v]);
  }
  if (!is_homomorphism(switch_at(g, out.switch_set), h, out.map))
    throw std::logic_error(
        "switch-hom recovery failed verification against the definition");
  return out;
}

}  // namespace

std::optional<SwitchHom> switch_hom(const BrGraph& g, const BrGraph& h) {
  return switch_hom_with_lists(g, h, full_lists(g.n, 2 * h.n));
}

std::optional<SwitchHom> list_switch_hom(const BrGraph& g, const BrGraph& h,
                                         const ListAssignment& lists) {
  validate_lists(lists, g.n, 2 * h.n);
  VertexSet low = full_set(h.n);
  for (VertexSet l : lists) {
    VertexSet swapped = ((l & low) << h.n) | ((l >> h.n) & low);
    if (swapped != l)
      throw std::invalid_argument("list not closed under the switch map");
  }
  return switch_hom_with_lists(g, h, lists);
}

BrGraph core_of(const BrGraph& h) {
  for (int k = 1; k <= h.n; ++k) {
    auto hit = scan_subsets(h.n, k, [&](VertexSet cand) -> std::optional<BrGraph> {
      ListAssignment lists(h.n, cand);
      for (VertexSet m = cand; m;) {
        int c = first_vertex(m);
        m &= m - 1;
        lists[c] = vbit(c);
      }
      if (list_hom(h, h, lists)) return induced(h, cand);
      return std::nullopt;
    });
    if (hit) return *hit;
  }
  return h;  // only reached when h is empty
}

BrGraph switch_core_of(const BrGraph& h) {
  for (int k = 1; k <= h.n; ++k) {
    auto hit = scan_subsets(h.n, k, [&](VertexSet cand) -> std::optional<BrGraph> {
      BrGraph c = induced(h, cand);
      // Pin each kept vertex to its own switch pair in P(c); everything else
      // may go anywhere.
      ListAssignment lists(h.n, full_set(2 * c.n));
      int idx = 0;
      for (VertexSet m = cand; m;) {
        int v = first_vertex(m);
        m &= m - 1;
        lists[v] = vbit(idx) | vbit(c.n + idx);
        ++idx;
      }
      if (list_switch_hom(h, c, lists)) return c;
      return std::nullopt;
    });
    if (hit) return *hit;
  }
  return h;
}

BrGraph s_core_of(const SwitchGraph& p) {
  const BrGraph& g = p.graph;
  // A retraction that respects every s-closed list maps v into {v, s(v)}, so
  // a candidate image is feasible only if it meets each switch pair, and the
  // retraction is then fully determined: kept vertices stay put, dropped
  // vertices go to their partner. Check it definitionally.
  for (int k = p.base_n; k <= g.n; ++k) {
    auto hit = scan_subsets(g.n, k, [&](VertexSet cand) -> std::optional<BrGraph> {
      std::vector<int> map(g.n);
      for (int v = 0; v < g.n; ++v) {
        int target = (cand & vbit(v)) ? v : p.switch_map(v);
        if (!(cand & vbit(target))) return std::nullopt;
        map[v] = target;
      }
      if (is_homomorphism(g, g, map)) return induced(g, cand);
      return std::nullopt;
    });
    if (hit) return *hit;
  }
  return g;
}

int edge_slot_count(const BrGraph& g) {
  int count = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u; v < g.n; ++v)
      count += (g.has_blue(u, v) ? 1 : 0) + (g.has_red(u, v) ? 1 : 0);
  return count;
}

}  // namespace sgh
