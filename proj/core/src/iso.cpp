#include "sgh/iso.hpp"

#include <algorithm>
#include <cstdint>

namespace sgh {

bool is_isomorphism(const BrGraph& a, const BrGraph& b,
                    const std::vector<int>& map) {
  if (a.n != b.n || static_cast<int>(map.size()) != a.n) return false;
  VertexSet image = 0;
  for (int v = 0; v < a.n; ++v) {
    if (map[v] < 0 || map[v] >= b.n) return false;
    image |= vbit(map[v]);
  }
  if (image != full_set(a.n)) return false;
  for (int u = 0; u < a.n; ++u)
    for (int v = u; v < a.n; ++v) {
      if (a.has_blue(u, v) != b.has_blue(map[u], map[v])) return false;
      if (a.has_red(u, v) != b.has_red(map[u], map[v])) return false;
    }
  return true;
}

bool is_automorphism(const BrGraph& g, const std::vector<int>& perm) {
  return is_isomorphism(g, g, perm);
}

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Iterated neighbourhood-refinement signatures. Equal signatures are
// necessary (not sufficient) for two vertices to correspond.
std::vector<std::uint64_t> signatures(const BrGraph& g) {
  std::vector<std::uint64_t> sig(g.n);
  for (int v = 0; v < g.n; ++v) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = hash_mix(h, g.has_blue(v, v));
    h = hash_mix(h, g.has_red(v, v));
    h = hash_mix(h, set_size(g.blue[v]));
    h = hash_mix(h, set_size(g.red[v]));
    h = hash_mix(h, set_size(g.purple(v)));
    sig[v] = h;
  }
  for (int round = 0; round < 2; ++round) {
    std::vector<std::uint64_t> next(g.n);
    for (int v = 0; v < g.n; ++v) {
      std::vector<std::uint64_t> nbr;
      for (VertexSet m = g.blue[v] | g.red[v]; m;) {
        int u = first_vertex(m);
        m &= m - 1;
        std::uint64_t t = g.has_purple(v, u) ? 3 : g.has_blue(v, u) ? 1 : 2;
        nbr.push_back(hash_mix(t, sig[u]));
      }
      std::sort(nbr.begin(), nbr.end());
      std::uint64_t h = sig[v];
      for (auto x : nbr) h = hash_mix(h, x);
      next[v] = h;
    }
    sig = std::move(next);
  }
  return sig;
}

struct IsoSearch {
  const BrGraph& a;
  const BrGraph& b;
  std::vector<std::uint64_t> sig_a, sig_b;
  std::vector<int> order;  // vertices of a in assignment order
  std::vector<int> map;    // a -> b, -1 unassigned
  VertexSet used_b = 0;
  bool want_all = false;
  std::vector<std::vector<int>> found;

  IsoSearch(const BrGraph& a, const BrGraph& b)
      : a(a), b(b), sig_a(signatures(a)), sig_b(signatures(b)), map(a.n, -1) {
    // Assign rare-signature, high-degree vertices first.
    std::vector<int> freq(a.n, 0);
    for (int v = 0; v < a.n; ++v)
      for (int u = 0; u < a.n; ++u)
        if (sig_a[v] == sig_a[u]) ++freq[v];
    order.resize(a.n);
    for (int v = 0; v < a.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      int dx = set_size(a.blue[x] | a.red[x]);
      int dy = set_size(a.blue[y] | a.red[y]);
      if (freq[x] != freq[y]) return freq[x] < freq[y];
      if (dx != dy) return dx > dy;
      return x < y;
    });
  }

  bool consistent(int va, int vb) const {
    if (sig_a[va] != sig_b[vb]) return false;
    if (a.has_blue(va, va) != b.has_blue(vb, vb)) return false;
    if (a.has_red(va, va) != b.has_red(vb, vb)) return false;
    for (int ua = 0; ua < a.n; ++ua) {
      if (map[ua] < 0 || ua == va) continue;
      if (a.has_blue(va, ua) != b.has_blue(vb, map[ua])) return false;
      if (a.has_red(va, ua) != b.has_red(vb, map[ua])) return false;
    }
    return true;
  }

  // Returns true to stop the search (first hit found, want_all == false).
  bool run(size_t idx) {
    if (idx == order.size()) {
      if (!is_isomorphism(a, b, map)) return false;  // exact re-check
      found.push_back(map);
      return !want_all;
    }
    int va = order[idx];
    for (int vb = 0; vb < b.n; ++vb) {
      if (used_b & vbit(vb)) continue;
      if (!consistent(va, vb)) continue;
      map[va] = vb;
      used_b |= vbit(vb);
      if (run(idx + 1)) return true;
      used_b &= ~vbit(vb);
      map[va] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> brgraph_isomorphic(const BrGraph& a,
                                                   const BrGraph& b) {
  if (a.n != b.n) return std::nullopt;
  if (a.n == 0) return std::vector<int>{};
  // Quick global invariants.
  auto sa = signatures(a), sb = signatures(b);
  auto sa_sorted = sa, sb_sorted = sb;
  std::sort(sa_sorted.begin(), sa_sorted.end());
  std::sort(sb_sorted.begin(), sb_sorted.end());
  if (sa_sorted != sb_sorted) return std::nullopt;
  IsoSearch search(a, b);
  search.run(0);
  if (search.found.empty()) return std::nullopt;
  return search.found.front();
}

std::vector<std::vector<int>> automorphisms(const BrGraph& g) {
  IsoSearch search(g, g);
  search.want_all = true;
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

}  // namespace sgh
