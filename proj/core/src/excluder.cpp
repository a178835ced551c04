#include "sgh/excluder.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <utility>

namespace sgh {

namespace {

long long state_count(int n) {
  return static_cast<long long>(n) * n * n;
}

int state_id(int n, int u0, int u1, int u2) {
  return (u0 * n + u1) * n + u2;
}

std::array<int, 3> state_triple(int n, int id) {
  return {{id / (n * n), (id / n) % n, id % n}};
}

std::array<int, 2> other_positions(int target) {
  switch (target) {
    case 0: return {{1, 2}};
    case 1: return {{0, 2}};
    default: return {{0, 1}};
  }
}

bool accepting(int n, int id, int target) {
  auto t = state_triple(n, id);
  auto o = other_positions(target);
  return t[o[0]] == t[o[1]];
}

// Walk-step transition: every coordinate advances along an edge, and the
// target's current vertex must avoid (be non-adjacent to) the other two
// coordinates' next vertices.
bool step_allowed(const Graph& h, const std::array<int, 3>& from,
                  const std::array<int, 3>& to, int target) {
  for (int j = 0; j < 3; ++j)
    if (!h.has_edge(from[j], to[j])) return false;
  for (int j : other_positions(target))
    if (h.has_edge(from[target], to[j])) return false;
  return true;
}

// States from which an accepting state is reachable, one flag per state —
// computed once per target by backward BFS, so existence queries for every
// start triple share the work.
std::vector<char> excluder_feasible(const Graph& h, int target) {
  const int n = h.n;
  std::vector<char> can(state_count(n), 0);
  std::deque<int> queue;
  for (int id = 0; id < state_count(n); ++id)
    if (accepting(n, id, target)) {
      can[id] = 1;
      queue.push_back(id);
    }
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    auto to = state_triple(n, id);
    // Predecessors: coordinate-wise neighbours, filtered by avoidance.
    for (VertexSet m0 = h.adj[to[0]]; m0;) {
      int u0 = first_vertex(m0);
      m0 &= m0 - 1;
      for (VertexSet m1 = h.adj[to[1]]; m1;) {
        int u1 = first_vertex(m1);
        m1 &= m1 - 1;
        for (VertexSet m2 = h.adj[to[2]]; m2;) {
          int u2 = first_vertex(m2);
          m2 &= m2 - 1;
          std::array<int, 3> from{{u0, u1, u2}};
          int fid = state_id(n, u0, u1, u2);
          if (can[fid]) continue;
          if (!step_allowed(h, from, to, target)) continue;
          can[fid] = 1;
          queue.push_back(fid);
        }
      }
    }
  }
  return can;
}

}  // namespace

std::optional<ExcluderCertificate> find_excluder(const Graph& h,
                                                 std::array<int, 3> triple,
                                                 int target) {
  if (target < 0 || target > 2)
    throw std::invalid_argument("excluder target position must be 0, 1 or 2");
  for (int v : triple)
    if (v < 0 || v >= h.n)
      throw std::invalid_argument("excluder triple vertex out of range");

  const int n = h.n;
  std::vector<int> parent(state_count(n), -1);
  const int start = state_id(n, triple[0], triple[1], triple[2]);
  parent[start] = start;
  std::deque<int> queue{start};
  int accept = accepting(n, start, target) ? start : -1;
  while (accept < 0 && !queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    auto from = state_triple(n, id);
    for (VertexSet m0 = h.adj[from[0]]; m0 && accept < 0;) {
      int v0 = first_vertex(m0);
      m0 &= m0 - 1;
      for (VertexSet m1 = h.adj[from[1]]; m1 && accept < 0;) {
        int v1 = first_vertex(m1);
        m1 &= m1 - 1;
        for (VertexSet m2 = h.adj[from[2]]; m2 && accept < 0;) {
          int v2 = first_vertex(m2);
          m2 &= m2 - 1;
          std::array<int, 3> to{{v0, v1, v2}};
          int tid = state_id(n, v0, v1, v2);
          if (parent[tid] >= 0) continue;
          if (!step_allowed(h, from, to, target)) continue;
          parent[tid] = id;
          if (accepting(n, tid, target)) accept = tid;
          queue.push_back(tid);
        }
      }
    }
  }
  if (accept < 0) return std::nullopt;

  std::vector<int> chain{accept};
  while (chain.back() != start) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());

  ExcluderCertificate cert;
  cert.triple = triple;
  cert.target = target;
  for (int id : chain) {
    auto t = state_triple(n, id);
    for (int j = 0; j < 3; ++j) cert.walks[j].push_back(t[j]);
  }
  if (!validate_excluder(h, cert))
    throw std::logic_error("excluder search produced an invalid certificate");
  return cert;
}

bool validate_excluder(const Graph& h, const ExcluderCertificate& cert) {
  if (cert.target < 0 || cert.target > 2) return false;
  const auto& w = cert.walks;
  std::size_t len = w[0].size();
  if (len == 0 || w[1].size() != len || w[2].size() != len) return false;
  for (int j = 0; j < 3; ++j) {
    if (w[j][0] != cert.triple[j]) return false;
    for (int v : w[j])
      if (v < 0 || v >= h.n) return false;
    for (std::size_t t = 1; t < len; ++t)
      if (!h.has_edge(w[j][t - 1], w[j][t])) return false;
  }
  auto o = other_positions(cert.target);
  if (w[o[0]].back() != w[o[1]].back()) return false;
  for (std::size_t t = 1; t < len; ++t)
    for (int j : o)
      if (h.has_edge(w[cert.target][t - 1], w[j][t])) return false;
  return true;
}

namespace {

std::vector<PermutableTriple> collect_permutable(const Graph& h,
                                                 bool first_only) {
  std::vector<PermutableTriple> out;
  const int n = h.n;
  if (n < 3) return out;
  std::array<std::vector<char>, 3> feasible;
  for (int i = 0; i < 3; ++i) feasible[i] = excluder_feasible(h, i);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        int id = state_id(n, a, b, c);
        if (!feasible[0][id] || !feasible[1][id] || !feasible[2][id])
          continue;
        PermutableTriple pt;
        pt.triple = {{a, b, c}};
        for (int i = 0; i < 3; ++i) {
          auto cert = find_excluder(h, pt.triple, i);
          if (!cert)
            throw std::logic_error(
                "excluder feasibility table disagrees with the search");
          pt.certificates[i] = std::move(*cert);
        }
        out.push_back(std::move(pt));
        if (first_only) return out;
      }
    }
  return out;
}

}  // namespace

std::vector<PermutableTriple> permutable_triples(const Graph& h) {
  return collect_permutable(h, false);
}

std::optional<PermutableTriple> first_permutable_triple(const Graph& h) {
  auto found = collect_permutable(h, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

PermutableTripleError::PermutableTripleError(PermutableTriple t)
    : std::runtime_error("a permutable triple exists"), witness_(std::move(t)) {}

Poly3 hr_nu3(const Graph& h) {
  const int n = h.n;
  Poly3 f(as_purple(h));
  std::array<std::vector<char>, 3> feasible;
  for (int i = 0; i < 3; ++i) feasible[i] = excluder_feasible(h, i);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int value;
        if (x == y || x == z) value = x;
        else if (y == z) value = y;
        else {
          int id = state_id(n, x, y, z);
          value = -1;
          std::array<int, 3> triple{{x, y, z}};
          for (int i = 0; i < 3 && value < 0; ++i)
            if (!feasible[i][id]) value = triple[i];
          if (value < 0) {
            PermutableTriple pt;
            pt.triple = triple;
            for (int i = 0; i < 3; ++i) pt.certificates[i] = *find_excluder(h, triple, i);
            throw PermutableTripleError(std::move(pt));
          }
        }
        f.set(x, y, z, value);
      }
  return f;
}

}  // namespace sgh
