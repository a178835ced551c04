#pragma once

// The switching algebra: vertex switches, switch-equivalence decision, the
// switching graph P(H), and the bipartite double cover H x P.

#include <optional>

#include "sgh/graph.hpp"

namespace sgh {

// Swaps blue <-> red on every non-loop edge with exactly one endpoint in s.
// Purple edges and loops are unchanged. Involution: applying the same set
// twice is the identity.
BrGraph switch_at(const BrGraph& g, VertexSet s);

// A switch set carrying g1 onto g2 (switch_at(g1, S) == g2), or nullopt.
// Requires the two graphs to share vertex count and names (the problem is
// about recolourings of one vertex set); throws std::invalid_argument
// otherwise. Deterministic canonical answer: constraint components that need
// no switching contribute nothing; components that must split contribute the
// side containing their least vertex.
std::optional<VertexSet> are_switch_equivalent(const BrGraph& g1,
                                               const BrGraph& g2);

// The switching graph P(H): two copies of H — (v,1) at index v, (v,2) at
// index base_n + v, named "<name>.1" / "<name>.2" — plus crossing edges with
// swapped colour: a red edge uv of H adds blue crossings (u,1)(v,2) and
// (u,2)(v,1); a blue edge adds red crossings. A red loop at u adds the single
// blue crossing edge (u,1)(u,2), and symmetrically. Loops and purple edges
// copy unchanged. The switch map s: (v,i) -> (v,3-i) is a colour-preserving
// automorphism of the result.
struct SwitchGraph {
  BrGraph base;
  BrGraph graph;
  int base_n = 0;

  int copy1(int v) const { return v; }
  int copy2(int v) const { return base_n + v; }
  int base_of(int pv) const { return pv % base_n; }
  int copy_index_of(int pv) const { return pv < base_n ? 1 : 2; }
  int switch_map(int pv) const {
    return pv < base_n ? pv + base_n : pv - base_n;
  }
  std::vector<int> switch_perm() const;
};

SwitchGraph switching_graph(const BrGraph& h);

// The bipartite double cover H x P: per colour, (u,i) ~ (v,1-i) iff u ~ v in
// H. Index layout (v,i) = v + i*base_n, names "<name>.0" / "<name>.1". The
// result is loopless and bipartite by construction (all edges cross sides).
// Carries the projections and the parity switch map (v,i) -> (v,1-i), which
// is a colour-preserving automorphism.
struct ProductP {
  BrGraph base;
  BrGraph graph;
  int base_n = 0;

  int at(int v, int side) const { return v + side * base_n; }
  int project_vertex(int pv) const { return pv % base_n; }
  int project_side(int pv) const { return pv / base_n; }
  int parity_switch(int pv) const {
    return pv < base_n ? pv + base_n : pv - base_n;
  }
  std::vector<int> parity_switch_perm() const;
};

ProductP product_with_P(const BrGraph& h);

}  // namespace sgh
