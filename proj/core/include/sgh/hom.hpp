#pragma once

// Decision procedures for (list) homomorphisms and (list) switch-
// homomorphisms between br-graphs, plus core / switch-core computation.
//
// The solver is a plain CSP search: arc-consistency propagation per colour
// relation, then backtracking with smallest-domain-first variable order and
// ascending value order tried in vertex-id order, so the returned witness is
// deterministic.

#include <optional>

#include "sgh/graph.hpp"
#include "sgh/switching.hpp"

namespace sgh {

// lists[v] is the allowed image set of vertex v; indexed by V(G).
using ListAssignment = std::vector<VertexSet>;

ListAssignment full_lists(int g_n, int h_n);

// Definitional check, independent of the solver: map preserves blue and red
// edges (so purple edges land on purple edges) and stays in range.
bool is_homomorphism(const BrGraph& g, const BrGraph& h,
                     const std::vector<int>& map);

// A list-respecting homomorphism g -> h, or nullopt. Throws
// std::invalid_argument on malformed lists (wrong length, empty list, or a
// list mentioning vertices h does not have).
std::optional<std::vector<int>> list_hom(const BrGraph& g, const BrGraph& h,
                                         const ListAssignment& lists);

// A switch set for g together with a homomorphism switch_at(g, S) -> h.
struct SwitchHom {
  VertexSet switch_set = 0;
  std::vector<int> map;
};

// Decides whether g switch-homs into h by solving hom(g, P(h)): the copy bit
// of each image vertex tells whether the preimage is switched. The recovered
// (S, map) pair is re-verified definitionally before being returned.
std::optional<SwitchHom> switch_hom(const BrGraph& g, const BrGraph& h);

// The list version. Lists live over V(P(h)) (idx v = copy 1, idx h.n + v =
// copy 2) and every list must be closed under the switch map — throws
// std::invalid_argument otherwise. With full lists this is exactly
// switch_hom.
std::optional<SwitchHom> list_switch_hom(const BrGraph& g, const BrGraph& h,
                                         const ListAssignment& lists);

// Minimum-size induced subgraph C such that h retracts onto C (tested via
// list_hom with C's vertices pinned to themselves and everything else listed
// into C). Candidates are tried by size, then lexicographically by vertex
// set, so the representative is deterministic.
BrGraph core_of(const BrGraph& h);

// Minimum-size induced subgraph C such that h admits a switch-homomorphism
// onto C with each vertex of C pinned to its own switch pair {(c,1),(c,2)}.
// Same deterministic candidate order as core_of.
BrGraph switch_core_of(const BrGraph& h);

// The core of a switching graph relative to retractions that respect every
// s-closed vertex list: a retraction may move a vertex only to its switch
// partner, so the twin copies (v,1), (v,2) merge exactly when doing so keeps
// a homomorphism (for all-purple vertices, the copies are clones). This is
// strictly more rigid than switch_core_of(p.graph) — e.g. a bipartite
// switching graph with a purple edge plain-retracts onto that edge, but its
// s-respecting core can be much larger. Same deterministic candidate order
// as core_of.
BrGraph s_core_of(const SwitchGraph& p);

// Edges counted once per colour they carry: a purple edge contributes two, a
// loop one per colour. This is the single place the "small switch-core"
// threshold convention lives; flip it here if a different counting is wanted.
int edge_slot_count(const BrGraph& g);

}  // namespace sgh
