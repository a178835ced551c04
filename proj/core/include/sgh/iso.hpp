#pragma once

// Isomorphism and automorphisms of br-graphs (and plain graphs via their
// all-purple colouring). Backtracking with iterated-refinement signature
// pruning; exact structural verification before any candidate is accepted,
// so signature hash collisions can only cost time, never correctness.

#include <optional>
#include <vector>

#include "sgh/graph.hpp"

namespace sgh {

// True iff perm (a permutation of 0..n-1) maps g onto itself preserving both
// colours. Purely definitional; used to cross-check search results.
bool is_automorphism(const BrGraph& g, const std::vector<int>& perm);

// True iff map sends vertices of a to vertices of b with u~v in a (per
// colour) iff map[u]~map[v] in b, bijectively.
bool is_isomorphism(const BrGraph& a, const BrGraph& b,
                    const std::vector<int>& map);

// A colour-preserving bijection a -> b, or nullopt. Names are ignored.
std::optional<std::vector<int>> brgraph_isomorphic(const BrGraph& a,
                                                   const BrGraph& b);

// All automorphisms of g (always contains the identity), in lexicographic
// order of the permutation vector.
std::vector<std::vector<int>> automorphisms(const BrGraph& g);

inline std::optional<std::vector<int>> graph_isomorphic(const Graph& a,
                                                        const Graph& b) {
  return brgraph_isomorphic(as_purple(a), as_purple(b));
}

inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  return automorphisms(as_purple(g));
}

}  // namespace sgh
