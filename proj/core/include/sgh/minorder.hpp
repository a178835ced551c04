#pragma once

// Min-orderings of a plain graph: total vertex orders whose binary minimum
// is a polymorphism. The checker runs two independent routes — the quadruple
// ("under-bar") identity
//
//     a <= a',  b <= b',  a ~ b',  b ~ a'   =>   a ~ b
//
// and the direct edge-pair test that min(u,v) preserves edges — and insists
// they agree (std::logic_error otherwise; they are provably equivalent, so a
// disagreement is an implementation bug).
//
// Scope convention: for a loop-free bipartite graph both routes quantify
// only over same-side pairs (a with a', b with b', and u with v on one side
// of the canonical bipartition — least vertex of each component on side 0).
// Unrestricted quantification would force a loop at the lower endpoint of
// every edge (take a = b there), so no irreflexive graph with an edge would
// ever pass; the side-restricted form is the one under which a path ordered
// end-to-end is a min-ordering. Graphs with loops or odd cycles have no
// bipartition and are quantified in full.

#include <functional>
#include <optional>
#include <vector>

#include "sgh/graph.hpp"

namespace sgh {

// A certified total order: order[k] is the vertex at position k, ascending.
struct MinOrdering {
  Graph graph;
  std::vector<int> order;
};

// A quadruple falsifying the under-bar identity: a <= a2, b <= b2, a ~ b2
// and b ~ a2 hold but a ~ b fails.
struct UnderbarViolation {
  int a = -1, a2 = -1, b = -1, b2 = -1;
};

struct MinOrderCheck {
  bool ok = false;
  std::optional<UnderbarViolation> violation;  // present iff !ok
};

// First violating quadruple in scan order, if any. `order` must be a
// permutation of the vertices (std::invalid_argument otherwise).
std::optional<UnderbarViolation> underbar_violation(
    const Graph& g, const std::vector<int>& order);

// Direct route: min(u, v) under the order preserves every pair of edges
// (same-side pairs only, in the bipartite case — see header comment).
bool min_is_polymorphism(const Graph& g, const std::vector<int>& order);

// Both routes, which must agree (std::logic_error if not). The violation
// quadruple is reported when the order fails.
MinOrderCheck is_min_ordering(const Graph& g, const std::vector<int>& order);

// Backtracking search, placing vertices bottom-up with incremental under-bar
// checks; candidates are tried in ascending id, so a hit is the
// lexicographically least min-ordering. Returns a certified ordering or
// nullopt after exhausting all prefixes.
std::optional<MinOrdering> find_min_ordering(const Graph& g);

// Walks every min-ordering in lexicographic order (same backtracking as
// find_min_ordering, continued past the first hit), calling `visit` on each
// complete order. A visitor returning true stops the walk; the return value
// says whether that happened.
bool for_each_min_ordering(
    const Graph& g, const std::function<bool(const std::vector<int>&)>& visit);

// Re-orders by moving the degree-1 vertex `leaf` immediately above the
// highest other neighbour of its unique neighbour (no move if there is no
// other neighbour or the leaf already sits there). The input must be a valid
// min-ordering with `leaf` of degree 1 (std::invalid_argument otherwise);
// the result is re-certified and a failure throws std::logic_error, since
// the re-ordering provably preserves min-orderings.
MinOrdering leaf_lift(const MinOrdering& m, int leaf);

}  // namespace sgh
