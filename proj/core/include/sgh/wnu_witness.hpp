#pragma once

// Witness-driven construction of a semi-conservative WNU operation on the
// switching graph P(H).
//
// A witness packages: an irreflexive all-purple graph `h_plus` together with
// a min-ordering of it, a boundary vertex `r`, a set `removed_leaves` of
// degree-1 vertices, and the blue edge set `removed_blue`, which must be
// exactly
//
//     { uv : u and v both strictly above r in the order }
//   u { uv : u or v in removed_leaves }.
//
// H is then h_plus with the blue colour removed from those edges (the red
// stays, so the underlying graph is unchanged), and the table
//
//     phi((a1,i1),(a2,i2),(a3,i3)) = (min(a1,a2,a3), I)
//
// on P(H) picks the order-minimum of the base vertices; the copy index I is
// the majority of i1,i2,i3 when a1 = a2 = a3 or all three bases lie strictly
// above r outside removed_leaves, and otherwise the copy index of the first
// argument whose base equals the minimum. This formula applies to triples
// whose bases share a side of the bipartition; triples with mixed sides are
// sent to their first majority-side argument, which preserves edges because
// every edge of P(H)^3 flips all three sides at once.
//
// Before building the table the order is normalized by leaf re-orderings so
// that every removed leaf with its support below r sits above that support's
// other neighbours; the formula's edge preservation depends on it.
//
// The finished table is self-checked (polymorphism in both colours,
// idempotent, WNU, semi-conservative under the copy swap). The check can
// genuinely fail — e.g. when two removed leaves share a support, the first-
// relevant-index rule can disagree across a red edge — so build_from_witness
// throws on it, and the premise search simply skips such witnesses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgh/graph.hpp"
#include "sgh/minorder.hpp"
#include "sgh/poly.hpp"
#include "sgh/switching.hpp"

namespace sgh {

struct WnuWitness {
  BrGraph h_plus;          // irreflexive, every edge purple
  std::vector<int> order;  // min-ordering of underlying(h_plus)
  int r = -1;
  VertexSet removed_leaves = 0;                    // subset of degree-1 vertices
  std::vector<std::pair<int, int>> removed_blue;   // pairs u < v, sorted
};

struct WnuBuild {
  BrGraph h;                          // h_plus minus the blue of removed_blue
  SwitchGraph p;                      // switching graph of h
  Poly3 phi;                          // verified table on p.graph
  std::vector<int> normalized_order;  // order after the leaf re-orderings
};

// Checks every witness invariant (shape, purple-ness, permutation,
// min-ordering, leaves, exact removed_blue set); throws std::invalid_argument
// with a specific message on the first failure.
void validate_witness(const WnuWitness& w);

// Validates, normalizes the order, assembles the table and self-checks it.
// Throws std::invalid_argument on a malformed witness and std::logic_error
// when the finished table fails verification (a witness the construction
// does not cover).
WnuBuild build_from_witness(const WnuWitness& w);

// Exhaustive witness search for an irreflexive br-graph H: switch sets in
// ascending mask order, keeping those where every blue edge is also red;
// then h_plus = the switched graph with all edges made purple; min-orderings
// in lexicographic order; r bottom-up along the order; removed leaf sets in
// ascending mask order over the leaf list. Returns the first witness whose
// removed_blue set reproduces the switched graph exactly and whose build
// self-check passes. The caller can recover the switch set by comparing H
// with the witness's reconstruction (h_plus minus removed_blue). Throws
// std::invalid_argument if H has a loop.
std::optional<WnuWitness> search_witness(const BrGraph& h);

// JSON form: {"h_plus": <graph>, "order": [names...], "r": name,
// "L": [names...], "B": [[name, name]...]}. Parsing throws ParseError on
// malformed JSON and std::invalid_argument on invariant violations.
std::string witness_to_json(const WnuWitness& w);
WnuWitness witness_from_json(const std::string& text);

}  // namespace sgh
