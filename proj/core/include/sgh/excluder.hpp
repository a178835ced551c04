#pragma once

// Excluders and permutable triples for a one-relation graph, and the
// explicit symmetric conservative near-unanimity operation built from them.
//
// An excluder for a triple (x1,x2,x3) at target position i is a set of three
// equal-length walks starting at x1, x2, x3 such that the two walks at the
// non-target positions end at the same vertex and the target walk avoids
// both others: at every step t, the target walk's vertex before the step is
// non-adjacent to the other walks' vertices after the step (equality counts
// as adjacency only when a loop is present). Walks of length zero are
// allowed; then the excluder exists exactly when the two non-target entries
// coincide.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sgh/graph.hpp"
#include "sgh/poly.hpp"

namespace sgh {

struct ExcluderCertificate {
  std::array<int, 3> triple{{-1, -1, -1}};
  int target = -1;                         // 0, 1 or 2
  std::array<std::vector<int>, 3> walks;   // equal length, walks[i][0]=triple[i]
};

// Shortest excluder for the triple at the target position, found by BFS over
// the state space V^3 (each state is the current end-triple of the walks;
// pigeonhole bounds any needed walk length by |V|^3). Returns nullopt when
// none exists. Throws std::invalid_argument on out-of-range vertices.
std::optional<ExcluderCertificate> find_excluder(const Graph& h,
                                                 std::array<int, 3> triple,
                                                 int target);

// Definitional re-check of a certificate, independent of the search.
bool validate_excluder(const Graph& h, const ExcluderCertificate& cert);

struct PermutableTriple {
  std::array<int, 3> triple{{-1, -1, -1}};
  std::array<ExcluderCertificate, 3> certificates;  // one per target position
};

// All ordered triples of distinct vertices that have an excluder at every
// target position, in lexicographic order, each with its three certificates.
std::vector<PermutableTriple> permutable_triples(const Graph& h);

// The lexicographically first permutable triple, or nullopt.
std::optional<PermutableTriple> first_permutable_triple(const Graph& h);

// Raised by hr_nu3 when its precondition fails; carries the witness.
class PermutableTripleError : public std::runtime_error {
 public:
  explicit PermutableTripleError(PermutableTriple t);
  const PermutableTriple& witness() const { return witness_; }

 private:
  PermutableTriple witness_;
};

// The explicit operation: the majority value when two entries agree, else
// x_i for the least position i that has no excluder. Defined exactly when h
// has no permutable triples (PermutableTripleError otherwise, carrying one).
// The result is a conservative NU3 operation on h (encoded as a br-graph
// with both colours equal) and commutes with every automorphism of h.
Poly3 hr_nu3(const Graph& h);

}  // namespace sgh
