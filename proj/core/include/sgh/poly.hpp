#pragma once

// Ternary polymorphism machinery: dense operation tables over a br-graph,
// property checking with counterexamples, a complete constraint-based search
// for tables with prescribed properties, text (de)serialization, and the
// transport of polymorphisms across the bipartite double cover.
//
// A plain one-relation graph is handled by encoding it as a br-graph whose
// blue and red relations coincide (as_purple): a map preserves that pair of
// equal relations exactly when it preserves the original one.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgh/graph.hpp"
#include "sgh/switching.hpp"

namespace sgh {

// A total ternary operation on V(target), stored densely: entry (x, y, z)
// lives at index (x*n + y)*n + z.
struct Poly3 {
  BrGraph target;
  std::vector<int> table;

  Poly3() = default;
  explicit Poly3(BrGraph t)
      : target(std::move(t)),
        table(static_cast<std::size_t>(target.n) * target.n * target.n, -1) {}

  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * target.n + y) * target.n + z;
  }
  int at(int x, int y, int z) const { return table[index(x, y, z)]; }
  void set(int x, int y, int z, int v) { table[index(x, y, z)] = v; }

  // Every entry present and naming a target vertex.
  bool total() const;
};

// Property flags. `wnu` means the three one-off patterns agree *and* the
// operation is idempotent (the paper-style weak near-unanimity); `nu3` is
// the near-unanimity law f(x,x,y)=f(x,y,x)=f(y,x,x)=x; `symmetric` means
// commuting with every automorphism of the target; `semi_conservative` and
// `parity_symmetric` are relative to an explicitly supplied involution.
struct PolyProps {
  bool idempotent = false;
  bool conservative = false;
  bool semi_conservative = false;
  bool wnu = false;
  bool nu3 = false;
  bool symmetric = false;
  bool parity_symmetric = false;
};

// Parses a comma-separated flag list using the command-line tokens:
// idempotent, conservative, semi, wnu, nu3, symmetric, parity-symmetric.
// Throws std::invalid_argument on an unknown token.
PolyProps parse_props(const std::string& csv);
std::string props_to_string(const PolyProps& p);

// One failed check, with the offending input(s) and value(s).
struct PropFailure {
  std::string property;     // e.g. "polymorphism(red)", "wnu", "conservative"
  std::array<int, 3> x{{-1, -1, -1}};  // primary triple
  std::array<int, 3> y{{-1, -1, -1}};  // partner triple for pairwise checks
  int fx = -1;              // table value at x (when meaningful)
  int fy = -1;              // table value at y / expected value
  std::string detail;       // one-line human-readable description
};

struct PropReport {
  PolyProps requested;
  PolyProps holds;          // requested flags that passed
  bool polymorphism = false;  // edge preservation per colour (always checked)
  std::vector<PropFailure> failures;

  bool all_ok() const;      // polymorphism and every requested flag holds
};

// Checks edge preservation (always) plus each requested flag, reporting the
// first counterexample per failed property. `switch_pairing` is the
// involution defining symmetric lists (required iff semi_conservative is
// requested); `parity_pairing` is the involution the table must commute with
// (required iff parity_symmetric is requested). Throws std::invalid_argument
// on a non-total table or a missing/malformed pairing.
PropReport check_props(const Poly3& f, const PolyProps& which,
                       const std::vector<int>* switch_pairing = nullptr,
                       const std::vector<int>* parity_pairing = nullptr);

struct PolySearchStats {
  long long nodes = 0;          // branch points explored
  long long wipeouts = 0;       // domain wipeouts during propagation
};

struct PolySearchResult {
  std::optional<Poly3> poly;    // lexicographically least witness table
  bool exhausted = false;       // the whole space was refuted
  PolySearchStats stats;
};

// Complete search for a ternary operation with the required properties:
// one variable per ordered triple (wnu ties the three one-off patterns of a
// pair into one variable), domains cut by the flags (conservative keeps
// {x,y,z}; semi_conservative their closure under the pairing; idempotent,
// wnu and nu3 pin repeated-entry triples), arc-consistency propagation over
// per-colour edge preservation, then backtracking in triple-lexicographic
// variable order with ascending values — so a found table is the
// lexicographically least solution. Returns the witness (re-verified with
// check_props; std::logic_error if that ever disagrees) or an exhaustion
// marker. Only idempotent/conservative/semi_conservative/wnu/nu3 may be
// required; symmetric and parity_symmetric are check-only flags and raise
// std::invalid_argument here.
PolySearchResult search_poly3(const BrGraph& target, const PolyProps& required,
                              const std::vector<int>* switch_pairing = nullptr);
PolySearchResult search_poly3(const Graph& target, const PolyProps& required,
                              const std::vector<int>* switch_pairing = nullptr);

// Text form: one line `f <x1> <x2> <x3> -> <y>` of vertex names per entry,
// in triple-lexicographic order.
std::string to_table_text(const Poly3& f);

// Parses a table over the given target's vertex names. Throws ParseError
// (with line/column) on malformed lines, unknown names, or duplicated
// entries, and std::invalid_argument if entries are missing.
Poly3 parse_poly3(const BrGraph& target, const std::string& text);

// Parses an involution given as lines `pair <u> <v>` over the given vertex
// names; vertices not mentioned are fixed points. `#` starts a comment.
// Throws ParseError (with line/column) on malformed lines, unknown names, or
// conflicting pairs.
std::vector<int> parse_pairing(const std::vector<std::string>& names,
                               const std::string& text);

// Transport onto the bipartite double cover prod = product_with_P(f.target):
// constant-parity triples apply f to the base coordinates and keep the
// parity; mixed-parity triples project onto the first coordinate whose
// parity at least two entries share. The result commutes with the cover's
// parity switch by construction. Throws std::invalid_argument if prod does
// not cover f's target.
Poly3 lift_to_bipartite(const Poly3& f, const ProductP& prod);

// Inverse direction: restrict F to the parity-0 copy and project back to the
// base. Requires F to commute with the cover's parity switch (checked;
// std::invalid_argument otherwise). Round trip:
// project_from_bipartite(lift_to_bipartite(f, prod), prod) == f.
Poly3 project_from_bipartite(const Poly3& F, const ProductP& prod);

}  // namespace sgh
