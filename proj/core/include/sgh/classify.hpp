#pragma once

// The complexity classifier: evidence rules for three decision problems
// around a fixed br-graph target H.
//
//   shom  — switch-homomorphism: tractable when the switch-core of H keeps
//           at most two colour-slot edges, hard when it keeps more and is
//           loop-free. The threshold is not a dichotomy across loop-bearing
//           cores (they include both tractable and intractable targets), so
//           those over the threshold are answered UNKNOWN.
//   lphom — list homomorphism to the switching graph P(H): tractable exactly
//           when the red subgraph of P(H) has no permutable triple, in which
//           case the excluder-based operation is a conservative NU3
//           certificate; a triple with its three excluders certifies
//           hardness.
//   lshom — list switch-homomorphism to H: no complete criterion is known.
//           The classifier runs a cascade of one-sided rules —
//           lphom-tractable, removal-witness found, semi-conservative WNU
//           found on P(H) (for the tractable side), switch-core hardness and
//           permutable triples in the normalized red subgraph (for the hard
//           side) — and answers UNKNOWN when none fires.
//
// Every P verdict carries a checkable witness and every NPC verdict a
// checkable obstruction, re-verified before they are attached. The tractable
// and hard rules can never both be right; if they both fire, classification
// aborts with std::logic_error instead of picking a side.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgh/excluder.hpp"
#include "sgh/graph.hpp"
#include "sgh/hom.hpp"
#include "sgh/poly.hpp"
#include "sgh/wnu_witness.hpp"

namespace sgh {

enum class Problem { SwitchHom, ListPgraphHom, ListSwitchHom };
enum class Answer { P, NPC, Unknown };

// External tokens: "shom" / "lphom" / "lshom" and "P" / "NPC" / "UNKNOWN".
std::string_view problem_name(Problem p);
std::string_view answer_name(Answer a);
std::optional<Problem> problem_from_token(std::string_view token);

struct ClassifyOptions {
  // The witness and polymorphism searches run on P(H); they are skipped
  // (with a note) when P(H) would exceed this many vertices, which can leave
  // the lshom verdict UNKNOWN.
  int max_search_vertices = 24;
};

struct Verdict {
  Problem problem{};
  Answer answer = Answer::Unknown;
  std::string rule;  // the rule that produced the answer (an UNKNOWN can
                     // carry the rule that scoped it out); empty when the
                     // whole cascade ran dry
  std::vector<std::string> notes;  // one line per rule evaluated or skipped

  // Certificate payloads; the ones backing the answer are set.
  std::optional<BrGraph> switch_core;           // shom, lshom hardness
  std::optional<Graph> obstruction_graph;       // where the triple lives
  std::optional<PermutableTriple> obstruction;  // lphom / lshom hardness
  std::optional<Poly3> polymorphism;            // lphom / lshom tractability
  std::optional<WnuWitness> witness;            // lshom tractability
  std::optional<VertexSet> normalization_switch;  // for the red-triples rule
};

Verdict classify_shom(const BrGraph& h);
Verdict classify_lphom(const BrGraph& h);
Verdict classify_lshom(const BrGraph& h, const ClassifyOptions& opts = {});

// The report body: {"problem", "answer", "rule", "notes", "certificate"}.
// Certificate shapes — shom: {"switch_core", "edge_slots"}; triple rules:
// {"triple", "excluders", ...}; polymorphism rules: {"table", "properties"};
// witness rule: the witness JSON object.
std::string verdict_to_json(const Verdict& v);

}  // namespace sgh
