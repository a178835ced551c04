#include "sgh/classify.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

#include "sgh/switching.hpp"

namespace sgh {

std::string_view problem_name(Problem p) {
  switch (p) {
    case Problem::SwitchHom: return "shom";
    case Problem::ListPgraphHom: return "lphom";
    case Problem::ListSwitchHom: return "lshom";
  }
  return "?";
}

std::string_view answer_name(Answer a) {
  switch (a) {
    case Answer::P: return "P";
    case Answer::NPC: return "NPC";
    case Answer::Unknown: return "UNKNOWN";
  }
  return "?";
}

std::optional<Problem> problem_from_token(std::string_view token) {
  if (token == "shom") return Problem::SwitchHom;
  if (token == "lphom") return Problem::ListPgraphHom;
  if (token == "lshom") return Problem::ListSwitchHom;
  return std::nullopt;
}

namespace {

bool has_loop(const BrGraph& h) {
  for (int v = 0; v < h.n; ++v)
    if (h.has_any(v, v)) return true;
  return false;
}

// First switch set (ascending) under which every blue edge is also red.
std::optional<VertexSet> normalizing_switch(const BrGraph& h) {
  const VertexSet all = full_set(h.n);
  for (VertexSet s = 0;; ++s) {
    BrGraph switched = switch_at(h, s);
    bool ok = true;
    for (int v = 0; v < h.n && ok; ++v)
      if (switched.blue[v] & ~switched.red[v]) ok = false;
    if (ok) return s;
    if (s == all) break;
  }
  return std::nullopt;
}

void verify_triple(const Graph& g, const PermutableTriple& t) {
  for (const auto& cert : t.certificates)
    if (!validate_excluder(g, cert))
      throw std::logic_error(
          "a permutable-triple certificate failed re-verification");
}

void verify_table(const Poly3& f, const PolyProps& want,
                  const std::vector<int>* pairing = nullptr) {
  if (!check_props(f, want, pairing).all_ok())
    throw std::logic_error(
        "a polymorphism certificate failed re-verification");
}

}  // namespace

Verdict classify_shom(const BrGraph& h) {
  Verdict v;
  v.problem = Problem::SwitchHom;
  v.switch_core = switch_core_of(h);
  int slots = edge_slot_count(*v.switch_core);
  // The edge-count threshold is a dichotomy only for loop-free switch-cores.
  // Every core at or under the threshold is tractable outright (each such
  // shape reduces to per-component bipartiteness / balance checks), but a
  // loop-bearing core over the threshold can go either way: a purple edge
  // with a disjoint blue loop stays tractable, while a purple edge with blue
  // loops on its endpoints encodes 4-colouring.
  if (slots <= 2) {
    v.answer = Answer::P;
    v.rule = "switch-core-size";
    v.notes.push_back("switch-core-size: the switch-core keeps " +
                      std::to_string(slots) +
                      " colour-slot edges (threshold 2)");
  } else if (!has_loop(*v.switch_core)) {
    v.answer = Answer::NPC;
    v.rule = "switch-core-size";
    v.notes.push_back("switch-core-size: the switch-core keeps " +
                      std::to_string(slots) +
                      " colour-slot edges (threshold 2)");
  } else {
    v.answer = Answer::Unknown;
    v.rule = "switch-core-loops";
    v.notes.push_back(
        "switch-core-loops: the switch-core keeps " + std::to_string(slots) +
        " colour-slot edges but carries loops, where the edge-count "
        "threshold is not a dichotomy (loop-bearing cores over the "
        "threshold include both tractable and intractable targets)");
  }
  return v;
}

Verdict classify_lphom(const BrGraph& h) {
  Verdict v;
  v.problem = Problem::ListPgraphHom;
  Graph red = red_subgraph(switching_graph(h).graph);
  if (auto t = first_permutable_triple(red)) {
    verify_triple(red, *t);
    v.answer = Answer::NPC;
    v.rule = "permutable-triple";
    v.notes.push_back(
        "permutable-triple: the red subgraph of the switching graph has a "
        "permutable triple");
    v.obstruction_graph = std::move(red);
    v.obstruction = std::move(*t);
  } else {
    Poly3 f = hr_nu3(red);
    PolyProps want;
    want.conservative = true;
    want.nu3 = true;
    verify_table(f, want);
    v.answer = Answer::P;
    v.rule = "excluder-free";
    v.notes.push_back(
        "excluder-free: no permutable triple; the least-excluder-free "
        "operation is a conservative NU3 certificate");
    v.polymorphism = std::move(f);
  }
  return v;
}

Verdict classify_lshom(const BrGraph& h, const ClassifyOptions& opts) {
  Verdict v;
  v.problem = Problem::ListSwitchHom;

  // Structural rules are always evaluated; the two searches run only while
  // the verdict is open, since a sound hardness rule already refutes them.
  Verdict lp = classify_lphom(h);
  bool tractable_lists = lp.answer == Answer::P;
  v.notes.push_back(std::string("lphom-tractable: lphom is ") +
                    std::string(answer_name(lp.answer)) +
                    (tractable_lists ? " — fires" : " — does not fire"));

  Verdict sc = classify_shom(h);
  bool hard_core = sc.answer == Answer::NPC;
  v.notes.push_back(std::string("shom-hard: shom is ") +
                    std::string(answer_name(sc.answer)) +
                    (hard_core ? " — fires" : " — does not fire"));

  bool loops = has_loop(h);
  std::optional<VertexSet> norm;
  std::optional<PermutableTriple> red_triple;
  Graph normalized_red;
  if (loops) {
    v.notes.push_back(
        "normalized-red-triples: skipped (the reduction chain needs a "
        "loop-free target)");
  } else if (!(norm = normalizing_switch(h))) {
    v.notes.push_back(
        "normalized-red-triples: skipped (no switching puts every blue edge "
        "inside red)");
  } else {
    normalized_red = red_subgraph(switch_at(h, *norm));
    red_triple = first_permutable_triple(normalized_red);
    v.notes.push_back(red_triple
                          ? "normalized-red-triples: the normalized red "
                            "subgraph has a permutable triple — fires"
                          : "normalized-red-triples: no permutable triple — "
                            "does not fire");
  }

  if (tractable_lists && (hard_core || red_triple))
    throw std::logic_error(
        "contradictory classification evidence: a tractability rule and a "
        "hardness rule both fired on the same target");

  if (tractable_lists) {
    v.answer = Answer::P;
    v.rule = "lphom-tractable";
    v.polymorphism = std::move(lp.polymorphism);
    return v;
  }

  bool hardness_fired = hard_core || red_triple.has_value();
  const int p_vertices = 2 * h.n;
  if (!hardness_fired) {
    if (loops) {
      v.notes.push_back(
          "wnu-witness: skipped (the construction needs a loop-free target)");
    } else if (p_vertices > opts.max_search_vertices) {
      v.notes.push_back("wnu-witness: skipped (the switching graph exceeds "
                        "the search cap)");
    } else if (auto w = search_witness(h)) {
      WnuBuild build = build_from_witness(*w);  // re-verifies the table
      v.answer = Answer::P;
      v.rule = "wnu-witness";
      v.notes.push_back(
          "wnu-witness: the premise search found a removal witness");
      v.witness = std::move(*w);
      v.polymorphism = std::move(build.phi);
      return v;
    } else {
      v.notes.push_back(
          "wnu-witness: the premise search found nothing — does not fire");
    }

    if (p_vertices > opts.max_search_vertices) {
      v.notes.push_back("semi-wnu-search: skipped (the switching graph "
                        "exceeds the search cap)");
    } else {
      SwitchGraph p = switching_graph(h);
      std::vector<int> pairing = p.switch_perm();
      PolyProps want;
      want.wnu = true;
      want.semi_conservative = true;
      PolySearchResult res = search_poly3(p.graph, want, &pairing);
      if (res.poly) {
        verify_table(*res.poly, want, &pairing);
        v.answer = Answer::P;
        v.rule = "semi-wnu-found";
        v.notes.push_back(
            "semi-wnu-found: the switching graph has a semi-conservative "
            "ternary WNU");
        v.polymorphism = std::move(res.poly);
        return v;
      }
      v.notes.push_back(
          "semi-wnu-found: no semi-conservative ternary WNU — does not fire "
          "(higher arities stay open)");
    }
  } else {
    v.notes.push_back(
        "wnu-witness, semi-wnu-found: skipped (a hardness rule already "
        "fired)");
  }

  if (hard_core) {
    v.answer = Answer::NPC;
    v.rule = "shom-hard";
    v.switch_core = std::move(sc.switch_core);
    return v;
  }
  if (red_triple) {
    verify_triple(normalized_red, *red_triple);
    v.answer = Answer::NPC;
    v.rule = "normalized-red-triples";
    v.obstruction_graph = std::move(normalized_red);
    v.obstruction = std::move(*red_triple);
    v.normalization_switch = norm;
    return v;
  }

  v.answer = Answer::Unknown;
  return v;
}

namespace {

nlohmann::json names_of(const std::vector<std::string>& names,
                        const std::vector<int>& vertices) {
  nlohmann::json out = nlohmann::json::array();
  for (int v : vertices) out.push_back(names[v]);
  return out;
}

nlohmann::json excluder_json(const std::vector<std::string>& names,
                             const ExcluderCertificate& cert) {
  nlohmann::json out;
  out["target"] = cert.target;
  out["walks"] = nlohmann::json::array();
  for (const auto& walk : cert.walks) out["walks"].push_back(names_of(names, walk));
  return out;
}

}  // namespace

std::string verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["problem"] = std::string(problem_name(v.problem));
  j["answer"] = std::string(answer_name(v.answer));
  j["rule"] = v.rule;
  j["notes"] = v.notes;

  nlohmann::json cert = nlohmann::json::object();
  if (v.switch_core) {
    cert["switch_core"] = nlohmann::json::parse(to_json_string(*v.switch_core));
    cert["edge_slots"] = edge_slot_count(*v.switch_core);
  }
  if (v.obstruction) {
    const auto& names = v.obstruction_graph->names;
    cert["triple"] = names_of(
        names, {v.obstruction->triple[0], v.obstruction->triple[1],
                v.obstruction->triple[2]});
    cert["excluders"] = nlohmann::json::array();
    for (const auto& c : v.obstruction->certificates)
      cert["excluders"].push_back(excluder_json(names, c));
  }
  if (v.polymorphism) cert["table"] = to_table_text(*v.polymorphism);
  if (v.witness)
    cert["witness"] = nlohmann::json::parse(witness_to_json(*v.witness));
  if (v.normalization_switch) {
    std::vector<int> switched;
    for (VertexSet s = *v.normalization_switch; s;) {
      switched.push_back(first_vertex(s));
      s &= s - 1;
    }
    cert["normalization_switch"] =
        names_of(v.obstruction_graph->names, switched);
  }
  j["certificate"] = cert;
  return j.dump(2);
}

}  // namespace sgh
