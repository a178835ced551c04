#include "sgh/poly.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "sgh/hom.hpp"
#include "sgh/switching.hpp"

using namespace sgh;

namespace {

BrGraph fixture(const char* name) {
  return load_brgraph(std::string(SGH_FIXTURE_DIR) + "/" + name);
}

std::string fixture_text(const char* name) {
  std::ifstream in(std::string(SGH_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BrGraph random_brgraph(int n, double p_edge, std::mt19937& rng) {
  BrGraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> colour(0, 2);
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (coin(rng) < p_edge)
        g.add_edge(u, v, static_cast<EdgeColour>(colour(rng)));
  return g;
}

// ---- Independent definitional predicates (the oracle side) ----------------

bool oracle_polymorphism(const BrGraph& h, const Poly3& f) {
  for (int x1 = 0; x1 < h.n; ++x1)
    for (int y1 = 0; y1 < h.n; ++y1)
      for (int x2 = 0; x2 < h.n; ++x2)
        for (int y2 = 0; y2 < h.n; ++y2)
          for (int x3 = 0; x3 < h.n; ++x3)
            for (int y3 = 0; y3 < h.n; ++y3) {
              int fx = f.at(x1, x2, x3), fy = f.at(y1, y2, y3);
              if (h.has_blue(x1, y1) && h.has_blue(x2, y2) &&
                  h.has_blue(x3, y3) && !h.has_blue(fx, fy))
                return false;
              if (h.has_red(x1, y1) && h.has_red(x2, y2) &&
                  h.has_red(x3, y3) && !h.has_red(fx, fy))
                return false;
            }
  return true;
}

bool oracle_idempotent(const Poly3& f) {
  for (int x = 0; x < f.target.n; ++x)
    if (f.at(x, x, x) != x) return false;
  return true;
}

bool oracle_conservative(const Poly3& f) {
  for (int x = 0; x < f.target.n; ++x)
    for (int y = 0; y < f.target.n; ++y)
      for (int z = 0; z < f.target.n; ++z) {
        int v = f.at(x, y, z);
        if (v != x && v != y && v != z) return false;
      }
  return true;
}

bool oracle_semi(const Poly3& f, const std::vector<int>& s) {
  for (int x = 0; x < f.target.n; ++x)
    for (int y = 0; y < f.target.n; ++y)
      for (int z = 0; z < f.target.n; ++z) {
        int v = f.at(x, y, z);
        if (v != x && v != y && v != z && v != s[x] && v != s[y] && v != s[z])
          return false;
      }
  return true;
}

bool oracle_wnu(const Poly3& f) {
  if (!oracle_idempotent(f)) return false;
  for (int x = 0; x < f.target.n; ++x)
    for (int y = 0; y < f.target.n; ++y) {
      if (x == y) continue;
      int a = f.at(x, x, y), b = f.at(x, y, x), c = f.at(y, x, x);
      if (a != b || b != c) return false;
    }
  return true;
}

bool oracle_nu3(const Poly3& f) {
  for (int x = 0; x < f.target.n; ++x)
    for (int y = 0; y < f.target.n; ++y)
      if (f.at(x, x, y) != x || f.at(x, y, x) != x || f.at(y, x, x) != x)
        return false;
  return true;
}

bool oracle_all(const BrGraph& h, const Poly3& f, const PolyProps& req,
                const std::vector<int>* s) {
  if (!oracle_polymorphism(h, f)) return false;
  if (req.idempotent && !oracle_idempotent(f)) return false;
  if (req.conservative && !oracle_conservative(f)) return false;
  if (req.semi_conservative && !oracle_semi(f, *s)) return false;
  if (req.wnu && !oracle_wnu(f)) return false;
  if (req.nu3 && !oracle_nu3(f)) return false;
  return true;
}

// Enumerates every table on a 2-vertex target in lexicographic order and
// returns the first one passing the oracle, if any.
std::optional<Poly3> brute_first_table2(const BrGraph& h, const PolyProps& req,
                                        const std::vector<int>* s) {
  REQUIRE(h.n == 2);
  Poly3 f(h);
  for (int code = 0; code < 256; ++code) {
    for (int bit = 0; bit < 8; ++bit) f.table[bit] = (code >> (7 - bit)) & 1;
    if (oracle_all(h, f, req, s)) return f;
  }
  return std::nullopt;
}

Poly3 projection1(const BrGraph& h) {
  Poly3 f(h);
  for (int x = 0; x < h.n; ++x)
    for (int y = 0; y < h.n; ++y)
      for (int z = 0; z < h.n; ++z) f.set(x, y, z, x);
  return f;
}

}  // namespace

TEST_CASE("check_props on the first projection") {
  BrGraph h = fixture("fig2H.brg");
  Poly3 f = projection1(h);
  PolyProps which;
  which.conservative = which.idempotent = which.wnu = true;
  PropReport rep = check_props(f, which);
  CHECK(rep.polymorphism);
  CHECK(rep.holds.conservative);
  CHECK(rep.holds.idempotent);
  CHECK_FALSE(rep.holds.wnu);  // one-off patterns pick different coordinates
  CHECK_FALSE(rep.all_ok());
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].property == "wnu");
}

TEST_CASE("check_props on min over a reflexive two-chain") {
  // Vertices 0 < 1, edge 01, loops at both; f = index-min.
  Graph g(2);
  g.add_edge(0, 0);
  g.add_edge(1, 1);
  g.add_edge(0, 1);
  Poly3 f(as_purple(g));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) f.set(x, y, z, std::min({x, y, z}));
  PolyProps which;
  which.conservative = which.idempotent = which.wnu = which.nu3 = true;
  PropReport rep = check_props(f, which);
  CHECK(rep.polymorphism);
  CHECK(rep.holds.conservative);
  CHECK(rep.holds.idempotent);
  CHECK(rep.holds.wnu);
  CHECK_FALSE(rep.holds.nu3);  // min(1,1,0) = 0 != 1
  bool saw_nu3_failure = false;
  for (const auto& fl : rep.failures)
    if (fl.property == "nu3") {
      saw_nu3_failure = true;
      CHECK(fl.x == std::array<int, 3>{{1, 1, 0}});
    }
  CHECK(saw_nu3_failure);
}

TEST_CASE("wnu includes idempotence") {
  // The constant-0 table has all one-off patterns equal but is not
  // idempotent at vertex 1, so the wnu flag must fail.
  BrGraph h(2);  // no edges: polymorphism holds vacuously
  Poly3 f(h);
  std::fill(f.table.begin(), f.table.end(), 0);
  PolyProps which;
  which.wnu = true;
  PropReport rep = check_props(f, which);
  CHECK(rep.polymorphism);
  CHECK_FALSE(rep.holds.wnu);
}

TEST_CASE("check_props input validation") {
  BrGraph h(2);
  Poly3 f(h);
  PolyProps which;
  CHECK_THROWS_AS(check_props(f, which), std::invalid_argument);  // not total

  std::fill(f.table.begin(), f.table.end(), 0);
  which.semi_conservative = true;
  CHECK_THROWS_AS(check_props(f, which), std::invalid_argument);  // no pairing
  std::vector<int> not_involution{0, 0};  // maps both vertices to 0
  CHECK_THROWS_AS(check_props(f, which, &not_involution),
                  std::invalid_argument);

  which = PolyProps{};
  which.parity_symmetric = true;
  CHECK_THROWS_AS(check_props(f, which), std::invalid_argument);
}

TEST_CASE("check_props symmetric flag: commuting with automorphisms") {
  // The purple edge's automorphisms are the identity and the swap. The
  // majority operation commutes with every permutation, so it is symmetric;
  // a table that collapses everything to vertex 0 except the (1,1,1)
  // diagonal entry fails under the swap.
  BrGraph h = fixture("purple_edge.brg");
  Poly3 maj(h);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) maj.set(x, y, z, x + y + z >= 2 ? 1 : 0);
  PolyProps which;
  which.symmetric = true;
  CHECK(check_props(maj, which).holds.symmetric);

  Poly3 skew(h);
  std::fill(skew.table.begin(), skew.table.end(), 0);
  skew.set(1, 1, 1, 1);
  CHECK_FALSE(check_props(skew, which).holds.symmetric);

  // The first projection commutes with everything; it is symmetric even on
  // a target with a rich automorphism group.
  BrGraph c4(4);
  for (int v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4, EdgeColour::Purple);
  CHECK(check_props(projection1(c4), which).holds.symmetric);
}

TEST_CASE("search_poly3 agrees with full table enumeration on two vertices") {
  std::vector<int> swap_pairing{1, 0};
  int positives = 0;
  for (int code = 0; code < 64; ++code) {
    // All br-graphs on two vertices: 4 colour states for each of the two
    // loops and the connecting edge.
    BrGraph h(2);
    auto put = [&h](int state, int u, int v) {
      if (state == 1) h.add_edge(u, v, EdgeColour::Blue);
      if (state == 2) h.add_edge(u, v, EdgeColour::Red);
      if (state == 3) h.add_edge(u, v, EdgeColour::Purple);
    };
    put(code & 3, 0, 0);
    put((code >> 2) & 3, 1, 1);
    put((code >> 4) & 3, 0, 1);

    for (int props = 0; props < 4; ++props) {
      PolyProps req;
      const std::vector<int>* s = nullptr;
      if (props == 0) req.conservative = req.nu3 = true;
      if (props == 1) req.conservative = req.wnu = true;
      if (props == 2) req.idempotent = true;
      if (props == 3) {
        req.semi_conservative = req.nu3 = true;
        s = &swap_pairing;
      }
      auto expect = brute_first_table2(h, req, s);
      auto got = search_poly3(h, req, s);
      REQUIRE(expect.has_value() == got.poly.has_value());
      CHECK(got.exhausted == !expect.has_value());
      if (expect) {
        ++positives;
        // The search promises the lexicographically least table.
        CHECK(got.poly->table == expect->table);
      }
    }
  }
  CHECK(positives > 50);
}

TEST_CASE("search_poly3 witnesses satisfy the definitional oracle") {
  std::mt19937 rng(20240817);
  int found_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    BrGraph h = random_brgraph(1 + trial % 3, 0.55, rng);
    PolyProps req;
    switch (trial % 4) {
      case 0: req.conservative = req.nu3 = true; break;
      case 1: req.conservative = req.wnu = true; break;
      case 2: req.wnu = true; break;
      default: req.idempotent = req.conservative = true; break;
    }
    auto result = search_poly3(h, req);
    CHECK(result.poly.has_value() != result.exhausted);
    if (result.poly) {
      ++found_count;
      CHECK(oracle_all(h, *result.poly, req, nullptr));
      if (req.nu3) CHECK(oracle_wnu(*result.poly));  // NU3 implies WNU
    }
  }
  CHECK(found_count > 20);
}

TEST_CASE("search_poly3 rejects check-only flags and bad pairings") {
  BrGraph h(2);
  PolyProps req;
  req.symmetric = true;
  CHECK_THROWS_AS(search_poly3(h, req), std::invalid_argument);
  req = PolyProps{};
  req.parity_symmetric = true;
  CHECK_THROWS_AS(search_poly3(h, req), std::invalid_argument);
  req = PolyProps{};
  req.semi_conservative = true;
  CHECK_THROWS_AS(search_poly3(h, req), std::invalid_argument);
  std::vector<int> bad{0, 2, 1};
  CHECK_THROWS_AS(search_poly3(h, req, &bad), std::invalid_argument);
}

TEST_CASE("a single purple edge has a conservative near-unanimity operation") {
  BrGraph h = fixture("purple_edge.brg");
  PolyProps req;
  req.conservative = req.nu3 = true;
  auto result = search_poly3(h, req);
  REQUIRE(result.poly.has_value());
  // With two vertices every triple repeats an entry, so the table is the
  // majority operation.
  CHECK(result.poly->at(0, 1, 0) == 0);
  CHECK(result.poly->at(1, 0, 1) == 1);
  CHECK(result.poly->at(0, 1, 1) == 1);
}

TEST_CASE("the branching fixture has no semi-conservative near-unanimity") {
  BrGraph r = fixture("R.brg");
  std::vector<int> s = parse_pairing(r.names, fixture_text("R.smap"));
  // b-branch and c-branch vertices swap; everything else is fixed.
  CHECK(s[*find_vertex(r.names, "b0")] == *find_vertex(r.names, "c0"));
  CHECK(s[*find_vertex(r.names, "b1")] == *find_vertex(r.names, "c1"));
  CHECK(s[*find_vertex(r.names, "b2")] == *find_vertex(r.names, "c2"));
  CHECK(s[*find_vertex(r.names, "a0")] == *find_vertex(r.names, "a0"));
  CHECK(s[*find_vertex(r.names, "d")] == *find_vertex(r.names, "d"));

  PolyProps req;
  req.semi_conservative = req.nu3 = true;
  auto result = search_poly3(r, req, &s);
  CHECK_FALSE(result.poly.has_value());
  CHECK(result.exhausted);
}

TEST_CASE("the doubled tree's red subgraph has no conservative wnu") {
  BrGraph t = fixture("T.brg");
  Graph red_pt = red_subgraph(switching_graph(t).graph);
  PolyProps req;
  req.conservative = req.wnu = true;
  auto result = search_poly3(red_pt, req);
  CHECK_FALSE(result.poly.has_value());
  CHECK(result.exhausted);
}

TEST_CASE("every polymorphism of a switching graph restricts to its red subgraph") {
  BrGraph h = fixture("fig2H.brg");
  BrGraph ph = switching_graph(h).graph;
  PolyProps req;
  req.idempotent = true;  // satisfiable: the first projection qualifies
  auto result = search_poly3(ph, req);
  REQUIRE(result.poly.has_value());
  Poly3 restricted(as_purple(red_subgraph(ph)));
  restricted.table = result.poly->table;
  PropReport rep = check_props(restricted, PolyProps{});
  CHECK(rep.polymorphism);
}

TEST_CASE("table serialization round-trips and validates") {
  BrGraph h = fixture("purple_edge.brg");
  PolyProps req;
  req.conservative = req.nu3 = true;
  Poly3 f = *search_poly3(h, req).poly;

  std::string text = to_table_text(f);
  Poly3 back = parse_poly3(h, text);
  CHECK(back.table == f.table);

  CHECK_THROWS_AS(parse_poly3(h, "g u v u -> v\n"), ParseError);
  CHECK_THROWS_AS(parse_poly3(h, "f u v zz -> v\n"), ParseError);
  CHECK_THROWS_AS(parse_poly3(h, "f u v u v\n"), ParseError);
  // Duplicate entry.
  CHECK_THROWS_AS(parse_poly3(h, "f u u u -> u\nf u u u -> v\n"), ParseError);
  // Missing entries.
  CHECK_THROWS_AS(parse_poly3(h, "f u u u -> u\n"), std::invalid_argument);

  // Column diagnostics point at the offending token.
  try {
    parse_poly3(h, "f u v qq -> v\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 7);
  }
}

TEST_CASE("props parsing round-trips the command-line tokens") {
  PolyProps p = parse_props("wnu, semi ,conservative");
  CHECK(p.wnu);
  CHECK(p.semi_conservative);
  CHECK(p.conservative);
  CHECK_FALSE(p.nu3);
  CHECK(props_to_string(p) == "conservative,semi,wnu");
  CHECK_THROWS_AS(parse_props("wnu,majority"), std::invalid_argument);
  PolyProps q = parse_props("nu3,idempotent,parity-symmetric,symmetric");
  CHECK(q.nu3);
  CHECK(q.idempotent);
  CHECK(q.parity_symmetric);
  CHECK(q.symmetric);
}

TEST_CASE("pairing files parse and reject conflicts") {
  BrGraph r = fixture("R.brg");
  CHECK_THROWS_AS(parse_pairing(r.names, "pair b0 zz\n"), ParseError);
  CHECK_THROWS_AS(parse_pairing(r.names, "swap b0 c0\n"), ParseError);
  CHECK_THROWS_AS(parse_pairing(r.names, "pair b0 c0\npair b0 c1\n"),
                  ParseError);
  auto id = parse_pairing(r.names, "# nothing\n");
  for (int v = 0; v < r.n; ++v) CHECK(id[v] == v);
}

TEST_CASE("lift of the first projection projects constant-parity triples") {
  BrGraph h = fixture("fig2H.brg");
  ProductP prod = product_with_P(h);
  Poly3 f = projection1(h);
  Poly3 F = lift_to_bipartite(f, prod);
  for (int x = 0; x < h.n; ++x)
    for (int y = 0; y < h.n; ++y)
      for (int z = 0; z < h.n; ++z)
        for (int side = 0; side < 2; ++side)
          CHECK(F.at(prod.at(x, side), prod.at(y, side), prod.at(z, side)) ==
                prod.at(x, side));
}

TEST_CASE("transport round-trip and flag preservation") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> pick(0, 3);
  int checked_polys = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BrGraph h = random_brgraph(1 + trial % 4, 0.5, rng);
    ProductP prod = product_with_P(h);

    // Round trip holds for arbitrary total tables, polymorphism or not.
    Poly3 f(h);
    for (auto& entry : f.table)
      entry = std::uniform_int_distribution<int>(0, h.n - 1)(rng);
    Poly3 F = lift_to_bipartite(f, prod);
    CHECK(project_from_bipartite(F, prod).table == f.table);

    // The lift always commutes with the parity switch.
    auto parity = prod.parity_switch_perm();
    PolyProps ps;
    ps.parity_symmetric = true;
    CHECK(check_props(F, ps, nullptr, &parity).holds.parity_symmetric);

    // Flags transport: check on an actual polymorphism found by search.
    PolyProps req;
    if (pick(rng) % 2 == 0) req.conservative = req.nu3 = true;
    else req.wnu = true;
    auto result = search_poly3(h, req);
    if (!result.poly) continue;
    ++checked_polys;
    Poly3 lifted = lift_to_bipartite(*result.poly, prod);
    PolyProps all;
    all.idempotent = all.conservative = all.wnu = all.nu3 = true;
    PropReport base_rep = check_props(*result.poly, all);
    PropReport lift_rep = check_props(lifted, all);
    CHECK(lift_rep.polymorphism);
    CHECK(base_rep.holds.idempotent == lift_rep.holds.idempotent);
    CHECK(base_rep.holds.conservative == lift_rep.holds.conservative);
    CHECK(base_rep.holds.wnu == lift_rep.holds.wnu);
    CHECK(base_rep.holds.nu3 == lift_rep.holds.nu3);
  }
  CHECK(checked_polys > 10);
}

TEST_CASE("projection from the cover requires parity symmetry") {
  BrGraph h = fixture("purple_edge.brg");
  ProductP prod = product_with_P(h);
  Poly3 F(prod.graph);
  std::fill(F.table.begin(), F.table.end(), 0);  // constant 0 = (u, side 0)
  CHECK_THROWS_AS(project_from_bipartite(F, prod), std::invalid_argument);

  BrGraph other(3);
  Poly3 wrong(other);
  std::fill(wrong.table.begin(), wrong.table.end(), 0);
  CHECK_THROWS_AS(project_from_bipartite(wrong, prod), std::invalid_argument);
  CHECK_THROWS_AS(lift_to_bipartite(wrong, prod), std::invalid_argument);
}

TEST_CASE("semi-conservativity transports across the cover") {
  // Fact-level check on a doubled graph: a semi-conservative wnu of P(H)
  // lifts to a semi-conservative, parity-symmetric wnu of P(H) x P. The
  // purple edge doubles to a purple four-cycle, which admits one.
  BrGraph h = fixture("purple_edge.brg");
  SwitchGraph p = switching_graph(h);
  std::vector<int> s = p.switch_perm();
  PolyProps req;
  req.semi_conservative = req.wnu = true;
  auto result = search_poly3(p.graph, req, &s);
  REQUIRE(result.poly.has_value());

  ProductP prod = product_with_P(p.graph);
  Poly3 lifted = lift_to_bipartite(*result.poly, prod);
  // The switch pairing extends to the cover by acting on the base
  // coordinate and keeping the parity.
  std::vector<int> s_cover(prod.graph.n);
  for (int v = 0; v < p.graph.n; ++v)
    for (int side = 0; side < 2; ++side)
      s_cover[prod.at(v, side)] = prod.at(s[v], side);
  auto parity = prod.parity_switch_perm();
  PolyProps which;
  which.semi_conservative = which.wnu = which.parity_symmetric = true;
  PropReport rep = check_props(lifted, which, &s_cover, &parity);
  CHECK(rep.polymorphism);
  CHECK(rep.holds.semi_conservative);
  CHECK(rep.holds.wnu);
  CHECK(rep.holds.parity_symmetric);
}
