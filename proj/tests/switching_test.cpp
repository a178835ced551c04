#include "sgh/switching.hpp"

#include <random>

#include <doctest.h>

#include "sgh/iso.hpp"

using namespace sgh;

namespace {

BrGraph fixture(const char* name) {
  return load_brgraph(std::string(SGH_FIXTURE_DIR) + "/" + name);
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

int loop_count(const BrGraph& g) {
  int c = 0;
  for (int v = 0; v < g.n; ++v)
    c += (g.has_blue(v, v) ? 1 : 0) + (g.has_red(v, v) ? 1 : 0);
  return c;
}

// Edges counted once per colour they carry (a purple edge counts twice),
// loops included once per colour.
int colour_slot_count(const BrGraph& g) {
  int c = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u; v < g.n; ++v)
      c += (g.has_blue(u, v) ? 1 : 0) + (g.has_red(u, v) ? 1 : 0);
  return c;
}

}  // namespace

TEST_CASE("switch_at basics") {
  BrGraph g = fixture("fig2H.brg");
  CHECK(switch_at(g, 0) == g);
  CHECK(switch_at(g, full_set(g.n)) == g);

  // Pure-blue path u-v-w, switch at the middle: both edges go red.
  BrGraph path(3);
  path.add_edge(0, 1, EdgeColour::Blue);
  path.add_edge(1, 2, EdgeColour::Blue);
  BrGraph switched = switch_at(path, vbit(1));
  CHECK(switched.has_red(0, 1));
  CHECK(switched.has_red(1, 2));
  CHECK_FALSE(switched.has_blue(0, 1));

  // Purple edges and loops never change.
  BrGraph p(2);
  p.add_edge(0, 1, EdgeColour::Purple);
  p.add_edge(0, 0, EdgeColour::Red);
  BrGraph ps = switch_at(p, vbit(0));
  CHECK(ps == p);

  CHECK_THROWS_AS(switch_at(path, vbit(5)), std::invalid_argument);
}

TEST_CASE("switch_at is an involution and acts through symmetric difference") {
  std::mt19937 rng(9001);
  std::uniform_int_distribution<VertexSet> bits;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 8;
    BrGraph g = random_brgraph(n, 0.5, rng);
    VertexSet s = bits(rng) & full_set(n);
    VertexSet t = bits(rng) & full_set(n);
    CHECK(switch_at(switch_at(g, s), s) == g);
    CHECK(switch_at(g, s ^ t) == switch_at(switch_at(g, s), t));
  }
}

TEST_CASE("are_switch_equivalent: canonical answers on the basic cases") {
  BrGraph g = fixture("fig2H.brg");
  auto self = are_switch_equivalent(g, g);
  REQUIRE(self.has_value());
  CHECK(*self == 0);

  BrGraph blue = parse_brgraph_text("edge u v b\n");
  BrGraph red = parse_brgraph_text("edge u v r\n");
  auto s = are_switch_equivalent(blue, red);
  REQUIRE(s.has_value());
  CHECK(*s == vbit(0));  // the side containing the least vertex

  BrGraph purple = parse_brgraph_text("edge u v p\n");
  CHECK_FALSE(are_switch_equivalent(blue, purple).has_value());

  BrGraph renamed = parse_brgraph_text("edge x y b\n");
  CHECK_THROWS_AS(are_switch_equivalent(blue, renamed), std::invalid_argument);
}

TEST_CASE("are_switch_equivalent agrees with the exhaustive switching oracle") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<VertexSet> bits;
  int positives = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + trial % 10;
    BrGraph g1 = random_brgraph(n, 0.5, rng);
    BrGraph g2;
    if (trial % 2) {
      g2 = switch_at(g1, bits(rng) & full_set(n));  // guaranteed equivalent
    } else {
      g2 = random_brgraph(n, 0.5, rng);  // usually not
    }
    bool oracle = false;
    for (VertexSet s = 0; s <= full_set(n) && !oracle; ++s) {
      oracle = switch_at(g1, s) == g2;
      if (s == full_set(n)) break;
    }
    auto got = are_switch_equivalent(g1, g2);
    CHECK(got.has_value() == oracle);
    if (got) {
      CHECK(switch_at(g1, *got) == g2);
      ++positives;
    }
  }
  CHECK(positives >= 60);  // the seeded-equivalent half must all succeed
}

TEST_CASE("are_switch_equivalent returns a set equivalent to the one applied") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<VertexSet> bits;
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 7;
    BrGraph g = random_brgraph(n, 0.6, rng);
    VertexSet s = bits(rng) & full_set(n);
    auto got = are_switch_equivalent(g, switch_at(g, s));
    REQUIRE(got.has_value());
    CHECK(switch_at(g, *got) == switch_at(g, s));
  }
}

TEST_CASE("switching graph reproduces the hand-encoded reference") {
  BrGraph h = fixture("fig2H.brg");
  SwitchGraph p = switching_graph(h);
  p.graph.validate();
  CHECK(p.graph.n == 2 * h.n);

  BrGraph reference = fixture("fig2PH.brg");
  CHECK(loop_count(p.graph) == 4);
  CHECK(colour_slot_count(p.graph) - loop_count(p.graph) == 18);
  CHECK(brgraph_isomorphic(p.graph, reference).has_value());
}

TEST_CASE("switching graph structure: copies and the switch automorphism") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 6;
    BrGraph h = random_brgraph(n, 0.5, rng);
    SwitchGraph p = switching_graph(h);

    // Both copies induce H exactly (same masks after reindexing).
    BrGraph c1 = induced(p.graph, full_set(n));
    BrGraph c2 = induced(p.graph, full_set(2 * n) & ~full_set(n));
    CHECK(c1.blue == h.blue);
    CHECK(c1.red == h.red);
    CHECK(c2.blue == h.blue);
    CHECK(c2.red == h.red);

    // s is a colour-preserving automorphism.
    CHECK(is_automorphism(p.graph, p.switch_perm()));

    // Vertex names follow the documented convention.
    CHECK(p.graph.names[p.copy1(0)] == h.names[0] + ".1");
    CHECK(p.graph.names[p.copy2(0)] == h.names[0] + ".2");
  }
}

TEST_CASE("product with P: double cover per colour") {
  // A red loop becomes a single red edge.
  BrGraph loop(1);
  loop.add_edge(0, 0, EdgeColour::Red);
  ProductP lp = product_with_P(loop);
  CHECK(lp.graph.n == 2);
  CHECK(lp.graph.has_red(0, 1));
  CHECK_FALSE(lp.graph.has_blue(0, 1));
  CHECK_FALSE(lp.graph.has_red(0, 0));

  // A pure-blue edge becomes a blue perfect matching on four vertices.
  BrGraph edge(2);
  edge.add_edge(0, 1, EdgeColour::Blue);
  ProductP ep = product_with_P(edge);
  CHECK(ep.graph.has_blue(ep.at(0, 0), ep.at(1, 1)));
  CHECK(ep.graph.has_blue(ep.at(0, 1), ep.at(1, 0)));
  CHECK(colour_slot_count(ep.graph) == 2);

  std::mt19937 rng(111);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 6;
    BrGraph h = random_brgraph(n, 0.6, rng);
    ProductP p = product_with_P(h);
    p.graph.validate();
    CHECK(loop_count(p.graph) == 0);
    CHECK(bipartition(underlying(p.graph)).has_value());
    CHECK(is_automorphism(p.graph, p.parity_switch_perm()));
  }
}

TEST_CASE("switching graph and product with P commute up to isomorphism") {
  BrGraph h = fixture("fig2H.brg");
  BrGraph lhs = product_with_P(switching_graph(h).graph).graph;
  BrGraph rhs = switching_graph(product_with_P(h).graph).graph;
  CHECK(lhs.n == 16);
  CHECK(brgraph_isomorphic(lhs, rhs).has_value());
}
