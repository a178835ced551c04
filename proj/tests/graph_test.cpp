#include "sgh/graph.hpp"

#include <doctest.h>

using namespace sgh;

namespace {

// Fig-style sample: path with mixed colours plus loops.
const char* kSampleText = R"(# sample graph
vertex u
vertex a
edge u a b
edge a b r      # b is auto-declared here
edge b v blue
edge u v r
edge u u b
edge v v red
)";

}  // namespace

TEST_CASE("text parsing: declarations, auto-declared vertices, comments") {
  BrGraph g = parse_brgraph_text(kSampleText);
  g.validate();
  CHECK(g.n == 4);
  CHECK(g.names == std::vector<std::string>{"u", "a", "b", "v"});
  CHECK(g.has_blue(0, 1));
  CHECK_FALSE(g.has_red(0, 1));
  CHECK(g.has_red(1, 2));
  CHECK(g.has_blue(2, 3));
  CHECK(g.has_red(0, 3));
  CHECK(g.has_blue(0, 0));   // blue loop at u
  CHECK(g.has_red(3, 3));    // red loop at v
  CHECK_FALSE(g.has_any(1, 3));
}

TEST_CASE("text parsing: repeated edge lines merge colours into purple") {
  BrGraph g = parse_brgraph_text("edge x y b\nedge y x r\n");
  CHECK(g.has_purple(0, 1));
}

TEST_CASE("text parsing errors carry line and column") {
  SUBCASE("unknown colour") {
    try {
      parse_brgraph_text("vertex a\nedge a a q\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
      CHECK(e.col == 10);
      CHECK(std::string(e.what()).find("colour") != std::string::npos);
    }
  }
  SUBCASE("duplicate vertex") {
    CHECK_THROWS_AS(parse_brgraph_text("vertex a\nvertex a\n"), ParseError);
  }
  SUBCASE("unknown directive") {
    try {
      parse_brgraph_text("  node a\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 1);
      CHECK(e.col == 3);
    }
  }
  SUBCASE("short edge line") {
    CHECK_THROWS_AS(parse_brgraph_text("edge a b\n"), ParseError);
  }
}

TEST_CASE("JSON parsing and format sniffing") {
  const char* json = R"({
    "vertices": ["u", "v"],
    "edges": [{"u": "u", "v": "v", "c": "p"}, {"u": "w", "v": "w", "c": "r"}]
  })";
  BrGraph g = parse_brgraph(json);  // sniffed as JSON
  CHECK(g.n == 3);
  CHECK(g.has_purple(0, 1));
  CHECK(g.has_red(2, 2));
  CHECK(g.names[2] == "w");  // auto-declared by its edge

  CHECK_THROWS_AS(parse_brgraph_json("{\"edges\": [{\"u\": \"a\"}]}"), ParseError);
  CHECK_THROWS_AS(parse_brgraph_json("{nope"), ParseError);
}

TEST_CASE("text and JSON round trips preserve the graph") {
  BrGraph g = parse_brgraph_text(kSampleText);
  CHECK(parse_brgraph(to_text(g)) == g);
  CHECK(parse_brgraph(to_json_string(g)) == g);
}

TEST_CASE("derived views: underlying, per-colour subgraphs, as_purple") {
  BrGraph g = parse_brgraph_text("edge a b b\nedge b c r\nedge c d p\n");
  Graph u = underlying(g);
  CHECK(u.edge_count() == 3);
  CHECK(blue_subgraph(g).edge_count() == 2);   // ab and the purple cd
  CHECK(red_subgraph(g).edge_count() == 2);    // bc and the purple cd
  Graph p = purple_subgraph(g);
  CHECK(p.edge_count() == 1);
  CHECK(p.has_edge(2, 3));

  BrGraph purple = as_purple(u);
  CHECK(purple_subgraph(purple).adj == u.adj);
}

TEST_CASE("induced subgraph reindexes ascending and keeps names") {
  BrGraph g = parse_brgraph_text("edge a b b\nedge b c r\nedge c a p\nedge c c b\n");
  BrGraph h = induced(g, vbit(1) | vbit(2));  // keep b, c
  CHECK(h.n == 2);
  CHECK(h.names == std::vector<std::string>{"b", "c"});
  CHECK(h.has_red(0, 1));
  CHECK(h.has_blue(1, 1));
  CHECK_FALSE(h.has_blue(0, 1));
}

TEST_CASE("components are ordered by least vertex") {
  Graph g(5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == (vbit(0) | vbit(3)));
  CHECK(comps[1] == (vbit(1) | vbit(4)));
  CHECK(comps[2] == vbit(2));
}

TEST_CASE("bipartition: canonical sides, loops and odd cycles rejected") {
  SUBCASE("even cycle, two components") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(4, 5);
    auto p = bipartition(g);
    REQUIRE(p.has_value());
    CHECK((*p)[0] == 0);  // least vertex of each component gets side 0
    CHECK((*p)[4] == 0);
    CHECK((*p)[1] == 1);
    CHECK((*p)[3] == 1);
    CHECK((*p)[2] == 0);
    CHECK((*p)[5] == 1);
  }
  SUBCASE("triangle") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    CHECK_FALSE(bipartition(g).has_value());
  }
  SUBCASE("loop") {
    Graph g(2);
    g.add_edge(0, 0);
    CHECK_FALSE(bipartition(g).has_value());
  }
}

TEST_CASE("vertex budget is enforced") {
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  std::string text;
  for (int i = 0; i < 65; ++i) text += "vertex v" + std::to_string(i) + "\n";
  CHECK_THROWS_AS(parse_brgraph_text(text), ParseError);
}

TEST_CASE("edge counting counts loops once") {
  Graph g(2);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  CHECK(g.edge_count() == 2);
}
