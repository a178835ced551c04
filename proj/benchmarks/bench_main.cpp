#include <benchmark/benchmark.h>

#include "sgh/graph.hpp"

namespace {

sgh::BrGraph pentagon() {
  sgh::BrGraph g(5);
  for (int v = 0; v < 5; ++v)
    g.add_edge(v, (v + 1) % 5, v % 2 ? sgh::EdgeColour::Red : sgh::EdgeColour::Blue);
  return g;
}

void BM_parse_roundtrip(benchmark::State& state) {
  const std::string text = sgh::to_text(pentagon());
  for (auto _ : state) {
    auto g = sgh::parse_brgraph(text);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_parse_roundtrip);

}  // namespace

BENCHMARK_MAIN();
