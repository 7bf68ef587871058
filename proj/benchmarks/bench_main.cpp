#include <benchmark/benchmark.h>

#include <random>

#include "flagcx/canon.hpp"
#include "flagcx/corpus.hpp"
#include "flagcx/graph.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/turan.hpp"

using namespace flagcx;

namespace {

Graph random_graph(int n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Same boundary matrix, GF(2) bit-packed path against the generic mod-p one.
void BM_BoundaryRank(benchmark::State& state) {
  const auto c = clique_complex(random_graph(static_cast<int>(state.range(0)), 0.5, 7));
  const auto m = boundary_matrix(c, 2, PrimeField(static_cast<unsigned>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
  state.counters["rows"] = static_cast<double>(m.rows());
  state.counters["cols"] = static_cast<double>(m.cols());
}
BENCHMARK(BM_BoundaryRank)->ArgsProduct({{16, 24, 32}, {2, 3}});

void BM_CliqueCounts(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(clique_counts(g));
}
BENCHMARK(BM_CliqueCounts)->Arg(16)->Arg(32)->Arg(48);

void BM_CliqueComplex(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.5, 13);
  for (auto _ : state) benchmark::DoNotOptimize(clique_complex(g));
}
BENCHMARK(BM_CliqueComplex)->Arg(16)->Arg(24);

void BM_CanonicalRep(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_rep(BigInt(n), k, k + 1));
    n = n % 100000 + 7919;
  }
}
BENCHMARK(BM_CanonicalRep)->Arg(2)->Arg(4)->Arg(8);

void BM_TuranRow(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(turan_row(n, 8));
}
BENCHMARK(BM_TuranRow)->Arg(100)->Arg(10000);

void BM_EnumerateGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n));
}
BENCHMARK(BM_EnumerateGraphs)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
