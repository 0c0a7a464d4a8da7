// Serial reference kernels against their OpenMP counterparts.

#include <random>

#include <benchmark/benchmark.h>

#include "breadthkit/constructor.hpp"
#include "breadthkit/enumerate.hpp"
#include "breadthkit/generators.hpp"
#include "breadthkit/mesp.hpp"
#include "breadthkit/oracle.hpp"
#include "breadthkit/parallel.hpp"

namespace bk = breadthkit;

namespace {

bk::Graph random_graph(std::size_t n) {
  std::mt19937_64 rng(n);
  return bk::random_connected_graph(n, 2 * n, rng);
}

template <auto Kernel>
void construct(benchmark::State& state) {
  const auto inst = bk::make_family_instance(bk::Family::Grid, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(inst.graph, inst.path));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.graph.n() + inst.graph.m()));
}

template <auto Kernel>
void all_pairs(benchmark::State& state) {
  const bk::Graph g = random_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
}

template <auto Kernel>
void sweep(benchmark::State& state) {
  const auto corpus = bk::enumerate_connected_graphs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(corpus));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}

}  // namespace

BENCHMARK(construct<bk::construct_phi_serial>)->Name("construct_phi/serial")->Arg(10000)->Arg(250000);
BENCHMARK(construct<bk::construct_phi>)->Name("construct_phi/omp")->Arg(10000)->Arg(250000);
BENCHMARK(all_pairs<bk::all_pairs_distances_serial>)->Name("all_pairs_distances/serial")->Arg(500)->Arg(2000);
BENCHMARK(all_pairs<bk::all_pairs_distances>)->Name("all_pairs_distances/omp")->Arg(500)->Arg(2000);
BENCHMARK(all_pairs<bk::all_pairs_heuristic_serial>)->Name("all_pairs_heuristic/serial")->Arg(100)->Arg(200);
BENCHMARK(all_pairs<bk::all_pairs_heuristic>)->Name("all_pairs_heuristic/omp")->Arg(100)->Arg(200);
BENCHMARK(sweep<bk::sweep_theorem1_serial>)->Name("sweep_theorem1/serial")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep<bk::sweep_theorem1>)->Name("sweep_theorem1/omp")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  bk::apply_thread_limit_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
