#include <benchmark/benchmark.h>

#include <vector>

#include "canvas_forge/color_solver.hpp"
#include "canvas_forge/corpus.hpp"
#include "canvas_forge/enumerate.hpp"
#include "canvas_forge/sampling.hpp"
#include "canvas_forge/steiner.hpp"
#include "canvas_forge/surgery.hpp"

using namespace canvas_forge;

namespace {

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_plane_graph_codes(n));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

// Thomassen colouring of random path-canvases on random hosts of size n.
void BM_SolveThomassen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(42);
  std::vector<Canvas> canvases;
  for (int i = 0; i < 32; ++i) canvases.push_back(sample_path_canvas(random_plane_graph(n, 2 * n, rng), 6, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_thomassen(canvases[i++ % canvases.size()]));
}
BENCHMARK(BM_SolveThomassen)->RangeMultiplier(2)->Range(8, 64);

void BM_OptimalSteiner(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const PlaneGraph g = shapes::grid(side, side);
  const int last = side * side - 1;
  const std::vector<Vertex> terminals{0, side - 1, last - side + 1, last};
  for (auto _ : state) benchmark::DoNotOptimize(optimal_steiner(g, terminals));
}
BENCHMARK(BM_OptimalSteiner)->DenseRange(3, 8);

void BM_Surgery(benchmark::State& state) {
  Rng rng(7);
  std::vector<MainInstance> instances;
  while (instances.size() < 16)
    if (auto inst = sample_face_instance(static_cast<int>(state.range(0)), 3, 6, rng)) instances.push_back(*inst);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_surgery(instances[i++ % instances.size()]));
}
BENCHMARK(BM_Surgery)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
