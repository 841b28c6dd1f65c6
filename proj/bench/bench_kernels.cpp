#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lstree/kernels.hpp"

namespace {

using namespace lstree;

std::vector<double> random_points(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  std::vector<double> out(n * d);
  for (auto& x : out) x = normal(rng);
  return out;
}

template <auto Kernel>
void BM_distances(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t d = 3;
  const auto points = random_points(n, d);
  std::vector<double> out(n * n);
  for (auto _ : state) {
    Kernel(points, n, d, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

template <auto Kernel>
void BM_knn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t d = 3;
  const std::size_t k = 20;
  const auto points = random_points(n, d);
  std::vector<double> dist(n * n);
  kernels::euclidean_distances_parallel(points, n, d, dist);
  std::vector<index_t> neighbors(n * k);
  std::vector<double> radius(n);
  for (auto _ : state) {
    Kernel(dist, n, k, neighbors, radius);
    benchmark::DoNotOptimize(radius.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

}  // namespace

BENCHMARK(BM_distances<lstree::kernels::euclidean_distances_serial>)
    ->Name("distances/serial")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_distances<lstree::kernels::euclidean_distances_parallel>)
    ->Name("distances/parallel")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_knn<lstree::kernels::knn_rows_serial>)
    ->Name("knn/serial")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_knn<lstree::kernels::knn_rows_parallel>)
    ->Name("knn/parallel")->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
