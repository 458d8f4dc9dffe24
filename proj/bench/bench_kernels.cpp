// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to taste.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "fuzzyhom/complex.hpp"
#include "fuzzyhom/fuzzy.hpp"
#include "fuzzyhom/fuzzy_homology.hpp"
#include "fuzzyhom/smith.hpp"

using namespace fuzzyhom;

namespace {

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

Execution mode(const benchmark::State& state) { return state.range(1) ? Execution::Parallel : Execution::Serial; }

void BM_Smith(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a, Ring::integers(), mode(state)));
}
BENCHMARK(BM_Smith)->ArgsProduct({{16, 32, 64}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 2), b = random_matrix(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b, Ring::integers(), mode(state)));
}
BENCHMARK(BM_Multiply)->ArgsProduct({{64, 128}, {0, 1}})->Unit(benchmark::kMillisecond);

// Triangulated n x n grid with two colour classes, as a chromatic complex.
FuzzySubcomplex grid(int n) {
  std::vector<std::vector<Vertex>> triangles;
  auto id = [n](int i, int j) { return static_cast<Vertex>(i * (n + 1) + j); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if ((i * 7 + j * 3) % 5 == 0) continue;  // holes
      triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      triangles.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  const auto k = SimplicialComplex::from_maximal(triangles);
  std::map<Vertex, std::string> labels;
  for (const auto& s : k.simplices(0)) {
    const Vertex v = s.vertices()[0];
    labels[v] = v % 3 == 0 ? "b" : "a";
  }
  return chromatic(k, labels, {"a", "b"});
}

void BM_EtaReport(benchmark::State& state) {
  const auto mu = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const FuzzyHomologyContext ctx(mu, Ring::integers(), mode(state));
    benchmark::DoNotOptimize(eta_report(ctx, 1));
  }
}
BENCHMARK(BM_EtaReport)->ArgsProduct({{4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
