#include <toristack/exactalg.hpp>
#include <toristack/feasibility.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace toristack;

namespace {

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  IntMatrix a(n, n + 2);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = dist(rng);
  return a;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 10, 2);

void BM_Cokernel(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 2).transpose();
  for (auto _ : state) benchmark::DoNotOptimize(cokernel(a));
}
BENCHMARK(BM_Cokernel)->DenseRange(2, 10, 2);

// { r >= 0 : sum r = 1, plus k random equalities } in 2k+2 unknowns.
void BM_FourierMotzkin(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-3, 3);
  RatMatrix a(k + 1, 2 * k + 2);
  for (std::size_t j = 0; j < a.cols(); ++j) a(0, j) = 1;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = dist(rng);
  RatVector b(k + 1, Rational(0));
  b[0] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_nonnegative(a, b));
}
BENCHMARK(BM_FourierMotzkin)->DenseRange(1, 4);

}  // namespace
