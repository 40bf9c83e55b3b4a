#include <toristack/report.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

using namespace toristack;

namespace {

void BM_CertifyFixture(benchmark::State& state, const char* name) {
  const auto doc = parse_input(*fixture_text(name));
  for (auto _ : state) benchmark::DoNotOptimize(morita_certificate(doc.polytope));
}
BENCHMARK_CAPTURE(BM_CertifyFixture, p2_labels_1_1_2, "p2_labels_1_1_2");
BENCHMARK_CAPTURE(BM_CertifyFixture, p2_labels_2_2_2, "p2_labels_2_2_2");
BENCHMARK_CAPTURE(BM_CertifyFixture, wp112, "wp112");
BENCHMARK_CAPTURE(BM_CertifyFixture, conehead_7, "conehead_7");

// Lattice n-gon circumscribing a disc of radius 100; m = n facets.
LabelledPolytope polygon(int n) {
  static const int dirs[][2] = {{1, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 1}, {-1, 2}, {-1, 1}, {-2, 1},
                                {-1, 0}, {-2, -1}, {-1, -1}, {-1, -2}, {0, -1}, {1, -2}, {1, -1}, {2, -1}};
  LabelledPolytope p;
  p.dim = 2;
  for (int k = 0; k < 16; k += 16 / n) {
    const double len = std::hypot(dirs[k][0], dirs[k][1]);
    p.facets.push_back({{{dirs[k][0], dirs[k][1]}, Rational(static_cast<long long>(100 * len))}, 1 + k % 3});
  }
  return p;
}

void BM_CertifyPolygon(benchmark::State& state) {
  const auto p = polygon(static_cast<int>(state.range(0)));
  const CertifyOptions options{static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(morita_certificate(p, options));
  state.counters["facets"] = static_cast<double>(p.facet_count());
}
BENCHMARK(BM_CertifyPolygon)->Args({4, 1})->Args({8, 1})->Args({16, 1})->Args({16, 4});

void BM_RoundTripJson(benchmark::State& state) {
  const auto report = run_command(Subcommand::certify, parse_input(*fixture_text("p2_labels_2_2_2")));
  for (auto _ : state) benchmark::DoNotOptimize(parse_report(render_json(report)));
}
BENCHMARK(BM_RoundTripJson);

}  // namespace

BENCHMARK_MAIN();
