#include <benchmark/benchmark.h>

#include "skewmaps/catalog.hpp"
#include "skewmaps/quadruple.hpp"

using namespace skewmaps;

static void BM_EnumerateSkew(benchmark::State& state) {
  const auto g = dihedral(static_cast<int>(state.range(0)));
  std::size_t count = 0;
  for (auto _ : state) {
    auto all = enumerate_skew_morphisms(*g);
    count = all.size();
    benchmark::DoNotOptimize(all);
  }
  state.counters["skews"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSkew)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateSkewNaive(benchmark::State& state) {
  const auto g = dihedral(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_skew_morphisms_naive(*g));
}
BENCHMARK(BM_EnumerateSkewNaive)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::size_t classes = 0;
  for (auto _ : state) {
    auto res = classify(n);
    classes = res.classes.size();
    benchmark::DoNotOptimize(res);
  }
  state.counters["classes"] = static_cast<double>(classes);
}
BENCHMARK(BM_Classify)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_RegularityRoutes(benchmark::State& state) {
  const auto m = build_family({Family::map1, static_cast<int>(state.range(0))});
  const bool dart = state.range(1) != 0;
  for (auto _ : state) {
    if (dart)
      benchmark::DoNotOptimize(is_regular(m));
    else
      benchmark::DoNotOptimize(construct_skew(m));
  }
  state.SetLabel(dart ? "dart" : "skew");
}
BENCHMARK(BM_RegularityRoutes)->ArgsProduct({{8, 16, 32}, {0, 1}});

static void BM_DartExtension(benchmark::State& state) {
  const auto m = build_family({Family::map1, static_cast<int>(state.range(0))});
  const auto ds = build_darts(m);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_count(ds));
}
BENCHMARK(BM_DartExtension)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Equivalent(benchmark::State& state) {
  const auto m = build_family({Family::map1, static_cast<int>(state.range(0))});
  const auto mm = mirror(m);
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(m, mm));
}
BENCHMARK(BM_Equivalent)->Arg(8)->Arg(16);

static void BM_AutomorphismGroup(benchmark::State& state) {
  const auto m = build_family({Family::map1, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(map_automorphism_group(m));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_InducedMap(benchmark::State& state) {
  const auto q = swap_quadruple(3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(induced_cayley_map(q));
}
BENCHMARK(BM_InducedMap)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
