#include <benchmark/benchmark.h>

#include "radact/act.hpp"
#include "radact/congruence.hpp"
#include "radact/enumeration.hpp"
#include "radact/injectivity.hpp"
#include "radact/universe.hpp"

namespace {

const radact::Universe& universe() {
  static const radact::Universe u = radact::Universe::standard();
  return u;
}

void BM_EnumerateMonoids(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(radact::enumerate_monoids(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateMonoids)->DenseRange(1, 3);

void BM_StandardUniverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(radact::Universe::standard().num_acts());
}
BENCHMARK(BM_StandardUniverse)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const radact::Universe& u = universe();
  for (auto _ : state) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const radact::FiniteAct& a : u.acts(i)) benchmark::DoNotOptimize(radact::canonical_form(a));
    }
  }
}
BENCHMARK(BM_CanonicalForm)->Unit(benchmark::kMicrosecond);

void BM_AllCongruences(benchmark::State& state) {
  const radact::Universe& u = universe();
  for (auto _ : state) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      for (const radact::FiniteAct& a : u.acts(i)) benchmark::DoNotOptimize(radact::all_congruences(a));
    }
  }
}
BENCHMARK(BM_AllCongruences)->Unit(benchmark::kMicrosecond);

void BM_InjectiveHull(benchmark::State& state) {
  const radact::Universe& u = universe();
  const radact::FiniteAct& a = u.acts(1).back();
  for (auto _ : state) benchmark::DoNotOptimize(radact::injective_hull(a, u.bounds().hull_bound));
}
BENCHMARK(BM_InjectiveHull)->Unit(benchmark::kMillisecond);

void BM_RInjectiveCriterion(benchmark::State& state) {
  const radact::Universe& u = universe();
  const radact::Radical rg = radact::Radical::rG();
  for (auto _ : state) {
    for (std::size_t i = 0; i < u.num_monoids(); ++i) {
      radact::MonoidLab lab(u.monoid(i), u.acts(i), u.bounds().hull_bound);
      for (const radact::FiniteAct& a : u.acts(i)) {
        benchmark::DoNotOptimize(lab.r_injective(rg, a, radact::InjMode::Criterion));
      }
    }
  }
}
BENCHMARK(BM_RInjectiveCriterion)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
