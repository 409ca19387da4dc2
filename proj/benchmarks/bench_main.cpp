#include "toroidal/fock.hpp"
#include "toroidal/report.hpp"

#include <benchmark/benchmark.h>

using namespace toroidal;

namespace {

const TypeParams& instance(int k) {
  static const std::vector<TypeParams> all = {
      TypeParams::make(SuperType::A, 2, 1), TypeParams::make(SuperType::B, 2, 1),
      TypeParams::make(SuperType::C, 0, 3), TypeParams::make(SuperType::D, 2, 2)};
  return all.at(static_cast<std::size_t>(k));
}

void BM_RootDatum(benchmark::State& state) {
  const auto& p = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_root_datum(p));
  state.SetLabel(p.label());
}
BENCHMARK(BM_RootDatum)->DenseRange(0, 3);

void BM_BracketQuadratic(benchmark::State& state) {
  auto fa = realize_fields(instance(0), BetaModel::Combination);
  for (auto _ : state) benchmark::DoNotOptimize(bracket_quadratic(fa.xp[0], fa.xm[0], fa.gens.table()));
}
BENCHMARK(BM_BracketQuadratic);

void BM_RelationSuite(benchmark::State& state) {
  const auto& p = instance(static_cast<int>(state.range(0)));
  auto fa = realize_fields(p, BetaModel::Combination);
  auto suite = relation_suite(fa.datum);
  Scalar level = extract_level(fa);
  for (auto _ : state) benchmark::DoNotOptimize(verify(fa, suite, level, 1));
  state.SetLabel(p.label());
  state.counters["templates"] = static_cast<double>(suite.size());
}
BENCHMARK(BM_RelationSuite)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_FockWindow(benchmark::State& state) {
  FockSpace sp(GeneratorSet(TypeParams::make(SuperType::A, 1, 1), BetaModel::Combination), Ordering::FockAdapted);
  const int emax = static_cast<int>(state.range(0));
  std::size_t n = 0;
  for (auto _ : state) n = sp.window(emax, 2).size();
  state.counters["states"] = static_cast<double>(n);
}
BENCHMARK(BM_FockWindow)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CompositeMode(benchmark::State& state) {
  auto fa = realize_fields(TypeParams::make(SuperType::B, 0, 1), BetaModel::Combination);
  FockSpace sp(fa.gens, Ordering::FockAdapted);
  auto states = sp.window(2, 1);
  for (auto _ : state)
    for (const auto& s : states) benchmark::DoNotOptimize(sp.apply_composite(fa.alpha[0], 0, FockVector::basis(s)));
  state.counters["states"] = static_cast<double>(states.size());
}
BENCHMARK(BM_CompositeMode)->Unit(benchmark::kMillisecond);

void BM_ElementaryOracle(benchmark::State& state) {
  FockSpace sp(GeneratorSet(TypeParams::make(SuperType::B, 0, 1), BetaModel::Combination), Ordering::FockAdapted);
  for (auto _ : state) benchmark::DoNotOptimize(elementary_checks(sp, 3, {4, 2}, 1));
}
BENCHMARK(BM_ElementaryOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
