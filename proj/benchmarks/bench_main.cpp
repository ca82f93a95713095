#include <benchmark/benchmark.h>

#include "apnforge/apn.hpp"
#include "apnforge/criteria.hpp"
#include "apnforge/phi.hpp"

using namespace apnforge;

namespace {

UniPoly degree12(const FieldPtr& F) {
  std::vector<std::uint32_t> c(13, 0);
  c[12] = 1;
  c[9] = 3 & F->mask();
  c[6] = 1;
  c[5] = 7 & F->mask();
  c[3] = 1;
  return UniPoly(F, c);
}

void BM_Spectrum(benchmark::State& state) {
  const FieldPtr F = make_field(static_cast<int>(state.range(0)));
  const UniPoly f = degree12(F);
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(f, F, workers));
  state.SetComplexityN(std::int64_t{1} << state.range(0));
}
BENCHMARK(BM_Spectrum)->ArgsProduct({{8, 10, 12, 14}, {1, 4}})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_FieldMul(benchmark::State& state) {
  const FieldPtr F = make_field(static_cast<int>(state.range(0)));
  std::uint32_t a = 3, b = F->mask();
  for (auto _ : state) {
    a = F->mul(a, b) | 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(20)->Arg(24);

void BM_TriPolyMultiply(benchmark::State& state) {
  const FieldPtr F = make_field(6);
  const TriPoly a = (big_a(F) + mu(F).scaled(Felt(*F, 5))).pow(static_cast<unsigned>(state.range(0)));
  const TriPoly b = big_a(F) + TriPoly::constant(F, 9);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_TriPolyMultiply)->DenseRange(1, 4);

void BM_ExactDivide(benchmark::State& state) {
  const FieldPtr F = make_field(6);
  const TriPoly d = big_a(F) + mu(F).scaled(Felt(*F, 5)) + TriPoly::constant(F, 9);
  const TriPoly n = d.pow(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_divide(n, d));
}
BENCHMARK(BM_ExactDivide)->DenseRange(2, 4);

void BM_BuildPhi(benchmark::State& state) {
  const FieldPtr F = make_field(1);
  const UniPoly f = UniPoly::monomial(F, static_cast<unsigned>(state.range(0))) + UniPoly::monomial(F, 5);
  for (auto _ : state) benchmark::DoNotOptimize(build_phi(f));
}
BENCHMARK(BM_BuildPhi)->Arg(12)->Arg(28)->Arg(60);

void BM_DivisorSearchFull(benchmark::State& state) {
  const UniPoly f = degree12(make_field(1));
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cubic_divisor_search(f, SearchMode::Full, workers));
}
BENCHMARK(BM_DivisorSearchFull)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Classify12(benchmark::State& state) {
  const Tower T = make_tower(make_field(static_cast<int>(state.range(0))));
  const UniPoly f = family_generate(Deg12Kind::CubeOfL, trace_zero_elements(T).back(), T);
  for (auto _ : state) benchmark::DoNotOptimize(deg12_classify(f));
}
BENCHMARK(BM_Classify12)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SurfacePoints(benchmark::State& state) {
  const FieldPtr F = make_field(static_cast<int>(state.range(0)));
  const UniPoly f = degree12(make_field(1));
  for (auto _ : state) benchmark::DoNotOptimize(surface_point_check(f, F, 1));
}
BENCHMARK(BM_SurfacePoints)->Arg(5)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
