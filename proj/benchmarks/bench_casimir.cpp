#include <benchmark/benchmark.h>

#include "casimir/closedform.hpp"
#include "casimir/coadjoint.hpp"
#include "casimir/normalize.hpp"
#include "casimir/uea.hpp"
#include "casimir/verify.hpp"

using namespace casimir;

static void BM_CornerMinor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SymMatrix X = coordinate_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(corner_minor(X, n / 2));
}
BENCHMARK(BM_CornerMinor)->DenseRange(4, 10, 2);

static void BM_LiftedTriangular(benchmark::State& state) {
  const TriangularSpec spec = st_spec(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lifted_triangular(spec));
}
BENCHMARK(BM_LiftedTriangular)->DenseRange(3, 6);

static void BM_NormalizeT0(benchmark::State& state) {
  const LieAlgebra L = build_t0(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize_algebra(L));
}
BENCHMARK(BM_NormalizeT0)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_NormalizeSt(benchmark::State& state) {
  const LieAlgebra L = build_st(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize_algebra(L));
}
BENCHMARK(BM_NormalizeSt)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_NormalizeT(benchmark::State& state) {
  const LieAlgebra L = build_t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize_algebra(L));
}
BENCHMARK(BM_NormalizeT)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormSt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(st_basis(n));
}
BENCHMARK(BM_ClosedFormSt)->DenseRange(3, 8);

static void BM_IsInvariantT(benchmark::State& state) {
  const LieAlgebra L = build_t(static_cast<int>(state.range(0)));
  const auto basis = closed_form_basis(L);
  for (auto _ : state) {
    for (const auto& e : basis) benchmark::DoNotOptimize(is_invariant(L, e));
  }
}
BENCHMARK(BM_IsInvariantT)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_GenericCount(benchmark::State& state) {
  const LieAlgebra L = build_t(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(generic_invariant_count(L, 0));
}
BENCHMARK(BM_GenericCount)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_PbwReverseWord(benchmark::State& state) {
  const LieAlgebra L = build_t0(4);
  NCWord w;
  for (std::size_t k = 0; k < static_cast<std::size_t>(state.range(0)); ++k) w.push_back(L.dim() - 1 - k % L.dim());
  for (auto _ : state) benchmark::DoNotOptimize(nc_normalize(w, L));
}
BENCHMARK(BM_PbwReverseWord)->DenseRange(2, 8, 2);
BENCHMARK_MAIN();
