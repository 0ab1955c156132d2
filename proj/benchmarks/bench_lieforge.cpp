#include <benchmark/benchmark.h>

#include "lieforge/construct.hpp"
#include "lieforge/derivations.hpp"
#include "lieforge/random.hpp"
#include "lieforge/subspace.hpp"
#include "lieforge/sweeps.hpp"
#include "lieforge/theorems.hpp"

using namespace lieforge;

namespace {

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rng.small_int(-5, 5), rng.small_int(1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Det(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const Matrix m = random_invertible_matrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(8)->Arg(16);

void BM_DerivationAlgebraStrictlyUpper(benchmark::State& state) {
  const LieAlgebra L = catalog("strictly_upper", {state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra(L));
  state.SetLabel("dim L = " + std::to_string(L.dim()));
}
BENCHMARK(BM_DerivationAlgebraStrictlyUpper)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_DerivationAlgebraSl2Sum(benchmark::State& state) {
  const LieAlgebra L = catalog_from_string("sl2+sl2");
  for (auto _ : state) benchmark::DoNotOptimize(derivation_algebra(L));
}
BENCHMARK(BM_DerivationAlgebraSl2Sum)->Unit(benchmark::kMillisecond);

void BM_LowerCentralSeries(benchmark::State& state) {
  const LieAlgebra L = catalog("strictly_upper", {state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(lower_central_series(L));
}
BENCHMARK(BM_LowerCentralSeries)->DenseRange(3, 6);

void BM_KillingMatrix(benchmark::State& state) {
  const LieAlgebra L = catalog("upper_triangular", {state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(killing_matrix(L));
}
BENCHMARK(BM_KillingMatrix)->DenseRange(2, 4);

void BM_CheckTheorem1(benchmark::State& state) {
  const LieAlgebra L = catalog("heisenberg", {state.range(0)});
  const Subspace A = center(L);
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem1(L, A, 2));
}
BENCHMARK(BM_CheckTheorem1)->DenseRange(1, 3);

void BM_AuditTheorem1(benchmark::State& state) {
  const LieAlgebra L = catalog("heisenberg", {1});
  const Subspace A = span({{1, 0, 0}}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(audit_theorem1_proof(L, A, 2));
}
BENCHMARK(BM_AuditTheorem1);

void BM_Sweep(benchmark::State& state) {
  const auto suite = static_cast<SweepSuite>(state.range(0));
  SweepOptions options;
  options.replay_proofs = false;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(suite, 7, options));
  state.SetLabel(std::string(to_string(suite)));
}
BENCHMARK(BM_Sweep)
    ->Arg(static_cast<int>(SweepSuite::Corollary1))
    ->Arg(static_cast<int>(SweepSuite::Jacobson))
    ->Arg(static_cast<int>(SweepSuite::CartanVsSeries))
    ->Unit(benchmark::kMillisecond)
    ->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
