#include <benchmark/benchmark.h>

#include "invdiff/coset_ops.hpp"
#include "invdiff/expr.hpp"
#include "invdiff/setup_file.hpp"

using namespace invdiff;

static void BM_NormalizeWord(benchmark::State& state) {
  CosetSetup s = load_setup("sl3r_horocycle");
  Word w;
  for (int k = 0; k < state.range(0); ++k) w.push_back(static_cast<std::size_t>(s.dim() - 1 - (k * 3) % s.dim()));
  for (auto _ : state) {
    Enveloping fresh(s.adapted());
    benchmark::DoNotOptimize(pbw_normalize(fresh, {{1, w}}));
  }
}
BENCHMARK(BM_NormalizeWord)->DenseRange(2, 6, 2);

static void BM_Symmetrize(benchmark::State& state) {
  CosetSetup s = load_setup("sl3r_horocycle");
  Exponents e(s.dim(), 0);
  for (int k = 0; k < state.range(0); ++k) ++e[static_cast<std::size_t>(k) % s.dim()];
  SymPoly p = SymPoly::monomial(s.adapted().variables(), e);
  for (auto _ : state) {
    Enveloping fresh(s.adapted());
    benchmark::DoNotOptimize(symmetrize(fresh, p));
  }
}
BENCHMARK(BM_Symmetrize)->DenseRange(2, 5, 1);

static void BM_CasimirProjection(benchmark::State& state) {
  CosetSetup s = load_setup("sl2r_horocycle");
  Expr e = parse_expr("1/2*H^2 + E*F + F*E", s);
  for (auto _ : state) benchmark::DoNotOptimize(project_mod_ideal(s, to_pbw(s, e)));
}
BENCHMARK(BM_CasimirProjection);

static void BM_ImodBasisSl3(benchmark::State& state) {
  CosetSetup s = load_setup("sl3r_horocycle");
  for (auto _ : state) benchmark::DoNotOptimize(imod_basis(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ImodBasisSl3)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

static void BM_DirectSumSl3(benchmark::State& state) {
  CosetSetup s = load_setup("sl3r_horocycle");
  for (auto _ : state) benchmark::DoNotOptimize(verify_direct_sum(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DirectSumSl3)->DenseRange(1, 3, 1)->Unit(benchmark::kMillisecond);

static void BM_CommutativitySl2c(benchmark::State& state) {
  CosetSetup s = load_setup("sl2c_real_GN");
  for (auto _ : state) benchmark::DoNotOptimize(check_commutativity(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CommutativitySl2c)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
