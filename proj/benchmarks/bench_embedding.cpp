#include <benchmark/benchmark.h>

#include "liederiv/presets.hpp"
#include "liederiv/variety.hpp"

using namespace liederiv;

namespace {

void BM_BuildEmbeddingSln(benchmark::State& state) {
  const EmbeddingProblem p = make_sln(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    EmbeddingResult r = build_embedding(p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_BuildEmbeddingSln)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ExpAdSl3(benchmark::State& state) {
  const EmbeddingProblem p = make_sl3_paper();
  const Vars vars = make_x_vars(2);
  std::vector<RationalFunction> wc(8, RationalFunction::zero(vars));
  wc[0] = RationalFunction::variable(vars, 0);
  wc[1] = RationalFunction::variable(vars, 1);
  const TensorElement w(p.algebra, vars, wc);
  std::vector<RationalFunction> unit(8, RationalFunction::zero(vars));
  unit[p.algebra->basis_index("e_ma")] = RationalFunction::one(vars);
  const SemidirectElement a{TensorElement(p.algebra, vars, unit)};
  for (auto _ : state) {
    SemidirectElement img = exp_ad(w, a);
    benchmark::DoNotOptimize(img);
  }
}
BENCHMARK(BM_ExpAdSl3);

void BM_VerifyHomomorphismSln(benchmark::State& state) {
  const EmbeddingResult r = build_embedding(make_sln(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    HomomorphismReport rep = verify_homomorphism(r.algebra, r.phi);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_VerifyHomomorphismSln)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClosureEquations(benchmark::State& state) {
  const AlgebraPtr L = make_sln(static_cast<std::size_t>(state.range(0))).algebra;
  for (auto _ : state) {
    VarietySystem sys = closure_equations(L, L->dim() - 2);
    benchmark::DoNotOptimize(sys);
  }
}
BENCHMARK(BM_ClosureEquations)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
