#include <benchmark/benchmark.h>

#include "liederiv/parse.hpp"

using namespace liederiv;

namespace {

const Vars XY({"x1", "x2"});

Polynomial dense_poly(int deg) {
  Polynomial p = Polynomial::zero(XY);
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; j + i <= deg; ++j)
      p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
                 Rational(i + 2 * j + 1));
  return p;
}

void BM_PolyMul(benchmark::State& state) {
  const Polynomial a = dense_poly(static_cast<int>(state.range(0)));
  const Polynomial b = dense_poly(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) {
    Polynomial c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(12);

void BM_PolyGcd(benchmark::State& state) {
  const Polynomial g = dense_poly(static_cast<int>(state.range(0)));
  const Polynomial a = g * parse_polynomial("x1^2 + x2 + 1", XY);
  const Polynomial b = g * parse_polynomial("x1 - x2^2 + 2", XY);
  for (auto _ : state) {
    Polynomial c = Polynomial::gcd(a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_PolyGcd)->Arg(2)->Arg(4)->Arg(6);

void BM_RationalFunctionArith(benchmark::State& state) {
  const RationalFunction f = parse_rational_function("(x1^2 + x2)/(x1 + x2 + 1)", XY);
  const RationalFunction g = parse_rational_function("(x2^3 - 2)/(x1^2 - x2)", XY);
  for (auto _ : state) {
    RationalFunction h = f * g + f / g;
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_RationalFunctionArith);

} // namespace
