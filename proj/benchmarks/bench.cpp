#include <benchmark/benchmark.h>

#include "planch/field.hpp"
#include "planch/forms.hpp"
#include "planch/limit.hpp"
#include "planch/wd.hpp"

using namespace planch;

namespace {

const LocalFieldSpec F3 = LocalFieldSpec::from_q(3, 0);

OrthTriple triple_a() {
  OrthTriple t;
  t.orthogonal = {OrthEntry{WDAtom(0, 1), 1, 1}, OrthEntry{WDAtom(Rational(1, 2), 1), 1, 1}};
  return t;
}

void BM_GammaSym2(benchmark::State& st) {
  WDRep rho = parse_rep("1/3*Sp(2) + 2/3*Sp(2) + Sp(3)");
  for (auto _ : st) benchmark::DoNotOptimize(gamma_factor(sym2(rho), F3));
}
BENCHMARK(BM_GammaSym2);

void BM_GammaEvaluate(benchmark::State& st) {
  SpectralFunction g = gamma_factor(sym2(parse_rep("1/3*Sp(2) + 2/3*Sp(2) + Sp(3)")), F3);
  Complex s(0.3, 1.7);
  for (auto _ : st) benchmark::DoNotOptimize(g.evaluate(s));
}
BENCHMARK(BM_GammaEvaluate);

void BM_CharPolyTwisted(benchmark::State& st) {
  const auto d = static_cast<size_t>(st.range(0));
  QMatrix g(d, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g(i, j) = static_cast<long>((3 * i + 5 * j + 1) % 7) - 3;
  for (size_t i = 0; i < d; ++i) g(i, i) += 5;
  for (auto _ : st) benchmark::DoNotOptimize(char_poly_twisted(g));
}
BENCHMARK(BM_CharPolyTwisted)->Arg(2)->Arg(4)->Arg(6);

void BM_ClassifySharp(benchmark::State& st) {
  QMatrix g = gamma_t_representative(square_class(3, Rational(2)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(classify_sharp(g, 3));
}
BENCHMARK(BM_ClassifySharp);

void BM_LhsValue(benchmark::State& st) {
  OrthTriple t = triple_a();
  LimitConfig cfg;
  TestFunction phi = TestFunction::constant(1);
  for (auto _ : st) benchmark::DoNotOptimize(lhs_value(t, phi, 0.01, F3, cfg));
}
BENCHMARK(BM_LhsValue)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
