#include <benchmark/benchmark.h>

#include "cuspbif/cusp_pipeline.hpp"
#include "cuspbif/elk_degree.hpp"
#include "cuspbif/exprparse.hpp"
#include "cuspbif/standard_basis.hpp"

using namespace cuspbif;

namespace {

const char* kEx1[] = {"x1^3+x2^2+t*x1", "x1*x2"};
const char* kEx2[] = {"x1^4+x2^4+x1^2*x2^2+t*x1", "x1*x2+t*x2"};

void BM_StandardBasis_Ex2_Iprime(benchmark::State& state) {
  const auto d = derive(parse_poly(kEx2[0]), parse_poly(kEx2[1]));
  const std::vector<Poly> gens{d.J, d.F1, d.F2, jacobian2(d.F1, d.J, kX1, kX2), jacobian2(d.F2, d.J, kX1, kX2)};
  for (auto _ : state) {
    LocalIdeal ideal(gens);
    benchmark::DoNotOptimize(ideal.quotient_dim());
  }
}
BENCHMARK(BM_StandardBasis_Ex2_Iprime)->Unit(benchmark::kMillisecond);

void BM_LocalDegree_Ex2_d2(benchmark::State& state) {
  const auto d = derive(parse_poly(kEx2[0]), parse_poly(kEx2[1]));
  for (auto _ : state) benchmark::DoNotOptimize(local_degree(MapGerm(d.d2)).degree);
}
BENCHMARK(BM_LocalDegree_Ex2_d2)->Unit(benchmark::kMillisecond);

void BM_Signature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(static_cast<long>((i * 7 + j * 7 + i * j) % 11) - 5);
  }
  for (auto _ : state) benchmark::DoNotOptimize(signature(m));
}
BENCHMARK(BM_Signature)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Pipeline_Ex1(benchmark::State& state) {
  const Poly f1 = parse_poly(kEx1[0]);
  const Poly f2 = parse_poly(kEx1[1]);
  for (auto _ : state) benchmark::DoNotOptimize(run(f1, f2).b0);
}
BENCHMARK(BM_Pipeline_Ex1)->Unit(benchmark::kMillisecond);

void BM_Pipeline_Ex2(benchmark::State& state) {
  const Poly f1 = parse_poly(kEx2[0]);
  const Poly f2 = parse_poly(kEx2[1]);
  for (auto _ : state) benchmark::DoNotOptimize(run(f1, f2).b0);
}
BENCHMARK(BM_Pipeline_Ex2)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
