#include <benchmark/benchmark.h>

#include "philab/max_limits.hpp"
#include "philab/pgf.hpp"
#include "philab/sum_limits.hpp"
#include "philab/transforms.hpp"

namespace {

using namespace philab;

void BM_PhiIdCf(benchmark::State& state) {
  const LtSpec phi = LtSpec::gamma(1.0, 1.0);
  const PsiSpec psi = PsiSpec::exp_exponent(1.0);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_id_cf(phi, psi, t));
    t += 1e-6;
  }
}
BENCHMARK(BM_PhiIdCf);

void BM_PgfPmf(benchmark::State& state) {
  const PgfSpec spec{0, 1, 1e-2, LtSpec::gamma(1.0, 1.0)};
  const std::size_t n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgf_pmf(spec, n_max));
  }
}
BENCHMARK(BM_PgfPmf)->Arg(256)->Arg(4096)->Arg(65536);

void BM_CountSampling(benchmark::State& state) {
  const PgfSpec spec{0, 1, 1e-3, LtSpec::gamma(1.0, 1.0)};
  CountSampler sampler(spec);
  sampler.ensure_coverage();
  RandomStream rng = make_stream(7, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.sample_covered(rng));
  }
}
BENCHMARK(BM_CountSampling);

void BM_StableSubordinator(benchmark::State& state) {
  const LtSpec phi = LtSpec::positive_stable(0.5);
  RandomStream rng = make_stream(7, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_subordinator(phi, rng));
  }
}
BENCHMARK(BM_StableSubordinator);

void BM_SimulateNSum(benchmark::State& state) {
  const SummandFamily summand{SummandFamily::Kind::ExponentialScaled, 0.5};
  const PgfSpec count{0, 1, 1e-2, LtSpec::gamma(1.0, 1.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_n_sum(summand, count, 1000, 7));
  }
}
BENCHMARK(BM_SimulateNSum);

}  // namespace

BENCHMARK_MAIN();
