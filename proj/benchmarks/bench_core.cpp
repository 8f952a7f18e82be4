#include <benchmark/benchmark.h>

#include "hhbounds/bounds.hpp"
#include "hhbounds/coeffs.hpp"
#include "hhbounds/identity.hpp"
#include "hhbounds/means.hpp"
#include "hhbounds/quadrules.hpp"

namespace {

void BM_Coefficients(benchmark::State& state) {
  double al = 0.0;
  for (auto _ : state) {
    al = al >= 1.0 ? 0.0 : al + 1.0 / 64;
    benchmark::DoNotOptimize(hhb::compute_coefficients(hhb::Params(al, 0.37, 2.5)));
  }
}
BENCHMARK(BM_Coefficients);

void BM_BoundT4(benchmark::State& state) {
  const hhb::EndpointCurvature c{2.0, 0.25};
  const hhb::Interval iv(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hhb::bound_t4(c, iv, 0.3, 0.6, 2.0));
  }
}
BENCHMARK(BM_BoundT4);

void BM_VerifyBound(benchmark::State& state) {
  const hhb::TestFunction fn = hhb::catalog_lookup("recip");
  hhb::BoundOptions o;
  o.convexity_samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hhb::verify_bound(fn, hhb::Interval(1, 2), hhb::Params(0.3, 0.6, 2.0), hhb::Theorem::T3, o));
  }
}
BENCHMARK(BM_VerifyBound)->Arg(33)->Arg(257);

void BM_IdentityResidual(benchmark::State& state) {
  const hhb::TestFunction fn = hhb::catalog_lookup("exp");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hhb::identity_residual(fn, hhb::Interval(1, 2), 0.3, 0.6));
  }
}
BENCHMARK(BM_IdentityResidual);

void BM_Composite(benchmark::State& state) {
  const hhb::TestFunction fn = hhb::catalog_lookup("log");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hhb::composite_certified(fn, hhb::Interval(1, 2), n, hhb::RuleSpec::simpson(), 2.0, hhb::Theorem::T4));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Composite)->Arg(1)->Arg(16)->Arg(128);

void BM_MeanInequality(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hhb::mean_inequality(hhb::MeanFamily::log, hhb::NamedRule::simpson, 0.7, 4.2, 2.0));
  }
}
BENCHMARK(BM_MeanInequality);

}  // namespace

// the packaged benchmark_main archive carries LTO bytecode from another compiler
BENCHMARK_MAIN();
