#include <benchmark/benchmark.h>

#include "wedgemass/families.hpp"
#include "wedgemass/massmat.hpp"
#include "wedgemass/quadrature.hpp"

namespace {

using namespace wedgemass;

const NodeSet& coarse_element() {
  static const NodeSet nodes = family_nodes(FamilyId::F1, 0.3);
  return nodes;
}

void BM_MassExactRational(benchmark::State& state) {
  const NodeSet& nodes = coarse_element();
  for (auto _ : state) benchmark::DoNotOptimize(mass_exact_rational(nodes));
}
BENCHMARK(BM_MassExactRational);

void BM_MassSchemeCM(benchmark::State& state) {
  const NodeSet& nodes = coarse_element();
  for (auto _ : state) benchmark::DoNotOptimize(mass_scheme(nodes, SchemeKind::CM, 1.0));
}
BENCHMARK(BM_MassSchemeCM);

void BM_MassSchemeLM(benchmark::State& state) {
  const NodeSet& nodes = coarse_element();
  for (auto _ : state) benchmark::DoNotOptimize(mass_scheme(nodes, SchemeKind::LM, 1.0));
}
BENCHMARK(BM_MassSchemeLM);

void BM_MassSchemeQM(benchmark::State& state) {
  const NodeSet& nodes = coarse_element();
  for (auto _ : state) benchmark::DoNotOptimize(mass_scheme(nodes, SchemeKind::QM, 1.0));
}
BENCHMARK(BM_MassSchemeQM);

void BM_MassGauss18(benchmark::State& state) {
  const NodeSet& nodes = coarse_element();
  for (auto _ : state) benchmark::DoNotOptimize(apply_mass_rule(gauss18(), nodes, 1.0));
}
BENCHMARK(BM_MassGauss18);

void BM_MetricPolynomial(benchmark::State& state) {
  const NodeSet& nodes = coarse_element();
  for (auto _ : state) benchmark::DoNotOptimize(metric_polynomial(nodes));
}
BENCHMARK(BM_MetricPolynomial);

void BM_GenerateCoeffsQM(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate_coeff_matrices(SchemeKind::QM));
}
BENCHMARK(BM_GenerateCoeffsQM);

}  // namespace

BENCHMARK_MAIN();
