// Serial reference vs OpenMP versions of the three parallel kernels.

#include <benchmark/benchmark.h>

#include "eqknot/catalog.hpp"
#include "eqknot/kernels.hpp"
#include "eqknot/obstruction.hpp"

namespace {

using namespace eqknot;

LambdaMatrix alexander_matrix(int copies) {
  std::vector<KnotSpec> specs;
  for (int i = 0; i < copies; ++i) specs.push_back(builtin_ref("genus_one_slice:m=" + std::to_string(i + 1) + ",l=2"));
  const LambdaMatrix a = to_lambda(sum_specs(specs).seifert);
  return a - a.transpose().map([](const LaurentPoly& p) { return LaurentPoly::t(1) * p; });
}

void BM_AdjugateSerial(benchmark::State& state) {
  const LambdaMatrix m = alexander_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adjugate_serial(m));
}

void BM_AdjugateParallel(benchmark::State& state) {
  const LambdaMatrix m = alexander_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adjugate(m));
}

// A certified triple has no isotropic vector, so the falsifier runs every trial.
struct Certified {
  EquivariantTriple triple;
  QuadraticCertificate forms;
  explicit Certified(int copies) : triple(trivial_triple()) {
    const auto t = assemble(builtin("nine46"));
    for (int i = 0; i < copies; ++i) triple = sum(triple, t);
    forms = tau_quadratic(triple);
  }
};

void BM_FalsifierSerial(benchmark::State& state) {
  const Certified c(static_cast<int>(state.range(0)));
  const auto forms = c.forms.all_forms();
  for (auto _ : state)
    benchmark::DoNotOptimize(find_common_zero_serial(forms, c.forms.basis.dimension(), 0, kFalsifierTrials));
}

void BM_FalsifierParallel(benchmark::State& state) {
  const Certified c(static_cast<int>(state.range(0)));
  const auto forms = c.forms.all_forms();
  for (auto _ : state)
    benchmark::DoNotOptimize(find_common_zero(forms, c.forms.basis.dimension(), 0, kFalsifierTrials));
}

void BM_AuditSerial(benchmark::State& state) {
  const Certified c(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_isotropic_serial(c.triple, c.forms.basis, 0, 200));
}

void BM_AuditParallel(benchmark::State& state) {
  const Certified c(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(audit_isotropic(c.triple, c.forms.basis, 0, 200));
}

}  // namespace

BENCHMARK(BM_AdjugateSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjugateParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FalsifierSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FalsifierParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
