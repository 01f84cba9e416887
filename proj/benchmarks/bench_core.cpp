#include <benchmark/benchmark.h>

#include "qcorr/channels.hpp"
#include "qcorr/geometry.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/power.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;

namespace {

ComplexMatrix make_hermitian(int dim) {
  RngStream rng(5);
  ComplexMatrix h(dim);
  for (int i = 0; i < dim; ++i) {
    h(i, i) = rng.normal();
    for (int j = i + 1; j < dim; ++j) {
      h(i, j) = cplx(rng.normal(), rng.normal());
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

void BM_hermitian_eigensystem(benchmark::State& state) {
  const ComplexMatrix h = make_hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const EigenSystem es = hermitian_eigensystem(h);
    benchmark::DoNotOptimize(es.eigenvalues[0]);
  }
}
BENCHMARK(BM_hermitian_eigensystem)->Arg(2)->Arg(3)->Arg(4);

void BM_trace_norm_4x4(benchmark::State& state) {
  const ComplexMatrix m = make_hermitian(4) * cplx(0.3, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(trace_norm(m));
}
BENCHMARK(BM_trace_norm_4x4);

void BM_svd3(benchmark::State& state) {
  RngStream rng(6);
  Mat3 l;
  for (double& v : l.a) v = rng.normal();
  for (auto _ : state) {
    const Svd3 s = svd3_rotations(l);
    benchmark::DoNotOptimize(s.d.x);
  }
}
BENCHMARK(BM_svd3);

void BM_fidelity_4x4(benchmark::State& state) {
  RngStream rng(7);
  const DensityMatrix rho = assemble_pure_qc({0.4, 0.6, rng.unit_vector(), rng.unit_vector()});
  CCState c;
  c.p = {{{0.3, 0.2}, {0.1, 0.4}}};
  c.u_axis = rng.unit_vector();
  c.v_axis = rng.unit_vector();
  const DensityMatrix sigma = assemble_cc(c);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(rho, sigma));
}
BENCHMARK(BM_fidelity_4x4);

void BM_quantum_correlation(benchmark::State& state) {
  RngStream rng(8);
  const QCState q = qc_from_bloch(0.4, rng.unit_vector() * 0.8, 0.6, rng.unit_vector() * 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(quantum_correlation(q));
}
BENCHMARK(BM_quantum_correlation);

void BM_correlating_power(benchmark::State& state) {
  RngStream rng(9);
  const AffineChannel ch = affine_from_kraus(random_cptp(rng));
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(correlating_power(ch, SphereScheme::gauss(order)).value);
}
BENCHMARK(BM_correlating_power)->Arg(16)->Arg(32)->Arg(64);

void BM_nearest_cc(benchmark::State& state) {
  RngStream rng(10);
  const PureQCState q{0.35, 0.65, rng.unit_vector(), rng.unit_vector()};
  for (auto _ : state) benchmark::DoNotOptimize(nearest_cc(q.p0, q.p1, q.n0, q.n1).f_max);
}
BENCHMARK(BM_nearest_cc);

void BM_q_max(benchmark::State& state) {
  RngStream rng(11);
  const AffineChannel ch = affine_from_kraus(random_cptp(rng));
  for (auto _ : state) benchmark::DoNotOptimize(q_max(ch).value);
}
BENCHMARK(BM_q_max);

void BM_oracle_nearest_cc(benchmark::State& state) {
  RngStream rng(12);
  const PureQCState q{0.35, 0.65, rng.unit_vector(), rng.unit_vector()};
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle_nearest_cc(q, state.range(0)).fidelity);
}
BENCHMARK(BM_oracle_nearest_cc)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
