// Throughput of the hot entry points on fixed, representative inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "micromorph/dynamics.hpp"
#include "micromorph/energy.hpp"
#include "micromorph/homogenize.hpp"
#include "micromorph/oned.hpp"

namespace {

using namespace micromorph;

StiffnessVoigt sample_stiffness(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Mat6 a;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a(i, j) = unit(rng);
  const Mat6 m = a * a.transpose() + 6.0 * Mat6::Identity();
  return StiffnessVoigt::from_upper(m, Notation::Voigt);
}

RelaxedMaterial wave_material() {
  RelaxedMaterial mat;
  mat.c_e = build_isotropic(0.0, 1.0, Notation::Voigt);
  mat.c_micro = build_isotropic(0.0, 1.0, Notation::Voigt);
  mat.c_c = build_coupling(SymmetryClass::Isotropic, {1.0});
  mat.l_e = StiffnessVoigt::from_upper(vec_norm_weight(Notation::Voigt),
                                       Notation::Voigt);
  mat.l_c = Coupling3::from_upper(2.0 * Mat3::Identity());
  mat.mu = 1.0;
  mat.lc = 1.0;
  mat.inertia.lc_hat = 1.0;
  return mat;
}

KinematicState sample_state(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  KinematicState s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      s.grad_u(i, j) = unit(rng);
      s.p(i, j) = unit(rng);
      s.curl_p(i, j) = unit(rng);
      s.p_dot(i, j) = unit(rng);
    }
  return s;
}

void BM_Homogenize(benchmark::State& state) {
  const StiffnessVoigt micro = sample_stiffness(11);
  const StiffnessVoigt e = sample_stiffness(12);
  for (auto _ : state) {
    HomogenizationResult res = macro_from_micro_e(micro, e);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_Homogenize);

void BM_InvertHomogenize(benchmark::State& state) {
  const StiffnessVoigt micro = sample_stiffness(11);
  const StiffnessVoigt macro =
      macro_from_micro_e(micro, sample_stiffness(12)).macro;
  for (auto _ : state) {
    StiffnessVoigt e = e_from_micro_macro(micro, macro);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_InvertHomogenize);

void BM_MappingIdentity(benchmark::State& state) {
  const StiffnessVoigt cv = sample_stiffness(13);
  for (auto _ : state) {
    double residual = check_inverse_mapping_identity(cv);
    benchmark::DoNotOptimize(residual);
  }
}
BENCHMARK(BM_MappingIdentity);

void BM_PlaneWaveFrequencies(benchmark::State& state) {
  const RelaxedMaterial mat = wave_material();
  const Vec3 k(0.0, 0.0, 1.0);
  for (auto _ : state) {
    const PlaneWaveProblem pencil = assemble_plane_wave(mat, k);
    auto omega = plane_wave_frequencies(pencil);
    benchmark::DoNotOptimize(omega);
  }
}
BENCHMARK(BM_PlaneWaveFrequencies);

void BM_DispersionSweep(benchmark::State& state) {
  const RelaxedMaterial mat = wave_material();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    DispersionResult sweep =
        dispersion_sweep(mat, Vec3(0.0, 0.0, 1.0), 3.0, n);
    benchmark::DoNotOptimize(sweep);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_DispersionSweep)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EnergyParts(benchmark::State& state) {
  const RelaxedMaterial mat = wave_material();
  const KinematicState s = sample_state(14);
  for (auto _ : state) {
    EnergyParts parts = relaxed_energy_parts(mat, s);
    benchmark::DoNotOptimize(parts);
  }
}
BENCHMARK(BM_EnergyParts);

void BM_OneDSolve(benchmark::State& state) {
  OneDProblem prob;
  prob.mu_e = 2.0;
  prob.mu_micro = 5.0;
  prob.lc = 0.05;
  prob.p_bc = PBoundary::Clamped;
  prob.n_cells = static_cast<int>(state.range(0));
  for (auto _ : state) {
    OneDSolution sol = solve_mindlin_1d(prob);
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_OneDSolve)->Arg(1000)->Arg(4000)->Arg(16000)
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
