#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "micromorph/oned.hpp"

using namespace micromorph;

namespace {

double harmonic(double a, double b) { return a * b / (a + b); }

OneDProblem problem(double mu_e, double mu_micro, double lc, int n,
                    PBoundary bc = PBoundary::Natural) {
  OneDProblem p;
  p.mu_e = mu_e;
  p.mu_micro = mu_micro;
  p.mu = 1.0;
  p.lc = lc;
  p.n_cells = n;
  p.p_bc = bc;
  return p;
}

// Relative spread of the midpoint flux 2 mu_e (u' - p) recomputed from the
// solution.
double flux_spread(const OneDProblem& prob, const OneDSolution& sol) {
  const double h = 1.0 / prob.n_cells;
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < prob.n_cells; ++i) {
    const double du = (sol.u[i + 1] - sol.u[i]) / h;
    const double pm = 0.5 * (sol.p[i] + sol.p[i + 1]);
    const double f = 2.0 * prob.mu_e * (du - pm);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return (hi - lo) / std::max(std::abs(lo), std::abs(hi));
}

}  // namespace

TEST_CASE("equal phases without a length scale split the gradient in half") {
  const OneDProblem prob = problem(1.0, 1.0, 0.0, 64);
  const OneDSolution sol = solve_mindlin_1d(prob);
  CHECK(sol.effective_modulus == doctest::Approx(0.5).epsilon(1e-12));
  for (std::size_t i = 0; i < sol.x.size(); ++i) {
    CHECK(std::abs(sol.u[i] - sol.x[i]) < 1e-12);
    CHECK(std::abs(sol.p[i] - 0.5) < 1e-12);
  }
}

TEST_CASE("zero length collapses to the algebraic closed form") {
  const OneDProblem prob = problem(2.0, 5.0, 0.0, 128);
  const OneDSolution fd = solve_mindlin_1d(prob);
  const OneDSolution cf = solve_relaxed_1d(prob);
  CHECK(std::abs(fd.effective_modulus - harmonic(2.0, 5.0)) < 1e-10);
  CHECK(std::abs(cf.effective_modulus - harmonic(2.0, 5.0)) < 1e-15);
  REQUIRE(fd.u.size() == cf.u.size());
  for (std::size_t i = 0; i < fd.u.size(); ++i) {
    CHECK(std::abs(fd.u[i] - cf.u[i]) < 1e-12);
    CHECK(std::abs(fd.p[i] - cf.p[i]) < 1e-12);
  }
}

TEST_CASE("free end conditions keep the modulus at the harmonic value") {
  // constant p solves the Euler-Lagrange system for any Lc, so the length
  // scale only matters once the ends pin p away from that constant
  for (double lc : {0.01, 0.1, 1.0}) {
    const OneDSolution sol = solve_mindlin_1d(problem(2.0, 5.0, lc, 200));
    CHECK(std::abs(sol.effective_modulus - harmonic(2.0, 5.0)) < 1e-10);
  }
}

TEST_CASE("a rigid micro phase hands the load to the elastic modulus") {
  const OneDSolution sol = solve_mindlin_1d(problem(1.0, 1e9, 0.0, 100));
  CHECK(std::abs(sol.effective_modulus - 1.0) < 1e-8);
}

TEST_CASE("clamped ends stiffen the bar towards known values") {
  // reference values from the continuum closed form of the clamped problem
  const OneDSolution a = solve_mindlin_1d(problem(1.0, 1.0, 0.05, 2000,
                                                  PBoundary::Clamped));
  CHECK(std::abs(a.effective_modulus - 0.51832557650026928) < 2e-6);

  const OneDSolution b = solve_mindlin_1d(problem(2.0, 5.0, 0.05, 2000,
                                                  PBoundary::Clamped));
  CHECK(std::abs(b.effective_modulus - 1.4415963656631904) < 5e-6);

  // strictly inside (harmonic, mu_micro)
  CHECK(a.effective_modulus > 0.5);
  CHECK(a.effective_modulus < 1.0);
  CHECK(b.effective_modulus > harmonic(2.0, 5.0));
  CHECK(b.effective_modulus < 5.0);
}

TEST_CASE("clamped modulus grows monotonically with the length scale") {
  const double expect[] = {0.5089978966075217, 0.51832557650026928,
                           0.53804550782865009, 0.5821950780651292};
  const double lcs[] = {0.025, 0.05, 0.1, 0.2};
  double prev = 0.5;
  for (int i = 0; i < 4; ++i) {
    const OneDSolution sol = solve_mindlin_1d(problem(1.0, 1.0, lcs[i], 2000,
                                                      PBoundary::Clamped));
    CHECK(std::abs(sol.effective_modulus - expect[i]) < 1e-5);
    CHECK(sol.effective_modulus > prev);
    prev = sol.effective_modulus;
  }
}

TEST_CASE("refinement converges at second order to the continuum modulus") {
  const double exact = 0.51832557650026928;
  double errors[3];
  const int cells[] = {250, 500, 1000};
  for (int i = 0; i < 3; ++i) {
    const OneDSolution sol = solve_mindlin_1d(problem(1.0, 1.0, 0.05, cells[i],
                                                      PBoundary::Clamped));
    errors[i] = std::abs(sol.effective_modulus - exact);
  }
  for (int i = 0; i + 1 < 3; ++i) {
    const double ratio = errors[i] / errors[i + 1];
    CHECK(ratio > 3.3);
    CHECK(ratio < 4.7);
  }
}

TEST_CASE("the discrete flux is constant across the bar") {
  for (PBoundary bc : {PBoundary::Natural, PBoundary::Clamped}) {
    const OneDProblem prob = problem(2.0, 5.0, 0.05, 500, bc);
    const OneDSolution sol = solve_mindlin_1d(prob);
    CHECK(flux_spread(prob, sol) < 1e-9);
    CHECK(sol.equilibrium_residual < 1e-10);
    // the reported flux and modulus are consistent with the recomputation
    const double du = (sol.u[1] - sol.u[0]) * prob.n_cells;
    const double pm = 0.5 * (sol.p[0] + sol.p[1]);
    CHECK(sol.flux == doctest::Approx(2.0 * prob.mu_e * (du - pm)).epsilon(1e-9));
    CHECK(sol.effective_modulus == doctest::Approx(0.5 * sol.flux).epsilon(1e-12));
  }
}

TEST_CASE("solution energy matches the modulus and undercuts trial fields") {
  // for unit end displacement the total energy equals the effective modulus
  const OneDSolution nat = solve_mindlin_1d(problem(2.0, 5.0, 0.1, 1000));
  CHECK(nat.energy == doctest::Approx(nat.effective_modulus).epsilon(1e-8));

  const OneDSolution cl = solve_mindlin_1d(problem(2.0, 5.0, 0.1, 1000,
                                                   PBoundary::Clamped));
  CHECK(cl.energy == doctest::Approx(cl.effective_modulus).epsilon(1e-4));

  // the compatible trial u = x, p = u' pays the full micro energy
  CHECK(nat.energy < 5.0);
  CHECK(cl.energy < 5.0);
  // clamping can only raise the minimum
  CHECK(cl.energy > nat.energy);
}

TEST_CASE("length sweep reproduces single solves and orders the limits") {
  OneDProblem prob = problem(1.0, 1.0, 0.0, 4000);
  const auto sweep = lc_sweep(prob, {0.0, 1e-4});
  REQUIRE(sweep.size() == 2);
  CHECK(sweep[0].first == 0.0);
  // the zero entry routes through the closed form, so it is exact
  CHECK(sweep[0].second == 0.5);
  CHECK(std::abs(sweep[1].second - 0.5) / 0.5 < 1e-6);

  OneDProblem clamped = problem(1.0, 1.0, 0.0, 800, PBoundary::Clamped);
  const auto up = lc_sweep(clamped, {0.0125, 0.025, 0.05, 0.1});
  for (std::size_t i = 0; i + 1 < up.size(); ++i)
    CHECK(up[i].second < up[i + 1].second);
  // large lengths approach the elastic modulus from below
  const auto big = lc_sweep(clamped, {5.0});
  CHECK(big[0].second > 0.9);
  CHECK(big[0].second < 1.0);
}

TEST_CASE("malformed problems are rejected up front") {
  OneDProblem p = problem(1.0, 1.0, 0.0, 2);
  CHECK_THROWS_AS(solve_mindlin_1d(p), InvalidParameterError);

  p = problem(0.0, 1.0, 0.0, 10);
  CHECK_THROWS_AS(solve_mindlin_1d(p), InvalidParameterError);
  p = problem(1.0, -2.0, 0.0, 10);
  CHECK_THROWS_AS(solve_relaxed_1d(p), InvalidParameterError);

  p = problem(1.0, 1.0, -0.1, 10);
  CHECK_THROWS_AS(solve_mindlin_1d(p), InvalidParameterError);

  p = problem(1.0, 1.0, 0.0, 10);
  p.u_right = p.u_left;
  CHECK_THROWS_AS(solve_mindlin_1d(p), InvalidParameterError);
}
