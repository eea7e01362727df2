#pragma once

#include <utility>
#include <vector>

#include "micromorph/types.hpp"

namespace micromorph {

// Treatment of the scalar micro distortion at the interval ends.  Natural
// leaves it free (the variationally consistent choice when the energy has
// no boundary term); Clamped pins it to zero, which switches on boundary
// layers of width ~ Lc sqrt(mu / (2 mu_micro)).
enum class PBoundary { Natural, Clamped };

const char* to_string(PBoundary b);

// Axial composite on the unit interval: displacement u with Dirichlet data
// at both ends, scalar micro distortion p, energy
// mu_e (u' - p)^2 + mu_micro p^2 + (mu Lc^2 / 2) (p')^2.
struct OneDProblem {
  double mu_e = 1.0;
  double mu_micro = 1.0;
  double mu = 1.0;
  double lc = 0.0;
  int n_cells = 100;
  double u_left = 0.0;
  double u_right = 1.0;
  PBoundary p_bc = PBoundary::Natural;
};

struct OneDSolution {
  std::vector<double> x;
  std::vector<double> u;
  std::vector<double> p;
  // Boundary flux over twice the applied displacement jump.  The discrete
  // midpoint flux telescopes exactly, so any midpoint gives the same value.
  double effective_modulus = 0.0;
  double flux = 0.0;
  // Normwise relative defect of the solved linear system,
  // |A x - b|_inf / (|A|_inf |x|_inf + |b|_inf).
  double equilibrium_residual = 0.0;
  // Discrete energy of the solution (midpoint rule).
  double energy = 0.0;
};

// Second order central difference solve of the coupled equilibrium
//   d/dx [2 mu_e (u' - p)] = 0
//   2 mu_e (u' - p) = 2 mu_micro p - mu Lc^2 p''
// with one-sided second order closures at the ends.  At Lc = 0 the p
// equation is purely algebraic and the boundary mode is irrelevant.
OneDSolution solve_mindlin_1d(const OneDProblem& prob);

// Closed form of the Lc = 0 limit: linear u, constant p, effective modulus
// mu_e mu_micro / (mu_e + mu_micro).
OneDSolution solve_relaxed_1d(const OneDProblem& prob);

// (Lc, effective modulus) for each requested length, all other parameters
// taken from prob.
std::vector<std::pair<double, double>> lc_sweep(
    const OneDProblem& prob, const std::vector<double>& lc_values);

}  // namespace micromorph
