#pragma once

#include <array>
#include <vector>

#include "micromorph/energy.hpp"

namespace micromorph {

// Generalized eigenproblem omega^2 M x = K x for a plane wave with wave
// vector k, in the 12-dimensional state (u_hat, P_hat row-major).  Both
// matrices are real symmetric; M is positive definite, K positive
// semidefinite.
struct PlaneWaveProblem {
  Vec3 k = Vec3::Zero();
  Mat12 mass = Mat12::Zero();
  Mat12 stiffness = Mat12::Zero();
};

// Assembles the pair (M, K).  Isotropic phases only: the elastic and micro
// stiffnesses and the coupling must classify as isotropic, otherwise an
// InvalidParameterError is thrown.  The curvature enters as the squared
// norm of Curl P, whose symbol acts row-wise as |k|^2 I - k k^T.
PlaneWaveProblem assemble_plane_wave(const RelaxedMaterial& mat, const Vec3& k);

// The 12 frequencies of a plane-wave problem, sorted ascending.
// Eigenvalues within -1e-10 (relative) of zero are clamped; anything more
// negative raises an EigensolverError.
Eigen::Matrix<double, 12, 1> plane_wave_frequencies(const PlaneWaveProblem& pw);

struct DispersionResult {
  std::vector<double> k;
  std::vector<std::array<double, 12>> omega;  // one row per k, sorted
};

// Frequencies along k = (j/n_points) k_max * direction for j = 1..n_points.
// Branches are threaded by sorted order at each k.
DispersionResult dispersion_sweep(const RelaxedMaterial& mat,
                                  const Vec3& direction, double k_max,
                                  int n_points);

struct AcousticSpeeds {
  double cp = 0.0;                       // slope of the third branch
  double cs = 0.0;                       // mean slope of the two shear branches
  std::array<double, 3> slopes{};        // per-branch least squares slopes
};

// Least squares slopes through the origin of the three lowest branches
// over samples with k <= k_window.  Throws InsufficientSamplesError when
// fewer than two samples fall inside the window.
AcousticSpeeds acoustic_slopes(const DispersionResult& sweep, double k_window);

}  // namespace micromorph
