#pragma once

#include "micromorph/anisotropy.hpp"
#include "micromorph/coupling.hpp"
#include "micromorph/tensor.hpp"

namespace micromorph {

// Pointwise kinematic sample: displacement gradient, micro distortion, its
// curl and its time rate.  The curl is supplied by the caller; nothing here
// differentiates fields.
struct KinematicState {
  Mat3 grad_u = Mat3::Zero();
  Mat3 p = Mat3::Zero();
  Mat3 curl_p = Mat3::Zero();
  Mat3 p_dot = Mat3::Zero();
};

// Density and the split micro-inertia weights on the three invariant parts
// of the micro-distortion rate.
struct InertiaSpec {
  double rho = 1.0;
  double lc_hat = 0.0;
  double eta1 = 1.0;
  double eta2 = 1.0;
  double eta3 = 1.0;
};

// Full constitutive bundle: stiffnesses of the elastic and micro scales,
// rotational coupling, curvature weights (symmetric part as a 6x6, skew
// part in axial form), the shear scale and length multiplying curvature,
// and the inertia content.
struct RelaxedMaterial {
  StiffnessVoigt c_e;
  StiffnessVoigt c_micro;
  Coupling3 c_c;
  StiffnessVoigt l_e;
  Coupling3 l_c;
  double mu = 1.0;
  double lc = 0.0;
  InertiaSpec inertia;

  // Throws unless c_e and c_micro are positive definite, c_c / l_e / l_c
  // are semidefinite, and the scalar parameters are admissible.
  void validate() const;
};

struct EnergyParts {
  double elastic = 0.0;     // strain energy of grad_u - P
  double micro = 0.0;       // self energy of sym P
  double rotational = 0.0;  // coupling energy of skew(grad_u - P)
  double curvature = 0.0;   // weighted Curl P energy
  double total() const { return elastic + micro + rotational + curvature; }
};

EnergyParts relaxed_energy_parts(const RelaxedMaterial& mat,
                                 const KinematicState& state);

inline double relaxed_energy(const RelaxedMaterial& mat,
                             const KinematicState& state) {
  return relaxed_energy_parts(mat, state).total();
}

// Force stress: the exact gradient of the relaxed energy with respect to
// grad_u.  Its symmetric part comes from c_e, its skew part from c_c.
Mat3 relaxed_stress(const RelaxedMaterial& mat, const KinematicState& state);

// Energy of the unrelaxed comparison model: a full 9x9 elastic operator on
// grad_u - P, the same micro self energy, and an isotropic penalty on the
// full micro-distortion gradient whose squared norm the caller supplies.
double mindlin_energy(const Tensor4Full& ee, const StiffnessVoigt& micro,
                      double grad_p_norm_sq, double mu, double lc,
                      const Mat3& grad_u, const Mat3& p);

// (mu lc^2 / 2)(a1 |dev sym X|^2 + a2 |skew X|^2 + a3 tr(X)^2) for
// X = curl_p.  The weights (1, 1, 1/3) collapse it to the plain squared
// norm of X.
double isotropic_curvature(double a1, double a2, double a3, const Mat3& curl_p,
                           double mu, double lc);

// Micro-inertia density of a distortion rate.
double kinetic_density(const InertiaSpec& inertia, const Mat3& p_dot);

// Energy of the admissible trial P = grad_u, Curl P = 0, against the
// micro-scale energy of the same strain.  The two agree identically, which
// caps the relaxed minimum by the micro stiffness response.
struct UpperBound {
  double admissible = 0.0;
  double micro_energy = 0.0;
  double difference = 0.0;
};

UpperBound upper_bound_check(const RelaxedMaterial& mat, const Mat3& grad_u);

}  // namespace micromorph
