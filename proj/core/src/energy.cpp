#include "micromorph/energy.hpp"

#include <cmath>
#include <string>

namespace micromorph {

void RelaxedMaterial::validate() const {
  const auto demand = [](bool ok, const char* msg) {
    if (!ok) throw InvalidParameterError(msg);
  };
  const SpdReport e_spd = check_positive_definite(c_e, Definiteness::Strict);
  if (!e_spd.ok)
    throw NotSpdError("elastic stiffness must be positive definite (min eig " +
                      std::to_string(e_spd.min_eig) + ")");
  const SpdReport m_spd = check_positive_definite(c_micro, Definiteness::Strict);
  if (!m_spd.ok)
    throw NotSpdError("micro stiffness must be positive definite (min eig " +
                      std::to_string(m_spd.min_eig) + ")");
  if (!check_positive_definite(c_c, Definiteness::Semi).ok)
    throw NotSpdError("rotational coupling must be positive semidefinite");
  if (!check_positive_definite(l_e, Definiteness::Semi).ok)
    throw NotSpdError("symmetric curvature weight must be positive semidefinite");
  if (!check_positive_definite(l_c, Definiteness::Semi).ok)
    throw NotSpdError("skew curvature weight must be positive semidefinite");
  demand(mu >= 0.0, "shear scale mu must be nonnegative");
  demand(lc >= 0.0, "characteristic length must be nonnegative");
  demand(inertia.rho > 0.0, "density must be positive");
  demand(inertia.lc_hat >= 0.0, "inertia length must be nonnegative");
  demand(inertia.eta1 >= 0.0 && inertia.eta2 >= 0.0 && inertia.eta3 >= 0.0,
         "inertia weights must be nonnegative");
}

EnergyParts relaxed_energy_parts(const RelaxedMaterial& mat,
                                 const KinematicState& state) {
  const Mat3 e = state.grad_u - state.p;
  EnergyParts w;
  w.elastic = 0.5 * mat.c_e.quad(Sym3::from(e));
  w.micro = 0.5 * mat.c_micro.quad(Sym3::from(state.p));
  w.rotational = 0.5 * mat.c_c.quad(axl(Skew3::from(e)));
  const double lfac = 0.5 * mat.mu * mat.lc * mat.lc;
  w.curvature = lfac * (mat.l_e.quad(Sym3::from(state.curl_p)) +
                        mat.l_c.quad(axl(Skew3::from(state.curl_p))));
  return w;
}

Mat3 relaxed_stress(const RelaxedMaterial& mat, const KinematicState& state) {
  const Mat3 e = state.grad_u - state.p;
  const Sym3 sym_stress = mat.c_e.apply(Sym3::from(e));
  const Vec3 couple = 0.5 * mat.c_c.apply(axl(Skew3::from(e)));
  return sym_stress.matrix() + Skew3::from_axial(couple).matrix();
}

double mindlin_energy(const Tensor4Full& ee, const StiffnessVoigt& micro,
                      double grad_p_norm_sq, double mu, double lc,
                      const Mat3& grad_u, const Mat3& p) {
  if (grad_p_norm_sq < 0.0)
    throw InvalidParameterError("grad_p_norm_sq must be nonnegative");
  const Mat3 e = grad_u - p;
  return 0.5 * ee.quad(e) + 0.5 * micro.quad(Sym3::from(p)) +
         0.5 * mu * lc * lc * grad_p_norm_sq;
}

double isotropic_curvature(double a1, double a2, double a3, const Mat3& curl_p,
                           double mu, double lc) {
  const CartanParts parts = cartan_decompose(curl_p);
  const double q = a1 * parts.dev_sym.squared_norm() +
                   a2 * parts.skew.squared_norm() + a3 * parts.trace * parts.trace;
  return 0.5 * mu * lc * lc * q;
}

double kinetic_density(const InertiaSpec& inertia, const Mat3& p_dot) {
  const CartanParts parts = cartan_decompose(p_dot);
  const double q = inertia.eta1 * parts.dev_sym.squared_norm() +
                   inertia.eta2 * parts.skew.squared_norm() +
                   inertia.eta3 * parts.trace * parts.trace;
  return 0.5 * inertia.rho * inertia.lc_hat * inertia.lc_hat * q;
}

UpperBound upper_bound_check(const RelaxedMaterial& mat, const Mat3& grad_u) {
  KinematicState trial;
  trial.grad_u = grad_u;
  trial.p = grad_u;
  UpperBound out;
  out.admissible = relaxed_energy(mat, trial);
  out.micro_energy = 0.5 * mat.c_micro.quad(Sym3::from(grad_u));
  out.difference = out.admissible - out.micro_energy;
  return out;
}

}  // namespace micromorph
