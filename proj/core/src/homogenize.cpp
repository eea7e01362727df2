#include "micromorph/homogenize.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <string>

#include "micromorph/linalg.hpp"

namespace micromorph {

namespace {

void require_same_convention(const StiffnessVoigt& a, const StiffnessVoigt& b,
                             const char* what) {
  if (a.convention() != b.convention())
    throw ConventionMismatchError(std::string(what) +
                                  ": operands carry different conventions (" +
                                  to_string(a.convention()) + " vs " +
                                  to_string(b.convention()) + ")");
}

void require_spd(const StiffnessVoigt& cv, const char* what) {
  const SpdReport r = check_positive_definite(cv, Definiteness::Strict);
  if (!r.ok)
    throw NotSpdError(std::string(what) +
                      " must be positive definite (min eig " +
                      std::to_string(r.min_eig) + ")");
}

}  // namespace

HomogenizationResult macro_from_micro_e(const StiffnessVoigt& micro,
                                        const StiffnessVoigt& e) {
  require_same_convention(micro, e, "macro_from_micro_e");
  require_spd(micro, "micro stiffness");
  require_spd(e, "relaxation stiffness");

  const Mat6 inv_sum = spd_inverse((micro.matrix() + e.matrix()).eval());
  const Mat6 raw = micro.matrix() * inv_sum * e.matrix();

  HomogenizationResult out;
  out.asymmetry = (raw - raw.transpose()).cwiseAbs().maxCoeff() /
                  raw.cwiseAbs().maxCoeff();
  out.macro = StiffnessVoigt::from_upper(0.5 * (raw + raw.transpose()),
                                         micro.convention());
  out.macro_spd = check_positive_definite(out.macro, Definiteness::Strict);

  const Mat6 hm = harmonic_mean(micro, e).matrix();
  out.harmonic_residual = (hm - 2.0 * out.macro.matrix()).cwiseAbs().maxCoeff() /
                          hm.cwiseAbs().maxCoeff();
  out.smaller_than_micro = check_positive_definite(
      (micro.matrix() - out.macro.matrix()).eval(), Definiteness::Strict);
  return out;
}

StiffnessVoigt e_from_micro_macro(const StiffnessVoigt& micro,
                                  const StiffnessVoigt& macro) {
  require_same_convention(micro, macro, "e_from_micro_macro");
  require_spd(micro, "micro stiffness");
  require_spd(macro, "macro stiffness");

  const Mat6 diff = micro.matrix() - macro.matrix();
  const auto [dmin, dmax] = sym_eig_range(diff);
  (void)dmax;
  const double scale = sym_eig_range(micro.matrix()).second;
  if (dmin < -1e-10 * scale)
    throw StiffnessExceedsMicroError(
        "macro stiffness must stay below micro (smaller is stiffer): "
        "micro - macro has min eig " +
        std::to_string(dmin));
  if (dmin <= 1e-10 * scale)
    throw MicroEqualsMacroError(
        "micro - macro is singular to working precision (min eig " +
        std::to_string(dmin) + "); the relaxation stiffness diverges");

  const Mat6 raw = micro.matrix() * spd_inverse(diff) * macro.matrix();
  return StiffnessVoigt::from_upper(0.5 * (raw + raw.transpose()),
                                    micro.convention());
}

StiffnessVoigt harmonic_mean(const StiffnessVoigt& a, const StiffnessVoigt& b) {
  require_same_convention(a, b, "harmonic_mean");
  require_spd(a, "harmonic mean operand");
  require_spd(b, "harmonic mean operand");
  const Mat6 mean_inv = 0.5 * (spd_inverse(a.matrix()) + spd_inverse(b.matrix()));
  const Mat6 hm = spd_inverse(mean_inv.eval());
  return StiffnessVoigt::from_upper(hm, a.convention());
}

std::pair<double, double> iso_closed_form(double kappa_e, double mu_e,
                                          double kappa_micro, double mu_micro) {
  if (kappa_e + kappa_micro == 0.0 || mu_e + mu_micro == 0.0)
    throw InvalidParameterError("iso_closed_form: degenerate modulus pair");
  return {kappa_e * kappa_micro / (kappa_e + kappa_micro),
          mu_e * mu_micro / (mu_e + mu_micro)};
}

CubicParams cubic_closed_form(const CubicParams& e, const CubicParams& micro) {
  if (e.kappa + micro.kappa == 0.0 || e.mu + micro.mu == 0.0 ||
      e.mu_star + micro.mu_star == 0.0)
    throw InvalidParameterError("cubic_closed_form: degenerate modulus pair");
  CubicParams out;
  out.kappa = e.kappa * micro.kappa / (e.kappa + micro.kappa);
  out.mu = e.mu * micro.mu / (e.mu + micro.mu);
  out.mu_star = e.mu_star * micro.mu_star / (e.mu_star + micro.mu_star);
  return out;
}

StiffnessVoigt ortho_closed_form(const StiffnessVoigt& e,
                                 const StiffnessVoigt& micro) {
  require_same_convention(e, micro, "ortho_closed_form");
  require_spd(e, "relaxation stiffness");
  require_spd(micro, "micro stiffness");

  const Mat3 be = e.matrix().topLeftCorner<3, 3>();
  const Mat3 bm = micro.matrix().topLeftCorner<3, 3>();
  const Mat3 block = be * spd_inverse((be + bm).eval()) * bm;

  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>() = 0.5 * (block + block.transpose());
  for (int p = 3; p < 6; ++p) {
    const double ep = e(p, p), mp = micro(p, p);
    m(p, p) = ep * mp / (ep + mp);
  }
  return StiffnessVoigt::from_upper(m, e.convention());
}

MacroLimitDistortion limit_micro_distortion(const StiffnessVoigt& e,
                                            const StiffnessVoigt& micro,
                                            const Coupling3& coupling,
                                            const Mat3& grad_u) {
  require_same_convention(e, micro, "limit_micro_distortion");
  require_spd(e, "relaxation stiffness");
  require_spd(micro, "micro stiffness");

  // Operator compositions are exact in the norm-preserving convention.
  const Mat6 ce = e.converted(Notation::Mandel).matrix();
  const Mat6 cm = micro.converted(Notation::Mandel).matrix();
  const Vec6 strain = sym_to_vec(Sym3::from(grad_u), Notation::Mandel);
  const Vec6 sym_p = spd_inverse((cm + ce).eval()) * (ce * strain);

  MacroLimitDistortion out;
  out.skew_determinate =
      check_positive_definite(coupling, Definiteness::Strict).ok;
  out.p = vec_to_sym(sym_p, Notation::Mandel).matrix();
  // A definite coupling pins the skew part to the rotation of the applied
  // gradient; a singular one leaves it free, so only the symmetric part is
  // reported then.
  if (out.skew_determinate) out.p += Skew3::from(grad_u).matrix();
  return out;
}

MicroLimit micro_limit_relation(const StiffnessVoigt& e,
                                const StiffnessVoigt& micro,
                                const Sym3& avg_strain) {
  require_same_convention(e, micro, "micro_limit_relation");
  require_spd(e, "relaxation stiffness");
  require_spd(micro, "micro stiffness");

  const StiffnessVoigt ce = e.converted(Notation::Mandel);
  const StiffnessVoigt cm = micro.converted(Notation::Mandel);
  const Vec6 strain = sym_to_vec(avg_strain, Notation::Mandel);
  const Vec6 sym_p =
      spd_inverse((ce.matrix() + cm.matrix()).eval()) * (ce.matrix() * strain);

  MicroLimit out;
  out.sym_p = vec_to_sym(sym_p, Notation::Mandel);
  out.micro_stress = cm.apply(out.sym_p);
  return out;
}

double mindlin_reduction_residual(const Tensor4Full& ee,
                                  const StiffnessVoigt& micro) {
  require_spd(micro, "micro stiffness");
  const auto [emin, emax] = sym_eig_range(ee.mat9());
  if (emin <= 1e-12 * std::abs(emax))
    throw NotSpdError("full elastic operator must be positive definite as a "
                      "9x9 form (min eig " + std::to_string(emin) + ")");

  // The micro stiffness only couples to sym P, so eliminating P composes
  // the full operator with an inverse taken on the symmetric subspace.
  // Composing with the full 9x9 inverse instead would sandwich everything
  // between sym projections and hide the mixing entirely.
  const Mat9 e9 = ee.mat9();
  const Mat9 cm9 = tensor4_from_voigt(micro).mat9();

  // Transposition acting on row-major 9-vectors; the sym/skew projectors
  // are (I +/- swap)/2.
  Mat9 swap = Mat9::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) swap(3 * i + j, 3 * j + i) = 1.0;
  const Mat9 psym = 0.5 * (Mat9::Identity() + swap);
  const Mat9 pskew = 0.5 * (Mat9::Identity() - swap);

  // Orthonormal basis of the symmetric subspace.
  Eigen::Matrix<double, 9, 6> q;
  for (int slot = 0; slot < 6; ++slot)
    q.col(slot) = vec9(basis_tensor(slot, Notation::Mandel));
  const Mat6 a6 = q.transpose() * (psym * e9 * psym + cm9) * q;
  const Mat9 inv_sym = q * spd_inverse(a6) * q.transpose();

  const Mat9 t = cm9 * inv_sym * e9;
  const Mat9 mix = psym * t * pskew + pskew * t * psym;
  const double mix_norm = mix.jacobiSvd().singularValues()(0);
  const double t_norm = t.jacobiSvd().singularValues()(0);
  return mix_norm / t_norm;
}

}  // namespace micromorph
