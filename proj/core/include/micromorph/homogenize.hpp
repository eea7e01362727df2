#pragma once

#include <utility>

#include "micromorph/anisotropy.hpp"
#include "micromorph/coupling.hpp"
#include "micromorph/tensor.hpp"

namespace micromorph {

// Result of composing a micro stiffness with a relaxation stiffness into
// the long-wavelength effective stiffness, with the numerical health of
// the product attached.
struct HomogenizationResult {
  StiffnessVoigt macro;
  // Largest asymmetry of the raw triple product relative to its largest
  // entry, before the result is symmetrized.
  double asymmetry = 0.0;
  SpdReport macro_spd;
  // Relative gap between twice the macro stiffness and the harmonic mean
  // of the inputs; the two coincide in exact arithmetic.
  double harmonic_residual = 0.0;
  // Definiteness of micro minus macro.  A sound pair leaves this strictly
  // positive: the composite is softer than its stiffest ingredient.
  SpdReport smaller_than_micro;
};

// macro = micro (micro + e)^{-1} e.  Both inputs must be symmetric positive
// definite and carry the same convention.  The product is evaluated through
// spectral inverses and symmetrized at the end; the pre-symmetrization
// asymmetry is reported, not silently discarded.
HomogenizationResult macro_from_micro_e(const StiffnessVoigt& micro,
                                        const StiffnessVoigt& e);

// Inverse problem: the relaxation stiffness reproducing a measured macro
// stiffness under a given micro stiffness, micro (micro - macro)^{-1} macro.
// Throws StiffnessExceedsMicroError when micro - macro has an eigenvalue
// below -1e-10 of the micro scale and MicroEqualsMacroError when the
// difference is singular within that margin.
StiffnessVoigt e_from_micro_macro(const StiffnessVoigt& micro,
                                  const StiffnessVoigt& macro);

// [ (A^{-1} + B^{-1}) / 2 ]^{-1}, the operator harmonic mean.  Equals twice
// the macro stiffness of the pair (A, B).
StiffnessVoigt harmonic_mean(const StiffnessVoigt& a, const StiffnessVoigt& b);

// Scalar closed forms per symmetry class.  Each modulus pairs off
// harmonically, independently of the others.
std::pair<double, double> iso_closed_form(double kappa_e, double mu_e,
                                          double kappa_micro, double mu_micro);
CubicParams cubic_closed_form(const CubicParams& e, const CubicParams& micro);

// Orthotropic closed form: the coupled 3x3 upper block composes like the
// full relation restricted to that block, the three shear entries pair off
// entrywise.
StiffnessVoigt ortho_closed_form(const StiffnessVoigt& e,
                                 const StiffnessVoigt& micro);

// Micro distortion approached in the long-wavelength limit under a
// homogeneous displacement gradient.  The symmetric part is
// (micro + e)^{-1} e : sym(grad_u).  The skew part equals skew(grad_u)
// only when the rotational coupling is definite; otherwise it is not
// determined by the equilibrium equations and is flagged as such.
struct MacroLimitDistortion {
  Mat3 p = Mat3::Zero();
  bool skew_determinate = false;
};

MacroLimitDistortion limit_micro_distortion(const StiffnessVoigt& e,
                                            const StiffnessVoigt& micro,
                                            const Coupling3& coupling,
                                            const Mat3& grad_u);

// Micro distortion selected by an unbounded curvature penalty: spatially
// constant, tied to the average strain.  micro_stress equals the macro
// stiffness applied to the average strain.
struct MicroLimit {
  Sym3 sym_p;
  Sym3 micro_stress;
};

MicroLimit micro_limit_relation(const StiffnessVoigt& e,
                                const StiffnessVoigt& micro,
                                const Sym3& avg_strain);

// How far the composition micro (ee + micro)^{-1} ee of a full 9x9 elastic
// operator is from preserving the symmetric/skew split, measured as the
// spectral norm of the mixing blocks relative to the whole operator.
// Zero exactly when ee itself is block diagonal in that split.
double mindlin_reduction_residual(const Tensor4Full& ee,
                                  const StiffnessVoigt& micro);

}  // namespace micromorph
