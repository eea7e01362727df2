#pragma once

#include <array>
#include <variant>
#include <vector>

#include "micromorph/coupling.hpp"
#include "micromorph/linalg.hpp"
#include "micromorph/tensor.hpp"
#include "micromorph/types.hpp"

namespace micromorph {

// Material symmetry classes in the natural (crystallographic) frame.
// Tetragonal and Monoclinic only occur for the rotational coupling.
enum class SymmetryClass {
  Isotropic,
  Cubic,
  Orthotropic,
  Tetragonal,
  Monoclinic,
  Triclinic,
};

const char* to_string(SymmetryClass c);

struct IsotropicParams {
  double lambda = 0.0;
  double mu = 0.0;
  double kappa() const { return lambda + 2.0 * mu / 3.0; }
};

struct CubicParams {
  double kappa = 0.0;
  double mu = 0.0;
  double mu_star = 0.0;
};

// Literal 6x6 entries in the active convention, in the order
// C11, C22, C33, C12, C13, C23, C44, C55, C66.
struct OrthotropicParams {
  std::array<double, 9> c{};
};

using MaterialSpec = std::variant<IsotropicParams, CubicParams, OrthotropicParams>;

StiffnessVoigt build_isotropic(double lambda, double mu, Notation n);
StiffnessVoigt build_cubic(double kappa, double mu, double mu_star, Notation n);
StiffnessVoigt build_orthotropic(const OrthotropicParams& p, Notation n);
StiffnessVoigt build_stiffness(const MaterialSpec& spec, Notation n);

// Axial 3x3 coupling with the zero pattern of the requested class.
// Parameter counts: isotropic and cubic take {mu_c} and return (mu_c/2) I;
// tetragonal {a, b} -> diag(a, a, b); orthotropic {a, b, c} -> diag;
// monoclinic {a11, a22, a33, a13}; triclinic {a11, a22, a33, a23, a13, a12}.
Coupling3 build_coupling(SymmetryClass c, const std::vector<double>& params);

// Most specific class whose template constraints hold within tol relative
// to the largest entry, probing Isotropic, Cubic, Orthotropic in order and
// falling through to Triclinic.  Natural frame only: a rotated matrix of a
// higher class is reported as Triclinic.
SymmetryClass classify_stiffness(const StiffnessVoigt& cv, double tol = 1e-9);

// Counterpart for the axial coupling, probing Isotropic, Tetragonal,
// Orthotropic, Monoclinic in order.
SymmetryClass classify_coupling(const Coupling3& cc, double tol = 1e-9);

// Block parameters read off the template positions.  Meaningful when the
// matrix classifies accordingly.
IsotropicParams isotropic_parameters(const StiffnessVoigt& cv);
CubicParams cubic_parameters(const StiffnessVoigt& cv);

enum class Definiteness { Strict, Semi };

struct SpdReport {
  bool ok = false;
  double min_eig = 0.0;
  double max_abs_eig = 0.0;
};

// Eigenvalue-based definiteness check.  Strict demands the smallest
// eigenvalue exceed 1e-12 of the largest magnitude; Semi tolerates the
// same margin below zero.  The zero matrix is semidefinite, not definite.
template <typename Derived>
SpdReport check_positive_definite(const Eigen::MatrixBase<Derived>& m,
                                  Definiteness mode) {
  const auto [emin, emax] = sym_eig_range(0.5 * (m.derived() + m.derived().transpose()).eval());
  SpdReport r;
  r.min_eig = emin;
  r.max_abs_eig = std::max(std::abs(emin), std::abs(emax));
  r.ok = (mode == Definiteness::Strict) ? emin > 1e-12 * r.max_abs_eig
                                        : emin >= -1e-12 * r.max_abs_eig;
  return r;
}

inline SpdReport check_positive_definite(const StiffnessVoigt& cv,
                                         Definiteness mode) {
  return check_positive_definite(cv.matrix(), mode);
}

inline SpdReport check_positive_definite(const Coupling3& cc, Definiteness mode) {
  return check_positive_definite(cc.matrix(), mode);
}

// Algebraic constraints a micro-distortion sample satisfies in each reduced
// theory obtained by restricting the micro kinematics.
enum class LimitingCase {
  Cosserat,            // sym P == 0
  MicroDilation,       // P is a multiple of the identity
  MicroIncompressible, // tr P == 0
  MicroStretch,        // P is spherical plus skew (dev sym P == 0)
  MicroStrain,         // skew P == 0
};

const char* to_string(LimitingCase c);

bool limiting_case_predicate(LimitingCase c, const Mat3& micro_distortion,
                             double tol = 1e-12);

}  // namespace micromorph
