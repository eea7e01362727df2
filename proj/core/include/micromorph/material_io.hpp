#pragma once

#include <optional>
#include <string>
#include <vector>

#include "micromorph/anisotropy.hpp"
#include "micromorph/energy.hpp"

namespace micromorph {

// Parsed material description.  Sections [micro], [e], [macro] hold 6x6
// stiffnesses given either as a symmetry class with named moduli or as six
// rows of six numbers after a bare "matrix" line; [coupling] and
// [curvature_skew] hold 3x3 axial operators the same way; [curvature_sym]
// a 6x6 weight; [scalars] the loose reals.  A top-level "convention" line
// selects voigt or mandel slot scaling for everything in the file.
struct MaterialFile {
  Notation convention = Notation::Voigt;
  std::optional<StiffnessVoigt> micro;
  std::optional<StiffnessVoigt> e;
  std::optional<StiffnessVoigt> macro;
  std::optional<Coupling3> coupling;
  std::optional<StiffnessVoigt> curvature_sym;
  std::optional<Coupling3> curvature_skew;
  double mu = 1.0;
  double lc = 0.0;
  double rho = 1.0;
  double lc_hat = 1.0;
  double eta1 = 1.0;
  double eta2 = 1.0;
  double eta3 = 1.0;
  std::vector<std::string> warnings;
};

// Throws ParseError for malformed input and SymmetryError when a raw
// matrix is asymmetric beyond tol relative to its largest entry.
MaterialFile parse_material_text(const std::string& text, double tol = 1e-9);
MaterialFile parse_material_file(const std::string& path, double tol = 1e-9);

// Kinematic sample from sections [grad_u], [p], [curl_p], [p_dot], each a
// 3x3 matrix block; absent sections stay zero.
KinematicState parse_state_text(const std::string& text);
KinematicState parse_state_file(const std::string& path);

// Constitutive bundle from a parsed file.  Requires micro and e; coupling
// defaults to zero, curvature weights to the plain squared-norm weights
// (which make the curvature term (mu Lc^2 / 2) |Curl P|^2).
RelaxedMaterial make_relaxed_material(const MaterialFile& mf);

// Shortest decimal form at 12 significant digits; reparsing keeps values
// to ~5e-12 relative.
std::string format_number(double v);

// FNV-1a hash of a byte string, fixed-width hex; stable across platforms.
std::string content_digest(const std::string& bytes);

}  // namespace micromorph
