#include "micromorph/coupling.hpp"

#include <cmath>
#include <string>

#include "micromorph/linalg.hpp"

namespace micromorph {

Coupling3 Coupling3::from_upper(const Mat3& m) {
  Coupling3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      c.m_(i, j) = m(i, j);
      c.m_(j, i) = m(i, j);
    }
  return c;
}

Coupling3 Coupling3::checked(const Mat3& m, double tol) {
  const double scale = m.cwiseAbs().maxCoeff();
  std::string bad;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol * scale) {
        if (!bad.empty()) bad += ", ";
        bad += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      }
  if (!bad.empty())
    throw SymmetryError("3x3 coupling matrix asymmetric beyond tolerance at " +
                        bad);
  return from_upper(0.5 * (m + m.transpose()));
}

Coupling3 iso_arithm(const Coupling3& c) {
  return Coupling3::from_upper(c.matrix().trace() / 3.0 * Mat3::Identity());
}

Coupling3 iso_log(const Coupling3& c) {
  const auto [emin, emax] = sym_eig_range(c.matrix());
  const double scale = std::max(std::abs(emin), std::abs(emax));
  const double floor = 1e-12 * scale;
  if (emin < -floor)
    throw NotSpdError("geometric isotropy projection needs a semidefinite input "
                      "(min eig " + std::to_string(emin) + ")");
  if (emin <= floor) return Coupling3();
  const double det = c.matrix().determinant();
  return Coupling3::from_upper(std::cbrt(det) * Mat3::Identity());
}

Coupling3 iso_harm(const Coupling3& c) {
  const Mat3 inv = spd_inverse(c.matrix());
  return Coupling3::from_upper(3.0 / inv.trace() * Mat3::Identity());
}

}  // namespace micromorph
