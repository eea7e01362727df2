#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>

#include "micromorph/types.hpp"

namespace micromorph {

// Eigenvalue range (min, max) of a symmetric matrix.
template <typename Derived>
std::pair<double, double> sym_eig_range(const Eigen::MatrixBase<Derived>& a) {
  Eigen::SelfAdjointEigenSolver<typename Derived::PlainObject> es(a.derived());
  if (es.info() != Eigen::Success)
    throw EigensolverError("symmetric eigendecomposition failed");
  const auto& ev = es.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

// Inverse of a symmetric positive definite matrix through its spectral
// decomposition.  Refuses inputs whose smallest eigenvalue falls at or
// below rel_floor times the largest magnitude, so near-singular operators
// fail loudly instead of amplifying noise.
template <typename Derived>
typename Derived::PlainObject spd_inverse(const Eigen::MatrixBase<Derived>& a,
                                          double rel_floor = 1e-12) {
  using Plain = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<Plain> es(a.derived());
  if (es.info() != Eigen::Success)
    throw EigensolverError("symmetric eigendecomposition failed");
  const auto& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  if (ev.minCoeff() <= rel_floor * scale || scale == 0.0)
    throw SingularMatrixError(
        "matrix is singular or indefinite to working precision (min eig " +
        std::to_string(ev.minCoeff()) + ", max |eig| " + std::to_string(scale) +
        ")");
  Plain inv = es.eigenvectors() * ev.cwiseInverse().asDiagonal() *
              es.eigenvectors().transpose();
  // Mirror the upper triangle so the result is symmetric bitwise.
  for (int i = 0; i < inv.rows(); ++i)
    for (int j = i + 1; j < inv.cols(); ++j) inv(j, i) = inv(i, j);
  return inv;
}

}  // namespace micromorph
