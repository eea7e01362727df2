#pragma once

#include <random>

#include "micromorph/anisotropy.hpp"
#include "micromorph/tensor.hpp"

// Deterministic random material generators shared by the test suites.
// Every suite seeds its own engine so tests stay order-independent.

namespace testsup {

using namespace micromorph;

inline Mat6 random_spd6(std::mt19937& rng, double eig_lo = 0.5,
                        double eig_hi = 10.0) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> eig(eig_lo, eig_hi);
  Mat6 a;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) a(i, j) = unit(rng);
  Eigen::HouseholderQR<Mat6> qr(a);
  Mat6 q = qr.householderQ();
  Vec6 d;
  for (int i = 0; i < 6; ++i) d(i) = eig(rng);
  Mat6 m = q * d.asDiagonal() * q.transpose();
  return 0.5 * (m + m.transpose());
}

inline Mat3 random_spd3(std::mt19937& rng, double eig_lo = 0.5,
                        double eig_hi = 10.0) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> eig(eig_lo, eig_hi);
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = unit(rng);
  Eigen::HouseholderQR<Mat3> qr(a);
  Mat3 q = qr.householderQ();
  Vec3 d;
  for (int i = 0; i < 3; ++i) d(i) = eig(rng);
  Mat3 m = q * d.asDiagonal() * q.transpose();
  return 0.5 * (m + m.transpose());
}

inline Mat3 random_mat3(std::mt19937& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> unit(-scale, scale);
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = unit(rng);
  return a;
}

inline Mat3 random_rotation(std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Quaterniond q(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
  q.normalize();
  return q.toRotationMatrix();
}

inline StiffnessVoigt random_spd_stiffness(std::mt19937& rng, Notation n,
                                           double eig_lo = 0.5,
                                           double eig_hi = 10.0) {
  return StiffnessVoigt::from_upper(random_spd6(rng, eig_lo, eig_hi), n);
}

// Random SPD stiffness of a given symmetry class in the natural frame.
inline StiffnessVoigt random_isotropic(std::mt19937& rng, Notation n) {
  std::uniform_real_distribution<double> pos(0.3, 5.0);
  const double mu = pos(rng);
  const double kappa = pos(rng);
  return build_isotropic(kappa - 2.0 * mu / 3.0, mu, n);
}

inline StiffnessVoigt random_cubic(std::mt19937& rng, Notation n) {
  std::uniform_real_distribution<double> pos(0.3, 5.0);
  return build_cubic(pos(rng), pos(rng), pos(rng), n);
}

inline StiffnessVoigt random_orthotropic(std::mt19937& rng, Notation n) {
  std::uniform_real_distribution<double> diag(4.0, 12.0);
  std::uniform_real_distribution<double> off(0.2, 1.5);
  std::uniform_real_distribution<double> shear(1.0, 6.0);
  OrthotropicParams p;
  p.c = {diag(rng), diag(rng), diag(rng), off(rng),   off(rng),
         off(rng),  shear(rng), shear(rng), shear(rng)};
  return build_orthotropic(p, n);
}

inline double rel_diff(const Mat6& a, const Mat6& b) {
  const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  if (scale == 0.0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

inline double rel_diff(const Mat3& a, const Mat3& b) {
  const double scale = std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
  if (scale == 0.0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace testsup
