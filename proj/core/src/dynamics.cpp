#include "micromorph/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace micromorph {

namespace {

Mat9 projector(Mat3 (*part)(const Mat3&)) {
  Mat9 p;
  for (int c = 0; c < 9; ++c) {
    Vec9 unit = Vec9::Zero();
    unit(c) = 1.0;
    p.col(c) = vec9(part(unvec9(unit)));
  }
  return p;
}

Mat3 dev_sym_part(const Mat3& x) {
  return Sym3::from(x).matrix() - x.trace() / 3.0 * Mat3::Identity();
}
Mat3 skew_part(const Mat3& x) { return Skew3::from(x).matrix(); }
Mat3 spherical_part(const Mat3& x) {
  return x.trace() / 3.0 * Mat3::Identity();
}

}  // namespace

PlaneWaveProblem assemble_plane_wave(const RelaxedMaterial& mat, const Vec3& k) {
  mat.validate();
  if (classify_stiffness(mat.c_e) != SymmetryClass::Isotropic ||
      classify_stiffness(mat.c_micro) != SymmetryClass::Isotropic ||
      classify_coupling(mat.c_c) != SymmetryClass::Isotropic)
    throw InvalidParameterError(
        "plane wave assembly supports isotropic phases only");
  if (mat.inertia.lc_hat <= 0.0 || mat.inertia.eta1 <= 0.0 ||
      mat.inertia.eta2 <= 0.0 || mat.inertia.eta3 <= 0.0)
    throw InvalidParameterError(
        "micro inertia must be strictly positive for a definite mass matrix");

  PlaneWaveProblem pw;
  pw.k = k;

  const Mat3 curl_symbol = k.squaredNorm() * Mat3::Identity() - k * k.transpose();
  const double curv = mat.mu * mat.lc * mat.lc;

  // Columns of K are the energy gradients of unit states, so K lands
  // symmetric up to roundoff and is symmetrized bitwise at the end.
  Mat12 kmat = Mat12::Zero();
  for (int c = 0; c < 12; ++c) {
    Vec3 u_hat = Vec3::Zero();
    Mat3 p_hat = Mat3::Zero();
    if (c < 3) {
      u_hat(c) = 1.0;
    } else {
      Vec9 unit = Vec9::Zero();
      unit(c - 3) = 1.0;
      p_hat = unvec9(unit);
    }
    const Mat3 e = u_hat * k.transpose() - p_hat;
    const Mat3 sigma =
        mat.c_e.apply(Sym3::from(e)).matrix() +
        Skew3::from_axial(0.5 * mat.c_c.apply(axl(Skew3::from(e)))).matrix();
    const Vec3 grad_u = sigma * k;
    const Mat3 grad_p = -sigma + mat.c_micro.apply(Sym3::from(p_hat)).matrix() +
                        curv * p_hat * curl_symbol;
    kmat.col(c).head<3>() = grad_u;
    kmat.col(c).tail<9>() = vec9(grad_p);
  }
  for (int r = 0; r < 12; ++r)
    for (int c = r; c < 12; ++c) {
      const double v = 0.5 * (kmat(r, c) + kmat(c, r));
      kmat(r, c) = v;
      kmat(c, r) = v;
    }
  pw.stiffness = kmat;

  const double mfac =
      mat.inertia.rho * mat.inertia.lc_hat * mat.inertia.lc_hat;
  const Mat9 micro_mass = mfac * (mat.inertia.eta1 * projector(dev_sym_part) +
                                  mat.inertia.eta2 * projector(skew_part) +
                                  3.0 * mat.inertia.eta3 * projector(spherical_part));
  pw.mass = Mat12::Zero();
  pw.mass.topLeftCorner<3, 3>() = mat.inertia.rho * Mat3::Identity();
  pw.mass.bottomRightCorner<9, 9>() = 0.5 * (micro_mass + micro_mass.transpose());
  return pw;
}

Eigen::Matrix<double, 12, 1> plane_wave_frequencies(const PlaneWaveProblem& pw) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat12> es(
      pw.stiffness, pw.mass, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success)
    throw EigensolverError("generalized eigensolve failed at |k| = " +
                           std::to_string(pw.k.norm()));
  const auto& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  Eigen::Matrix<double, 12, 1> omega;
  for (int i = 0; i < 12; ++i) {
    double lambda = ev(i);
    if (lambda < -1e-10 * scale)
      throw EigensolverError(
          "negative squared frequency " + std::to_string(lambda) +
          " at |k| = " + std::to_string(pw.k.norm()));
    omega(i) = std::sqrt(std::max(lambda, 0.0));
  }
  return omega;
}

DispersionResult dispersion_sweep(const RelaxedMaterial& mat,
                                  const Vec3& direction, double k_max,
                                  int n_points) {
  if (n_points < 1) throw InvalidParameterError("n_points must be positive");
  if (k_max <= 0.0) throw InvalidParameterError("k_max must be positive");
  const double dn = direction.norm();
  if (dn < 1e-14)
    throw InvalidParameterError("propagation direction must be nonzero");
  const Vec3 dir = direction / dn;

  DispersionResult out;
  out.k.reserve(static_cast<size_t>(n_points));
  out.omega.reserve(static_cast<size_t>(n_points));
  for (int j = 1; j <= n_points; ++j) {
    const double kj = k_max * j / n_points;
    const PlaneWaveProblem pw = assemble_plane_wave(mat, kj * dir);
    const auto omega = plane_wave_frequencies(pw);
    out.k.push_back(kj);
    std::array<double, 12> row;
    for (int i = 0; i < 12; ++i) row[static_cast<size_t>(i)] = omega(i);
    out.omega.push_back(row);
  }
  return out;
}

AcousticSpeeds acoustic_slopes(const DispersionResult& sweep, double k_window) {
  AcousticSpeeds out;
  for (int b = 0; b < 3; ++b) {
    double skw = 0.0, skk = 0.0;
    int count = 0;
    for (size_t i = 0; i < sweep.k.size(); ++i) {
      if (sweep.k[i] > k_window) continue;
      skw += sweep.k[i] * sweep.omega[i][static_cast<size_t>(b)];
      skk += sweep.k[i] * sweep.k[i];
      ++count;
    }
    if (count < 2)
      throw InsufficientSamplesError(
          "acoustic slope fit needs at least two samples with k <= " +
          std::to_string(k_window) + ", got " + std::to_string(count));
    out.slopes[static_cast<size_t>(b)] = skw / skk;
  }
  out.cs = 0.5 * (out.slopes[0] + out.slopes[1]);
  out.cp = out.slopes[2];
  return out;
}

}  // namespace micromorph
