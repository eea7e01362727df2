#include "micromorph/tensor.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "micromorph/linalg.hpp"

namespace micromorph {

CartanParts cartan_decompose(const Mat3& x) {
  CartanParts p;
  p.trace = x.trace();
  const Sym3 s = Sym3::from(x);
  p.dev_sym = Sym3::from_upper(s.matrix() - p.trace / 3.0 * Mat3::Identity());
  p.skew = Skew3::from(x);
  return p;
}

Vec3 axl(const Skew3& a) {
  return Vec3(-a(1, 2), a(0, 2), -a(0, 1));
}

Mat3 basis_tensor(int slot, Notation n) {
  Mat3 b = Mat3::Zero();
  const auto [i, j] = kSlotIndex[static_cast<size_t>(slot)];
  if (i == j) {
    b(i, i) = 1.0;
  } else {
    const double w = half_shear_factor(n);
    b(i, j) = w;
    b(j, i) = w;
  }
  return b;
}

Mat3 dual_basis_tensor(int slot, Notation n) {
  Mat3 b = Mat3::Zero();
  const auto [i, j] = kSlotIndex[static_cast<size_t>(slot)];
  if (i == j) {
    b(i, i) = 1.0;
  } else {
    const double w = inv_shear_factor(n);
    b(i, j) = w;
    b(j, i) = w;
  }
  return b;
}

Vec6 sym_to_vec(const Sym3& s, Notation n) {
  const double c = shear_factor(n);
  Vec6 v;
  v << s(0, 0), s(1, 1), s(2, 2), c * s(1, 2), c * s(0, 2), c * s(0, 1);
  return v;
}

Sym3 vec_to_sym(const Vec6& v, Notation n) {
  const double w = inv_shear_factor(n);
  Mat3 m;
  m(0, 0) = v(0);
  m(1, 1) = v(1);
  m(2, 2) = v(2);
  m(1, 2) = w * v(3);
  m(0, 2) = w * v(4);
  m(0, 1) = w * v(5);
  return Sym3::from_upper(m);
}

Mat6 vec_norm_weight(Notation n) {
  const double c = shear_factor(n);
  Mat6 w = Mat6::Identity();
  for (int a = 3; a < 6; ++a) w(a, a) = 2.0 / (c * c);
  return w;
}

StiffnessVoigt StiffnessVoigt::from_upper(const Mat6& m, Notation n) {
  StiffnessVoigt cv;
  cv.conv_ = n;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) {
      cv.m_(a, b) = m(a, b);
      cv.m_(b, a) = m(a, b);
    }
  return cv;
}

StiffnessVoigt StiffnessVoigt::checked(const Mat6& m, Notation n, double tol) {
  const double scale = m.cwiseAbs().maxCoeff();
  std::string bad;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (std::abs(m(a, b) - m(b, a)) > tol * scale) {
        if (!bad.empty()) bad += ", ";
        bad += "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
      }
  if (!bad.empty())
    throw SymmetryError("6x6 matrix asymmetric beyond tolerance at " + bad);
  return from_upper(0.5 * (m + m.transpose()), n);
}

StiffnessVoigt StiffnessVoigt::converted(Notation target) const {
  if (target == conv_) return *this;
  const double f = shear_factor(conv_) / shear_factor(target);
  Mat6 d = Mat6::Identity();
  for (int a = 3; a < 6; ++a) d(a, a) = f;
  return from_upper(d * m_ * d, target);
}

Sym3 StiffnessVoigt::apply(const Sym3& s) const {
  const Vec6 t = m_ * sym_to_vec(s, conv_);
  const double w = half_shear_factor(conv_);
  Mat3 out;
  out(0, 0) = t(0);
  out(1, 1) = t(1);
  out(2, 2) = t(2);
  out(1, 2) = w * t(3);
  out(0, 2) = w * t(4);
  out(0, 1) = w * t(5);
  return Sym3::from_upper(out);
}

double StiffnessVoigt::quad(const Sym3& s) const {
  const Vec6 v = sym_to_vec(s, conv_);
  return v.dot(m_ * v);
}

Tensor4Sym::Tensor4Sym() { c_.fill(0.0); }

void Tensor4Sym::set_entry(int i, int j, int k, int l, double v) {
  c_[static_cast<size_t>(((i * 3 + j) * 3 + k) * 3 + l)] = v;
}

Sym3 Tensor4Sym::apply(const Sym3& s) const {
  Mat3 out = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) acc += at(i, j, k, l) * s(k, l);
      out(i, j) = acc;
    }
  return Sym3::from_upper(out);
}

Mat9 Tensor4Sym::mat9() const {
  Mat9 m;
  for (int r = 0; r < 9; ++r)
    for (int s = 0; s < 9; ++s)
      m(r, s) = at(r / 3, r % 3, s / 3, s % 3);
  return m;
}

Tensor4Sym Tensor4Sym::from_components(const std::array<double, 81>& c,
                                       double tol) {
  const auto at = [&c](int i, int j, int k, int l) {
    return c[static_cast<size_t>(((i * 3 + j) * 3 + k) * 3 + l)];
  };
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          if (std::abs(at(i, j, k, l) - at(j, i, k, l)) > tol * scale ||
              std::abs(at(i, j, k, l) - at(i, j, l, k)) > tol * scale)
            throw SymmetryError("fourth order tensor lacks a minor symmetry at (" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                "," + std::to_string(k + 1) + "," +
                                std::to_string(l + 1) + ")");
          if (std::abs(at(i, j, k, l) - at(k, l, i, j)) > tol * scale)
            throw SymmetryError("fourth order tensor lacks the major symmetry at (" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                "," + std::to_string(k + 1) + "," +
                                std::to_string(l + 1) + ")");
        }
  Tensor4Sym t;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = k; l < 3; ++l) {
          if (3 * i + j > 3 * k + l) continue;
          const double v =
              (at(i, j, k, l) + at(j, i, k, l) + at(i, j, l, k) + at(j, i, l, k) +
               at(k, l, i, j) + at(l, k, i, j) + at(k, l, j, i) + at(l, k, j, i)) /
              8.0;
          for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}})
            for (auto [p, q] : {std::pair{k, l}, std::pair{l, k}}) {
              t.set_entry(a, b, p, q, v);
              t.set_entry(p, q, a, b, v);
            }
        }
  return t;
}

Vec9 vec9(const Mat3& x) {
  Vec9 v;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(3 * i + j) = x(i, j);
  return v;
}

Mat3 unvec9(const Vec9& v) {
  Mat3 x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(i, j) = v(3 * i + j);
  return x;
}

Tensor4Full Tensor4Full::from_matrix9(const Mat9& m) {
  Tensor4Full t;
  for (int r = 0; r < 9; ++r)
    for (int s = r; s < 9; ++s) {
      const double v = 0.5 * (m(r, s) + m(s, r));
      t.m_(r, s) = v;
      t.m_(s, r) = v;
    }
  return t;
}

Tensor4Full Tensor4Full::isotropic(double mu_e, double lambda_e, double mu_c) {
  Mat9 m;
  for (int r = 0; r < 9; ++r)
    for (int s = 0; s < 9; ++s) {
      const int i = r / 3, j = r % 3, k = s / 3, l = s % 3;
      const double same = (i == k && j == l) ? 1.0 : 0.0;
      const double swapped = (i == l && j == k) ? 1.0 : 0.0;
      const double spherical = (i == j && k == l) ? 1.0 : 0.0;
      m(r, s) = mu_e * (same + swapped) + lambda_e * spherical +
                mu_c * (same - swapped);
    }
  return from_matrix9(m);
}

Tensor4Full Tensor4Full::from_sym_and_axial(const StiffnessVoigt& sym_part,
                                            const Mat3& axial_coupling) {
  // axl(skew X) as a linear map on row-major 9-vectors.
  Eigen::Matrix<double, 3, 9> l = Eigen::Matrix<double, 3, 9>::Zero();
  l(0, 5) = -0.5;
  l(0, 7) = 0.5;
  l(1, 2) = 0.5;
  l(1, 6) = -0.5;
  l(2, 1) = -0.5;
  l(2, 3) = 0.5;
  const Mat9 m = tensor4_from_voigt(sym_part).mat9() +
                 l.transpose() * axial_coupling * l;
  return from_matrix9(m);
}

Tensor4Sym tensor4_from_voigt(const StiffnessVoigt& cv) {
  const double w = half_shear_factor(cv.convention());
  Tensor4Sym t;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const auto [i, j] = kSlotIndex[static_cast<size_t>(a)];
      const auto [k, l] = kSlotIndex[static_cast<size_t>(b)];
      const double wa = (i == j) ? 1.0 : w;
      const double wb = (k == l) ? 1.0 : w;
      const double v = wa * wb * cv(a, b);
      t.set_entry(i, j, k, l, v);
      t.set_entry(j, i, k, l, v);
      t.set_entry(i, j, l, k, v);
      t.set_entry(j, i, l, k, v);
    }
  return t;
}

StiffnessVoigt voigt_from_tensor4(const Tensor4Sym& c, Notation n) {
  const double g = 2.0 * inv_shear_factor(n);
  Mat6 m;
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b) {
      const auto [i, j] = kSlotIndex[static_cast<size_t>(a)];
      const auto [k, l] = kSlotIndex[static_cast<size_t>(b)];
      const double ga = (i == j) ? 1.0 : g;
      const double gb = (k == l) ? 1.0 : g;
      m(a, b) = ga * gb * c.at(i, j, k, l);
    }
  return StiffnessVoigt::from_upper(m.selfadjointView<Eigen::Upper>(), n);
}

StiffnessVoigt voigt_from_tensor4(const Tensor4Full& c, Notation n, double tol) {
  std::array<double, 81> comps;
  const Mat9& m = c.mat9();
  for (int r = 0; r < 9; ++r)
    for (int s = 0; s < 9; ++s)
      comps[static_cast<size_t>(9 * r + s)] = m(r, s);
  return voigt_from_tensor4(Tensor4Sym::from_components(comps, tol), n);
}

double check_inverse_mapping_identity(const StiffnessVoigt& cv) {
  const auto [emin, emax] = sym_eig_range(cv.matrix());
  const double scale = std::max(std::abs(emin), std::abs(emax));
  if (scale == 0.0 || emin <= 1e-12 * scale)
    throw SingularMatrixError(
        "6x6 stiffness is singular to working precision (min eig " +
        std::to_string(emin) + ")");

  // Operator inverse on symmetric matrices: the 9x9 image has exactly six
  // active eigenpairs (skew directions are annihilated by the minor
  // symmetries), so inverting the six largest gives the restricted inverse
  // without touching the 6-slot machinery.
  const Mat9 a9 = tensor4_from_voigt(cv).mat9();
  Eigen::SelfAdjointEigenSolver<Mat9> es(a9);
  if (es.info() != Eigen::Success)
    throw EigensolverError("eigendecomposition of the 9x9 image failed");
  Mat9 pinv = Mat9::Zero();
  for (int m = 3; m < 9; ++m) {
    const Vec9 q = es.eigenvectors().col(m);
    pinv += (1.0 / es.eigenvalues()(m)) * q * q.transpose();
  }

  // Componentwise image of the inverted 6x6 form, dual weights on both sides.
  const Mat6 cinv = spd_inverse(cv.matrix());
  const double h = inv_shear_factor(cv.convention());
  Mat9 mapped;
  for (int r = 0; r < 9; ++r)
    for (int s = 0; s < 9; ++s) {
      const int i = r / 3, j = r % 3, k = s / 3, l = s % 3;
      const int a = (i == j) ? i : 6 - i - j;  // slot of the pair (i, j)
      const int b = (k == l) ? k : 6 - k - l;
      const double ha = (i == j) ? 1.0 : h;
      const double hb = (k == l) ? 1.0 : h;
      mapped(r, s) = ha * hb * cinv(a, b);
    }

  return (pinv - mapped).cwiseAbs().maxCoeff() / mapped.cwiseAbs().maxCoeff();
}

}  // namespace micromorph
