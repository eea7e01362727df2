#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace micromorph {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec9 = Eigen::Matrix<double, 9, 1>;
using Mat9 = Eigen::Matrix<double, 9, 9>;
using Mat12 = Eigen::Matrix<double, 12, 12>;

// Second order tensors in 6-vector form use the component order
// (11, 22, 33, 23, 13, 12).  Off-diagonal slots carry a factor c:
// c = 2 doubles shears (engineering strain), c = sqrt(2) keeps the
// 6-vector norm equal to the tensor norm.
enum class Notation { Voigt, Mandel };

inline double shear_factor(Notation n) {
  return n == Notation::Voigt ? 2.0 : std::sqrt(2.0);
}

// c/2, the weight the 6->9 component map places on off-diagonal slots.
inline double half_shear_factor(Notation n) {
  return n == Notation::Voigt ? 1.0 : std::sqrt(0.5);
}

// 1/c, the weight of the inverse map.  Equal to c/2 exactly when c = sqrt(2).
inline double inv_shear_factor(Notation n) {
  return n == Notation::Voigt ? 0.5 : std::sqrt(0.5);
}

inline const char* to_string(Notation n) {
  return n == Notation::Voigt ? "voigt" : "mandel";
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix expected to be symmetric is not, beyond the stated tolerance.
struct SymmetryError : Error {
  using Error::Error;
};

// Matrix required to be (semi)definite has a forbidden eigenvalue.
struct NotSpdError : Error {
  using Error::Error;
};

// Inversion requested for a numerically singular matrix.
struct SingularMatrixError : Error {
  using Error::Error;
};

// Operands carry different 6-vector conventions.
struct ConventionMismatchError : Error {
  using Error::Error;
};

// Wrong parameter count, out-of-domain argument, malformed request.
struct InvalidParameterError : Error {
  using Error::Error;
};

// Relaxation stiffness would have to be negative: macro >= micro somewhere.
struct StiffnessExceedsMicroError : Error {
  using Error::Error;
};

// micro - macro is singular to working precision; the inverse relation blows up.
struct MicroEqualsMacroError : Error {
  using Error::Error;
};

// Generalized eigensolve failed or produced a meaningfully negative omega^2.
struct EigensolverError : Error {
  using Error::Error;
};

// Structured text input could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

// Not enough samples in the requested fit window.
struct InsufficientSamplesError : Error {
  using Error::Error;
};

// Symmetric 3x3 built by mirroring the upper triangle, so the symmetry
// holds bitwise, not just within roundoff.
class Sym3 {
 public:
  Sym3() : m_(Mat3::Zero()) {}

  static Sym3 from(const Mat3& x) {
    Sym3 s;
    for (int i = 0; i < 3; ++i) {
      s.m_(i, i) = x(i, i);
      for (int j = i + 1; j < 3; ++j) {
        const double v = 0.5 * (x(i, j) + x(j, i));
        s.m_(i, j) = v;
        s.m_(j, i) = v;
      }
    }
    return s;
  }

  // Accepts a matrix that is already symmetric; mirrors its upper triangle.
  static Sym3 from_upper(const Mat3& x) {
    Sym3 s;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        s.m_(i, j) = x(i, j);
        s.m_(j, i) = x(i, j);
      }
    return s;
  }

  static Sym3 identity() { return from_upper(Mat3::Identity()); }

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace(); }
  double squared_norm() const { return m_.squaredNorm(); }

  Sym3 operator+(const Sym3& o) const { return from_upper(m_ + o.m_); }
  Sym3 operator-(const Sym3& o) const { return from_upper(m_ - o.m_); }
  Sym3 operator*(double a) const { return from_upper(a * m_); }

 private:
  Mat3 m_;
};

inline Sym3 operator*(double a, const Sym3& s) { return s * a; }

// Skew 3x3 built from the upper triangle, zero diagonal bitwise.
class Skew3 {
 public:
  Skew3() : m_(Mat3::Zero()) {}

  static Skew3 from(const Mat3& x) {
    Skew3 a;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double v = 0.5 * (x(i, j) - x(j, i));
        a.m_(i, j) = v;
        a.m_(j, i) = -v;
      }
    return a;
  }

  // Inverse of the axial-vector read-off: the returned A satisfies
  // A v = w x v for every v.
  static Skew3 from_axial(const Vec3& w) {
    Skew3 a;
    a.m_(0, 1) = -w(2);
    a.m_(1, 0) = w(2);
    a.m_(0, 2) = w(1);
    a.m_(2, 0) = -w(1);
    a.m_(1, 2) = -w(0);
    a.m_(2, 1) = w(0);
    return a;
  }

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double squared_norm() const { return m_.squaredNorm(); }

 private:
  Mat3 m_;
};

inline double inner(const Mat3& a, const Mat3& b) {
  return (a.array() * b.array()).sum();
}

inline double inner(const Sym3& a, const Sym3& b) {
  return inner(a.matrix(), b.matrix());
}

}  // namespace micromorph
