#pragma once

#include "micromorph/types.hpp"

namespace micromorph {

// Rotational coupling operator in its axial 3x3 form: the quadratic energy
// of a skew argument A is <Coupling3 axl(A), axl(A)>.  Symmetric bitwise.
class Coupling3 {
 public:
  Coupling3() : m_(Mat3::Zero()) {}

  static Coupling3 from_upper(const Mat3& m);
  static Coupling3 checked(const Mat3& m, double tol = 1e-9);

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  Vec3 apply(const Vec3& w) const { return m_ * w; }
  double quad(const Vec3& w) const { return w.dot(m_ * w); }

 private:
  Mat3 m_;
};

// Scalar multiple of the identity closest to the input in the mean sense of
// each family.  All three fix gamma * I exactly.

// Arithmetic mean of the eigenvalues.  Not stable under inversion: the
// projection of the inverse is generally not the inverse of the projection.
Coupling3 iso_arithm(const Coupling3& c);

// Geometric mean of the eigenvalues, det(C)^(1/3) * I.  Commutes with
// inversion.  Returns the zero operator when any eigenvalue is zero to
// working precision; throws NotSpdError on a negative eigenvalue.
Coupling3 iso_log(const Coupling3& c);

// Harmonic mean of the eigenvalues, the inverted arithmetic projection of
// the inverse.  Commutes with inversion; requires a definite input.
Coupling3 iso_harm(const Coupling3& c);

}  // namespace micromorph
