#pragma once

#include <array>

#include "micromorph/types.hpp"

namespace micromorph {

// Orthogonal split of an arbitrary 3x3 matrix into trace-free symmetric,
// skew and spherical parts.  The three pieces sum back to the input and
// their squared norms add up to the squared norm of the input.
struct CartanParts {
  Sym3 dev_sym;
  Skew3 skew;
  double trace = 0.0;

  Sym3 spherical() const { return Sym3::from_upper(trace / 3.0 * Mat3::Identity()); }
  Mat3 reassemble() const {
    return dev_sym.matrix() + skew.matrix() + trace / 3.0 * Mat3::Identity();
  }
};

CartanParts cartan_decompose(const Mat3& x);

// Axial vector of a skew matrix: (-A23, A13, -A12).
Vec3 axl(const Skew3& a);
inline Vec3 axl(const Mat3& x) { return axl(Skew3::from(x)); }

// Index pairs backing the 6-slot order (11, 22, 33, 23, 13, 12).
inline constexpr std::array<std::pair<int, int>, 6> kSlotIndex = {
    {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}};

// Component matrices of the 6-vector <-> tensor maps.  basis_tensor
// carries weight c/2 on off-diagonal slots, dual_basis_tensor weight 1/c;
// contracting one against the other gives the identity on slot indices.
Mat3 basis_tensor(int slot, Notation n);
Mat3 dual_basis_tensor(int slot, Notation n);

// (S11, S22, S33, c*S23, c*S13, c*S12)
Vec6 sym_to_vec(const Sym3& s, Notation n);
Sym3 vec_to_sym(const Vec6& v, Notation n);

// Weight matrix W with <S, S> = v^T W v for v = sym_to_vec(S).
Mat6 vec_norm_weight(Notation n);

// Fourth order stiffness in 6x6 form together with the convention its
// off-diagonal slots are scaled by.  Symmetric bitwise by construction.
class StiffnessVoigt {
 public:
  StiffnessVoigt() : m_(Mat6::Zero()), conv_(Notation::Voigt) {}

  // Mirrors the upper triangle; use when the input is symmetric by intent.
  static StiffnessVoigt from_upper(const Mat6& m, Notation n);

  // Rejects matrices asymmetric beyond tol relative to the largest entry.
  static StiffnessVoigt checked(const Mat6& m, Notation n, double tol = 1e-9);

  const Mat6& matrix() const { return m_; }
  Notation convention() const { return conv_; }
  double operator()(int a, int b) const { return m_(a, b); }

  // Same operator expressed in the other slot scaling.
  StiffnessVoigt converted(Notation target) const;

  // sigma = C : S.  Off-diagonal slot weights cancel so the result is the
  // plain tensor image regardless of convention.
  Sym3 apply(const Sym3& s) const;

  // <C : S, S>
  double quad(const Sym3& s) const;

 private:
  Mat6 m_;
  Notation conv_;
};

// Fourth order tensor with both minor symmetries and the major one, stored
// componentwise.  Construction mirrors representative entries so all
// symmetries hold bitwise.
class Tensor4Sym {
 public:
  Tensor4Sym();

  double at(int i, int j, int k, int l) const {
    return c_[((i * 3 + j) * 3 + k) * 3 + l];
  }

  // Componentwise constructor; rejects inputs violating a minor symmetry
  // beyond tol relative to the largest entry, then mirrors representatives.
  static Tensor4Sym from_components(const std::array<double, 81>& c,
                                    double tol = 1e-12);

  Sym3 apply(const Sym3& s) const;
  double quad(const Sym3& s) const { return inner(apply(s), s); }

  // Representation as a quadratic form on row-major 9-vectors.
  Mat9 mat9() const;

 private:
  void set_entry(int i, int j, int k, int l, double v);
  friend Tensor4Sym tensor4_from_voigt(const StiffnessVoigt& cv);
  std::array<double, 81> c_;
};

// Row-major flattening (11, 12, 13, 21, 22, 23, 31, 32, 33).
Vec9 vec9(const Mat3& x);
Mat3 unvec9(const Vec9& v);

// Fourth order tensor with the major symmetry only, as a quadratic form on
// row-major 9-vectors.  Holds operators that mix symmetric and skew parts.
class Tensor4Full {
 public:
  Tensor4Full() : m_(Mat9::Zero()) {}

  static Tensor4Full from_matrix9(const Mat9& m);

  // 2 mu_e |sym X|^2 + lambda_e tr(X)^2 + 2 mu_c |skew X|^2 as the
  // quadratic form <E X, X>.
  static Tensor4Full isotropic(double mu_e, double lambda_e, double mu_c);

  // Block operator acting with sym_part on symmetric components and with
  // the axial 3x3 axial_coupling on axial vectors of skew components:
  // <E X, X> = <C sym X, sym X> + <axial_coupling axl(skew X), axl(skew X)>.
  static Tensor4Full from_sym_and_axial(const StiffnessVoigt& sym_part,
                                        const Mat3& axial_coupling);

  const Mat9& mat9() const { return m_; }
  Mat3 apply(const Mat3& x) const { return unvec9(m_ * vec9(x)); }
  double quad(const Mat3& x) const { return vec9(x).dot(m_ * vec9(x)); }

 private:
  Mat9 m_;
};

// C_ijkl from the 6x6 form, undoing the slot scaling of cv's convention.
Tensor4Sym tensor4_from_voigt(const StiffnessVoigt& cv);

// 6x6 form of a componentwise tensor in the requested convention.
StiffnessVoigt voigt_from_tensor4(const Tensor4Sym& c, Notation n);

// Same, for a tensor given as a 9x9 quadratic form.  Throws SymmetryError
// if the form lacks a minor symmetry beyond tol of its largest entry.
StiffnessVoigt voigt_from_tensor4(const Tensor4Full& c, Notation n,
                                  double tol = 1e-12);

// Largest relative discrepancy between the componentwise inverse of the
// tensor image of cv (computed as the operator inverse on symmetric
// matrices) and the tensor image of the inverted 6x6 form.  Zero in exact
// arithmetic for any convention.
double check_inverse_mapping_identity(const StiffnessVoigt& cv);

}  // namespace micromorph
