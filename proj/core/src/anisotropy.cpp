#include "micromorph/anisotropy.hpp"

#include <cmath>
#include <string>

namespace micromorph {

const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Isotropic: return "isotropic";
    case SymmetryClass::Cubic: return "cubic";
    case SymmetryClass::Orthotropic: return "orthotropic";
    case SymmetryClass::Tetragonal: return "tetragonal";
    case SymmetryClass::Monoclinic: return "monoclinic";
    case SymmetryClass::Triclinic: return "triclinic";
  }
  return "?";
}

const char* to_string(LimitingCase c) {
  switch (c) {
    case LimitingCase::Cosserat: return "cosserat";
    case LimitingCase::MicroDilation: return "micro-dilation";
    case LimitingCase::MicroIncompressible: return "micro-incompressible";
    case LimitingCase::MicroStretch: return "micro-stretch";
    case LimitingCase::MicroStrain: return "micro-strain";
  }
  return "?";
}

// Factor turning the shear modulus into the shear-block diagonal entry:
// 4/c^2, which is 1 for c = 2 and 2 for c = sqrt(2).
static double shear_block_scale(Notation n) {
  return n == Notation::Voigt ? 1.0 : 2.0;
}

StiffnessVoigt build_isotropic(double lambda, double mu, Notation n) {
  Mat6 m = Mat6::Zero();
  const double s = shear_block_scale(n);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) m(a, b) = lambda;
    m(a, a) = 2.0 * mu + lambda;
    m(a + 3, a + 3) = s * mu;
  }
  return StiffnessVoigt::from_upper(m, n);
}

StiffnessVoigt build_cubic(double kappa, double mu, double mu_star, Notation n) {
  Mat6 m = Mat6::Zero();
  const double s = shear_block_scale(n);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) m(a, b) = kappa - 2.0 * mu / 3.0;
    m(a, a) = kappa + 4.0 * mu / 3.0;
    m(a + 3, a + 3) = s * mu_star;
  }
  return StiffnessVoigt::from_upper(m, n);
}

StiffnessVoigt build_orthotropic(const OrthotropicParams& p, Notation n) {
  Mat6 m = Mat6::Zero();
  m(0, 0) = p.c[0];
  m(1, 1) = p.c[1];
  m(2, 2) = p.c[2];
  m(0, 1) = m(1, 0) = p.c[3];
  m(0, 2) = m(2, 0) = p.c[4];
  m(1, 2) = m(2, 1) = p.c[5];
  m(3, 3) = p.c[6];
  m(4, 4) = p.c[7];
  m(5, 5) = p.c[8];
  return StiffnessVoigt::from_upper(m, n);
}

StiffnessVoigt build_stiffness(const MaterialSpec& spec, Notation n) {
  return std::visit(
      [n](const auto& p) -> StiffnessVoigt {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, IsotropicParams>)
          return build_isotropic(p.lambda, p.mu, n);
        else if constexpr (std::is_same_v<T, CubicParams>)
          return build_cubic(p.kappa, p.mu, p.mu_star, n);
        else
          return build_orthotropic(p, n);
      },
      spec);
}

Coupling3 build_coupling(SymmetryClass c, const std::vector<double>& params) {
  const auto need = [&](size_t count) {
    if (params.size() != count)
      throw InvalidParameterError(std::string(to_string(c)) +
                                  " coupling takes " + std::to_string(count) +
                                  " parameter(s), got " +
                                  std::to_string(params.size()));
  };
  Mat3 m = Mat3::Zero();
  switch (c) {
    case SymmetryClass::Isotropic:
    case SymmetryClass::Cubic:
      need(1);
      m = params[0] / 2.0 * Mat3::Identity();
      break;
    case SymmetryClass::Tetragonal:
      need(2);
      m.diagonal() << params[0], params[0], params[1];
      break;
    case SymmetryClass::Orthotropic:
      need(3);
      m.diagonal() << params[0], params[1], params[2];
      break;
    case SymmetryClass::Monoclinic:
      need(4);
      m.diagonal() << params[0], params[1], params[2];
      m(0, 2) = m(2, 0) = params[3];
      break;
    case SymmetryClass::Triclinic:
      need(6);
      m.diagonal() << params[0], params[1], params[2];
      m(1, 2) = m(2, 1) = params[3];
      m(0, 2) = m(2, 0) = params[4];
      m(0, 1) = m(1, 0) = params[5];
      break;
  }
  return Coupling3::from_upper(m);
}

SymmetryClass classify_stiffness(const StiffnessVoigt& cv, double tol) {
  const Mat6& m = cv.matrix();
  const double scale = m.cwiseAbs().maxCoeff();
  const double eps = tol * scale;
  const auto near = [eps](double a, double b) { return std::abs(a - b) <= eps; };

  bool ortho = true;
  for (int a = 0; a < 6 && ortho; ++a)
    for (int b = a + 1; b < 6 && ortho; ++b) {
      const bool in_block = a < 3 && b < 3;
      if (!in_block && std::abs(m(a, b)) > eps) ortho = false;
    }
  if (!ortho) return SymmetryClass::Triclinic;

  const bool cubic = near(m(0, 0), m(1, 1)) && near(m(0, 0), m(2, 2)) &&
                     near(m(0, 1), m(0, 2)) && near(m(0, 1), m(1, 2)) &&
                     near(m(3, 3), m(4, 4)) && near(m(3, 3), m(5, 5));
  if (!cubic) return SymmetryClass::Orthotropic;

  const double shear_from_block =
      shear_block_scale(cv.convention()) * 0.5 * (m(0, 0) - m(0, 1));
  if (near(m(3, 3), shear_from_block)) return SymmetryClass::Isotropic;
  return SymmetryClass::Cubic;
}

SymmetryClass classify_coupling(const Coupling3& cc, double tol) {
  const Mat3& m = cc.matrix();
  const double scale = m.cwiseAbs().maxCoeff();
  const double eps = tol * scale;
  const auto zero = [eps](double v) { return std::abs(v) <= eps; };

  if (zero(m(0, 1)) && zero(m(1, 2))) {
    if (zero(m(0, 2))) {
      if (std::abs(m(0, 0) - m(1, 1)) <= eps) {
        if (std::abs(m(0, 0) - m(2, 2)) <= eps) return SymmetryClass::Isotropic;
        return SymmetryClass::Tetragonal;
      }
      return SymmetryClass::Orthotropic;
    }
    return SymmetryClass::Monoclinic;
  }
  return SymmetryClass::Triclinic;
}

IsotropicParams isotropic_parameters(const StiffnessVoigt& cv) {
  IsotropicParams p;
  p.mu = 0.5 * (cv(0, 0) - cv(0, 1));
  p.lambda = cv(0, 1);
  return p;
}

CubicParams cubic_parameters(const StiffnessVoigt& cv) {
  CubicParams p;
  p.kappa = (cv(0, 0) + 2.0 * cv(0, 1)) / 3.0;
  p.mu = 0.5 * (cv(0, 0) - cv(0, 1));
  p.mu_star = cv(3, 3) / shear_block_scale(cv.convention());
  return p;
}

bool limiting_case_predicate(LimitingCase c, const Mat3& p, double tol) {
  const CartanParts parts = cartan_decompose(p);
  const double scale = std::max(p.cwiseAbs().maxCoeff(), 1e-300);
  const double eps = tol * scale;
  const auto vanish = [eps](const Mat3& m) {
    return m.cwiseAbs().maxCoeff() <= eps;
  };
  switch (c) {
    case LimitingCase::Cosserat:
      return vanish(Sym3::from(p).matrix());
    case LimitingCase::MicroDilation:
      return vanish(parts.dev_sym.matrix()) && vanish(parts.skew.matrix());
    case LimitingCase::MicroIncompressible:
      return std::abs(parts.trace) <= eps;
    case LimitingCase::MicroStretch:
      return vanish(parts.dev_sym.matrix());
    case LimitingCase::MicroStrain:
      return vanish(parts.skew.matrix());
  }
  return false;
}

}  // namespace micromorph
