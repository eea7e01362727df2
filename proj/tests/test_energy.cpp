#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "micromorph/energy.hpp"
#include "support.hpp"

using namespace micromorph;
using testsup::random_mat3;

namespace {

RelaxedMaterial iso_material(double lam_e, double mu_e, double lam_m,
                             double mu_m, double mu_c, double lc) {
  RelaxedMaterial mat;
  mat.c_e = build_isotropic(lam_e, mu_e, Notation::Voigt);
  mat.c_micro = build_isotropic(lam_m, mu_m, Notation::Voigt);
  mat.c_c = build_coupling(SymmetryClass::Isotropic, {mu_c});
  mat.l_e = StiffnessVoigt::from_upper(vec_norm_weight(Notation::Voigt),
                                       Notation::Voigt);
  mat.l_c = Coupling3::from_upper(2.0 * Mat3::Identity());
  mat.mu = 1.0;
  mat.lc = lc;
  return mat;
}

RelaxedMaterial random_iso_material(std::mt19937& rng, double lc = 0.3) {
  std::uniform_real_distribution<double> pos(0.3, 3.0);
  RelaxedMaterial mat =
      iso_material(pos(rng), pos(rng), pos(rng), pos(rng), pos(rng), lc);
  mat.inertia.lc_hat = 1.0;
  mat.inertia.eta1 = pos(rng);
  mat.inertia.eta2 = pos(rng);
  mat.inertia.eta3 = pos(rng);
  return mat;
}

KinematicState random_state(std::mt19937& rng) {
  KinematicState s;
  s.grad_u = random_mat3(rng);
  s.p = random_mat3(rng);
  s.curl_p = random_mat3(rng);
  s.p_dot = random_mat3(rng);
  return s;
}

}  // namespace

TEST_CASE("energy parts sum and match their hand formulas") {
  std::mt19937 rng(501);
  const double lam_e = 0.7, mu_e = 1.3, lam_m = 0.4, mu_m = 2.1, mu_c = 0.9;
  const RelaxedMaterial mat = iso_material(lam_e, mu_e, lam_m, mu_m, mu_c, 0.5);
  mat.validate();

  for (int trial = 0; trial < 30; ++trial) {
    const KinematicState s = random_state(rng);
    const EnergyParts w = relaxed_energy_parts(mat, s);

    const Mat3 e = s.grad_u - s.p;
    const CartanParts ep = cartan_decompose(e);
    const Mat3 sym_e = ep.dev_sym.matrix() + ep.spherical().matrix();
    const double elastic = mu_e * sym_e.squaredNorm() +
                           0.5 * lam_e * e.trace() * e.trace();
    CHECK(w.elastic == doctest::Approx(elastic).epsilon(1e-12));

    const CartanParts pp = cartan_decompose(s.p);
    const Mat3 sym_p = pp.dev_sym.matrix() + pp.spherical().matrix();
    const double micro = mu_m * sym_p.squaredNorm() +
                         0.5 * lam_m * s.p.trace() * s.p.trace();
    CHECK(w.micro == doctest::Approx(micro).epsilon(1e-12));

    // isotropic coupling (mu_c/2) I on the axial vector
    const double rot = 0.25 * mu_c * axl(ep.skew).squaredNorm();
    CHECK(w.rotational == doctest::Approx(rot).epsilon(1e-12));

    // default weights collapse the curvature to the plain squared norm
    const double curv = 0.5 * mat.mu * mat.lc * mat.lc * s.curl_p.squaredNorm();
    CHECK(w.curvature == doctest::Approx(curv).epsilon(1e-12));

    CHECK(w.total() ==
          doctest::Approx(elastic + micro + rot + curv).epsilon(1e-12));
    CHECK(w.total() >= 0.0);
  }
}

TEST_CASE("energy is invariant under a rigid frame change for isotropic phases") {
  std::mt19937 rng(502);
  for (int trial = 0; trial < 25; ++trial) {
    const RelaxedMaterial mat = random_iso_material(rng);
    const KinematicState s = random_state(rng);
    const Mat3 r = testsup::random_rotation(rng);

    KinematicState rotated;
    rotated.grad_u = r * s.grad_u * r.transpose();
    rotated.p = r * s.p * r.transpose();
    rotated.curl_p = r * s.curl_p * r.transpose();
    rotated.p_dot = r * s.p_dot * r.transpose();

    CHECK(relaxed_energy(mat, rotated) ==
          doctest::Approx(relaxed_energy(mat, s)).epsilon(1e-11));
    CHECK(kinetic_density(mat.inertia, rotated.p_dot) ==
          doctest::Approx(kinetic_density(mat.inertia, s.p_dot)).epsilon(1e-11));
  }
}

TEST_CASE("compatible trial distortion meets the micro energy exactly") {
  std::mt19937 rng(503);
  for (int trial = 0; trial < 1000; ++trial) {
    const RelaxedMaterial mat = random_iso_material(rng);
    const Mat3 g = random_mat3(rng);
    const UpperBound ub = upper_bound_check(mat, g);
    const double scale = std::max(ub.micro_energy, 1.0);
    CHECK(std::abs(ub.difference) <= 1e-13 * scale);
    CHECK(ub.admissible ==
          doctest::Approx(0.5 * mat.c_micro.quad(Sym3::from(g))).epsilon(1e-12));
    CHECK(ub.admissible >= 0.0);
  }
}

TEST_CASE("force stress is the exact gradient of the energy density") {
  std::mt19937 rng(504);
  const double h = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    const RelaxedMaterial mat = random_iso_material(rng);
    KinematicState s = random_state(rng);
    const Mat3 stress = relaxed_stress(mat, s);

    Mat3 fd;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        KinematicState plus = s, minus = s;
        plus.grad_u(i, j) += h;
        minus.grad_u(i, j) -= h;
        fd(i, j) = (relaxed_energy(mat, plus) - relaxed_energy(mat, minus)) /
                   (2.0 * h);
      }
    const double scale = stress.cwiseAbs().maxCoeff();
    CHECK((fd - stress).cwiseAbs().maxCoeff() < 1e-6 * std::max(scale, 1.0));
  }
}

TEST_CASE("stress splits into elastic symmetric and coupling skew parts") {
  std::mt19937 rng(505);
  const RelaxedMaterial mat = iso_material(0.6, 1.1, 0.3, 1.7, 2.0, 0.0);
  KinematicState s;
  s.grad_u = Skew3::from_axial(Vec3(0.2, -0.4, 0.7)).matrix();
  // pure skew gradient with isotropic coupling: stress = (mu_c/4) skew e
  const Mat3 stress = relaxed_stress(mat, s);
  CHECK(testsup::rel_diff(stress, (0.5 * s.grad_u).eval()) < 1e-13);

  const KinematicState rnd = random_state(rng);
  const Mat3 full = relaxed_stress(mat, rnd);
  const Mat3 e = rnd.grad_u - rnd.p;
  CHECK(testsup::rel_diff(Mat3(0.5 * (full + full.transpose())),
                          mat.c_e.apply(Sym3::from(e)).matrix()) < 1e-13);
}

TEST_CASE("curvature weight triple (1, 1, 1/3) is the plain squared norm") {
  std::mt19937 rng(506);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat3 x = random_mat3(rng);
    const double w = isotropic_curvature(1.0, 1.0, 1.0 / 3.0, x, 1.4, 0.6);
    CHECK(w == doctest::Approx(0.5 * 1.4 * 0.36 * x.squaredNorm()).epsilon(1e-13));
  }
  // and the parts are weighted independently
  Mat3 sphere = 2.0 * Mat3::Identity();
  CHECK(isotropic_curvature(5.0, 7.0, 1.0, sphere, 1.0, 1.0) ==
        doctest::Approx(0.5 * 36.0).epsilon(1e-14));
}

TEST_CASE("kinetic density weighs the three invariant parts") {
  InertiaSpec in;
  in.rho = 2.0;
  in.lc_hat = 3.0;
  in.eta1 = 0.5;
  in.eta2 = 0.7;
  in.eta3 = 1.1;

  // identity rate: only the trace channel is active
  CHECK(kinetic_density(in, Mat3::Identity()) ==
        doctest::Approx(0.5 * 2.0 * 9.0 * in.eta3 * 9.0).epsilon(1e-14));

  std::mt19937 rng(507);
  const Mat3 pd = random_mat3(rng);
  const CartanParts parts = cartan_decompose(pd);
  const double expect =
      0.5 * 2.0 * 9.0 *
      (in.eta1 * parts.dev_sym.squared_norm() +
       in.eta2 * parts.skew.squared_norm() + in.eta3 * parts.trace * parts.trace);
  CHECK(kinetic_density(in, pd) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("unrelaxed energy with block operator matches the relaxed parts") {
  std::mt19937 rng(508);
  const RelaxedMaterial mat = iso_material(0.8, 1.2, 0.5, 1.9, 1.3, 0.0);
  const Tensor4Full ee =
      Tensor4Full::from_sym_and_axial(mat.c_e, mat.c_c.matrix());
  for (int trial = 0; trial < 20; ++trial) {
    const KinematicState s = random_state(rng);
    const EnergyParts parts = relaxed_energy_parts(mat, s);
    const double mindlin =
        mindlin_energy(ee, mat.c_micro, 0.0, 1.0, 0.0, s.grad_u, s.p);
    CHECK(mindlin == doctest::Approx(parts.elastic + parts.micro +
                                     parts.rotational).epsilon(1e-12));
  }
  CHECK_THROWS_AS(
      mindlin_energy(ee, mat.c_micro, -1.0, 1.0, 1.0, Mat3::Zero(), Mat3::Zero()),
      InvalidParameterError);
}

TEST_CASE("material validation guards definiteness and scalar domains") {
  RelaxedMaterial mat = iso_material(0.5, 1.0, 0.5, 1.0, 1.0, 0.2);
  CHECK_NOTHROW(mat.validate());

  RelaxedMaterial bad = mat;
  bad.c_e = StiffnessVoigt::from_upper(-Mat6::Identity(), Notation::Voigt);
  CHECK_THROWS_AS(bad.validate(), NotSpdError);

  bad = mat;
  Mat3 indef = Mat3::Identity();
  indef(0, 0) = -1.0;
  bad.c_c = Coupling3::from_upper(indef);
  CHECK_THROWS_AS(bad.validate(), NotSpdError);

  bad = mat;
  bad.mu = -1.0;
  CHECK_THROWS_AS(bad.validate(), InvalidParameterError);

  bad = mat;
  bad.lc = -0.5;
  CHECK_THROWS_AS(bad.validate(), InvalidParameterError);

  bad = mat;
  bad.inertia.rho = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvalidParameterError);

  bad = mat;
  bad.inertia.eta2 = -0.1;
  CHECK_THROWS_AS(bad.validate(), InvalidParameterError);

  // zero coupling is admissible (semidefinite)
  RelaxedMaterial free_rot = mat;
  free_rot.c_c = Coupling3();
  CHECK_NOTHROW(free_rot.validate());
}
