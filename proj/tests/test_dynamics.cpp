#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "micromorph/dynamics.hpp"
#include "support.hpp"

using namespace micromorph;

namespace {

// Shear-only phases with unit coupling and unit lengths: the reference
// configuration used throughout this suite.
RelaxedMaterial reference_material() {
  RelaxedMaterial mat;
  mat.c_e = build_isotropic(0.0, 1.0, Notation::Voigt);
  mat.c_micro = build_isotropic(0.0, 1.0, Notation::Voigt);
  mat.c_c = build_coupling(SymmetryClass::Isotropic, {1.0});
  mat.l_e = StiffnessVoigt::from_upper(vec_norm_weight(Notation::Voigt),
                                       Notation::Voigt);
  mat.l_c = Coupling3::from_upper(2.0 * Mat3::Identity());
  mat.mu = 1.0;
  mat.lc = 1.0;
  mat.inertia.rho = 1.0;
  mat.inertia.lc_hat = 1.0;
  return mat;
}

using Freq12 = Eigen::Matrix<double, 12, 1>;

Freq12 frequencies_at(const RelaxedMaterial& mat, const Vec3& k) {
  return plane_wave_frequencies(assemble_plane_wave(mat, k));
}

void check_row(const Freq12& got, const std::array<double, 12>& want,
               double tol) {
  for (int i = 0; i < 12; ++i)
    CHECK(std::abs(got(i) - want[i]) < tol);
}

}  // namespace

TEST_CASE("cutoff spectrum at k = 0 splits into the four invariant families") {
  const RelaxedMaterial mat = reference_material();
  const Freq12 w = frequencies_at(mat, Vec3::Zero());
  // three acoustic zeros, three rotational optics, one dilatational optic,
  // five deviatoric optics
  const double sph = 2.0 / std::sqrt(3.0);
  check_row(w, {0.0, 0.0, 0.0, 0.5, 0.5, 0.5, sph, 2.0, 2.0, 2.0, 2.0, 2.0},
            1e-9);
}

TEST_CASE("finite wavenumber rows match an independent construction") {
  const RelaxedMaterial mat = reference_material();
  const Vec3 e3(0.0, 0.0, 1.0);

  check_row(frequencies_at(mat, 0.5 * e3),
            {0.331707169171644, 0.331707169171645, 0.472683447854294,
             0.645973254663485, 0.645973254663486, 0.707106781186545,
             1.21990848782803, 2.06155281280883, 2.06155281280883,
             2.06250791711925, 2.06250791711925, 2.06412593164078},
            1e-9);

  check_row(frequencies_at(mat, 1.0 * e3),
            {0.567065557194702, 0.567065557194703, 0.783073634255881, 1.0, 1.0,
             1.1180339887499, 1.44946469455979, 2.23606797749979,
             2.23606797749979, 2.24798502082275, 2.24798502082275,
             2.27480475457716},
            1e-9);

  check_row(frequencies_at(mat, 2.0 * e3),
            {0.808559585498816, 0.808559585498818, 0.976531950955593,
             1.89765892712568, 1.89765892712568, 2.06155281280883,
             2.09161638393942, 2.82842712474619, 2.82842712474619,
             2.91463925606552, 2.91463925606552, 3.19798089530794},
            1e-9);
}

TEST_CASE("vanishing rotational coupling frees three more zero modes") {
  RelaxedMaterial mat = reference_material();
  mat.c_c = Coupling3();
  const Freq12 w = frequencies_at(mat, Vec3::Zero());
  for (int i = 0; i < 6; ++i) CHECK(w(i) < 1e-6);
  CHECK(w(6) > 1.0);
}

TEST_CASE("without curvature the distortion block of K ignores k") {
  RelaxedMaterial mat = reference_material();
  mat.lc = 0.0;
  const Mat12 k1 = assemble_plane_wave(mat, Vec3(0.3, -0.1, 0.8)).stiffness;
  const Mat12 k2 = assemble_plane_wave(mat, Vec3(0.0, 0.0, 2.0)).stiffness;
  CHECK((k1.block<9, 9>(3, 3) - k2.block<9, 9>(3, 3)).cwiseAbs().maxCoeff() <
        1e-14);
  // while the coupling blocks still do not
  CHECK((k1.block<3, 9>(0, 3) - k2.block<3, 9>(0, 3)).cwiseAbs().maxCoeff() >
        0.1);
}

TEST_CASE("frequencies only depend on the magnitude of k") {
  const RelaxedMaterial mat = reference_material();
  const Vec3 d = Vec3(1.0, 1.0, 1.0).normalized();
  for (double kn : {0.25, 1.0, 3.0}) {
    const Freq12 a = frequencies_at(mat, kn * Vec3(0.0, 0.0, 1.0));
    const Freq12 b = frequencies_at(mat, kn * d);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("sweep rows are sorted with the shear pair degenerate") {
  const RelaxedMaterial mat = reference_material();
  const DispersionResult sweep =
      dispersion_sweep(mat, Vec3(0.0, 0.0, 1.0), 2.0, 40);
  REQUIRE(sweep.k.size() == 40);
  REQUIRE(sweep.omega.size() == 40);
  CHECK(sweep.k.front() == doctest::Approx(0.05));
  CHECK(sweep.k.back() == doctest::Approx(2.0));
  for (std::size_t row = 0; row < sweep.omega.size(); ++row) {
    const auto& w = sweep.omega[row];
    CHECK(std::is_sorted(w.begin(), w.end()));
    CHECK(std::abs(w[0] - w[1]) < 1e-9);
  }
}

TEST_CASE("acoustic slopes recover the shear and pressure speeds") {
  const RelaxedMaterial mat = reference_material();
  const DispersionResult sweep =
      dispersion_sweep(mat, Vec3(0.0, 0.0, 1.0), 0.01, 10);
  const AcousticSpeeds sp = acoustic_slopes(sweep, 0.011);
  CHECK(sp.slopes[0] == doctest::Approx(0.707095149163).epsilon(1e-9));
  CHECK(sp.slopes[1] == doctest::Approx(0.707095149169).epsilon(1e-9));
  CHECK(sp.slopes[2] == doctest::Approx(0.999986291416).epsilon(1e-9));
  CHECK(std::abs(sp.cs - std::sqrt(0.5)) < 0.01 * std::sqrt(0.5));
  CHECK(std::abs(sp.cp - 1.0) < 0.01);

  CHECK_THROWS_AS(acoustic_slopes(sweep, 1e-4), InsufficientSamplesError);
}

TEST_CASE("doubling the density scales every branch by 1/sqrt(2)") {
  const RelaxedMaterial base = reference_material();
  RelaxedMaterial heavy = base;
  heavy.inertia.rho = 2.0;
  for (double kn : {0.0, 0.7, 1.9}) {
    const Freq12 a = frequencies_at(base, kn * Vec3(0.0, 0.0, 1.0));
    const Freq12 b = frequencies_at(heavy, kn * Vec3(0.0, 0.0, 1.0));
    CHECK((b * std::sqrt(2.0) - a).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("assembly refuses anisotropic phases") {
  RelaxedMaterial mat = reference_material();
  mat.c_micro = build_cubic(1.0, 1.0, 2.5, Notation::Voigt);
  CHECK_THROWS_AS(assemble_plane_wave(mat, Vec3(0.0, 0.0, 1.0)),
                  InvalidParameterError);

  RelaxedMaterial mat2 = reference_material();
  mat2.c_c = build_coupling(SymmetryClass::Tetragonal, {1.0, 4.0});
  CHECK_THROWS_AS(assemble_plane_wave(mat2, Vec3(0.0, 0.0, 1.0)),
                  InvalidParameterError);
}

TEST_CASE("mass matrix is definite and stiffness semidefinite") {
  const RelaxedMaterial mat = reference_material();
  for (double kn : {0.0, 1.3}) {
    const PlaneWaveProblem pw = assemble_plane_wave(mat, kn * Vec3(1, 0, 0));
    CHECK((pw.mass - pw.mass.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pw.stiffness - pw.stiffness.transpose()).cwiseAbs().maxCoeff() <
          1e-14);
    CHECK(check_positive_definite(pw.mass, Definiteness::Strict).ok);
    CHECK(check_positive_definite(pw.stiffness, Definiteness::Semi).ok);
  }
}

TEST_CASE("a meaningfully negative pencil raises instead of clamping") {
  PlaneWaveProblem pw;
  pw.mass = Mat12::Identity();
  pw.stiffness = Mat12::Identity();
  pw.stiffness(0, 0) = -1.0;
  CHECK_THROWS_AS(plane_wave_frequencies(pw), EigensolverError);

  // a tiny negative ripple is clamped to zero instead
  pw.stiffness(0, 0) = -1e-14;
  const auto w = plane_wave_frequencies(pw);
  CHECK(w(0) == 0.0);
}
