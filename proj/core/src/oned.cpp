#include "micromorph/oned.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <string>

namespace micromorph {

const char* to_string(PBoundary b) {
  return b == PBoundary::Natural ? "natural" : "clamped";
}

namespace {

void check_problem(const OneDProblem& p) {
  if (p.n_cells < 3)
    throw InvalidParameterError("n_cells must be at least 3");
  if (p.mu_e <= 0.0 || p.mu_micro <= 0.0)
    throw InvalidParameterError("mu_e and mu_micro must be positive");
  if (p.mu < 0.0 || p.lc < 0.0)
    throw InvalidParameterError("mu and Lc must be nonnegative");
  if (p.u_right == p.u_left)
    throw InvalidParameterError(
        "u_right must differ from u_left to read off a modulus");
}

void finalize(const OneDProblem& prob, OneDSolution& sol) {
  const int n = prob.n_cells;
  const double h = 1.0 / n;
  const auto& u = sol.u;
  const auto& p = sol.p;

  sol.flux = 2.0 * prob.mu_e *
             ((u[1] - u[0]) / h - 0.5 * (p[0] + p[1]));
  sol.effective_modulus = sol.flux / (2.0 * (prob.u_right - prob.u_left));

  const double curv = 0.5 * prob.mu * prob.lc * prob.lc;
  double energy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double du = (u[static_cast<size_t>(i + 1)] - u[static_cast<size_t>(i)]) / h;
    const double pm = 0.5 * (p[static_cast<size_t>(i)] + p[static_cast<size_t>(i + 1)]);
    const double dp = (p[static_cast<size_t>(i + 1)] - p[static_cast<size_t>(i)]) / h;
    energy += h * (prob.mu_e * (du - pm) * (du - pm) + prob.mu_micro * pm * pm +
                   curv * dp * dp);
  }
  sol.energy = energy;
}

}  // namespace

OneDSolution solve_mindlin_1d(const OneDProblem& prob) {
  check_problem(prob);
  const int n = prob.n_cells;
  const double h = 1.0 / n;
  const double me = prob.mu_e;
  const double mm = prob.mu_micro;
  const double curv = prob.mu * prob.lc * prob.lc;

  // Unknowns interleaved: u_i at 2i, p_i at 2i + 1.
  const int size = 2 * (n + 1);
  const auto iu = [](int i) { return 2 * i; };
  const auto ip = [](int i) { return 2 * i + 1; };

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(8 * size));
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size);
  const auto add = [&trip](int r, int c, double v) {
    trip.emplace_back(r, c, v);
  };

  // Constraint rows carry the magnitude of the interior stencil so the
  // factorization weighs them equally and meets the data to full precision.
  const double drow = 2.0 * me / (h * h);
  add(iu(0), iu(0), drow);
  rhs(iu(0)) = drow * prob.u_left;
  add(iu(n), iu(n), drow);
  rhs(iu(n)) = drow * prob.u_right;

  for (int i = 1; i < n; ++i) {
    add(iu(i), iu(i - 1), 2.0 * me / (h * h));
    add(iu(i), iu(i), -4.0 * me / (h * h));
    add(iu(i), iu(i + 1), 2.0 * me / (h * h));
    add(iu(i), ip(i - 1), me / h);
    add(iu(i), ip(i + 1), -me / h);

    add(ip(i), iu(i - 1), me / h);
    add(ip(i), iu(i + 1), -me / h);
    add(ip(i), ip(i), 2.0 * (me + mm) + 2.0 * curv / (h * h));
    add(ip(i), ip(i - 1), -curv / (h * h));
    add(ip(i), ip(i + 1), -curv / (h * h));
  }

  // End closures for p.  With no curvature the constitutive relation is
  // algebraic everywhere; otherwise the chosen boundary mode applies, with
  // a mirrored ghost node for the natural case.  -2 mu_e u' enters through
  // a one-sided second order stencil in either non-clamped closure.
  const auto one_sided_terms = [&](int node, int n1, int n2, double sgn) {
    add(ip(node), iu(node), sgn * 3.0 * me / h);
    add(ip(node), iu(n1), -sgn * 4.0 * me / h);
    add(ip(node), iu(n2), sgn * me / h);
  };
  const bool no_curvature = curv == 0.0;
  if (no_curvature) {
    one_sided_terms(0, 1, 2, 1.0);
    add(ip(0), ip(0), 2.0 * (me + mm));
    one_sided_terms(n, n - 1, n - 2, -1.0);
    add(ip(n), ip(n), 2.0 * (me + mm));
  } else if (prob.p_bc == PBoundary::Clamped) {
    add(ip(0), ip(0), drow);
    add(ip(n), ip(n), drow);
  } else {
    one_sided_terms(0, 1, 2, 1.0);
    add(ip(0), ip(0), 2.0 * (me + mm) + 2.0 * curv / (h * h));
    add(ip(0), ip(1), -2.0 * curv / (h * h));

    one_sided_terms(n, n - 1, n - 2, -1.0);
    add(ip(n), ip(n), 2.0 * (me + mm) + 2.0 * curv / (h * h));
    add(ip(n), ip(n - 1), -2.0 * curv / (h * h));
  }

  Eigen::SparseMatrix<double> a(size, size);
  a.setFromTriplets(trip.begin(), trip.end());
  a.makeCompressed();

  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.analyzePattern(a);
  solver.factorize(a);
  if (solver.info() != Eigen::Success)
    throw SingularMatrixError("1d equilibrium system could not be factorized");
  const Eigen::VectorXd x = solver.solve(rhs);

  OneDSolution sol;
  sol.x.resize(static_cast<size_t>(n + 1));
  sol.u.resize(static_cast<size_t>(n + 1));
  sol.p.resize(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    sol.x[static_cast<size_t>(i)] = h * i;
    sol.u[static_cast<size_t>(i)] = x(iu(i));
    sol.p[static_cast<size_t>(i)] = x(ip(i));
  }

  const Eigen::VectorXd defect = a * x - rhs;
  Eigen::VectorXd rowsum = Eigen::VectorXd::Zero(size);
  for (int c = 0; c < a.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, c); it; ++it)
      rowsum(it.row()) += std::abs(it.value());
  const double scale = rowsum.maxCoeff() * x.cwiseAbs().maxCoeff() +
                       rhs.cwiseAbs().maxCoeff();
  sol.equilibrium_residual =
      defect.cwiseAbs().maxCoeff() / std::max(scale, 1e-300);

  sol.u.front() = prob.u_left;
  sol.u.back() = prob.u_right;

  finalize(prob, sol);
  return sol;
}

OneDSolution solve_relaxed_1d(const OneDProblem& prob) {
  check_problem(prob);
  const int n = prob.n_cells;
  const double slope = prob.u_right - prob.u_left;
  const double ratio = prob.mu_e / (prob.mu_e + prob.mu_micro);

  OneDSolution sol;
  sol.x.resize(static_cast<size_t>(n + 1));
  sol.u.resize(static_cast<size_t>(n + 1));
  sol.p.resize(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    const double xi = static_cast<double>(i) / n;
    sol.x[static_cast<size_t>(i)] = xi;
    sol.u[static_cast<size_t>(i)] = prob.u_left + slope * xi;
    sol.p[static_cast<size_t>(i)] = ratio * slope;
  }
  sol.equilibrium_residual = 0.0;
  OneDProblem flat = prob;
  flat.lc = 0.0;
  finalize(flat, sol);
  return sol;
}

std::vector<std::pair<double, double>> lc_sweep(
    const OneDProblem& prob, const std::vector<double>& lc_values) {
  std::vector<std::pair<double, double>> out;
  out.reserve(lc_values.size());
  for (double lc : lc_values) {
    OneDProblem p = prob;
    p.lc = lc;
    const OneDSolution sol =
        lc == 0.0 ? solve_relaxed_1d(p) : solve_mindlin_1d(p);
    out.emplace_back(lc, sol.effective_modulus);
  }
  return out;
}

}  // namespace micromorph
