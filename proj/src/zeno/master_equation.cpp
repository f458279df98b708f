// master_equation.cpp — RK4 with a Simpson-accumulated memory kernel on the half-step grid
#include "zeno/master_equation.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "zeno/errors.hpp"
#include "zeno/kernels.hpp"

namespace zeno {

namespace {
using Clx = std::complex<double>;
}

SpinOperators spin_operators(double j) {
  const int two_j = static_cast<int>(std::lround(2.0 * j));
  if (j < 0.0 || std::abs(2.0 * j - two_j) > 1e-9)
    throw std::domain_error("j must be a non-negative half-integer");
  SpinOperators ops;
  ops.dim = two_j + 1;
  ops.jz = Eigen::MatrixXd::Zero(ops.dim, ops.dim);
  ops.jx = Eigen::MatrixXd::Zero(ops.dim, ops.dim);
  for (int i = 0; i < ops.dim; ++i) ops.jz(i, i) = i - 0.5 * two_j;
  for (int i = 0; i + 1 < ops.dim; ++i) {
    const double m = i - 0.5 * two_j;
    const double amp = std::sqrt(0.5 * two_j * (0.5 * two_j + 1.0) - m * (m + 1.0));
    ops.jx(i + 1, i) += 0.5 * amp;  // from J+
    ops.jx(i, i + 1) += 0.5 * amp;  // from J-
  }
  return ops;
}

EvolveResult evolve_reduced_state(double j, double omega0, double delta,
                                  const BathSpec& bath, double t_final, double step,
                                  const Eigen::MatrixXcd& initial,
                                  const QuadratureControl& ctl) {
  if (t_final < 0.0 || !std::isfinite(t_final))
    throw std::domain_error("t_final must be finite and >= 0");
  const SpinOperators ops = spin_operators(j);
  const int dim = ops.dim;
  if (initial.rows() != dim || initial.cols() != dim)
    throw std::domain_error("initial state dimension does not match 2j+1");
  if (t_final == 0.0) return {initial, 0.0, 0.0};

  int n_steps = step > 0.0 ? static_cast<int>(std::lround(t_final / step)) : 2000;
  if (n_steps < 1) n_steps = 1;
  const double h = t_final / n_steps;

  const Eigen::MatrixXd hs = omega0 * ops.jz + delta * ops.jx;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hs);
  const Eigen::VectorXd evals = es.eigenvalues();
  const Eigen::MatrixXd v = es.eigenvectors();
  const Eigen::MatrixXd f = 2.0 * ops.jz;
  const Eigen::MatrixXd f_eig = v.transpose() * f * v;

  // Bath correlation on the shared half-step grid.
  std::vector<double> tgrid(2 * n_steps + 1);
  for (int i = 0; i < static_cast<int>(tgrid.size()); ++i) tgrid[i] = 0.5 * h * i;
  const std::vector<Clx> corr = correlation_grid(bath, tgrid, ctl);

  const Eigen::MatrixXcd v_c = v.cast<Clx>();

  // G(t) = C(t) e^(-i H_S t) F e^(+i H_S t), assembled in the eigenbasis.
  auto g_at = [&](int idx) -> Eigen::MatrixXcd {
    const double t = tgrid[idx];
    Eigen::VectorXcd ph(dim);
    for (int a = 0; a < dim; ++a)
      ph(a) = Clx(std::cos(evals(a) * t), -std::sin(evals(a) * t));
    Eigen::MatrixXcd core(dim, dim);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) core(a, b) = ph(a) * std::conj(ph(b)) * f_eig(a, b);
    return corr[idx] * (v_c * core * v_c.transpose());
  };

  // K on the half grid by composite Simpson; the odd (half) points use the
  // three-point rule over the leading half interval.
  std::vector<Eigen::MatrixXcd> ks(2 * n_steps + 1);
  ks[0] = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd g0 = g_at(0);
  for (int s = 0; s < n_steps; ++s) {
    const Eigen::MatrixXcd g1 = g_at(2 * s + 1);
    const Eigen::MatrixXcd g2 = g_at(2 * s + 2);
    ks[2 * s + 1] = ks[2 * s] + (h / 24.0) * (5.0 * g0 + 8.0 * g1 - g2);
    ks[2 * s + 2] = ks[2 * s] + (h / 6.0) * (g0 + 4.0 * g1 + g2);
    g0 = g2;
  }

  const Eigen::MatrixXcd hs_c = hs.cast<Clx>();
  const Eigen::MatrixXcd f_c = f.cast<Clx>();
  auto liouville = [&](int idx, const Eigen::MatrixXcd& rho) -> Eigen::MatrixXcd {
    const Eigen::MatrixXcd& k = ks[idx];
    Eigen::MatrixXcd out = Clx(0.0, 1.0) * (rho * hs_c - hs_c * rho);
    const Eigen::MatrixXcd x = k * rho;
    out += x * f_c - f_c * x;
    const Eigen::MatrixXcd y = rho * k.adjoint();
    out += f_c * y - y * f_c;
    return out;
  };

  EvolveResult res;
  res.rho = initial;
  const double tr0 = initial.trace().real();
  for (int s = 0; s < n_steps; ++s) {
    const int j0 = 2 * s, j1 = 2 * s + 1, j2 = 2 * s + 2;
    const Eigen::MatrixXcd k1 = liouville(j0, res.rho);
    const Eigen::MatrixXcd k2 = liouville(j1, res.rho + (0.5 * h) * k1);
    const Eigen::MatrixXcd k3 = liouville(j1, res.rho + (0.5 * h) * k2);
    const Eigen::MatrixXcd k4 = liouville(j2, res.rho + h * k3);
    res.rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    res.trace_drift = std::max(res.trace_drift, std::abs(res.rho.trace().real() - tr0) +
                                                    std::abs(res.rho.trace().imag()));
    res.herm_drift = std::max(
        res.herm_drift,
        (res.rho - res.rho.adjoint()).cwiseAbs().maxCoeff());
  }
  return res;
}

DissipativeRate gamma_rate_dissipative(double tau, double j, double omega0,
                                       double delta, const BathSpec& bath,
                                       const CoherentWeights& state, double step,
                                       bool with_rotation,
                                       const QuadratureControl& ctl) {
  if (!(tau > 0.0)) throw std::domain_error("tau must be > 0");
  const SpinOperators ops = spin_operators(j);
  const int dim = ops.dim;
  if (state.dim != dim) throw std::domain_error("state dimension does not match 2j+1");

  Eigen::VectorXcd psi(dim);
  for (int i = 0; i < dim; ++i) psi(i) = state.amp[i];
  const Eigen::MatrixXcd rho0 = psi * psi.adjoint();
  EvolveResult ev = evolve_reduced_state(j, omega0, delta, bath, tau, step, rho0, ctl);

  Eigen::MatrixXcd rho = ev.rho;
  if (with_rotation) {
    const Eigen::MatrixXd hs = omega0 * ops.jz + delta * ops.jx;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hs);
    const Eigen::VectorXd evals = es.eigenvalues();
    const Eigen::MatrixXd v = es.eigenvectors();
    Eigen::VectorXcd ph(dim);
    for (int a = 0; a < dim; ++a)
      ph(a) = std::complex<double>(std::cos(evals(a) * tau), std::sin(evals(a) * tau));
    const Eigen::MatrixXcd ur =
        v.cast<std::complex<double>>() * ph.asDiagonal() *
        v.transpose().cast<std::complex<double>>();
    rho = ur * rho * ur.adjoint();
  }
  DissipativeRate out;
  out.survival = (psi.adjoint() * rho * psi)(0, 0).real();
  out.trace_drift = ev.trace_drift;
  out.herm_drift = ev.herm_drift;
  if (!(out.survival > 0.0))
    throw AccuracyError("survival is not positive at tau = " + std::to_string(tau));
  out.rate = -std::log(out.survival) / tau;
  return out;
}

}  // namespace zeno
