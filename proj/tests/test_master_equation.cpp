// test_master_equation.cpp — kernel-resummed propagation against closed forms
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "zeno/bath.hpp"
#include "zeno/collective.hpp"
#include "zeno/kernels.hpp"
#include "zeno/master_equation.hpp"

using namespace zeno;

namespace {

const double kPi = 3.14159265358979323846;

BathSpec narrow_bath() { return BathSpec::ohmic(0.01, 50.0, 1.0); }

Eigen::MatrixXcd coherent_projector(double j, double theta) {
  const CoherentWeights w = coherent_weights(j, theta);
  Eigen::VectorXcd psi(w.dim);
  for (int i = 0; i < w.dim; ++i) psi(i) = w.amp[i];
  return psi * psi.adjoint();
}

}  // namespace

TEST_CASE("spin operators satisfy the algebra") {
  const SpinOperators ops = spin_operators(1.0);
  CHECK(ops.dim == 3);
  CHECK(ops.jz(0, 0) == doctest::Approx(-1.0));
  CHECK(ops.jz(1, 1) == doctest::Approx(0.0));
  CHECK(ops.jz(2, 2) == doctest::Approx(1.0));
  CHECK(ops.jx(0, 1) == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(ops.jx(1, 2) == doctest::Approx(std::sqrt(2.0) / 2));
  CHECK(ops.jx(0, 2) == doctest::Approx(0.0));
  CHECK((ops.jx - ops.jx.transpose()).cwiseAbs().maxCoeff() < 1e-15);

  // [Jz, [Jz, Jx]] = Jx holds for any representation.
  const Eigen::MatrixXd inner = ops.jz * ops.jx - ops.jx * ops.jz;
  const Eigen::MatrixXd outer = ops.jz * inner - inner * ops.jz;
  CHECK((outer - ops.jx).cwiseAbs().maxCoeff() < 1e-13);

  const SpinOperators half = spin_operators(0.5);
  CHECK(half.dim == 2);
  CHECK(half.jz(0, 0) == doctest::Approx(-0.5));
  CHECK(half.jx(0, 1) == doctest::Approx(0.5));

  CHECK_THROWS_AS(spin_operators(0.4), std::domain_error);
  CHECK_THROWS_AS(spin_operators(-0.5), std::domain_error);
}

TEST_CASE("without mixing the propagation reproduces the analytic dephasing") {
  const BathSpec bath = narrow_bath();
  const double omega0 = 0.1;
  const double t = 2.0;
  const KernelSet kernels(bath);
  const double g = kernels.gamma(t);
  const double d = kernels.delta(t);

  for (double j : {0.5, 1.0, 2.0}) {
    const Eigen::MatrixXcd rho0 = coherent_projector(j, kPi / 2);
    const EvolveResult out = evolve_reduced_state(j, omega0, 0.0, bath, t, 0.0, rho0);

    CHECK(out.trace_drift < 1e-10);
    CHECK(out.herm_drift < 1e-10);

    const int dim = rho0.rows();
    double worst = 0.0;
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        if (std::abs(rho0(a, b)) < 1e-12) continue;
        const double ma = a - j;
        const double mb = b - j;
        const std::complex<double> phase(0.0,
                                         -omega0 * (ma - mb) * t - d * (ma * ma - mb * mb));
        const std::complex<double> exact =
            rho0(a, b) * std::exp(phase - (ma - mb) * (ma - mb) * g);
        worst = std::max(worst, std::abs(out.rho(a, b) - exact) / std::abs(exact));
      }
    }
    INFO("j = ", j, ", worst relative coherence error ", worst);
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("halving the step leaves the survival unchanged at tolerance") {
  const BathSpec bath = narrow_bath();
  const CoherentWeights state = coherent_weights(1.0, kPi / 2);
  const double tau = 0.5;
  const DissipativeRate coarse =
      gamma_rate_dissipative(tau, 1.0, 0.1, 0.1, bath, state, tau / 400);
  const DissipativeRate fine =
      gamma_rate_dissipative(tau, 1.0, 0.1, 0.1, bath, state, tau / 800);
  INFO("survival change ", std::abs(coarse.survival - fine.survival));
  CHECK(std::abs(coarse.survival - fine.survival) < 1e-6);
  CHECK(coarse.trace_drift < 1e-10);
  CHECK(coarse.herm_drift < 1e-10);
}

TEST_CASE("undoing the bare rotation makes the rate blind to the splitting") {
  const BathSpec bath = narrow_bath();
  const CoherentWeights state = coherent_weights(1.0, kPi / 2);
  const double tau = 0.5;
  const double step = tau / 1000;
  const DissipativeRate still =
      gamma_rate_dissipative(tau, 1.0, 0.0, 0.0, bath, state, step);
  const DissipativeRate driven =
      gamma_rate_dissipative(tau, 1.0, 0.1, 0.0, bath, state, step);
  CHECK(std::abs(still.rate - driven.rate) < 1e-8);
  // Matches the path-sum collective rate for the same bath and interval.
  CHECK(still.rate == doctest::Approx(0.7098711837967526).epsilon(1e-6));
}

TEST_CASE("decoupling the bath leaves a unitary trajectory") {
  const BathSpec bath = BathSpec::ohmic(0.0, 50.0, 1.0);
  const CoherentWeights state = coherent_weights(1.0, kPi / 2);
  const DissipativeRate out =
      gamma_rate_dissipative(0.8, 1.0, 0.7, 0.3, bath, state);
  CHECK(std::abs(out.survival - 1.0) < 1e-12);
  CHECK(std::abs(out.rate) < 1e-11);
}

TEST_CASE("domain guards") {
  const BathSpec bath = narrow_bath();
  const CoherentWeights state = coherent_weights(1.0, kPi / 2);
  const Eigen::MatrixXcd rho0 = coherent_projector(1.0, kPi / 2);
  CHECK_THROWS_AS(evolve_reduced_state(1.0, 0.0, 0.0, bath, -1.0, 0.0, rho0),
                  std::domain_error);
  CHECK_THROWS_AS(evolve_reduced_state(0.5, 0.0, 0.0, bath, 1.0, 0.0, rho0),
                  std::domain_error);
  CHECK_THROWS_AS(gamma_rate_dissipative(0.0, 1.0, 0.0, 0.0, bath, state),
                  std::domain_error);
  CHECK_THROWS_AS(gamma_rate_dissipative(-0.5, 1.0, 0.0, 0.0, bath, state),
                  std::domain_error);
}
