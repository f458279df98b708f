// master_equation.hpp — time-local master equation with memory kernel for a dissipative spin
#ifndef ZENO_MASTER_EQUATION_HPP
#define ZENO_MASTER_EQUATION_HPP

#include <Eigen/Dense>

#include "zeno/bath.hpp"
#include "zeno/collective.hpp"
#include "zeno/quadrature.hpp"

namespace zeno {

// Spin matrices in the |J, m> basis, m = -J .. +J against index i = 0 .. 2J.
struct SpinOperators {
  int dim = 0;
  Eigen::MatrixXd jz;  // diag(m)
  Eigen::MatrixXd jx;  // (J+ + J-) / 2
};
SpinOperators spin_operators(double j);

struct EvolveResult {
  Eigen::MatrixXcd rho;
  double trace_drift = 0.0;  // max |tr rho(t) - tr rho(0)| along the trajectory
  double herm_drift = 0.0;   // max elementwise |rho - rho^dag|
};

// Integrates
//   drho/dt = i [rho, H_S] + [K(t) rho, F] + [F, rho K(t)^dag],
//   H_S = omega0 Jz + delta Jx,  F = 2 Jz,
//   K(t) = Int_0^t C(t') e^(-i H_S t') F e^(+i H_S t') dt',
// by fixed-step RK4.  The memory kernel integral is accumulated by composite
// Simpson on the same half-step grid the RK4 stages use.  `step` <= 0 selects
// the default t_final / 2000.
EvolveResult evolve_reduced_state(double j, double omega0, double delta,
                                  const BathSpec& bath, double t_final, double step,
                                  const Eigen::MatrixXcd& initial,
                                  const QuadratureControl& ctl = {});

// Survival of |state> after evolving its projector for tau and undoing the
// system rotation: s = <psi| e^(+i H_S tau) rho(tau) e^(-i H_S tau) |psi>.
struct DissipativeRate {
  double survival = 0.0;
  double rate = 0.0;
  double trace_drift = 0.0;
  double herm_drift = 0.0;
};
DissipativeRate gamma_rate_dissipative(double tau, double j, double omega0,
                                       double delta, const BathSpec& bath,
                                       const CoherentWeights& state,
                                       double step = 0.0, bool with_rotation = true,
                                       const QuadratureControl& ctl = {});

}  // namespace zeno

#endif
