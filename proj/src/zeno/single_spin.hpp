// single_spin.hpp — survival probability and decay rate of one repeatedly measured spin
#ifndef ZENO_SINGLE_SPIN_HPP
#define ZENO_SINGLE_SPIN_HPP

#include "zeno/kernels.hpp"

namespace zeno {

// Bloch angles of the prepared (and re-measured) state.
struct PreparedState {
  double theta = 1.57079632679489662;  // pi/2: equatorial superposition
  double phi = 0.0;
};

// Probability that one projective measurement after an interval tau finds the
// spin still in its prepared state:
//   s(tau) = 1 - (1/2) sin^2(theta) (1 - exp(-gamma(tau))).
double survival_one_interval(double tau, const PreparedState& state,
                             const KernelSet& kernels);

// Effective decay rate per interval, Gamma = -ln s(tau) / tau (tau > 0).
double gamma_rate(double tau, const PreparedState& state, const KernelSet& kernels);

// Short-interval expansion Gamma ~ a tau + b tau^3 for theta = pi/2:
//   a = y,  b = -(y^2/2 + z/12)  with the cached bath moments y, z.
struct ExpansionCoefficients {
  double a = 0.0;
  double b = 0.0;
};
ExpansionCoefficients rate_expansion(const KernelSet& kernels);
double gamma_rate_expansion(double tau, const KernelSet& kernels);

// Golden-rule comparator built from the sampling-function picture:
//   rate(tau) = tau * Int J(w) sinc^2((w - omega0) tau / 2) dw.
// Temperature never enters (the bath's beta is ignored).
double decay_rate_rwa(double tau, double omega0, const BathSpec& bath,
                      const QuadratureControl& ctl = {});

}  // namespace zeno

#endif
