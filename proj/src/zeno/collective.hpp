// collective.hpp — spin-J coherent states: outcome weights and per-interval survival
#ifndef ZENO_COLLECTIVE_HPP
#define ZENO_COLLECTIVE_HPP

#include <complex>
#include <vector>

#include "zeno/kernels.hpp"

namespace zeno {

// Projective-measurement outcome weights of a spin-J coherent state |theta, phi>:
//   w_m = C(2J, J+m) sin^(2(J+m))(theta/2) cos^(2(J-m))(theta/2),
// stored against index i = 0 .. 2J with m = i - J.  Amplitudes carry the
// e^(i(J+m)phi) phase and satisfy |amp_i|^2 = w_i.
struct CoherentWeights {
  double j = 0.5;
  int dim = 2;
  double theta = 0.0;
  double phi = 0.0;
  std::vector<double> w;
  std::vector<std::complex<double>> amp;

  double m_value(int i) const { return static_cast<double>(i) - j; }
};

// j must be a non-negative half-integer, theta in [0, pi].
CoherentWeights coherent_weights(double j, double theta, double phi = 0.0);

// Survival after one interval when measurement back-action is discarded:
//   s(tau) = sum_{mn} w_m w_n exp(-i delta(tau) (m^2 - n^2) - gamma(tau) (m - n)^2).
double survival_collective(double tau, const CoherentWeights& state,
                           const KernelSet& kernels);

// Rate per interval, -ln s(tau) / tau (tau > 0).
double gamma_rate_collective(double tau, const CoherentWeights& state,
                             const KernelSet& kernels);

// Survival under a pure one-axis-twisting phase chi tau m^2 and no damping:
//   s(tau) = |sum_m w_m exp(-i chi tau m^2)|^2.
double survival_chi_interaction(double tau, const CoherentWeights& state, double chi);

}  // namespace zeno

#endif
