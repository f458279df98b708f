// kernels.hpp — dephasing, frequency-shift, cross-damping, and back-action phase kernels
#ifndef ZENO_KERNELS_HPP
#define ZENO_KERNELS_HPP

#include <complex>
#include <vector>

#include "zeno/bath.hpp"
#include "zeno/quadrature.hpp"

namespace zeno {

// Evaluates the interval kernels of a pure-dephasing bath.  All kernels take
// the interval length tau >= 0 (std::domain_error otherwise).  The second-order
// bath moments are computed eagerly at construction and cached.
class KernelSet {
 public:
  explicit KernelSet(BathSpec bath, QuadratureControl ctl = {});

  // Phase-variance (damping) exponent accumulated over one interval:
  //   gamma(tau) = 4 * Int J(w)/w^2 * (1 - cos w tau) * coth(beta w / 2) dw.
  double gamma(double tau) const;

  // Coherent frequency-shift exponent (temperature independent, <= 0):
  //   delta(tau) = 4 * Int J(w)/w^2 * (sin w tau - w tau) dw.
  double delta(double tau) const;

  // Back-action phase kernel between intervals separated by `lag` periods;
  // antisymmetric in lag, zero at lag = 0:
  //   mu(tau, d) = 4 * Int J(w)/w^2 * (1 - cos w tau) * sin(d w tau) dw.
  double mu(double tau, int lag) const;

  // Cross-damping kernel; even in lag and equal to gamma(tau) at lag = 0:
  //   gamma_cross(tau, d) = 4 * Int J(w)/w^2 * (1 - cos w tau) * cos(d w tau)
  //                           * coth(beta w / 2) dw.
  double gamma_cross(double tau, int lag) const;

  // Bath correlation function C(t) = Int J(w) [coth(beta w/2) cos wt - i sin wt] dw.
  std::complex<double> correlation(double t) const;

  // Cached moments: y = Int J coth dw,  z = Int J w^2 coth dw.
  double moment_y() const { return y_; }
  double moment_z() const { return z_; }

  const BathSpec& bath() const { return bath_; }
  const QuadratureControl& control() const { return ctl_; }

 private:
  BathSpec bath_;
  QuadratureControl ctl_;
  double y_ = 0.0;
  double z_ = 0.0;
};

// Closed forms valid for the Ohmic continuum at zero temperature:
//   gamma = 2 G ln(1 + (w_c tau)^2),  delta = 4 G (arctan(w_c tau) - w_c tau).
double gamma_ohmic_zero_t(double G, double omega_c, double tau);
double delta_ohmic(double G, double omega_c, double tau);

// All kernels needed by the n-interval measurement protocol at a fixed tau:
// mu[d] and gamma_cross[d] are indexed by lag d = 0 .. n_intervals-1
// (mu[0] = 0, gamma_cross[0] = gamma).
struct KernelSlice {
  double gamma = 0.0;
  double delta = 0.0;
  std::vector<double> mu;
  std::vector<double> gamma_cross;
};

KernelSlice make_slice(const KernelSet& kernels, double tau, int n_intervals);

// C(t) evaluated on a shared grid of times (used by the memory-kernel
// integrator); equivalent to calling correlation() per point but evaluated on
// one Gauss–Legendre panel set with grid-wide convergence control.
std::vector<std::complex<double>> correlation_grid(const BathSpec& bath,
                                                   const std::vector<double>& times,
                                                   const QuadratureControl& ctl = {});

// Midpoint discretization of a continuum bath into n_modes modes on [0, Omega]
// with Omega = 10 w_c: mode i sits at w_i = (i + 1/2) dw with |g_i|^2 = J(w_i) dw.
// Used by the continuum-vs-discrete consistency tests.
BathSpec discretize_ohmic(const BathSpec& continuum, int n_modes);

}  // namespace zeno

#endif
