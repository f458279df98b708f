// collective.cpp — coherent-state weights (exact recurrence or log-space) and survival sums
#include "zeno/collective.hpp"

#include <cmath>
#include <stdexcept>

#include "zeno/errors.hpp"

namespace zeno {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

CoherentWeights coherent_weights(double j, double theta, double phi) {
  const double two_j_real = 2.0 * j;
  const int two_j = static_cast<int>(std::lround(two_j_real));
  if (j < 0.0 || std::abs(two_j_real - two_j) > 1e-9)
    throw std::domain_error("j must be a non-negative half-integer");
  if (theta < 0.0 || theta > kPi) throw std::domain_error("theta must lie in [0, pi]");

  CoherentWeights cw;
  cw.j = 0.5 * two_j;
  cw.dim = two_j + 1;
  cw.theta = theta;
  cw.phi = phi;
  cw.w.assign(cw.dim, 0.0);
  cw.amp.assign(cw.dim, 0.0);

  if (theta == 0.0) {
    cw.w[0] = 1.0;
    cw.amp[0] = 1.0;
    return cw;
  }
  if (theta == kPi) {
    cw.w[cw.dim - 1] = 1.0;
    cw.amp[cw.dim - 1] = 1.0;
    return cw;
  }

  const double p = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const double q = 1.0 - p;
  if (two_j <= 60) {
    // Binomial recurrence: w_0 = q^2J, w_{k+1} = w_k (2J-k)/(k+1) p/q.
    double wk = std::pow(q, two_j);
    for (int k = 0; k < cw.dim; ++k) {
      cw.w[k] = wk;
      wk *= (static_cast<double>(two_j - k) / (k + 1)) * (p / q);
    }
  } else {
    // Log-space via lgamma to dodge underflow in q^2J at large 2J.
    const double lp = std::log(p), lq = std::log(q);
    const double lg_all = std::lgamma(two_j + 1.0);
    for (int k = 0; k < cw.dim; ++k) {
      const double logw = lg_all - std::lgamma(k + 1.0) - std::lgamma(two_j - k + 1.0) +
                          k * lp + (two_j - k) * lq;
      cw.w[k] = std::exp(logw);
    }
  }
  for (int k = 0; k < cw.dim; ++k)
    cw.amp[k] = std::sqrt(cw.w[k]) *
                std::complex<double>(std::cos(k * phi), std::sin(k * phi));
  return cw;
}

double survival_collective(double tau, const CoherentWeights& state,
                           const KernelSet& kernels) {
  if (tau < 0.0 || !std::isfinite(tau)) throw std::domain_error("tau must be finite and >= 0");
  const double g = kernels.gamma(tau);
  const double del = kernels.delta(tau);
  const int dim = state.dim;
  const int two_j = dim - 1;
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += state.w[i] * state.w[i];
  for (int i = 0; i < dim; ++i) {
    for (int k = i + 1; k < dim; ++k) {
      const int d = i - k;
      const int sig = i + k - two_j;  // m_i + m_k
      s += 2.0 * state.w[i] * state.w[k] *
           std::exp(-g * d * d) * std::cos(del * d * sig);
    }
  }
  return s;
}

double gamma_rate_collective(double tau, const CoherentWeights& state,
                             const KernelSet& kernels) {
  if (!(tau > 0.0)) throw std::domain_error("tau must be > 0");
  const double s = survival_collective(tau, state, kernels);
  if (!(s > 0.0)) throw AccuracyError("survival is not positive at tau = " + std::to_string(tau));
  return -std::log(s) / tau;
}

double survival_chi_interaction(double tau, const CoherentWeights& state, double chi) {
  if (tau < 0.0 || !std::isfinite(tau)) throw std::domain_error("tau must be finite and >= 0");
  std::complex<double> x = 0.0;
  for (int i = 0; i < state.dim; ++i) {
    const double m = state.m_value(i);
    const double ph = -chi * tau * m * m;
    x += state.w[i] * std::complex<double>(std::cos(ph), std::sin(ph));
  }
  return std::norm(x);
}

}  // namespace zeno
