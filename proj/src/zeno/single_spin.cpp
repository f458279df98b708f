// single_spin.cpp — two-level survival, its short-time expansion, and the golden-rule comparator
#include "zeno/single_spin.hpp"

#include <cmath>
#include <stdexcept>

#include "zeno/errors.hpp"

namespace zeno {

double survival_one_interval(double tau, const PreparedState& state,
                             const KernelSet& kernels) {
  if (tau < 0.0 || !std::isfinite(tau)) throw std::domain_error("tau must be finite and >= 0");
  const double s2 = std::sin(state.theta) * std::sin(state.theta);
  return 1.0 - 0.5 * s2 * (-std::expm1(-kernels.gamma(tau)));
}

double gamma_rate(double tau, const PreparedState& state, const KernelSet& kernels) {
  if (!(tau > 0.0)) throw std::domain_error("tau must be > 0");
  const double s = survival_one_interval(tau, state, kernels);
  if (!(s > 0.0)) throw AccuracyError("survival is not positive at tau = " + std::to_string(tau));
  return -std::log(s) / tau;
}

ExpansionCoefficients rate_expansion(const KernelSet& kernels) {
  const double y = kernels.moment_y();
  const double z = kernels.moment_z();
  return {y, -(0.5 * y * y + z / 12.0)};
}

double gamma_rate_expansion(double tau, const KernelSet& kernels) {
  if (tau < 0.0 || !std::isfinite(tau)) throw std::domain_error("tau must be finite and >= 0");
  const auto [a, b] = rate_expansion(kernels);
  return a * tau + b * tau * tau * tau;
}

double decay_rate_rwa(double tau, double omega0, const BathSpec& bath,
                      const QuadratureControl& ctl) {
  if (tau < 0.0 || !std::isfinite(tau)) throw std::domain_error("tau must be finite and >= 0");
  if (tau == 0.0) return 0.0;
  auto sinc2 = [](double x) {
    if (std::abs(x) < 1e-8) return 1.0 - x * x / 3.0;  // sinc^2 series
    const double s = std::sin(x) / x;
    return s * s;
  };
  if (bath.kind == BathSpec::Kind::Discrete) {
    double acc = 0.0;
    for (const auto& m : bath.modes)
      acc += std::norm(m.g) * sinc2(0.5 * (m.omega - omega0) * tau);
    return tau * acc;
  }
  auto f = [&](double w) { return bath.spectral_density(w) * sinc2(0.5 * (w - omega0) * tau); };
  return tau * integrate_panels(f, 0.0, bath.upper_limit(), tau, ctl);
}

}  // namespace zeno
