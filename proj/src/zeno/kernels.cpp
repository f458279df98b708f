// kernels.cpp — kernel quadratures for continuum baths and exact sums for discrete baths
#include "zeno/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace zeno {

namespace {

// Below this fraction of omega_c the integrands are replaced by their w -> 0
// limits to dodge the 0/0 at the origin.
constexpr double kSmallW = 1e-8;

double require_tau(double tau) {
  if (tau < 0.0 || !std::isfinite(tau)) throw std::domain_error("tau must be finite and >= 0");
  return tau;
}

// 1 - cos(x) without cancellation.
double one_minus_cos(double x) {
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s;
}

}  // namespace

KernelSet::KernelSet(BathSpec bath, QuadratureControl ctl)
    : bath_(std::move(bath)), ctl_(ctl) {
  bath_.validate();
  if (bath_.kind == BathSpec::Kind::Discrete) {
    for (const auto& m : bath_.modes) {
      const double g2 = std::norm(m.g);
      const double th = bath_.thermal_factor(m.omega);
      y_ += g2 * th;
      z_ += g2 * m.omega * m.omega * th;
    }
    return;
  }
  const double wc = bath_.omega_c;
  const double floor_w = kSmallW * wc;
  const bool zero_t = bath_.zero_temperature();
  auto y_int = [&](double w) {
    if (w < floor_w) return zero_t ? bath_.G * w : 2.0 * bath_.G / bath_.beta;
    return bath_.spectral_density(w) * bath_.thermal_factor(w);
  };
  auto z_int = [&](double w) {
    if (w < floor_w) return 0.0;
    return bath_.spectral_density(w) * w * w * bath_.thermal_factor(w);
  };
  y_ = integrate_panels(y_int, 0.0, bath_.upper_limit(), 0.0, ctl_);
  z_ = integrate_panels(z_int, 0.0, bath_.upper_limit(), 0.0, ctl_);
}

double KernelSet::gamma(double tau) const {
  require_tau(tau);
  if (tau == 0.0) return 0.0;
  if (bath_.kind == BathSpec::Kind::Discrete) {
    double acc = 0.0;
    for (const auto& m : bath_.modes)
      acc += std::norm(m.g) / (m.omega * m.omega) * one_minus_cos(m.omega * tau) *
             bath_.thermal_factor(m.omega);
    return 4.0 * acc;
  }
  const double floor_w = kSmallW * bath_.omega_c;
  const bool zero_t = bath_.zero_temperature();
  auto f = [&](double w) {
    if (w < floor_w)
      return zero_t ? 2.0 * bath_.G * w * tau * tau
                    : 4.0 * bath_.G * tau * tau / bath_.beta;
    return 4.0 * bath_.spectral_density(w) / (w * w) * one_minus_cos(w * tau) *
           bath_.thermal_factor(w);
  };
  return integrate_panels(f, 0.0, bath_.upper_limit(), tau, ctl_);
}

double KernelSet::delta(double tau) const {
  require_tau(tau);
  if (tau == 0.0) return 0.0;
  if (bath_.kind == BathSpec::Kind::Discrete) {
    double acc = 0.0;
    for (const auto& m : bath_.modes)
      acc += std::norm(m.g) / (m.omega * m.omega) *
             (std::sin(m.omega * tau) - m.omega * tau);
    return 4.0 * acc;
  }
  const double floor_w = kSmallW * bath_.omega_c;
  auto f = [&](double w) {
    if (w < floor_w) return -2.0 / 3.0 * bath_.G * w * w * tau * tau * tau;
    return 4.0 * bath_.spectral_density(w) / (w * w) * (std::sin(w * tau) - w * tau);
  };
  return integrate_panels(f, 0.0, bath_.upper_limit(), tau, ctl_);
}

double KernelSet::mu(double tau, int lag) const {
  require_tau(tau);
  if (tau == 0.0 || lag == 0) return 0.0;
  const double d = static_cast<double>(lag);
  if (bath_.kind == BathSpec::Kind::Discrete) {
    double acc = 0.0;
    for (const auto& m : bath_.modes)
      acc += std::norm(m.g) / (m.omega * m.omega) * one_minus_cos(m.omega * tau) *
             std::sin(d * m.omega * tau);
    return 4.0 * acc;
  }
  const double floor_w = kSmallW * bath_.omega_c;
  auto f = [&](double w) {
    if (w < floor_w) return 2.0 * bath_.G * d * w * w * tau * tau * tau;
    return 4.0 * bath_.spectral_density(w) / (w * w) * one_minus_cos(w * tau) *
           std::sin(d * w * tau);
  };
  return integrate_panels(f, 0.0, bath_.upper_limit(), (std::abs(d) + 1.0) * tau, ctl_);
}

double KernelSet::gamma_cross(double tau, int lag) const {
  require_tau(tau);
  if (tau == 0.0) return 0.0;
  if (lag == 0) return gamma(tau);
  const double d = static_cast<double>(lag);
  if (bath_.kind == BathSpec::Kind::Discrete) {
    double acc = 0.0;
    for (const auto& m : bath_.modes)
      acc += std::norm(m.g) / (m.omega * m.omega) * one_minus_cos(m.omega * tau) *
             std::cos(d * m.omega * tau) * bath_.thermal_factor(m.omega);
    return 4.0 * acc;
  }
  const double floor_w = kSmallW * bath_.omega_c;
  const bool zero_t = bath_.zero_temperature();
  auto f = [&](double w) {
    if (w < floor_w)
      return zero_t ? 2.0 * bath_.G * w * tau * tau
                    : 4.0 * bath_.G * tau * tau / bath_.beta;
    return 4.0 * bath_.spectral_density(w) / (w * w) * one_minus_cos(w * tau) *
           std::cos(d * w * tau) * bath_.thermal_factor(w);
  };
  return integrate_panels(f, 0.0, bath_.upper_limit(), (std::abs(d) + 1.0) * tau, ctl_);
}

std::complex<double> KernelSet::correlation(double t) const {
  if (!std::isfinite(t)) throw std::domain_error("t must be finite");
  if (bath_.kind == BathSpec::Kind::Discrete) {
    std::complex<double> acc = 0.0;
    for (const auto& m : bath_.modes) {
      const double g2 = std::norm(m.g);
      acc += std::complex<double>(
          g2 * bath_.thermal_factor(m.omega) * std::cos(m.omega * t),
          -g2 * std::sin(m.omega * t));
    }
    return acc;
  }
  const double floor_w = kSmallW * bath_.omega_c;
  const bool zero_t = bath_.zero_temperature();
  auto re = [&](double w) {
    if (w < floor_w) return zero_t ? bath_.G * w : 2.0 * bath_.G / bath_.beta;
    return bath_.spectral_density(w) * bath_.thermal_factor(w) * std::cos(w * t);
  };
  auto im = [&](double w) {
    if (w < floor_w) return -bath_.G * w * w * t;
    return -bath_.spectral_density(w) * std::sin(w * t);
  };
  const double f_osc = std::abs(t);
  return {integrate_panels(re, 0.0, bath_.upper_limit(), f_osc, ctl_),
          integrate_panels(im, 0.0, bath_.upper_limit(), f_osc, ctl_)};
}

double gamma_ohmic_zero_t(double G, double omega_c, double tau) {
  const double x = omega_c * tau;
  return 2.0 * G * std::log1p(x * x);
}

double delta_ohmic(double G, double omega_c, double tau) {
  const double x = omega_c * tau;
  return 4.0 * G * (std::atan(x) - x);
}

KernelSlice make_slice(const KernelSet& kernels, double tau, int n_intervals) {
  if (n_intervals < 1) throw std::domain_error("n_intervals must be >= 1");
  KernelSlice s;
  s.gamma = kernels.gamma(tau);
  s.delta = kernels.delta(tau);
  s.mu.resize(n_intervals, 0.0);
  s.gamma_cross.resize(n_intervals, 0.0);
  s.gamma_cross[0] = s.gamma;
  for (int d = 1; d < n_intervals; ++d) {
    s.mu[d] = kernels.mu(tau, d);
    s.gamma_cross[d] = kernels.gamma_cross(tau, d);
  }
  return s;
}

std::vector<std::complex<double>> correlation_grid(const BathSpec& bath,
                                                   const std::vector<double>& times,
                                                   const QuadratureControl& ctl) {
  bath.validate();
  std::vector<std::complex<double>> out(times.size());
  if (bath.kind == BathSpec::Kind::Discrete) {
    KernelSet ks(bath, ctl);
    for (std::size_t i = 0; i < times.size(); ++i) out[i] = ks.correlation(times[i]);
    return out;
  }
  double t_max = 0.0;
  for (double t : times) {
    if (!std::isfinite(t)) throw std::domain_error("t must be finite");
    t_max = std::max(t_max, std::abs(t));
  }
  const double a = 0.0, b = bath.upper_limit();
  const bool zero_t = bath.zero_temperature();

  // One shared panel set: evaluate node weights once, then sum trig terms per
  // grid time.  Doubling the panel count until the whole grid is converged.
  auto evaluate = [&](int n_panels, std::vector<std::complex<double>>& dst) {
    const double h = (b - a) / n_panels;
    std::vector<double> node_w, re_wt, im_wt;
    node_w.reserve(static_cast<std::size_t>(n_panels) * 16);
    re_wt.reserve(node_w.capacity());
    im_wt.reserve(node_w.capacity());
    for (int p = 0; p < n_panels; ++p) {
      const double mid = a + (p + 0.5) * h;
      for (const auto& pt : detail::kGl16) {
        const double w = mid + 0.5 * h * pt.x;
        const double base = 0.5 * h * pt.w * bath.spectral_density(w);
        node_w.push_back(w);
        re_wt.push_back(base * (zero_t ? 1.0 : bath.thermal_factor(w)));
        im_wt.push_back(base);
      }
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double t = times[i];
      double re = 0.0, im = 0.0;
      for (std::size_t k = 0; k < node_w.size(); ++k) {
        re += re_wt[k] * std::cos(node_w[k] * t);
        im -= im_wt[k] * std::sin(node_w[k] * t);
      }
      dst[i] = {re, im};
    }
  };

  int n = std::max(64, static_cast<int>(std::ceil((b - a) * t_max / 3.14159265358979323846)));
  std::vector<std::complex<double>> prev(times.size()), cur(times.size());
  evaluate(n, prev);
  while (n < ctl.max_panels) {
    n *= 2;
    evaluate(n, cur);
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      diff = std::max(diff, std::abs(cur[i] - prev[i]));
      scale = std::max(scale, std::abs(cur[i]));
    }
    if (diff < ctl.abs_tol || diff < ctl.rel_tol * scale) return cur;
    prev.swap(cur);
  }
  throw AccuracyError("correlation grid failed to converge at " + std::to_string(n) +
                      " panels");
}

BathSpec discretize_ohmic(const BathSpec& continuum, int n_modes) {
  if (continuum.kind != BathSpec::Kind::OhmicContinuum)
    throw std::domain_error("discretize_ohmic requires a continuum bath");
  if (n_modes < 1) throw std::domain_error("n_modes must be >= 1");
  const double omega_max = 10.0 * continuum.omega_c;
  const double dw = omega_max / n_modes;
  std::vector<Mode> modes(n_modes);
  for (int i = 0; i < n_modes; ++i) {
    const double w = (i + 0.5) * dw;
    modes[i] = {std::sqrt(continuum.spectral_density(w) * dw), w};
  }
  return BathSpec::discrete(std::move(modes), continuum.beta);
}

}  // namespace zeno
