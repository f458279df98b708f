// bath.hpp — bath descriptions: Ohmic continuum with exponential cutoff, or discrete mode lists
#ifndef ZENO_BATH_HPP
#define ZENO_BATH_HPP

#include <complex>
#include <limits>
#include <vector>

namespace zeno {

// Zero temperature is represented as beta = +infinity.
inline constexpr double kBetaInf = std::numeric_limits<double>::infinity();

struct Mode {
  std::complex<double> g;  // coupling amplitude; only |g|^2 enters any observable
  double omega = 0.0;      // mode frequency, > 0
};

struct BathSpec {
  enum class Kind { OhmicContinuum, Discrete };

  Kind kind = Kind::OhmicContinuum;
  // Continuum: spectral density J(w) = G * w * exp(-w / omega_c).
  double G = 0.0;
  double omega_c = 0.0;
  // Discrete: explicit mode list.
  std::vector<Mode> modes;
  // Inverse temperature; kBetaInf means zero temperature.
  double beta = kBetaInf;

  static BathSpec ohmic(double G, double omega_c, double beta = kBetaInf);
  static BathSpec discrete(std::vector<Mode> modes, double beta = kBetaInf);

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  bool zero_temperature() const { return !(beta < kBetaInf); }
  // Upper integration limit for continuum kernels; the integrand's exponential
  // cutoff makes the truncated tail ~e^-50 relative.
  double upper_limit() const { return 50.0 * omega_c; }
  // Thermal factor coth(beta * w / 2); 1 at zero temperature.
  double thermal_factor(double w) const;
  // Spectral density at w (continuum only).
  double spectral_density(double w) const;
};

}  // namespace zeno

#endif
