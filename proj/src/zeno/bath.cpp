// bath.cpp — bath construction and validation
#include "zeno/bath.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zeno {

BathSpec BathSpec::ohmic(double G, double omega_c, double beta) {
  BathSpec b;
  b.kind = Kind::OhmicContinuum;
  b.G = G;
  b.omega_c = omega_c;
  b.beta = beta;
  b.validate();
  return b;
}

BathSpec BathSpec::discrete(std::vector<Mode> modes, double beta) {
  BathSpec b;
  b.kind = Kind::Discrete;
  b.modes = std::move(modes);
  b.beta = beta;
  b.validate();
  return b;
}

void BathSpec::validate() const {
  if (std::isnan(beta) || beta <= 0.0)
    throw std::invalid_argument("bath.beta must be > 0 (use +inf for zero temperature)");
  if (kind == Kind::OhmicContinuum) {
    if (!(G >= 0.0) || !std::isfinite(G))
      throw std::invalid_argument("bath.G must be finite and >= 0");
    if (!(omega_c > 0.0) || !std::isfinite(omega_c))
      throw std::invalid_argument("bath.omega_c must be finite and > 0");
  } else {
    if (modes.empty()) throw std::invalid_argument("bath.modes must be non-empty");
    for (std::size_t i = 0; i < modes.size(); ++i) {
      if (!(modes[i].omega > 0.0) || !std::isfinite(modes[i].omega))
        throw std::invalid_argument("bath.modes[" + std::to_string(i) +
                                    "].omega must be finite and > 0");
      if (!std::isfinite(modes[i].g.real()) || !std::isfinite(modes[i].g.imag()))
        throw std::invalid_argument("bath.modes[" + std::to_string(i) +
                                    "].g must be finite");
    }
  }
}

double BathSpec::thermal_factor(double w) const {
  if (zero_temperature()) return 1.0;
  return 1.0 / std::tanh(0.5 * beta * w);
}

double BathSpec::spectral_density(double w) const {
  return G * w * std::exp(-w / omega_c);
}

}  // namespace zeno
