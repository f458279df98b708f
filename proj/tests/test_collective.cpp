// test_collective.cpp — coherent-state weights and the collective survival sums
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "zeno/collective.hpp"
#include "zeno/single_spin.hpp"

using namespace zeno;

namespace {
const double kPi = 3.14159265358979323846;

BathSpec big_j_bath() { return BathSpec::ohmic(0.01, 50.0, 1.0); }
}  // namespace

TEST_CASE("outcome weights: normalization, mean, amplitude consistency") {
  for (const double j : {0.5, 1.0, 5.0, 50.0, 200.0}) {
    for (const double theta : {0.0, 0.37, kPi / 2, 2.8, kPi}) {
      const CoherentWeights cw = coherent_weights(j, theta, 0.4);
      REQUIRE(cw.dim == static_cast<int>(2 * j) + 1);
      double sum = 0.0, mean = 0.0;
      for (int i = 0; i < cw.dim; ++i) {
        CHECK(cw.w[i] >= 0.0);
        CHECK(std::norm(cw.amp[i]) == doctest::Approx(cw.w[i]).epsilon(1e-13));
        sum += cw.w[i];
        mean += cw.w[i] * cw.m_value(i);
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(mean == doctest::Approx(-j * std::cos(theta)).epsilon(1e-9).scale(j));
    }
  }

  // Poles concentrate all weight on one outcome.
  CHECK(coherent_weights(5.0, 0.0, 0.0).w[0] == 1.0);
  CHECK(coherent_weights(5.0, kPi, 0.0).w[10] == 1.0);
}

TEST_CASE("spin-1/2 collective survival reduces to the single-spin formula") {
  KernelSet ks(big_j_bath());
  for (const double theta : {0.2, kPi / 2, 2.4}) {
    const CoherentWeights cw = coherent_weights(0.5, theta, 0.7);
    const PreparedState state{theta, 0.7};
    for (const double tau : {0.1, 0.6, 1.5}) {
      CHECK(survival_collective(tau, cw, ks) ==
            doctest::Approx(survival_one_interval(tau, state, ks)).epsilon(1e-12));
    }
  }
}

TEST_CASE("collective survival and rate reproduce frozen values") {
  KernelSet ks(big_j_bath());
  const CoherentWeights j1 = coherent_weights(1.0, kPi / 2, 0.0);
  CHECK(survival_collective(0.2, j1, ks) ==
        doctest::Approx(0.8890975629261374).epsilon(1e-10));
  CHECK(gamma_rate_collective(0.2, j1, ks) ==
        doctest::Approx(0.587741524579474).epsilon(1e-10));
  CHECK(survival_collective(0.5, j1, ks) ==
        doctest::Approx(0.7012186059133648).epsilon(1e-10));
  CHECK(gamma_rate_collective(0.5, j1, ks) ==
        doctest::Approx(0.7098711837967526).epsilon(1e-10));
  CHECK(survival_collective(1.565, j1, ks) ==
        doctest::Approx(0.038488600394949654).epsilon(1e-9));
  CHECK(gamma_rate_collective(1.565, j1, ks) ==
        doctest::Approx(2.081401389885269).epsilon(1e-10));

  const CoherentWeights j2 = coherent_weights(2.0, kPi / 2, 0.0);
  CHECK(survival_collective(0.2, j2, ks) ==
        doctest::Approx(0.7386805045796307).epsilon(1e-10));
  CHECK(gamma_rate_collective(0.2, j2, ks) ==
        doctest::Approx(1.5144489316093024).epsilon(1e-10));
  CHECK(survival_collective(0.5, j2, ks) ==
        doctest::Approx(0.4257795756440316).epsilon(1e-10));
  CHECK(gamma_rate_collective(0.5, j2, ks) ==
        doctest::Approx(1.707666989381034).epsilon(1e-10));
  CHECK(survival_collective(1.565, j2, ks) ==
        doctest::Approx(0.009756236843899512).epsilon(1e-9));
  CHECK(gamma_rate_collective(1.565, j2, ks) ==
        doctest::Approx(2.958369662735253).epsilon(1e-10));

  const CoherentWeights j50 = coherent_weights(50.0, kPi / 2, 0.0);
  CHECK(survival_collective(1.6, j50, ks) ==
        doctest::Approx(8.049144410082535e-05).epsilon(1e-8));
  CHECK(gamma_rate_collective(1.6, j50, ks) ==
        doctest::Approx(5.892099789781342).epsilon(1e-10));
}

TEST_CASE("pure-interaction survival: frozen values, revival, double-sum identity") {
  const CoherentWeights j1 = coherent_weights(1.0, kPi / 2, 0.0);
  const CoherentWeights j2 = coherent_weights(2.0, kPi / 2, 0.0);
  CHECK(survival_chi_interaction(0.9, j1, 1.0) ==
        doctest::Approx(0.8108049841353324).epsilon(1e-12));
  CHECK(survival_chi_interaction(0.9, j2, 1.0) ==
        doctest::Approx(0.4422736188180402).epsilon(1e-12));

  // m^2 - n^2 is always an integer, so chi tau = 2 pi revives every J exactly.
  for (const double j : {0.5, 1.0, 1.5, 2.0, 2.5, 7.5}) {
    const CoherentWeights cw = coherent_weights(j, kPi / 2, 0.0);
    CHECK(survival_chi_interaction(2.0 * kPi, cw, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  // |sum_m w_m e^(-i chi tau m^2)|^2 equals the double sum over (m, n).
  const double chi = 1.3, tau = 0.57;
  std::complex<double> double_sum = 0.0;
  for (int i = 0; i < j2.dim; ++i)
    for (int k = 0; k < j2.dim; ++k) {
      const double mi = j2.m_value(i), mk = j2.m_value(k);
      const double ph = -chi * tau * (mi * mi - mk * mk);
      double_sum += j2.w[i] * j2.w[k] * std::complex<double>(std::cos(ph), std::sin(ph));
    }
  CHECK(double_sum.imag() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(survival_chi_interaction(tau, j2, chi) ==
        doctest::Approx(double_sum.real()).epsilon(1e-12));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(coherent_weights(0.3, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(coherent_weights(-0.5, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(coherent_weights(1.0, -0.1, 0.0), std::domain_error);
  CHECK_THROWS_AS(coherent_weights(1.0, kPi + 0.1, 0.0), std::domain_error);
  KernelSet ks(big_j_bath());
  CHECK_THROWS_AS(gamma_rate_collective(0.0, coherent_weights(1.0, 1.0, 0.0), ks),
                  std::domain_error);
}
