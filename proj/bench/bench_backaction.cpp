// bench_backaction.cpp — parallel path sum vs serial reference enumeration
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "zeno/backaction.hpp"
#include "zeno/collective.hpp"
#include "zeno/kernels.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const double j = argc > 1 ? std::atof(argv[1]) : 5.0;
  const int n = argc > 2 ? std::atoi(argv[2]) : 3;

  const zeno::BathSpec bath = zeno::BathSpec::ohmic(0.05, 15.0, 1.0);
  const zeno::KernelSet kernels(bath);
  const zeno::CoherentWeights state = zeno::coherent_weights(j, 1.57079632679489662);

  std::printf("back-action path sum, J = %g, N = %d, %d threads\n", j, n,
              omp_get_max_threads());
  std::printf("%8s  %12s  %12s  %8s  %10s\n", "tau", "serial [s]", "parallel [s]",
              "speedup", "max |diff|");

  double worst = 0.0;
  for (const double tau : {0.1, 0.3, 0.6}) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::complex<double> ref =
        zeno::survival_backaction_reference(tau, n, state, kernels);
    const double t_ref = seconds_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    const zeno::ProtocolResult fast =
        zeno::survival_with_backaction(tau, n, state, kernels);
    const double t_fast = seconds_since(t1);

    const double diff = std::abs(ref.real() - fast.survival);
    worst = std::max(worst, diff);
    std::printf("%8.3f  %12.4f  %12.4f  %7.1fx  %10.2e\n", tau, t_ref, t_fast,
                t_ref / t_fast, diff);
  }
  std::printf("worst disagreement: %.2e\n", worst);
  return worst < 1e-10 ? 0 : 1;
}
