// fock.hpp — brute-force oracle: spin plus truncated oscillators, dense propagation
#ifndef ZENO_FOCK_HPP
#define ZENO_FOCK_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "zeno/bath.hpp"

namespace zeno {

// A discrete bath kept as literal oscillators, each truncated to Fock levels
// 0 .. n_max.  Used only by the slow exact checks below; the truncation is
// validated against the thermal tail it cuts off.
struct TruncatedBath {
  std::vector<Mode> modes;
  double beta = kBetaInf;
  int n_max = 14;

  // The same bath as seen by the analytic kernels.
  BathSpec to_spec() const { return BathSpec::discrete(modes, beta); }
};

// Survival probability of n projective measurements spaced tau apart, computed
// with zero approximation beyond the Fock truncation: build
//   H = omega0 Jz x 1 + 1 x sum_k w_k n_k + 2 Jz x sum_k g_k (a_k + a_k^dag),
// propagate the full density matrix, project on the prepared state after each
// interval (undoing the bare system rotation first when with_rotation).
// Throws ResourceError when (2j+1)(n_max+1)^K exceeds 4096.
double exact_survival_discrete(const TruncatedBath& bath, double j, double theta,
                               double phi, double omega0, double tau,
                               int n_measurements, bool with_rotation = true);

// Reduced-state coherence ratio after free evolution for time t with omega0 = 0:
//   ratio(i, k) = rho_S(t)(i, k) / rho_S(0)(i, k),
// entries with |rho_S(0)| < 1e-18 set to zero.  Rows/columns follow the
// m = i - j ordering.
Eigen::MatrixXcd exact_dephasing_offdiagonal(const TruncatedBath& bath, double j,
                                             double theta, double phi, double t);

// One named agreement check between the brute-force model and a closed-form
// or path-sum prediction.
struct OracleCheck {
  std::string name;
  double measured = 0.0;   // |difference| (or defect) actually observed
  double tolerance = 0.0;
  bool pass = false;
};

// The full fixed battery of cross-checks: single-interval survivals at finite
// and zero temperature, multi-interval back-action sums, tilted collective
// states, rotation invariance, off-diagonal damping magnitude and phase,
// truncation stability, and propagator unitarity.
std::vector<OracleCheck> run_oracle_checks();

}  // namespace zeno

#endif
