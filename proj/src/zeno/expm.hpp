// expm.hpp — dense matrix exponential via Pade approximation with scaling and squaring
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace zeno {

// exp(A) for a square complex matrix, Pade order 6 with scaling and squaring.
Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& a);

// exp(-i H t) for Hermitian H; throws AccuracyError if the result fails a
// unitarity check (max |U^dag U - I| < 1e-10).
Eigen::MatrixXcd unitary_propagator(const Eigen::MatrixXcd& h, double t);

}  // namespace zeno
