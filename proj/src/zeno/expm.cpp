// expm.cpp — Pade order-6 scaling-and-squaring matrix exponential
#include "zeno/expm.hpp"

#include <cmath>
#include <stdexcept>

#include "zeno/errors.hpp"

namespace zeno {

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw std::domain_error("matrix_exponential needs a square matrix");
  const int n = static_cast<int>(a.rows());
  using Mat = Eigen::MatrixXcd;

  // Scale so the infinity norm of A / 2^s is at most 1/2.
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  if (norm > 0.5) {
    s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    if (s < 0) s = 0;
  }
  const Mat x = a / std::pow(2.0, s);

  // Diagonal Pade of order q = 6: N(X) = sum c_k X^k, D(X) = sum (-1)^k c_k X^k.
  constexpr int q = 6;
  double c = 1.0;
  Mat num = Mat::Identity(n, n);
  Mat den = Mat::Identity(n, n);
  Mat power = Mat::Identity(n, n);
  double sign = 1.0;
  for (int k = 0; k < q; ++k) {
    c = c * (q - k) / static_cast<double>((2 * q - k) * (k + 1));
    sign = -sign;
    power = power * x;
    num += c * power;
    den += (sign * c) * power;
  }

  Mat result = den.partialPivLu().solve(num);
  for (int k = 0; k < s; ++k) result = result * result;
  return result;
}

Eigen::MatrixXcd unitary_propagator(const Eigen::MatrixXcd& h, double t) {
  const std::complex<double> mit(0.0, -t);
  Eigen::MatrixXcd u = matrix_exponential(mit * h);
  const int n = static_cast<int>(u.rows());
  const double defect =
      (u.adjoint() * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(defect < 1e-10))
    throw AccuracyError("propagator lost unitarity (defect " + std::to_string(defect) + ")");
  return u;
}

}  // namespace zeno
