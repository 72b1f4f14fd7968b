#include "qcap/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qcap/ops.hpp"

namespace qcap {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("binary_entropy: argument " + std::to_string(x) + " outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_of_eigenvalues(const RealVector& eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l < -kPsdTol)
      throw InvariantViolation("negative eigenvalue " + std::to_string(l) + " in entropy");
    if (l < kEigenClip) continue;
    const double c = std::min(l, 1.0);
    s -= c * std::log2(c);
  }
  return s;
}

double vn_entropy(const DensityOperator& rho) {
  return entropy_of_eigenvalues(hermitian_eigenvalues(rho.matrix()));
}

}  // namespace qcap
