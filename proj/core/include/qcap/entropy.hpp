#pragma once

#include "qcap/density.hpp"

namespace qcap {

/// Entropies are in bits throughout.

/// h(x) = -x log2 x - (1-x) log2(1-x); throws std::invalid_argument outside [0, 1].
double binary_entropy(double x);

/// -sum l log2 l over eigenvalues. Values in [-kPsdTol, kEigenClip) count as
/// zero; anything more negative raises InvariantViolation.
double entropy_of_eigenvalues(const RealVector& eigenvalues);

double vn_entropy(const DensityOperator& rho);

}  // namespace qcap
