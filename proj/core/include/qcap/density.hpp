#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "qcap/layout.hpp"

namespace qcap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Numerical tolerances shared by every module.
inline constexpr double kHermitianTol = 1e-10;  // max |M - M^dagger|
inline constexpr double kTraceTol = 1e-10;      // |tr M - 1|
inline constexpr double kPsdTol = 1e-9;         // smallest admissible eigenvalue is -kPsdTol
inline constexpr double kUnitaryTol = 1e-10;    // max |U^dagger U - I|
inline constexpr double kEigenClip = 1e-12;     // eigenvalues below this contribute 0 entropy

/// Raised when a numerical invariant (PSD, unit trace, unitarity) is broken
/// beyond tolerance. Distinct from std::invalid_argument, which signals a
/// malformed request (unknown label, bad probability, mismatched dims).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Positive semidefinite, unit-trace Hermitian matrix over a labeled layout.
/// The stored matrix is exactly Hermitian: construction checks the input
/// against kHermitianTol and then symmetrizes it.
class DensityOperator {
 public:
  DensityOperator(SystemLayout layout, const Matrix& matrix);

  static DensityOperator pure(SystemLayout layout, const Vector& psi);
  static DensityOperator maximally_mixed(SystemLayout layout);
  static DensityOperator basis_state(SystemLayout layout, std::size_t index);
  /// |Phi+><Phi+| on a (dim) x b (dim), Phi+ = sum_k |kk> / sqrt(dim).
  static DensityOperator max_entangled(const std::string& a, const std::string& b, std::size_t dim);
  /// (1/dim) sum_k |kk><kk|.
  static DensityOperator classically_correlated(const std::string& a, const std::string& b,
                                                std::size_t dim);

  const SystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

  /// Same matrix under a new factorization of the same total dimension.
  DensityOperator relabeled(SystemLayout layout) const;

 private:
  SystemLayout layout_;
  Matrix matrix_;
};

/// Convex combination (1 - weight) * a + weight * b over a shared layout.
DensityOperator mix(const DensityOperator& a, const DensityOperator& b, double weight);

class UnitaryOperator {
 public:
  explicit UnitaryOperator(const Matrix& matrix);

  static UnitaryOperator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

/// U rho U^dagger. The unitary must match the state's total dimension.
DensityOperator conjugate(const UnitaryOperator& u, const DensityOperator& rho);
DensityOperator conjugate_adjoint(const UnitaryOperator& u, const DensityOperator& rho);

/// Max-abs deviation of M from M^dagger.
double hermiticity_error(const Matrix& m);

}  // namespace qcap
