#include "qcap/density.hpp"

#include <cmath>
#include <sstream>

#include "qcap/ops.hpp"

namespace qcap {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

double hermiticity_error(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityOperator::DensityOperator(SystemLayout layout, const Matrix& matrix)
    : layout_(std::move(layout)) {
  const auto n = static_cast<Eigen::Index>(layout_.total_dim());
  if (matrix.rows() != n || matrix.cols() != n) {
    throw std::invalid_argument("density matrix of shape " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + " does not fit layout " +
                                layout_.describe());
  }
  const double herm = hermiticity_error(matrix);
  if (herm > kHermitianTol) throw InvariantViolation("density matrix not Hermitian: " + fmt(herm));
  matrix_ = 0.5 * (matrix + matrix.adjoint());
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw InvariantViolation("density matrix trace " + fmt(tr) + " != 1");
  const double lo = min_eigenvalue(matrix_);
  if (lo < -kPsdTol) throw InvariantViolation("density matrix not PSD: min eigenvalue " + fmt(lo));
}

DensityOperator DensityOperator::pure(SystemLayout layout, const Vector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("pure state from the zero vector");
  const Vector v = psi / norm;
  return DensityOperator(std::move(layout), v * v.adjoint());
}

DensityOperator DensityOperator::maximally_mixed(SystemLayout layout) {
  const auto n = static_cast<Eigen::Index>(layout.total_dim());
  return DensityOperator(std::move(layout), Matrix::Identity(n, n) / static_cast<double>(n));
}

DensityOperator DensityOperator::basis_state(SystemLayout layout, std::size_t index) {
  const auto n = static_cast<Eigen::Index>(layout.total_dim());
  if (static_cast<Eigen::Index>(index) >= n)
    throw std::invalid_argument("basis index " + std::to_string(index) + " out of range");
  Matrix m = Matrix::Zero(n, n);
  m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return DensityOperator(std::move(layout), m);
}

DensityOperator DensityOperator::max_entangled(const std::string& a, const std::string& b,
                                               std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  Vector psi = Vector::Zero(d * d);
  for (Eigen::Index k = 0; k < d; ++k) psi(k * d + k) = 1.0;
  return pure(SystemLayout({{a, dim}, {b, dim}}), psi);
}

DensityOperator DensityOperator::classically_correlated(const std::string& a, const std::string& b,
                                                        std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  Matrix m = Matrix::Zero(d * d, d * d);
  for (Eigen::Index k = 0; k < d; ++k) m(k * d + k, k * d + k) = 1.0 / static_cast<double>(d);
  return DensityOperator(SystemLayout({{a, dim}, {b, dim}}), m);
}

DensityOperator DensityOperator::relabeled(SystemLayout layout) const {
  if (layout.total_dim() != layout_.total_dim())
    throw std::invalid_argument("relabel: " + layout.describe() + " does not match " +
                                layout_.describe());
  return DensityOperator(std::move(layout), matrix_);
}

DensityOperator mix(const DensityOperator& a, const DensityOperator& b, double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) throw std::invalid_argument("mixing weight outside [0,1]");
  if (a.layout() != b.layout())
    throw std::invalid_argument("mix: layouts differ (" + a.layout().describe() + " vs " +
                                b.layout().describe() + ")");
  return DensityOperator(a.layout(), (1.0 - weight) * a.matrix() + weight * b.matrix());
}

UnitaryOperator::UnitaryOperator(const Matrix& matrix) : matrix_(matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
    throw std::invalid_argument("unitary must be a nonempty square matrix");
  const auto n = matrix.rows();
  const double err = (matrix.adjoint() * matrix - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (err > kUnitaryTol) throw std::invalid_argument("matrix is not unitary: deviation " + fmt(err));
}

UnitaryOperator UnitaryOperator::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryOperator(Matrix::Identity(n, n));
}

DensityOperator conjugate(const UnitaryOperator& u, const DensityOperator& rho) {
  if (u.dim() != rho.dim()) throw std::invalid_argument("unitary/state dimension mismatch");
  return DensityOperator(rho.layout(), u.matrix() * rho.matrix() * u.matrix().adjoint());
}

DensityOperator conjugate_adjoint(const UnitaryOperator& u, const DensityOperator& rho) {
  if (u.dim() != rho.dim()) throw std::invalid_argument("unitary/state dimension mismatch");
  return DensityOperator(rho.layout(), u.matrix().adjoint() * rho.matrix() * u.matrix());
}

}  // namespace qcap
