#include "qcap/certify.hpp"

#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qcap {

namespace {

using Index = Eigen::Index;

// |Phi+><Phi+| on two r-dim factors.
Matrix phi_plus(std::size_t r) {
  return DensityOperator::max_entangled("x", "y", r).matrix();
}

// Matrix on [A, B, B'] reordered as [A, B', B], i.e. SWAP_BB' M SWAP_BB'.
Matrix swap_last_two(const Matrix& m, std::size_t da, std::size_t db) {
  const auto n = m.rows();
  Matrix out(n, n);
  auto idx = [&](Index a, Index b, Index c) { return (a * db + b) * db + c; };
  const auto A = static_cast<Index>(da), B = static_cast<Index>(db);
  for (Index a = 0; a < A; ++a)
    for (Index b = 0; b < B; ++b)
      for (Index c = 0; c < B; ++c)
        for (Index a2 = 0; a2 < A; ++a2)
          for (Index b2 = 0; b2 < B; ++b2)
            for (Index c2 = 0; c2 < B; ++c2)
              out(idx(a, b, c), idx(a2, b2, c2)) = m(idx(a, c, b), idx(a2, c2, b2));
  return out;
}

}  // namespace

PptReport is_ppt(const DensityOperator& rho, const LabelSet& cut, double tol) {
  const double lo = min_eigenvalue(partial_transpose(rho, cut));
  return PptReport{lo >= -tol, lo};
}

SymmetricExtensionReport check_two_symmetric_extension(const Matrix& candidate,
                                                       const DensityOperator& target, double tol) {
  if (target.layout().size() != 2)
    throw std::invalid_argument("symmetric extension target must be bipartite");
  const std::size_t da = target.layout().factors()[0].dim;
  const std::size_t db = target.layout().factors()[1].dim;
  const auto n = static_cast<Index>(da * db * db);
  if (candidate.rows() != n || candidate.cols() != n)
    throw std::invalid_argument("extension candidate has the wrong shape");

  SymmetricExtensionReport rep;
  rep.tol = tol;
  const Matrix herm = 0.5 * (candidate + candidate.adjoint());
  rep.min_eigenvalue = min_eigenvalue(herm);
  if (hermiticity_error(candidate) > tol) rep.min_eigenvalue = -1.0;

  // tr_B' computed directly; the candidate may be indefinite.
  const auto D = static_cast<Index>(da * db), B = static_cast<Index>(db);
  Matrix marginal = Matrix::Zero(D, D);
  for (Index r = 0; r < D; ++r)
    for (Index c = 0; c < D; ++c)
      for (Index t = 0; t < B; ++t) marginal(r, c) += candidate(r * B + t, c * B + t);
  rep.marginal_error = (marginal - target.matrix()).cwiseAbs().maxCoeff();
  rep.swap_error = (candidate - swap_last_two(candidate, da, db)).cwiseAbs().maxCoeff();
  return rep;
}

Matrix depolarizing_symmetric_extension(std::size_t r) {
  const auto n = static_cast<Index>(r);
  const Matrix id = Matrix::Identity(n, n) / static_cast<double>(r);
  const Matrix first = Eigen::kroneckerProduct(phi_plus(r), id).eval();  // P+_AB (x) I_B'/r
  const Matrix second = swap_last_two(first, r, r);                      // P+_AB' (x) I_B/r
  return 0.5 * (first + second);
}

SymmetricExtensionReport verify_two_symmetric_extension(double p, std::size_t r) {
  if (p != 0.5)
    throw std::invalid_argument("two-symmetric-extension witness is only available for p = 1/2");
  if (r < 2) throw std::invalid_argument("input dimension r must be >= 2");
  const auto target = choi_state(depolarizing_channel(p, r)).state();
  return check_two_symmetric_extension(depolarizing_symmetric_extension(r), target);
}

}  // namespace qcap
