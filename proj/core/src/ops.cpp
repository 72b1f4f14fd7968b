#include "qcap/ops.hpp"

#include <algorithm>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qcap {

namespace {

using Index = Eigen::Index;

std::vector<std::size_t> strides_of(const SystemLayout& layout) {
  const auto dims = layout.dims();
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

// Flat offsets of every multi-index over `factors` (lexicographic in layout
// order), embedded into the full space of `layout`.
std::vector<Index> subset_offsets(const SystemLayout& layout, const std::vector<std::size_t>& factors) {
  const auto dims = layout.dims();
  const auto strides = strides_of(layout);
  std::vector<Index> offsets{0};
  for (std::size_t f : factors) {
    std::vector<Index> next;
    next.reserve(offsets.size() * dims[f]);
    for (Index base : offsets)
      for (std::size_t i = 0; i < dims[f]; ++i)
        next.push_back(base + static_cast<Index>(i * strides[f]));
    offsets = std::move(next);
  }
  return offsets;
}

// Splits the layout's factor indices into (selected, rest), both in layout order.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_factors(
    const SystemLayout& layout, const LabelSet& selected) {
  std::vector<bool> mark(layout.size(), false);
  for (const auto& l : selected) mark[layout.index_of(l)] = true;
  std::vector<std::size_t> in, out;
  for (std::size_t k = 0; k < layout.size(); ++k) (mark[k] ? in : out).push_back(k);
  return {in, out};
}

}  // namespace

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  auto layout = a.layout().concat(b.layout());
  Matrix m = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
  return DensityOperator(std::move(layout), m);
}

DensityOperator partial_trace(const DensityOperator& rho, const LabelSet& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  const auto& layout = rho.layout();
  auto [kept, traced] = split_factors(layout, keep);
  const auto ko = subset_offsets(layout, kept);
  const auto to = subset_offsets(layout, traced);
  const auto n = static_cast<Index>(ko.size());
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) {
      Complex acc = 0.0;
      for (Index t : to) acc += m(ko[r] + t, ko[c] + t);
      out(r, c) = acc;
    }
  return DensityOperator(layout.restrict_to(keep), out);
}

DensityOperator trace_out(const DensityOperator& rho, const LabelSet& drop) {
  const auto& layout = rho.layout();
  for (const auto& l : drop) (void)layout.index_of(l);
  LabelSet keep;
  for (const auto& l : layout.labels())
    if (std::find(drop.begin(), drop.end(), l) == drop.end()) keep.push_back(l);
  return partial_trace(rho, keep);
}

Matrix partial_transpose(const SystemLayout& layout, const Matrix& m, const LabelSet& on) {
  if (m.rows() != static_cast<Index>(layout.total_dim()) || m.cols() != m.rows())
    throw std::invalid_argument("partial_transpose: matrix does not fit layout");
  auto [flip, rest] = split_factors(layout, on);
  const auto fo = subset_offsets(layout, flip);
  const auto ro = subset_offsets(layout, rest);
  Matrix out(m.rows(), m.cols());
  for (Index a : ro)
    for (Index b : ro)
      for (Index x : fo)
        for (Index y : fo) out(a + y, b + x) = m(a + x, b + y);
  return out;
}

Matrix partial_transpose(const DensityOperator& rho, const LabelSet& on) {
  return partial_transpose(rho.layout(), rho.matrix(), on);
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues of a non-square matrix");
  if (m.rows() == 0) return RealVector();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  return solver.eigenvalues();
}

double min_eigenvalue(const Matrix& m) { return hermitian_eigenvalues(m).minCoeff(); }

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.layout() != sigma.layout())
    throw std::invalid_argument("trace_distance: layouts differ (" + rho.layout().describe() +
                                " vs " + sigma.layout().describe() + ")");
  return 0.5 * hermitian_eigenvalues(rho.matrix() - sigma.matrix()).cwiseAbs().sum();
}

Matrix embed_on_factor(const SystemLayout& layout, const std::string& label, const Matrix& op) {
  const std::size_t k = layout.index_of(label);
  if (op.cols() != static_cast<Index>(layout.factors()[k].dim))
    throw std::invalid_argument("operator with " + std::to_string(op.cols()) +
                                " columns cannot act on factor '" + label + "' of dim " +
                                std::to_string(layout.factors()[k].dim));
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < k; ++i) left *= layout.factors()[i].dim;
  for (std::size_t i = k + 1; i < layout.size(); ++i) right *= layout.factors()[i].dim;
  const Matrix il = Matrix::Identity(static_cast<Index>(left), static_cast<Index>(left));
  const Matrix ir = Matrix::Identity(static_cast<Index>(right), static_cast<Index>(right));
  const Matrix lk = Eigen::kroneckerProduct(il, op).eval();
  return Eigen::kroneckerProduct(lk, ir).eval();
}

DensityOperator permute(const DensityOperator& rho, const LabelSet& order) {
  const auto& layout = rho.layout();
  if (order.size() != layout.size()) throw std::invalid_argument("permute: label count mismatch");
  std::vector<Factor> factors;
  std::vector<std::size_t> src;
  for (const auto& l : order) {
    src.push_back(layout.index_of(l));
    factors.push_back(layout.factors()[src.back()]);
  }
  SystemLayout target(std::move(factors));
  // Offsets in the source space, enumerated in the target's factor order.
  const auto offsets = subset_offsets(layout, src);
  const auto n = static_cast<Index>(offsets.size());
  Matrix out(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) out(r, c) = rho.matrix()(offsets[r], offsets[c]);
  return DensityOperator(std::move(target), out);
}

}  // namespace qcap
