#pragma once

#include <string>
#include <vector>

#include "qcap/density.hpp"

namespace qcap {

using LabelSet = std::vector<std::string>;

/// Kronecker product; the result layout is a.layout() followed by b.layout().
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// Reduced state on `keep` (factors kept in layout order).
DensityOperator partial_trace(const DensityOperator& rho, const LabelSet& keep);

/// Partial trace that drops the listed labels instead.
DensityOperator trace_out(const DensityOperator& rho, const LabelSet& drop);

/// Transpose of the factors in `on`. The result is Hermitian but not
/// necessarily PSD, so it is returned as a bare matrix.
Matrix partial_transpose(const DensityOperator& rho, const LabelSet& on);
Matrix partial_transpose(const SystemLayout& layout, const Matrix& m, const LabelSet& on);

/// Ascending eigenvalues of a Hermitian matrix. Only the lower triangle is read.
RealVector hermitian_eigenvalues(const Matrix& m);
double min_eigenvalue(const Matrix& m);

/// (1/2) sum |eig(rho - sigma)|; layouts must agree.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

/// I (x) op (x) I with `op` acting on factor `label` of `layout`. `op` may be
/// rectangular (out x in) where `in` is the factor's dim.
Matrix embed_on_factor(const SystemLayout& layout, const std::string& label, const Matrix& op);

/// Reorder the factors of a state. `order` must be a permutation of its labels.
DensityOperator permute(const DensityOperator& rho, const LabelSet& order);

}  // namespace qcap
