#pragma once

#include <cstddef>

#include "qcap/channel.hpp"
#include "qcap/ops.hpp"

namespace qcap {

struct PptReport {
  bool ppt = false;
  double min_eigenvalue = 0.0;
};

/// Peres test: partial transpose over `cut` has min eigenvalue >= -tol.
PptReport is_ppt(const DensityOperator& rho, const LabelSet& cut, double tol = kPsdTol);

struct SymmetricExtensionReport {
  double min_eigenvalue = 0.0;  // of the candidate extension
  double marginal_error = 0.0;  // max |tr_B' ext - target|
  double swap_error = 0.0;      // max |ext - SWAP_BB' ext SWAP_BB'|
  double tol = 1e-10;

  bool psd() const { return min_eigenvalue >= -tol; }
  bool marginal_ok() const { return marginal_error <= tol; }
  bool symmetric() const { return swap_error <= tol; }
  bool passed() const { return psd() && marginal_ok() && symmetric(); }
};

/// Checks a candidate extension on [A, B, B'] (given as a raw matrix, since
/// a failing candidate need not be a state) against the target on [A, B].
SymmetricExtensionReport check_two_symmetric_extension(const Matrix& candidate,
                                                       const DensityOperator& target,
                                                       double tol = 1e-10);

/// 1/2 (P+_AB (x) I_B'/r + P+_AB' (x) I_B/r) on [A, B, B'], each factor of dim r.
Matrix depolarizing_symmetric_extension(std::size_t r);

/// Certificate that choi(depolarizing(1/2, r)) is two-extendible. Only p = 1/2
/// carries a known witness; other p are rejected.
SymmetricExtensionReport verify_two_symmetric_extension(double p, std::size_t r);

}  // namespace qcap
