#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcap/density.hpp"

namespace qcap {

/// CPTP map stored as a Kraus family {K_i}, each out_dim x in_dim. The
/// canonical Stinespring isometry is V = sum_i K_i (x) |i>_E, so the
/// environment dimension equals the number of Kraus operators.
class QuantumChannel {
 public:
  /// Throws std::invalid_argument on shape errors and InvariantViolation when
  /// sum K^dagger K deviates from the identity by more than kHermitianTol.
  QuantumChannel(std::string name, std::size_t in_dim, std::size_t out_dim,
                 std::vector<Matrix> kraus);

  const std::string& name() const { return name_; }
  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  std::size_t env_dim() const { return kraus_.size(); }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  /// (out_dim * env_dim) x in_dim isometry, output index = b * env_dim + e.
  Matrix stinespring() const;

  /// max |sum K^dagger K - I|.
  double trace_preservation_error() const;

 private:
  std::string name_;
  std::size_t in_dim_;
  std::size_t out_dim_;
  std::vector<Matrix> kraus_;
};

QuantumChannel identity_channel(std::size_t dim);

/// Transmits with probability 1 - p, otherwise outputs the flag |d>, the last
/// basis vector of the (d + 1)-dimensional output.
QuantumChannel erasure_channel(double p, std::size_t d);

/// rho -> p rho + (1 - p) I / r, realized with r^2 Weyl-Heisenberg Kraus operators.
QuantumChannel depolarizing_channel(double p, std::size_t r);

/// kappa n1 (x) |0><0|_F + (1 - kappa) n2 (x) |1><1|_F. Both outputs are
/// zero-padded into a common dimension c = max(out1, out2); output index is
/// b * 2 + flag, i.e. layout [B(c), F(2)].
QuantumChannel flagged_mixture(double kappa, const QuantumChannel& n1, const QuantumChannel& n2);

/// Output layout [B(common), F(2)] of flagged_mixture(_, n1, n2).
SystemLayout flagged_output_layout(const QuantumChannel& n1, const QuantumChannel& n2,
                                   const std::string& out_label = "B",
                                   const std::string& flag_label = "F");

/// sum_i K_i rho K_i^dagger with the whole state as input. The output is a
/// single factor named `out_label`.
DensityOperator apply(const QuantumChannel& ch, const DensityOperator& rho,
                      const std::string& out_label = "B");

/// Channel on factor `label`, identity elsewhere. The factor keeps its label
/// and takes the channel's output dimension.
DensityOperator apply_on(const QuantumChannel& ch, const DensityOperator& rho,
                         const std::string& label);

/// Environment output: E_ij = tr(K_i rho K_j^dagger).
DensityOperator complementary_apply(const QuantumChannel& ch, const DensityOperator& rho,
                                    const std::string& env_label = "E");

/// Choi-Jamiolkowski state (id (x) ch)(Phi+) on [A(in_dim), B(out_dim)].
/// Construction enforces tr_B = I / in_dim within kHermitianTol.
class ChoiState {
 public:
  explicit ChoiState(DensityOperator state);

  const DensityOperator& state() const { return state_; }
  std::size_t in_dim() const { return state_.layout().factors()[0].dim; }
  std::size_t out_dim() const { return state_.layout().factors()[1].dim; }

 private:
  DensityOperator state_;
};

ChoiState choi_state(const QuantumChannel& ch, const std::string& a = "A",
                     const std::string& b = "B");

}  // namespace qcap
