#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcap/certify.hpp"
#include "qcap/density.hpp"

namespace qcap {

// Key factors of every private state. The shield supplies the other two
// labels: its first factor is Alice's (A'), its second Bob's (B').
inline const std::string kKeyA = "A";
inline const std::string kKeyB = "B";

/// Private state gamma = U (P+_AB (x) sigma_A'B') U^dagger with the controlled
/// twist U = sum_{i,j} |ij><ij|_AB (x) U_ij. Layout is [A, B, A', B'].
class PditState {
 public:
  std::size_t d() const { return d_; }
  const SystemLayout& shield_layout() const { return shield_.layout(); }
  const DensityOperator& shield() const { return shield_; }
  /// U_ij at index i * d + j.
  const std::vector<UnitaryOperator>& twists() const { return twists_; }
  const UnitaryOperator& twist() const { return twist_; }
  const DensityOperator& body() const { return body_; }

  const std::string& shield_a() const { return shield_layout().factors()[0].label; }
  const std::string& shield_b() const { return shield_layout().factors()[1].label; }

 private:
  friend PditState make_pdit(std::size_t, const DensityOperator&,
                             const std::vector<UnitaryOperator>&);
  PditState(std::size_t d, DensityOperator shield, std::vector<UnitaryOperator> twists,
            UnitaryOperator twist, DensityOperator body);

  std::size_t d_;
  DensityOperator shield_;
  std::vector<UnitaryOperator> twists_;
  UnitaryOperator twist_;
  DensityOperator body_;
};

/// Throws std::invalid_argument when the shield is not bipartite, collides
/// with the key labels, or when twists has the wrong count or shape.
PditState make_pdit(std::size_t d, const DensityOperator& shield,
                    const std::vector<UnitaryOperator>& twists);

/// The block-diagonal controlled unitary sum_{ij} |ij><ij| (x) U_ij.
UnitaryOperator controlled_twist(std::size_t d, const std::vector<UnitaryOperator>& twists);

/// Phi+_AB (x) sigma, the state a pdit untwists to.
DensityOperator untwisted_reference(std::size_t d, const DensityOperator& shield);

/// State within `epsilon` of a pdit after untwisting, plus the witness pair
/// (twist, shield) that certifies the bound.
class ApproxPdit {
 public:
  /// Throws InvariantViolation unless the witness untwists `state` to within
  /// `epsilon` (+1e-12) of Phi+ (x) shield.
  ApproxPdit(DensityOperator state, std::size_t d, double epsilon, UnitaryOperator twist,
             DensityOperator shield, double mixing_weight = 0.0, double target_epsilon = 0.0);

  const DensityOperator& state() const { return state_; }
  std::size_t d() const { return d_; }
  /// Achieved untwisting distance.
  double epsilon() const { return epsilon_; }
  double target_epsilon() const { return target_epsilon_; }
  double mixing_weight() const { return mixing_weight_; }
  const UnitaryOperator& twist() const { return twist_; }
  const DensityOperator& shield() const { return shield_; }

 private:
  DensityOperator state_;
  std::size_t d_;
  double epsilon_;
  UnitaryOperator twist_;
  DensityOperator shield_;
  double mixing_weight_;
  double target_epsilon_;
};

DensityOperator untwist(const PditState& gamma);
DensityOperator untwist(const ApproxPdit& gamma);

/// (1 - weight) * body + weight * separable noise drawn from `seed`.
DensityOperator noisy_pdit_state(const PditState& gamma, double weight, std::uint64_t seed);

/// Bisects the noise weight until the untwisting distance lands in
/// [epsilon / 2, epsilon]. Rejects epsilon outside [0, 1] and bands the noise
/// cannot reach within 100 steps.
ApproxPdit make_approx_pdit(const PditState& gamma, double epsilon, std::uint64_t seed);
ApproxPdit make_approx_pdit(std::size_t d, const DensityOperator& shield,
                            const std::vector<UnitaryOperator>& twists, double epsilon,
                            std::uint64_t seed);

/// Key-attack distance: dephase AB with {|kk><kk|, off-key remainder}, trace
/// out the shield, and compare with K_AB (x) M_E where K_AB = (1/d) sum |kk><kk|
/// and M_E is the attacked state's marginal on any factors besides A, B and
/// the shield (none for the plain [A, B, A', B'] layout).
double key_attack_epsilon(const DensityOperator& state, std::size_t d, const LabelSet& shield);
double key_attack_epsilon(const ApproxPdit& gamma);
double key_attack_epsilon(const PditState& gamma);

/// PPT status across the A A' | B B' cut.
PptReport pdit_ppt(const DensityOperator& state, const std::string& shield_b);

// Twisting families. The swap families are pbits (d = 2) on a side x side shield.

std::vector<UnitaryOperator> identity_twists(std::size_t d, std::size_t shield_dim);

/// SWAP on two side-dim factors.
Matrix swap_matrix(std::size_t side);

/// U_00 = U_01 = U_10 = I, U_11 = SWAP.
std::vector<UnitaryOperator> controlled_swap_twists(std::size_t side);

/// (rho_sym + rho_asym) / 2 with rho_sym, rho_asym the normalized projectors on
/// the symmetric and antisymmetric subspaces. Paired with controlled_swap_twists
/// this is a pbit whose key is fully hidden from B' alone.
DensityOperator swap_shield(std::size_t side, const std::string& a = "A'",
                            const std::string& b = "B'");

/// Controlled-swap pbit dressed with seeded Haar unitaries that preserve its
/// privacy: shield V sigma V^dagger with V = V_A' (x) V_B', and
/// U_ii = (Q (x) R_i) V S_i V^dagger, S_0 = I, S_1 = SWAP. U_01, U_10 are Haar.
PditState random_private_pbit(std::size_t side, std::uint64_t seed);

}  // namespace qcap
