#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcap/bounds.hpp"
#include "qcap/pdit.hpp"

namespace qcap {

/// Numerical counterparts of the closed-form bounds, assembled from states and
/// channels rather than formulas.

/// sigma_AB shifted toward a seeded random state so that its trace distance to
/// (1/d) sum |kk><kk| is min(eps, distance to the random state).
DensityOperator perturbed_classical_state(double eps, std::uint64_t seed, std::size_t d = 2);

/// p Phi+_AB + (1 - p) sigma.
DensityOperator depolarizing_protocol_state(double p, const DensityOperator& sigma);

struct DepolarizingCrosscheck {
  double p = 0.0;
  double eps = 0.0;
  double bound = 0.0;        // conservative closed form
  double closed_form = 0.0;  // 1 - h((1+p)/2)
  std::vector<double> numeric;  // one per seed
  std::vector<std::uint64_t> seeds;
  std::optional<std::uint64_t> violating_seed;
  std::string message;

  bool ok() const { return !violating_seed.has_value() && message.empty(); }
  double min_numeric() const;
};

/// For each seed builds omega_AB with a perturbed sigma_{AB,eps}, evaluates
/// I(A>B) by eigendecomposition and checks it against the conservative bound
/// (and, at eps = 0, against the closed form) within 1e-9.
DepolarizingCrosscheck numeric_crosscheck_depolarizing(double p, double eps, std::size_t seeds,
                                                       std::uint64_t first_seed = 0);

struct ErasureBranches {
  double p = 0.0;
  DensityOperator unerased;  // A' delivered, conditioned on no flag
  DensityOperator erased;    // A' replaced by the flag
};

/// Sends A' of the pdit through erasure(p) and splits the output on the flag.
/// Both branch states keep the layout [A, B, A'(d'+1), B'].
ErasureBranches erasure_protocol_branches(double p, const PditState& gamma);

struct ErasureProtocolCrosscheck {
  double p = 0.0;
  std::size_t d = 2;
  double unerased = 0.0;  // I(A > B A' B') on the unerased branch
  double erased = 0.0;    // same on the erased branch
  double average = 0.0;   // p erased + (1 - p) unerased
  double bound = 0.0;     // (1 - p) log2 d
  std::string message;    // empty on success

  bool unerased_ok() const;
  bool erased_ok() const;
  bool ok() const { return message.empty(); }
};

/// Checks unerased = log2 d and erased <= 0 within 1e-9, and when the erased
/// branch is 0 that the average equals (1 - p) log2 d.
ErasureProtocolCrosscheck numeric_crosscheck_erasure_protocol(double p, const PditState& gamma);

}  // namespace qcap
