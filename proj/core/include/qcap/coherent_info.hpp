#pragma once

#include <cstddef>
#include <cstdint>

#include "qcap/channel.hpp"
#include "qcap/ops.hpp"

namespace qcap {

/// Split of a layout's labels into an A side and a B side. Together they
/// must cover the layout exactly, and both must be nonempty.
struct Bipartition {
  LabelSet a;
  LabelSet b;
};

/// I(A>B) = S(B) - S(AB), in bits.
double state_coherent_info(const DensityOperator& rho, const Bipartition& cut);

/// S(A|B) = S(AB) - S(B) where B = `condition_on`, A = every other factor.
double conditional_entropy(const DensityOperator& rho, const LabelSet& condition_on);

enum class CoherentInfoMode { FixedInput, Optimized };

struct CoherentInfoResult {
  double value = 0.0;
  DensityOperator input_used;
  CoherentInfoMode mode = CoherentInfoMode::FixedInput;
};

/// S(N(rho)) - S(N^c(rho)).
CoherentInfoResult channel_coherent_info_at(const QuantumChannel& ch, const DensityOperator& rho_in);

struct HillClimbOptions {
  std::size_t restarts = 10;
  std::uint64_t seed = 0;
  std::size_t max_iters = 4000;   // objective evaluations per restart
  double initial_step = 0.25;
  double step_decay = 0.5;        // applied after a full pass without improvement
  std::size_t stagnant_limit = 20;  // consecutive step reductions before a restart ends
};

/// Heuristic max over inputs rho = M M^dagger / tr(M M^dagger). Restart 0
/// starts from M = I (the maximally mixed input); the rest from seeded
/// Ginibre M. Coordinate moves on Re/Im parts of M are accepted only when the
/// objective strictly improves, so the result is a certified lower bound on
/// the maximum and never below the maximally mixed value.
CoherentInfoResult channel_coherent_info_max(const QuantumChannel& ch,
                                             const HillClimbOptions& opts = {});
CoherentInfoResult channel_coherent_info_max(const QuantumChannel& ch, std::size_t restarts,
                                             std::uint64_t seed, std::size_t iters);

/// 4 eps log2 d + 2 h(eps).
double alicki_fannes_envelope(std::size_t d, double eps);

}  // namespace qcap
