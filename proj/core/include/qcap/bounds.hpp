#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qcap {

/// Closed-form coherent-information lower bounds (bits). Probabilities are
/// validated to [0, 1] and key dimensions to d >= 2; violations throw
/// std::invalid_argument.

/// Flagged mixture of a pdit channel and an erasure channel, run through the
/// two-round shield-forwarding protocol:
/// (1/2)(1 - kappa)[kappa - p(kappa + 2) + 1] log2 d.
double nonconvexity_bound(double kappa, double p, std::size_t d);

struct BranchEntry {
  std::string channels;  // e.g. "N_gamma x I"
  double value = 0.0;
};

/// Per-branch contributions for the pairs {N_gamma, I, E} x {N_gamma, I, E},
/// where I is an unerased and E an erased use of the erasure channel.
struct BranchTable {
  std::array<BranchEntry, 9> rows;

  double sum() const;
  /// Per channel use: the protocol spends two uses per round.
  double rate() const { return 0.5 * sum(); }
};

BranchTable branch_table(double kappa, double p, std::size_t d);

/// (1 - p) log2 d: unerased rounds yield log2 d, erased rounds 0.
double erasure_superactivation_bound(double p, std::size_t d);

/// (1 - p - 4 eps) log2 d - 2 h(eps).
double noisy_erasure_bound(double p, double eps, std::size_t d);

enum class HSign {
  Printed,       // ... + 2 h(eps), as originally stated; CLI name "paper"
  Conservative,  // ... - 2 h(eps), same polarity as the erasure bound
};

/// 1 + ((1-p)/2) log2((1-p)/2) + ((1+p)/2) log2((1+p)/2) - 4 eps log2 d +/- 2 h(eps).
/// Only d = 2 is defined.
double depolarizing_bound(double p, double eps, std::size_t d = 2,
                          HSign sign = HSign::Conservative);

/// 1 - h((1 + p) / 2): coherent information of p Phi+ + (1 - p) sigma_AB at d = 2.
double depolarizing_closed_form(double p);

struct RootBracket {
  double lo = 0.0;  // f(lo) > 0 (or lo = 0 when f(0) <= 0)
  double hi = 0.0;  // f(hi) <= 0
  double value_at_lo = 0.0;
  double value_at_hi = 0.0;
  int iterations = 0;

  double width() const { return hi - lo; }
};

/// First point in (0, upper] where f stops being positive: a 1000-cell scan
/// locates the sign change, bisection narrows it to `tol`. Returns lo = hi = 0
/// when f(0) <= 0 and lo = hi = upper when f stays positive.
RootBracket first_nonpositive(const std::function<double(double)>& f, double upper,
                              double tol = 1e-13);

/// Largest tolerable noise for the erasure bound at (p, d).
RootBracket noisy_erasure_epsilon_root(double p, std::size_t d);

/// Largest tolerable noise for the depolarizing bound at p.
RootBracket depolarizing_epsilon_root(double p, HSign sign = HSign::Conservative);

struct BoundPoint {
  std::vector<std::pair<std::string, double>> params;
  double value = 0.0;
  bool positive = false;  // value > 0

  static BoundPoint make(std::vector<std::pair<std::string, double>> params, double value) {
    return BoundPoint{std::move(params), value, value > 0.0};
  }
};

}  // namespace qcap
