#include "qcap/pdit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "qcap/ops.hpp"
#include "qcap/random.hpp"

namespace qcap {

namespace {

using Index = Eigen::Index;

constexpr int kBisectionSteps = 100;

SystemLayout pdit_layout(std::size_t d, const SystemLayout& shield) {
  return SystemLayout({{kKeyA, d}, {kKeyB, d}}).concat(shield);
}

double untwist_distance(const DensityOperator& state, const UnitaryOperator& twist,
                        const DensityOperator& reference) {
  return trace_distance(conjugate_adjoint(twist, state), reference);
}

}  // namespace

PditState::PditState(std::size_t d, DensityOperator shield, std::vector<UnitaryOperator> twists,
                     UnitaryOperator twist, DensityOperator body)
    : d_(d),
      shield_(std::move(shield)),
      twists_(std::move(twists)),
      twist_(std::move(twist)),
      body_(std::move(body)) {}

UnitaryOperator controlled_twist(std::size_t d, const std::vector<UnitaryOperator>& twists) {
  if (twists.size() != d * d)
    throw std::invalid_argument("expected " + std::to_string(d * d) + " twisting unitaries, got " +
                                std::to_string(twists.size()));
  const auto s = static_cast<Index>(twists.front().dim());
  Matrix u = Matrix::Zero(static_cast<Index>(d * d) * s, static_cast<Index>(d * d) * s);
  for (std::size_t k = 0; k < twists.size(); ++k) {
    if (static_cast<Index>(twists[k].dim()) != s)
      throw std::invalid_argument("twisting unitaries differ in dimension");
    u.block(static_cast<Index>(k) * s, static_cast<Index>(k) * s, s, s) = twists[k].matrix();
  }
  return UnitaryOperator(u);
}

DensityOperator untwisted_reference(std::size_t d, const DensityOperator& shield) {
  return tensor(DensityOperator::max_entangled(kKeyA, kKeyB, d), shield);
}

PditState make_pdit(std::size_t d, const DensityOperator& shield,
                    const std::vector<UnitaryOperator>& twists) {
  if (d < 2) throw std::invalid_argument("key dimension must be >= 2");
  const auto& sl = shield.layout();
  if (sl.size() != 2)
    throw std::invalid_argument("shield must have exactly two factors (A', B'), got " +
                                sl.describe());
  if (sl.contains(kKeyA) || sl.contains(kKeyB))
    throw std::invalid_argument("shield labels collide with the key labels A, B");
  for (const auto& u : twists)
    if (u.dim() != sl.total_dim())
      throw std::invalid_argument("twisting unitary of dim " + std::to_string(u.dim()) +
                                  " does not act on shield " + sl.describe());
  auto twist = controlled_twist(d, twists);
  auto body = conjugate(twist, untwisted_reference(d, shield));
  return PditState(d, shield, twists, std::move(twist), std::move(body));
}

ApproxPdit::ApproxPdit(DensityOperator state, std::size_t d, double epsilon, UnitaryOperator twist,
                       DensityOperator shield, double mixing_weight, double target_epsilon)
    : state_(std::move(state)),
      d_(d),
      epsilon_(epsilon),
      twist_(std::move(twist)),
      shield_(std::move(shield)),
      mixing_weight_(mixing_weight),
      target_epsilon_(target_epsilon) {
  if (state_.layout() != pdit_layout(d_, shield_.layout()))
    throw std::invalid_argument("approximate pdit layout " + state_.layout().describe() +
                                " does not match key/shield");
  const double dist = untwist_distance(state_, twist_, untwisted_reference(d_, shield_));
  if (dist > epsilon_ + 1e-12)
    throw InvariantViolation("untwisting witness misses: distance " + std::to_string(dist) +
                             " > epsilon " + std::to_string(epsilon_));
}

DensityOperator untwist(const PditState& gamma) { return conjugate_adjoint(gamma.twist(), gamma.body()); }

DensityOperator untwist(const ApproxPdit& gamma) {
  return conjugate_adjoint(gamma.twist(), gamma.state());
}

DensityOperator noisy_pdit_state(const PditState& gamma, double weight, std::uint64_t seed) {
  return mix(gamma.body(), random_product_density(gamma.body().layout(), seed), weight);
}

ApproxPdit make_approx_pdit(const PditState& gamma, double epsilon, std::uint64_t seed) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("epsilon " + std::to_string(epsilon) + " outside [0,1]");
  const auto reference = untwisted_reference(gamma.d(), gamma.shield());
  if (epsilon == 0.0)
    return ApproxPdit(gamma.body(), gamma.d(), untwist_distance(gamma.body(), gamma.twist(), reference),
                      gamma.twist(), gamma.shield(), 0.0, 0.0);

  const auto noise = random_product_density(gamma.body().layout(), seed);
  auto distance_at = [&](double w) {
    return untwist_distance(mix(gamma.body(), noise, w), gamma.twist(), reference);
  };
  double lo = 0.0, hi = 1.0;
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double w = step == 0 ? 1.0 : 0.5 * (lo + hi);
    const double dist = distance_at(w);
    if (dist > epsilon) {
      hi = w;
    } else if (dist < 0.5 * epsilon) {
      if (step == 0) break;  // even pure noise is too close
      lo = w;
    } else {
      return ApproxPdit(mix(gamma.body(), noise, w), gamma.d(), dist, gamma.twist(), gamma.shield(),
                        w, epsilon);
    }
  }
  throw std::invalid_argument("cannot reach untwisting distance band [" +
                              std::to_string(0.5 * epsilon) + ", " + std::to_string(epsilon) +
                              "] with noise seed " + std::to_string(seed));
}

ApproxPdit make_approx_pdit(std::size_t d, const DensityOperator& shield,
                            const std::vector<UnitaryOperator>& twists, double epsilon,
                            std::uint64_t seed) {
  return make_approx_pdit(make_pdit(d, shield, twists), epsilon, seed);
}

double key_attack_epsilon(const DensityOperator& state, std::size_t d, const LabelSet& shield) {
  const auto& layout = state.layout();
  if (layout.dim_of(kKeyA) != d || layout.dim_of(kKeyB) != d)
    throw std::invalid_argument("key factors A, B must have dimension " + std::to_string(d));

  // Outcome class of each basis index: k for |kk>, d for the off-key remainder.
  const auto dims = layout.dims();
  const std::size_t ia = layout.index_of(kKeyA), ib = layout.index_of(kKeyB);
  std::size_t sa = 1, sb = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    if (k > ia) sa *= dims[k];
    if (k > ib) sb *= dims[k];
  }
  const auto n = static_cast<Index>(state.dim());
  std::vector<std::size_t> outcome(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const std::size_t a = (static_cast<std::size_t>(i) / sa) % d;
    const std::size_t b = (static_cast<std::size_t>(i) / sb) % d;
    outcome[static_cast<std::size_t>(i)] = a == b ? a : d;
  }
  Matrix attacked = state.matrix();
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      if (outcome[static_cast<std::size_t>(r)] != outcome[static_cast<std::size_t>(c)])
        attacked(r, c) = 0.0;

  const auto reduced = trace_out(DensityOperator(layout, attacked), shield);
  LabelSet env;
  for (const auto& l : reduced.layout().labels())
    if (l != kKeyA && l != kKeyB) env.push_back(l);
  auto reference = DensityOperator::classically_correlated(kKeyA, kKeyB, d);
  if (!env.empty()) reference = tensor(reference, partial_trace(reduced, env));
  return trace_distance(reduced, permute(reference, reduced.layout().labels()));
}

double key_attack_epsilon(const ApproxPdit& gamma) {
  return key_attack_epsilon(gamma.state(), gamma.d(), gamma.shield().layout().labels());
}

double key_attack_epsilon(const PditState& gamma) {
  return key_attack_epsilon(gamma.body(), gamma.d(), gamma.shield_layout().labels());
}

PptReport pdit_ppt(const DensityOperator& state, const std::string& shield_b) {
  return is_ppt(state, {kKeyB, shield_b});
}

std::vector<UnitaryOperator> identity_twists(std::size_t d, std::size_t shield_dim) {
  return std::vector<UnitaryOperator>(d * d, UnitaryOperator::identity(shield_dim));
}

Matrix swap_matrix(std::size_t side) {
  const auto s = static_cast<Index>(side);
  Matrix m = Matrix::Zero(s * s, s * s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) m(j * s + i, i * s + j) = 1.0;
  return m;
}

std::vector<UnitaryOperator> controlled_swap_twists(std::size_t side) {
  auto twists = identity_twists(2, side * side);
  twists[3] = UnitaryOperator(swap_matrix(side));
  return twists;
}

DensityOperator swap_shield(std::size_t side, const std::string& a, const std::string& b) {
  if (side < 2) throw std::invalid_argument("swap shield needs side >= 2");
  const auto n = static_cast<Index>(side * side);
  const Matrix id = Matrix::Identity(n, n);
  const Matrix swap = swap_matrix(side);
  const double s = static_cast<double>(side);
  const Matrix sym = 0.5 * (id + swap) / (s * (s + 1.0) / 2.0);
  const Matrix asym = 0.5 * (id - swap) / (s * (s - 1.0) / 2.0);
  return DensityOperator(SystemLayout({{a, side}, {b, side}}), 0.5 * (sym + asym));
}

PditState random_private_pbit(std::size_t side, std::uint64_t seed) {
  const std::uint64_t base = seed * 8;
  const Matrix va = random_unitary(side, base + 1).matrix();
  const Matrix vb = random_unitary(side, base + 2).matrix();
  const Matrix q = random_unitary(side, base + 3).matrix();
  const Matrix v = Eigen::kroneckerProduct(va, vb).eval();
  const auto flower = swap_shield(side);
  const DensityOperator shield(flower.layout(), v * flower.matrix() * v.adjoint());

  std::vector<UnitaryOperator> twists;
  const Matrix s_diag[2] = {Matrix::Identity(v.rows(), v.cols()), swap_matrix(side)};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (i != j) {
        twists.push_back(random_unitary(side * side, base + 4 + i));
        continue;
      }
      const Matrix r = random_unitary(side, base + 6 + i).matrix();
      const Matrix local = Eigen::kroneckerProduct(q, r).eval();
      twists.emplace_back(local * v * s_diag[i] * v.adjoint());
    }
  return make_pdit(2, shield, twists);
}

}  // namespace qcap
