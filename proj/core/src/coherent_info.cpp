#include "qcap/coherent_info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qcap/entropy.hpp"
#include "qcap/random.hpp"

namespace qcap {

namespace {

using Index = Eigen::Index;

void check_bipartition(const SystemLayout& layout, const Bipartition& cut) {
  if (cut.a.empty() || cut.b.empty())
    throw std::invalid_argument("bipartition sides must be nonempty");
  LabelSet all = cut.a;
  all.insert(all.end(), cut.b.begin(), cut.b.end());
  for (const auto& l : all) {
    (void)layout.index_of(l);
    if (std::count(all.begin(), all.end(), l) != 1)
      throw std::invalid_argument("label '" + l + "' appears on both sides of the bipartition");
  }
  if (all.size() != layout.size())
    throw std::invalid_argument("bipartition does not cover layout " + layout.describe());
}

double objective(const QuantumChannel& ch, const Matrix& m) {
  const Matrix rho = m * m.adjoint();
  const double tr = rho.trace().real();
  if (!(tr > 1e-300)) return -std::numeric_limits<double>::infinity();
  const DensityOperator in(SystemLayout::single("A", ch.in_dim()), rho / tr);
  return vn_entropy(apply(ch, in)) - vn_entropy(complementary_apply(ch, in));
}

Complex& coordinate(Matrix& m, std::size_t c) {
  return m(static_cast<Index>((c / 2) % static_cast<std::size_t>(m.rows())),
           static_cast<Index>((c / 2) / static_cast<std::size_t>(m.rows())));
}

}  // namespace

double state_coherent_info(const DensityOperator& rho, const Bipartition& cut) {
  check_bipartition(rho.layout(), cut);
  return vn_entropy(partial_trace(rho, cut.b)) - vn_entropy(rho);
}

double conditional_entropy(const DensityOperator& rho, const LabelSet& condition_on) {
  LabelSet a;
  for (const auto& l : rho.layout().labels())
    if (std::find(condition_on.begin(), condition_on.end(), l) == condition_on.end()) a.push_back(l);
  return -state_coherent_info(rho, Bipartition{a, condition_on});
}

CoherentInfoResult channel_coherent_info_at(const QuantumChannel& ch, const DensityOperator& rho_in) {
  const double value = vn_entropy(apply(ch, rho_in)) - vn_entropy(complementary_apply(ch, rho_in));
  return CoherentInfoResult{value, rho_in, CoherentInfoMode::FixedInput};
}

CoherentInfoResult channel_coherent_info_max(const QuantumChannel& ch, const HillClimbOptions& opts) {
  if (opts.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  const auto n = static_cast<Index>(ch.in_dim());
  const std::size_t coords = 2 * static_cast<std::size_t>(n * n);

  Matrix best_m = Matrix::Identity(n, n);
  double best = objective(ch, best_m);

  std::mt19937_64 rng(opts.seed);
  for (std::size_t restart = 0; restart < opts.restarts; ++restart) {
    Matrix m = restart == 0 ? Matrix::Identity(n, n)
                            : ginibre(ch.in_dim(), ch.in_dim(), opts.seed * 7919 + restart);
    double f = objective(ch, m);
    double step = opts.initial_step;
    std::size_t evals = 1, stagnant = 0;
    std::vector<std::size_t> order(coords);
    std::iota(order.begin(), order.end(), std::size_t{0});

    while (evals < opts.max_iters && stagnant < opts.stagnant_limit) {
      std::shuffle(order.begin(), order.end(), rng);
      bool improved = false;
      for (std::size_t c : order) {
        for (double sign : {1.0, -1.0}) {
          Matrix trial = m;
          Complex& z = coordinate(trial, c);
          z += (c % 2 == 0) ? Complex(sign * step, 0.0) : Complex(0.0, sign * step);
          const double ft = objective(ch, trial);
          ++evals;
          if (ft > f) {
            m = std::move(trial);
            f = ft;
            improved = true;
            break;
          }
        }
        if (evals >= opts.max_iters) break;
      }
      if (improved) {
        stagnant = 0;
      } else {
        step *= opts.step_decay;
        ++stagnant;
      }
    }
    if (f > best) {
      best = f;
      best_m = m;
    }
  }
  const Matrix rho = best_m * best_m.adjoint();
  DensityOperator input(SystemLayout::single("A", ch.in_dim()), rho / rho.trace().real());
  return CoherentInfoResult{best, std::move(input), CoherentInfoMode::Optimized};
}

CoherentInfoResult channel_coherent_info_max(const QuantumChannel& ch, std::size_t restarts,
                                             std::uint64_t seed, std::size_t iters) {
  HillClimbOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  opts.max_iters = iters;
  return channel_coherent_info_max(ch, opts);
}

double alicki_fannes_envelope(std::size_t d, double eps) {
  if (d < 2) throw std::invalid_argument("alicki_fannes_envelope needs d >= 2");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("epsilon outside [0,1]");
  return 4.0 * eps * std::log2(static_cast<double>(d)) + 2.0 * binary_entropy(eps);
}

}  // namespace qcap
