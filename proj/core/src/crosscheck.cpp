#include "qcap/crosscheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qcap/channel.hpp"
#include "qcap/coherent_info.hpp"
#include "qcap/ops.hpp"
#include "qcap/random.hpp"

namespace qcap {

namespace {

using Index = Eigen::Index;

constexpr double kCheckTol = 1e-9;

DensityOperator condition(const DensityOperator& rho, const Matrix& projector) {
  const Matrix m = projector * rho.matrix() * projector;
  const double w = m.trace().real();
  return DensityOperator(rho.layout(), m / w);
}

}  // namespace

DensityOperator perturbed_classical_state(double eps, std::uint64_t seed, std::size_t d) {
  const auto sigma = DensityOperator::classically_correlated(kKeyA, kKeyB, d);
  if (eps <= 0.0) return sigma;
  const auto tau = random_density(sigma.layout(), seed);
  const double full = trace_distance(sigma, tau);
  return mix(sigma, tau, std::min(1.0, eps / full));
}

DensityOperator depolarizing_protocol_state(double p, const DensityOperator& sigma) {
  const std::size_t d = sigma.layout().dim_of(kKeyA);
  return mix(sigma, DensityOperator::max_entangled(kKeyA, kKeyB, d), p);
}

double DepolarizingCrosscheck::min_numeric() const {
  return numeric.empty() ? std::numeric_limits<double>::quiet_NaN()
                         : *std::min_element(numeric.begin(), numeric.end());
}

DepolarizingCrosscheck numeric_crosscheck_depolarizing(double p, double eps, std::size_t seeds,
                                                       std::uint64_t first_seed) {
  DepolarizingCrosscheck rep;
  rep.p = p;
  rep.eps = eps;
  rep.bound = depolarizing_bound(p, eps, 2, HSign::Conservative);
  rep.closed_form = depolarizing_closed_form(p);
  const Bipartition cut{{kKeyA}, {kKeyB}};
  for (std::size_t i = 0; i < std::max<std::size_t>(seeds, 1); ++i) {
    const std::uint64_t seed = first_seed + i;
    const auto omega = depolarizing_protocol_state(p, perturbed_classical_state(eps, seed));
    const double ic = state_coherent_info(omega, cut);
    rep.numeric.push_back(ic);
    rep.seeds.push_back(seed);
    if (rep.violating_seed) continue;
    std::ostringstream os;
    os.precision(12);
    if (ic < rep.bound - kCheckTol) {
      os << "seed " << seed << ": I(A>B) = " << ic << " below bound " << rep.bound;
    } else if (eps == 0.0 && std::abs(ic - rep.closed_form) > kCheckTol) {
      os << "seed " << seed << ": I(A>B) = " << ic << " differs from 1 - h((1+p)/2) = "
         << rep.closed_form;
    }
    if (!os.str().empty()) {
      rep.violating_seed = seed;
      rep.message = os.str();
    }
  }
  return rep;
}

ErasureBranches erasure_protocol_branches(double p, const PditState& gamma) {
  const std::string& a_shield = gamma.shield_a();
  const std::size_t ds = gamma.shield_layout().dim_of(a_shield);
  // Branch states conditioned on the flag do not depend on p; at p in {0, 1}
  // one branch has zero weight, so it is read off an interior p instead.
  const double p_sim = (p > 0.0 && p < 1.0) ? p : 0.5;
  const auto out = apply_on(erasure_channel(p_sim, ds), gamma.body(), a_shield);

  const auto n = static_cast<Index>(ds + 1);
  Matrix flag = Matrix::Zero(n, n);
  flag(n - 1, n - 1) = 1.0;
  const Matrix keep = Matrix::Identity(n, n) - flag;
  return ErasureBranches{p, condition(out, embed_on_factor(out.layout(), a_shield, keep)),
                         condition(out, embed_on_factor(out.layout(), a_shield, flag))};
}

bool ErasureProtocolCrosscheck::unerased_ok() const {
  return std::abs(unerased - std::log2(static_cast<double>(d))) <= kCheckTol;
}

bool ErasureProtocolCrosscheck::erased_ok() const { return erased <= kCheckTol; }

ErasureProtocolCrosscheck numeric_crosscheck_erasure_protocol(double p, const PditState& gamma) {
  ErasureProtocolCrosscheck rep;
  rep.p = p;
  rep.d = gamma.d();
  rep.bound = erasure_superactivation_bound(p, gamma.d());
  const auto branches = erasure_protocol_branches(p, gamma);
  const Bipartition cut{{kKeyA}, {kKeyB, gamma.shield_a(), gamma.shield_b()}};
  rep.unerased = state_coherent_info(branches.unerased, cut);
  rep.erased = state_coherent_info(branches.erased, cut);
  rep.average = p * rep.erased + (1.0 - p) * rep.unerased;

  std::ostringstream os;
  os.precision(12);
  if (!rep.unerased_ok()) os << "unerased branch I(A>B) = " << rep.unerased << " != log2 d; ";
  if (!rep.erased_ok()) os << "erased branch I(A>B) = " << rep.erased << " > 0; ";
  if (std::abs(rep.erased) <= kCheckTol && std::abs(rep.average - rep.bound) > kCheckTol)
    os << "average " << rep.average << " != (1-p) log2 d = " << rep.bound << "; ";
  rep.message = os.str();
  return rep;
}

}  // namespace qcap
