#include "qcap/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "qcap/entropy.hpp"

namespace qcap {

namespace {

void check_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(x) + " outside [0,1]");
}

double log_dim(std::size_t d) {
  if (d < 2) throw std::invalid_argument("key dimension must be >= 2");
  return std::log2(static_cast<double>(d));
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

double nonconvexity_bound(double kappa, double p, std::size_t d) {
  check_unit(kappa, "kappa");
  check_unit(p, "p");
  return 0.5 * (1.0 - kappa) * (kappa - p * (kappa + 2.0) + 1.0) * log_dim(d);
}

double BranchTable::sum() const {
  double s = 0.0;
  for (const auto& r : rows) s += r.value;
  return s;
}

BranchTable branch_table(double kappa, double p, std::size_t d) {
  check_unit(kappa, "kappa");
  check_unit(p, "p");
  const double l = log_dim(d);
  const double k = kappa, q = 1.0 - kappa;
  return BranchTable{{{
      {"N_gamma x I", k * q * (1.0 - p) * l},
      {"I x N_gamma", k * q * (1.0 - p) * l},
      {"N_gamma x N_gamma", 0.0},
      {"I x I", q * q * (1.0 - p) * (1.0 - p) * l},
      {"E x I", q * q * p * (1.0 - p) * l},
      {"I x E", -q * q * p * (1.0 - p) * l},
      {"E x E", -q * q * p * p * l},
      {"N_gamma x E", -k * q * p * l},
      {"E x N_gamma", 0.0},
  }}};
}

double erasure_superactivation_bound(double p, std::size_t d) {
  check_unit(p, "p");
  return (1.0 - p) * log_dim(d);
}

double noisy_erasure_bound(double p, double eps, std::size_t d) {
  check_unit(p, "p");
  check_unit(eps, "epsilon");
  return (1.0 - p - 4.0 * eps) * log_dim(d) - 2.0 * binary_entropy(eps);
}

double depolarizing_bound(double p, double eps, std::size_t d, HSign sign) {
  check_unit(p, "p");
  check_unit(eps, "epsilon");
  if (d != 2) throw std::invalid_argument("depolarizing bound is defined for d = 2 only");
  const double base = 1.0 + xlog2x((1.0 - p) / 2.0) + xlog2x((1.0 + p) / 2.0);
  const double h = 2.0 * binary_entropy(eps);
  return base - 4.0 * eps * log_dim(d) + (sign == HSign::Printed ? h : -h);
}

double depolarizing_closed_form(double p) {
  check_unit(p, "p");
  return 1.0 - binary_entropy((1.0 + p) / 2.0);
}

RootBracket first_nonpositive(const std::function<double(double)>& f, double upper, double tol) {
  RootBracket br;
  const double f0 = f(0.0);
  if (!(f0 > 0.0)) {
    br.value_at_lo = br.value_at_hi = f0;
    return br;
  }
  constexpr int kCells = 1000;
  double lo = 0.0, flo = f0, hi = upper, fhi = 0.0;
  bool found = false;
  for (int i = 1; i <= kCells; ++i) {
    const double x = upper * static_cast<double>(i) / kCells;
    const double fx = f(x);
    if (!(fx > 0.0)) {
      hi = x;
      fhi = fx;
      found = true;
      break;
    }
    lo = x;
    flo = fx;
  }
  if (!found) {
    br.lo = br.hi = upper;
    br.value_at_lo = br.value_at_hi = flo;
    return br;
  }
  int it = 0;
  while (hi - lo > tol && it < 200) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm > 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
    ++it;
  }
  return RootBracket{lo, hi, flo, fhi, it};
}

RootBracket noisy_erasure_epsilon_root(double p, std::size_t d) {
  check_unit(p, "p");
  (void)log_dim(d);
  return first_nonpositive([&](double e) { return noisy_erasure_bound(p, e, d); }, 0.5);
}

RootBracket depolarizing_epsilon_root(double p, HSign sign) {
  check_unit(p, "p");
  return first_nonpositive([&](double e) { return depolarizing_bound(p, e, 2, sign); }, 0.5);
}

}  // namespace qcap
