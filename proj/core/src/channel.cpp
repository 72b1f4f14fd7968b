#include "qcap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcap/ops.hpp"

namespace qcap {

namespace {

using Index = Eigen::Index;

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(what) + " = " + std::to_string(p) +
                                " outside [0,1]");
}

Matrix zero_padded(const Matrix& k, std::size_t rows) {
  Matrix out = Matrix::Zero(static_cast<Index>(rows), k.cols());
  out.topRows(k.rows()) = k;
  return out;
}

}  // namespace

QuantumChannel::QuantumChannel(std::string name, std::size_t in_dim, std::size_t out_dim,
                               std::vector<Matrix> kraus)
    : name_(std::move(name)), in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(kraus)) {
  if (in_dim_ == 0 || out_dim_ == 0) throw std::invalid_argument("channel dimensions must be >= 1");
  if (kraus_.empty()) throw std::invalid_argument("channel '" + name_ + "' has no Kraus operators");
  for (const auto& k : kraus_)
    if (k.rows() != static_cast<Index>(out_dim_) || k.cols() != static_cast<Index>(in_dim_))
      throw std::invalid_argument("channel '" + name_ + "': Kraus operator of shape " +
                                  std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                                  ", expected " + std::to_string(out_dim_) + "x" +
                                  std::to_string(in_dim_));
  const double err = trace_preservation_error();
  if (err > kHermitianTol)
    throw InvariantViolation("channel '" + name_ + "' is not trace preserving (deviation " +
                             std::to_string(err) + ")");
}

double QuantumChannel::trace_preservation_error() const {
  const auto n = static_cast<Index>(in_dim_);
  Matrix sum = Matrix::Zero(n, n);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return (sum - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

Matrix QuantumChannel::stinespring() const {
  const auto env = static_cast<Index>(kraus_.size());
  Matrix v = Matrix::Zero(static_cast<Index>(out_dim_) * env, static_cast<Index>(in_dim_));
  for (Index e = 0; e < env; ++e)
    for (Index b = 0; b < static_cast<Index>(out_dim_); ++b) v.row(b * env + e) = kraus_[e].row(b);
  return v;
}

QuantumChannel identity_channel(std::size_t dim) {
  const auto n = static_cast<Index>(dim);
  return QuantumChannel("identity", dim, dim, {Matrix::Identity(n, n)});
}

QuantumChannel erasure_channel(double p, std::size_t d) {
  check_probability(p, "erasure probability");
  if (d < 2) throw std::invalid_argument("erasure channel needs d >= 2");
  const auto n = static_cast<Index>(d);
  std::vector<Matrix> kraus;
  Matrix keep = Matrix::Zero(n + 1, n);
  keep.topRows(n) = Matrix::Identity(n, n);
  kraus.push_back(std::sqrt(1.0 - p) * keep);
  for (Index i = 0; i < n; ++i) {
    Matrix k = Matrix::Zero(n + 1, n);
    k(n, i) = std::sqrt(p);
    kraus.push_back(k);
  }
  return QuantumChannel("erasure", d, d + 1, std::move(kraus));
}

QuantumChannel depolarizing_channel(double p, std::size_t r) {
  check_probability(p, "depolarizing parameter");
  if (r < 2) throw std::invalid_argument("depolarizing channel needs r >= 2");
  const auto n = static_cast<Index>(r);
  const double rr = static_cast<double>(r * r);
  Matrix shift = Matrix::Zero(n, n);
  Matrix clock = Matrix::Zero(n, n);
  for (Index k = 0; k < n; ++k) {
    shift((k + 1) % n, k) = 1.0;
    clock(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  }
  std::vector<Matrix> kraus;
  Matrix xa = Matrix::Identity(n, n);
  for (Index a = 0; a < n; ++a) {
    Matrix zb = Matrix::Identity(n, n);
    for (Index b = 0; b < n; ++b) {
      const double w = (a == 0 && b == 0) ? p + (1.0 - p) / rr : (1.0 - p) / rr;
      kraus.push_back(std::sqrt(w) * xa * zb);
      zb = clock * zb;
    }
    xa = shift * xa;
  }
  return QuantumChannel("depolarizing", r, r, std::move(kraus));
}

QuantumChannel flagged_mixture(double kappa, const QuantumChannel& n1, const QuantumChannel& n2) {
  check_probability(kappa, "kappa");
  if (n1.in_dim() != n2.in_dim())
    throw std::invalid_argument("flagged_mixture: input dimensions differ (" +
                                std::to_string(n1.in_dim()) + " vs " +
                                std::to_string(n2.in_dim()) + ")");
  const std::size_t common = std::max(n1.out_dim(), n2.out_dim());
  Matrix flag0 = Matrix::Zero(2, 1), flag1 = Matrix::Zero(2, 1);
  flag0(0, 0) = 1.0;
  flag1(1, 0) = 1.0;
  std::vector<Matrix> kraus;
  auto add = [&](const QuantumChannel& ch, double w, const Matrix& flag) {
    for (const auto& k : ch.kraus()) {
      const Matrix padded = zero_padded(k, common);
      Matrix out(padded.rows() * 2, padded.cols());
      for (Index r = 0; r < padded.rows(); ++r)
        for (Index f = 0; f < 2; ++f) out.row(r * 2 + f) = flag(f, 0) * padded.row(r);
      kraus.push_back(std::sqrt(w) * out);
    }
  };
  add(n1, kappa, flag0);
  add(n2, 1.0 - kappa, flag1);
  return QuantumChannel("flagged(" + n1.name() + "," + n2.name() + ")", n1.in_dim(), common * 2,
                        std::move(kraus));
}

SystemLayout flagged_output_layout(const QuantumChannel& n1, const QuantumChannel& n2,
                                   const std::string& out_label, const std::string& flag_label) {
  return SystemLayout({{out_label, std::max(n1.out_dim(), n2.out_dim())}, {flag_label, 2}});
}

DensityOperator apply(const QuantumChannel& ch, const DensityOperator& rho,
                      const std::string& out_label) {
  if (rho.dim() != ch.in_dim())
    throw std::invalid_argument("channel '" + ch.name() + "' expects input dim " +
                                std::to_string(ch.in_dim()) + ", got " +
                                std::to_string(rho.dim()));
  const auto n = static_cast<Index>(ch.out_dim());
  Matrix out = Matrix::Zero(n, n);
  for (const auto& k : ch.kraus()) out += k * rho.matrix() * k.adjoint();
  return DensityOperator(SystemLayout::single(out_label, ch.out_dim()), out);
}

DensityOperator apply_on(const QuantumChannel& ch, const DensityOperator& rho,
                         const std::string& label) {
  const auto& layout = rho.layout();
  if (layout.dim_of(label) != ch.in_dim())
    throw std::invalid_argument("channel '" + ch.name() + "' expects input dim " +
                                std::to_string(ch.in_dim()) + ", factor '" + label + "' has " +
                                std::to_string(layout.dim_of(label)));
  auto out_layout = layout.with_dim(label, ch.out_dim());
  const auto n = static_cast<Index>(out_layout.total_dim());
  Matrix out = Matrix::Zero(n, n);
  for (const auto& k : ch.kraus()) {
    const Matrix big = embed_on_factor(layout, label, k);
    out += big * rho.matrix() * big.adjoint();
  }
  return DensityOperator(std::move(out_layout), out);
}

DensityOperator complementary_apply(const QuantumChannel& ch, const DensityOperator& rho,
                                    const std::string& env_label) {
  if (rho.dim() != ch.in_dim())
    throw std::invalid_argument("channel '" + ch.name() + "' expects input dim " +
                                std::to_string(ch.in_dim()) + ", got " +
                                std::to_string(rho.dim()));
  const auto& ks = ch.kraus();
  const auto env = static_cast<Index>(ks.size());
  Matrix e(env, env);
  std::vector<Matrix> left;
  left.reserve(ks.size());
  for (const auto& k : ks) left.push_back(k * rho.matrix());
  // tr(K_i rho K_j^dagger) = sum over elementwise (K_i rho) .* conj(K_j)
  for (Index i = 0; i < env; ++i)
    for (Index j = 0; j < env; ++j) e(i, j) = left[i].cwiseProduct(ks[j].conjugate()).sum();
  return DensityOperator(SystemLayout::single(env_label, ks.size()), e);
}

ChoiState::ChoiState(DensityOperator state) : state_(std::move(state)) {
  if (state_.layout().size() != 2)
    throw std::invalid_argument("Choi state needs a two-factor layout, got " +
                                state_.layout().describe());
  const auto& a = state_.layout().factors()[0];
  const auto marginal = partial_trace(state_, {a.label});
  const auto n = static_cast<Index>(a.dim);
  const double err =
      (marginal.matrix() - Matrix::Identity(n, n) / static_cast<double>(a.dim)).cwiseAbs().maxCoeff();
  if (err > kHermitianTol)
    throw InvariantViolation("Choi marginal deviates from I/d_in by " + std::to_string(err));
}

ChoiState choi_state(const QuantumChannel& ch, const std::string& a, const std::string& b) {
  const auto phi = DensityOperator::max_entangled(a, "__in", ch.in_dim());
  const auto joint = apply_on(ch, phi, "__in");
  return ChoiState(joint.relabeled(SystemLayout({{a, ch.in_dim()}, {b, ch.out_dim()}})));
}

}  // namespace qcap
