#include "qcap/random.hpp"

#include <cmath>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

namespace qcap {

namespace {

// splitmix64 finalizer; decorrelates consecutive user seeds.
std::uint64_t scramble(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Matrix ginibre(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(scramble(seed));
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Column-major fill order is part of the determinism contract.
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(r, c) = Complex(re, im);
    }
  return m;
}

DensityOperator random_density(const SystemLayout& layout, std::uint64_t seed, std::size_t rank) {
  const std::size_t n = layout.total_dim();
  const Matrix g = ginibre(n, rank == 0 ? n : rank, seed);
  const Matrix m = g * g.adjoint();
  return DensityOperator(layout, m / m.trace().real());
}

UnitaryOperator random_unitary(std::size_t dim, std::uint64_t seed) {
  const Matrix g = ginibre(dim, dim, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    if (a > 0.0) q.col(k) *= d / a;
  }
  return UnitaryOperator(q);
}

DensityOperator random_product_density(const SystemLayout& layout, std::uint64_t seed) {
  Matrix m = Matrix::Ones(1, 1);
  std::uint64_t s = seed;
  for (const auto& f : layout.factors()) {
    s = scramble(s);
    const auto part = random_density(SystemLayout::single(f.label, f.dim), s);
    m = Eigen::kroneckerProduct(m, part.matrix()).eval();
  }
  return DensityOperator(layout, m);
}

}  // namespace qcap
