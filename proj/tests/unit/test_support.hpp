#pragma once

#include <cstdint>
#include <vector>

#include "qcap/density.hpp"

namespace qcap::testing {

// Max-abs entrywise difference.
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline Matrix diag(std::vector<double> entries) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(entries.size()),
                          static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i)
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
  return m;
}

inline const SystemLayout kQubitPair{{"A", 2}, {"B", 2}};
inline const SystemLayout kPditLayout{{"A", 2}, {"B", 2}, {"A'", 2}, {"B'", 2}};

}  // namespace qcap::testing
