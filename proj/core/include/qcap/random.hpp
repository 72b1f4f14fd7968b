#pragma once

#include <cstddef>
#include <cstdint>

#include "qcap/density.hpp"

namespace qcap {

/// Seeded samplers. Every draw is a pure function of its arguments.

/// Complex Ginibre matrix (i.i.d. standard complex normal entries).
Matrix ginibre(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// M M^dagger / tr(M M^dagger) with M Ginibre of shape dim x rank; rank 0
/// means full rank.
DensityOperator random_density(const SystemLayout& layout, std::uint64_t seed,
                               std::size_t rank = 0);

/// Haar unitary: QR of a Ginibre matrix with R's diagonal phases removed.
UnitaryOperator random_unitary(std::size_t dim, std::uint64_t seed);

/// Random product state rho_1 (x) ... (x) rho_n over the layout's factors.
DensityOperator random_product_density(const SystemLayout& layout, std::uint64_t seed);

}  // namespace qcap
