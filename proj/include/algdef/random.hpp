#pragma once

#include <cstdint>
#include <random>

#include "algdef/mul_table.hpp"

namespace algdef {

/// Seed used by every randomized check unless another one is given.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

using Rng = std::mt19937_64;

/// Each coefficient is nonzero with probability `density`, drawn from
/// [-bound, bound] \ {0}.
MulTable random_table(std::size_t n, Rng& rng, double density = 0.25, int bound = 2);

/// Integer entries in [-bound, bound].
RationalMatrix random_matrix(std::size_t n, Rng& rng, int bound = 3);

/// Redrawn until the determinant is nonzero.
RationalMatrix random_invertible(std::size_t n, Rng& rng, int bound = 3);

}  // namespace algdef
