#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algdef/mul_table.hpp"
#include "algdef/random.hpp"

namespace algdef {

struct LawResult {
    std::string law;
    std::size_t checks = 0;
    std::size_t failures = 0;
    /// Description of the first failure.
    std::optional<std::string> first_failure;

    bool passed() const { return failures == 0; }
};

struct BatteryReport {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t transforms = 0;
    std::vector<LawResult> laws;

    bool passed() const;
};

/// Builder points of dimension n used as fixed test points.
std::vector<NamedAlgebra> builder_points(std::size_t n);

/// Transport/congruence/covariance laws under `transforms` random g at
/// dimension n: beta equivariance, q-congruence on sampled phi, Killing
/// covariance, separability invariance, membership invariance,
/// cohomology-dimension invariance and stratum-rank invariance.
BatteryReport equivariance_battery(std::size_t n, std::uint64_t seed = kDefaultSeed, std::size_t transforms = 20);

}  // namespace algdef
