#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "algdef/cohomology.hpp"
#include "algdef/random.hpp"

namespace algdef {

struct TangentSpace {
    std::size_t dimension = 0;
    /// Flat vectors in V^{2,1}.
    std::vector<Vector> basis;
};

struct RigidityVerdict {
    Variety theory;
    std::size_t variety_tangent_dim = 0;
    std::size_t orbit_tangent_dim = 0;
    std::size_t stack_tangent_dim = 0;
    bool orbit_open = false;
    bool rigid_in_moduli = false;
    /// Closed-form tangent dimension, only on the separable / etale /
    /// semisimple loci.
    std::optional<std::size_t> predicted_dim;
};

struct StratumInvariant {
    Theory theory;
    std::size_t rank_d2 = 0;
};

/// All of these throw OffVariety off the matching variety.
TangentSpace variety_tangent(const MulTable& x, Variety v);

/// im d1 of the matching theory. Also compares the first-order transport
/// derivative against -d1 f for `samples` random f drawn from `seed`, and
/// throws InternalInconsistency on a mismatch.
TangentSpace orbit_tangent(const MulTable& x, Variety v, std::uint64_t seed = kDefaultSeed,
                           std::size_t samples = 20);

/// d/dt transport(1 + t f, x) at t = 0, with f given in C^1 coordinates.
MulTable transport_derivative(const MulTable& x, const Vector& f);

/// transport_derivative(x, f) == -(coboundary_d1(x) f).
bool transport_derivative_matches(const MulTable& x, const Vector& f);

/// Runs transport_derivative_matches on `samples` random integer f.
bool check_transport_derivative(const MulTable& x, std::uint64_t seed = kDefaultSeed, std::size_t samples = 20);

RigidityVerdict rigidity_verdict(const MulTable& x, Variety v, RankField field = RankField::rational);

StratumInvariant stratum_invariant(const MulTable& x, Theory t);

/// det killing_gram != 0 on Leib(V). When true, the lie verdict is required
/// to be open and rigid (InternalInconsistency otherwise).
bool semisimple_locus_check(const MulTable& x);

}  // namespace algdef
