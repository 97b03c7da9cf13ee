#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace algdef {

struct CatalogEntry {
    std::string label;  // "A1", "B3", "G2", ...
    std::size_t dimension;
};

/// Simple Lie algebras of dimension <= bound, one entry per isomorphism
/// class: A_r (r >= 1), B_r (r >= 2), C_r (r >= 3), D_r (r >= 4) and the
/// exceptional types. Sorted by dimension, then label.
std::vector<CatalogEntry> simple_lie_catalog(std::size_t bound);

struct WitnessPart {
    std::string label;
    /// Block size r for the associative count, dimension for the Lie count.
    std::size_t value;
};

using Witness = std::vector<WitnessPart>;

struct CountResult {
    std::size_t n = 0;
    mpz_class value;
    std::optional<std::vector<Witness>> witnesses;
};

/// Multisets {r_1 >= ... >= r_k >= 1} with sum r_s^2 = n. Witnesses come in
/// decreasing lexicographic order. Throws std::invalid_argument for n = 0.
CountResult n_assoc(std::size_t n, bool with_witnesses = false);

/// Multisets of catalog entries with total dimension n. B_r and C_r count
/// separately. Throws std::invalid_argument for n = 0.
CountResult n_lie(std::size_t n, bool with_witnesses = false);

}  // namespace algdef
