#pragma once

// Residue arithmetic modulo a word-sized prime. Used only to pre-screen ranks:
// a rank computed modulo p is a lower bound on the rational rank, and final
// verdicts are always recomputed over the rationals.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "algdef/linalg.hpp"
#include "algdef/matrix.hpp"

namespace algdef {

/// 2^31 - 1. Every residue fits in 31 bits, so products fit in 62.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

class PrimeField {
public:
    /// Throws std::invalid_argument unless 2 <= p < 2^31 and p is prime.
    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

    /// Image of a rational; nullopt when p divides the denominator.
    std::optional<std::uint32_t> reduce(const Rational& q) const;

private:
    std::uint32_t p_;
};

struct ModMatrix {
    PrimeField field;
    Matrix<std::uint32_t> entries;
};

/// Entry-wise reduction. Throws std::domain_error when p divides a denominator.
ModMatrix reduce(const RationalMatrix& m, const PrimeField& field = PrimeField());

std::size_t rank(const ModMatrix& m);
std::uint32_t determinant(const ModMatrix& m);

/// (m + m^t) / 2 over F_p. Throws std::domain_error when p = 2.
ModMatrix symmetrize(const ModMatrix& m);

/// Rank of a rational matrix modulo p (lower bound on the rational rank).
std::size_t rank_mod_p(const RationalMatrix& m, const PrimeField& field = PrimeField());

struct ScreenedRank {
    std::size_t rank = 0;
    std::size_t rank_mod_p = 0;
    /// True when the modular rank already equals min(rows, cols), which
    /// certifies the rational rank without elimination over Q.
    bool certified_by_screen = false;
};

/// Modular pre-screen followed by rational confirmation. Throws
/// InternalInconsistency if the modular rank ever exceeds the rational one.
ScreenedRank screened_rank(const RationalMatrix& m, const PrimeField& field = PrimeField());

}  // namespace algdef
