#include "algdef/prime_field.hpp"

#include <stdexcept>

#include "algdef/simd/modp_kernels.hpp"

namespace algdef {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

struct ModElimination {
    std::size_t rank = 0;
    bool odd_swaps = false;
    std::uint32_t pivot_product = 1;
};

// Row echelon form in place; pivots are normalized to 1 and their product is
// tracked for the determinant.
ModElimination eliminate(Matrix<std::uint32_t>& a, const PrimeField& f)
{
    ModElimination e;
    const std::uint32_t p = f.modulus();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0)
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != r) {
            auto x = a.row(piv);
            auto y = a.row(r);
            std::swap_ranges(x.begin(), x.end(), y.begin());
            e.odd_swaps = !e.odd_swaps;
        }
        const std::uint32_t lead = a(r, c);
        e.pivot_product = f.mul(e.pivot_product, lead);
        auto pivot_row = a.row(r).subspan(c);
        simd::scale_mod(pivot_row, f.inv(lead), p);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const std::uint32_t x = a(i, c);
            if (x != 0)
                simd::axpy_mod(a.row(i).subspan(c), pivot_row, f.neg(x), p);
        }
        ++r;
    }
    e.rank = r;
    return e;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("modulus must be a prime below 2^31");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero residue");
    // a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
        if (e & 1u)
            result = result * base % p_;
        base = base * base % p_;
    }
    return static_cast<std::uint32_t>(result);
}

std::optional<std::uint32_t> PrimeField::reduce(const Rational& q) const
{
    const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (den == 0)
        return std::nullopt;
    const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    return mul(static_cast<std::uint32_t>(num), inv(static_cast<std::uint32_t>(den)));
}

ModMatrix reduce(const RationalMatrix& m, const PrimeField& field)
{
    ModMatrix out{field, Matrix<std::uint32_t>(m.rows(), m.cols())};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            auto v = field.reduce(m(r, c));
            if (!v)
                throw std::domain_error("modulus divides a denominator");
            out.entries(r, c) = *v;
        }
    return out;
}

std::size_t rank(const ModMatrix& m)
{
    Matrix<std::uint32_t> a = m.entries;
    return eliminate(a, m.field).rank;
}

std::uint32_t determinant(const ModMatrix& m)
{
    if (!m.entries.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    Matrix<std::uint32_t> a = m.entries;
    const ModElimination e = eliminate(a, m.field);
    if (e.rank < a.rows())
        return 0;
    return e.odd_swaps ? m.field.neg(e.pivot_product) : e.pivot_product;
}

ModMatrix symmetrize(const ModMatrix& m)
{
    if (m.field.modulus() == 2)
        throw std::domain_error("symmetrize needs characteristic other than 2");
    if (!m.entries.is_square())
        throw DimensionMismatch("symmetrize of a non-square matrix");
    const PrimeField& f = m.field;
    const std::uint32_t half = f.inv(2);
    ModMatrix out{f, Matrix<std::uint32_t>(m.entries.rows(), m.entries.cols())};
    for (std::size_t i = 0; i < m.entries.rows(); ++i)
        for (std::size_t j = 0; j < m.entries.cols(); ++j)
            out.entries(i, j) = f.mul(f.add(m.entries(i, j), m.entries(j, i)), half);
    return out;
}

std::size_t rank_mod_p(const RationalMatrix& m, const PrimeField& field) { return rank(reduce(m, field)); }

ScreenedRank screened_rank(const RationalMatrix& m, const PrimeField& field)
{
    ScreenedRank out;
    out.rank_mod_p = rank_mod_p(m, field);
    if (out.rank_mod_p == std::min(m.rows(), m.cols())) {
        out.rank = out.rank_mod_p;
        out.certified_by_screen = true;
        return out;
    }
    out.rank = rank(m);
    if (out.rank_mod_p > out.rank)
        throw InternalInconsistency("rank modulo p exceeds rational rank");
    return out;
}

}  // namespace algdef
