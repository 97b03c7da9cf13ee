#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algdef/linalg.hpp"
#include "algdef/rational.hpp"

namespace algdef {

/// Flat coordinates of V^{2,1} = Hom(V⊗V, V) and V^{3,1} = Hom(V⊗V⊗V, V).
/// Both orderings are lexicographic in the index tuple.
struct CanonicalIndex {
    static constexpr std::size_t idx(std::size_t n, std::size_t i, std::size_t j, std::size_t l)
    {
        return (i * n + j) * n + l;
    }
    static constexpr std::size_t idx3(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t m)
    {
        return ((i * n + j) * n + k) * n + m;
    }
};

/// Structure constants: mu(e_i, e_j) = sum_l c(i, j, l) e_l.
class MulTable {
public:
    MulTable() = default;
    explicit MulTable(std::size_t n) : n_(n), c_(n * n * n) {}
    /// Throws DimensionMismatch unless coords.size() == n^3.
    MulTable(std::size_t n, Vector coords);

    std::size_t dim() const { return n_; }

    Rational& operator()(std::size_t i, std::size_t j, std::size_t l) { return c_[CanonicalIndex::idx(n_, i, j, l)]; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t l) const
    {
        return c_[CanonicalIndex::idx(n_, i, j, l)];
    }

    /// The point x in V^{2,1} as a column of length n^3.
    const Vector& flat() const { return c_; }

    bool is_zero() const { return algdef::is_zero(c_); }

    friend bool operator==(const MulTable&, const MulTable&) = default;

private:
    std::size_t n_ = 0;
    Vector c_;
};

/// Element of V^{3,1}: T(e_i, e_j, e_k) = sum_m t(i, j, k, m) e_m.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(std::size_t n) : n_(n), t_(n * n * n * n) {}
    Tensor3(std::size_t n, Vector coords);

    std::size_t dim() const { return n_; }

    Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t m)
    {
        return t_[CanonicalIndex::idx3(n_, i, j, k, m)];
    }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t m) const
    {
        return t_[CanonicalIndex::idx3(n_, i, j, k, m)];
    }

    const Vector& flat() const { return t_; }
    bool is_zero() const { return algdef::is_zero(t_); }
    std::size_t nonzero_count() const;
    /// First nonzero coordinate (i, j, k, m) in canonical order.
    std::optional<std::array<std::size_t, 4>> first_nonzero() const;

    friend bool operator==(const Tensor3&, const Tensor3&) = default;
    friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
    friend Tensor3 operator*(const Rational& s, const Tensor3& a);

private:
    std::size_t n_ = 0;
    Vector t_;
};

Vector basis_vector(std::size_t n, std::size_t i);

/// mu_x(a, b). Throws DimensionMismatch on length mismatch.
Vector multiply(const MulTable& x, const Vector& a, const Vector& b);

/// Matrices of L_a = mu_x(a, -) and R_a = mu_x(-, a) in the fixed basis.
RationalMatrix left_operator(const MulTable& x, const Vector& a);
RationalMatrix right_operator(const MulTable& x, const Vector& a);

/// (g . x)(a, b) = g x(g^{-1} a, g^{-1} b). Throws DimensionMismatch when g is
/// singular or of the wrong size.
MulTable transport(const RationalMatrix& g, const MulTable& x);
/// Arity-three analogue: (g . T)(a, b, c) = g T(g^{-1} a, g^{-1} b, g^{-1} c).
Tensor3 transport(const RationalMatrix& g, const Tensor3& t);

/// Multilinear core of transport: x'(i, j, l) = sum out(l, t) in1(s, i) in2(u, j) x(s, u, t).
/// transport(g, x) = transport_components(g, g^{-1}, g^{-1}, x).
MulTable transport_components(const RationalMatrix& out, const RationalMatrix& in1, const RationalMatrix& in2,
                              const MulTable& x);

/// Matrix of x -> g . x on flattened V^{2,1} (n^3 x n^3).
RationalMatrix induced_action_v21(const RationalMatrix& g);
/// Matrix of T -> g . T on flattened V^{3,1} (n^4 x n^4).
RationalMatrix induced_action_v31(const RationalMatrix& g);

/// Block-diagonal law on V1 ⊕ V2; mixed products vanish.
MulTable direct_sum(const MulTable& x1, const MulTable& x2);

namespace builders {
/// r x r matrix units, E_ab E_cd = δ_bc E_ad, basis index a*r + b.
MulTable matrix_algebra(std::size_t r);
/// k^n with coordinatewise product.
MulTable split_etale(std::size_t n);
/// k[ε]/ε² in basis (1, ε).
MulTable dual_numbers();
/// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
MulTable sl2();
MulTable abelian(std::size_t n);
/// mu(e1, e1) = e0, everything else zero.
MulTable leibniz2();
/// mu(e0, e0) = e1, mu(e1, e0) = e0. Neither associative nor Leibniz.
MulTable nonassoc2();
}  // namespace builders

struct NamedAlgebra {
    std::string name;
    MulTable table;
};

/// Builds from a spec such as "sl2", "m2", "split_etale:3" or "sl2+abelian:1"
/// (summands joined by '+'). `arg` supplies the parameter of a single
/// parameterized builder given without ":k". Throws std::invalid_argument.
NamedAlgebra build_named(std::string_view spec, std::optional<std::size_t> arg = std::nullopt);

/// Builder names accepted by build_named.
std::vector<std::string> builder_names();

}  // namespace algdef
