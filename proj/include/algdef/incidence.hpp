#pragma once

#include <cstddef>
#include <vector>

#include "algdef/mul_table.hpp"

namespace algdef {

/// Coordinate form of the associative bilinearization:
/// beta(i,j,k,m) = sum_l x(i,j,l) y(l,k,m) - sum_l y(i,l,m) x(j,k,l).
/// beta(x, x) is the associativity residual.
Tensor3 beta(const MulTable& x, const MulTable& y);

/// Coordinate form of the Leibniz bilinearization:
/// B(i,j,k,m) = sum_l x(i,j,l) y(l,k,m) - x(i,k,l) y(l,j,m) - x(i,l,m) y(j,k,l).
/// b_bilinear(x, x) is the Leibniz residual.
Tensor3 b_bilinear(const MulTable& x, const MulTable& y);

/// The matrices q_phi with <phi, beta(x,y)> = x^t q_phi y, one per dual basis
/// functional phi = (i,j,k,m) of V^{3,1}. Nothing is stored: each q_phi is
/// produced on demand from at most 2n nonzero entries.
class QFamily {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        Rational value;
    };

    explicit QFamily(std::size_t n);

    std::size_t dim() const { return n_; }
    /// n^4 functionals.
    std::size_t size() const { return n_ * n_ * n_ * n_; }

    /// Nonzero entries of q_phi, merged and sorted by (row, col).
    std::vector<Entry> entries(std::size_t phi) const;
    RationalMatrix matrix(std::size_t phi) const;
    RationalMatrix sym_matrix(std::size_t phi) const;

    /// x^t q_phi y, from the sparse entries.
    Rational pair(std::size_t phi, const Vector& x, const Vector& y) const;
    /// x^t sym(q_phi) y.
    Rational sym_pair(std::size_t phi, const Vector& x, const Vector& y) const;

private:
    std::size_t n_;
};

QFamily build_q_family(std::size_t n);

/// The n^4 x n^3 system whose phi-row is x^t sym(q_phi).
RationalMatrix fiber_system_as(const MulTable& x);

/// (x, y) ∈ As(V): x^t q y = 0 for every symmetrized q.
bool incidence_member_as(const MulTable& x, const MulTable& y);

struct FiberBasis {
    MulTable point;
    /// Flat n^3 vectors spanning the fiber.
    std::vector<Vector> vectors;

    std::size_t dimension() const { return vectors.size(); }
};

FiberBasis fiber_as(const MulTable& x);

/// B(x,y) + B(y,x).
Tensor3 leib_pair_residual(const MulTable& x, const MulTable& y);

/// Matrix (n^4 x n^3) of y -> B(x,y) + B(y,x), assembled column by column.
RationalMatrix leib_pair_matrix(const MulTable& x);

FiberBasis fiber_leib(const MulTable& x);

}  // namespace algdef
