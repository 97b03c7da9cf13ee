#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algdef/mul_table.hpp"

namespace algdef {

enum class ResidualKind { associative, commutative, leibniz, skew, jacobi };

std::string_view name(ResidualKind kind);

struct ResidualReport {
    ResidualKind kind;
    /// Number of nonzero residual coordinates.
    std::size_t max_abs_violations = 0;
    bool is_member = true;
    /// First violating coordinate in canonical order: (i,j,k,m) for tensor
    /// residuals, (i,j,l) for the linear ones.
    std::vector<std::size_t> witness;
};

/// F(i,j,k,m) = sum_l x(i,j,l) x(l,k,m) - sum_l x(i,l,m) x(j,k,l).
Tensor3 assoc_residual(const MulTable& x);

/// Right Leibniz residual
/// G(i,j,k,m) = sum_l x(i,j,l) x(l,k,m) - x(i,k,l) x(l,j,m) - x(i,l,m) x(j,k,l).
Tensor3 leibniz_residual(const MulTable& x);

/// [[a,b],c] + [[b,c],a] + [[c,a],b] on basis triples.
Tensor3 jacobi_residual(const MulTable& x);

ResidualReport residual_report(const MulTable& x, ResidualKind kind);

bool is_associative(const MulTable& x);
/// Coefficient symmetry x(i,j,l) = x(j,i,l) alone.
bool is_symmetric(const MulTable& x);
bool is_skew(const MulTable& x);
/// Membership in Comm(V): symmetric and associative.
bool is_commutative(const MulTable& x);
bool is_leibniz(const MulTable& x);
/// Skew and (right) Leibniz.
bool is_lie(const MulTable& x);

enum class Variety { alg, comm, leib, lie };

std::string_view name(Variety v);

bool is_member(const MulTable& x, Variety v);

/// Throws OffVariety naming the first nonzero residual coordinate.
void require_member(const MulTable& x, Variety v);

}  // namespace algdef
