#pragma once

// Low-degree cochain complexes of a law x, as explicit matrices.
//
//   C^0 = V (dim n), C^1 = End(V) (n^2), C^2 = V^{2,1} (n^3), C^3 = V^{3,1} (n^4)
//
// C^1 uses coordinate p*n + q for f(e_p) = e_q; C^2 and C^3 use CanonicalIndex.
// Harrison and Chevalley-Eilenberg replace C^2 by its symmetric (resp. skew)
// subspace, with basis ordered by pairs i < j first, then the diagonal
// (symmetric only), and the output index l innermost.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algdef/identities.hpp"
#include "algdef/mul_table.hpp"

namespace algdef {

enum class Theory { hochschild, harrison, leibniz, ce };

std::string_view name(Theory t);
/// Accepts both theory names and variety names (alg|comm|leib|lie).
/// Throws std::invalid_argument.
Theory parse_theory(std::string_view text);
Theory theory_for(Variety v);
Variety variety_for(Theory t);

struct ComplexSlice {
    Theory theory;
    MulTable point;
    RationalMatrix d0;  // C^0 -> C^1
    RationalMatrix d1;  // C^1 -> C^2 (restricted coordinates for harrison / ce)
    RationalMatrix d2;  // C^2 (restricted) -> C^3
    /// Restricted C^2 coordinates -> full C^2 (harrison and ce only).
    std::optional<RationalMatrix> inclusion;

    std::size_t c2_dim() const { return d2.cols(); }
};

enum class RankField {
    /// Exact ranks over Q. Small inputs go straight to rational elimination,
    /// larger ones are pre-screened modulo p and then confirmed over Q.
    rational,
    /// Ranks modulo the default prime only. Advisory: lower bounds.
    prime,
};

struct CohomologySummary {
    Theory theory;
    std::size_t z1 = 0, b1 = 0, h1 = 0;
    std::size_t z2 = 0, b2 = 0, h2 = 0;
    std::size_t derivations_dim = 0;
    std::size_t inner_dim = 0;
    /// dim ker d0: the center for hochschild / harrison, the right annihilator
    /// for leibniz (which is the center on Lie points).
    std::size_t center_dim = 0;
    std::size_t rank_d2 = 0;
    RankField field = RankField::rational;
    /// True when each rank was confirmed over Q (always, unless field == prime).
    bool exact = true;
};

// Raw differentials, no membership checks.
RationalMatrix hochschild_d0(const MulTable& x);
/// f -> mu(f(a), b) + mu(a, f(b)) - f(mu(a, b)); shared by every theory.
RationalMatrix coboundary_d1(const MulTable& x);
/// y -> [mu_x, y] = beta(x,y) + beta(y,x).
RationalMatrix hochschild_d2(const MulTable& x);
/// v -> R_v.
RationalMatrix leibniz_d0(const MulTable& x);
/// The degree-2 Leibniz coboundary, y -> B(x,y) + B(y,x).
RationalMatrix leibniz_d2(const MulTable& x);

RationalMatrix symmetric_inclusion(std::size_t n);
RationalMatrix skew_inclusion(std::size_t n);
/// Left inverses of the inclusions (read off the i <= j / i < j coordinates).
RationalMatrix symmetric_projection(std::size_t n);
RationalMatrix skew_projection(std::size_t n);

/// Throw OffVariety for points off the matching variety.
ComplexSlice hochschild_slice(const MulTable& x);
ComplexSlice harrison_slice(const MulTable& x);
ComplexSlice leibniz_slice(const MulTable& x);
ComplexSlice ce_slice(const MulTable& x);
ComplexSlice make_slice(const MulTable& x, Theory t);

CohomologySummary summarize(const ComplexSlice& slice, RankField field = RankField::rational);

/// Exact rank with the size-dependent strategy used by summarize.
std::size_t exact_rank(const RationalMatrix& m);

struct CocycleSpace {
    std::size_t dimension = 0;
    /// Flat vectors in the full C^2.
    std::vector<Vector> basis;
};

/// ker d2 pushed into the full C^2.
CocycleSpace cocycles(const ComplexSlice& slice);
/// im d1 pushed into the full C^2.
CocycleSpace coboundaries(const ComplexSlice& slice);

/// Symmetric Hochschild 2-cocycles of a commutative law.
CocycleSpace harrison_z2(const MulTable& x);

}  // namespace algdef
