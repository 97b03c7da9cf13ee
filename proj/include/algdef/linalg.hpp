#pragma once

// Exact dense linear algebra over the rationals.
//
// Rows are cleared of denominators and eliminated fraction-free (Bareiss) over
// big integers, so every intermediate entry is a minor of the scaled input and
// no gcd work happens inside the elimination loop.

#include <cstddef>
#include <vector>

#include "algdef/matrix.hpp"
#include "algdef/rational.hpp"

namespace algdef {

using RationalMatrix = Matrix<Rational>;

std::size_t rank(const RationalMatrix& m);

/// Right kernel basis in reduced echelon-normal form: one vector per free
/// column f, with entry 1 at f and 0 at every other free column.
std::vector<Vector> kernel_basis(const RationalMatrix& m);

/// Throws DimensionMismatch on non-square input.
Rational determinant(const RationalMatrix& m);

/// (m + m^t) / 2. Throws DimensionMismatch on non-square input.
RationalMatrix symmetrize(const RationalMatrix& m);

/// Throws DimensionMismatch when m is not square or is singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Indices of the pivot columns of m; those columns form a basis of im(m).
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

/// A basis of the column space, taken from the pivot columns of m.
std::vector<Vector> image_basis(const RationalMatrix& m);

// Subspace utilities. Subspaces are spanned by lists of vectors of length `dim`.

std::size_t span_dimension(std::size_t dim, const std::vector<Vector>& vectors);

/// True when every vector of `inner` lies in span(outer).
bool span_contains(std::size_t dim, const std::vector<Vector>& outer, const std::vector<Vector>& inner);

/// Mutual containment.
bool same_span(std::size_t dim, const std::vector<Vector>& a, const std::vector<Vector>& b);

}  // namespace algdef
