#include "algdef/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace algdef {

namespace {

// Integer working copy of a rational matrix. Row r equals scale[r] times the
// corresponding input row.
struct IntegerRows {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpz_class> a;
    std::vector<Rational> scale;

    mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    void swap_rows(std::size_t r, std::size_t s)
    {
        if (r == s)
            return;
        std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                         a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols),
                         a.begin() + static_cast<std::ptrdiff_t>(s * cols));
        std::swap(scale[r], scale[s]);
    }
};

// Clears denominators row by row. With `primitive`, each row is also divided by
// its content and zero or repeated rows are dropped (rank and kernel only).
IntegerRows to_integer_rows(const RationalMatrix& m, bool primitive)
{
    IntegerRows out;
    out.cols = m.cols();
    std::set<std::vector<mpz_class>> seen;
    std::vector<mpz_class> row(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class lcm = 1;
        for (const auto& e : m.row(r))
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
        mpz_class content = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& e = m(r, c);
            row[c] = lcm / e.get_den() * e.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row[c].get_mpz_t());
        }
        Rational s(lcm);
        if (primitive) {
            if (content == 0)
                continue;
            auto lead = std::find_if(row.begin(), row.end(), [](const mpz_class& v) { return v != 0; });
            if (*lead < 0)
                content = -content;
            for (auto& v : row)
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
            if (!seen.insert(row).second)
                continue;
            s /= content;
        }
        out.a.insert(out.a.end(), row.begin(), row.end());
        out.scale.push_back(s);
        ++out.rows;
    }
    return out;
}

struct Elimination {
    std::vector<std::size_t> pivots;  // pivot column of each leading row
    mpz_class last_pivot = 1;
    int sign = 1;
};

// Fraction-free elimination. With `jordan`, rows above the pivot are cleared
// too, which leaves every pivot equal to last_pivot and the other pivot columns
// zero. Each division below is exact: entries stay minors of the input.
Elimination bareiss(IntegerRows& m, bool jordan)
{
    Elimination e;
    mpz_class prev = 1;
    mpz_class t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == 0)
            ++p;
        if (p == m.rows)
            continue;
        if (p != r) {
            m.swap_rows(p, r);
            e.sign = -e.sign;
        }
        const mpz_class& piv = m.at(r, c);
        for (std::size_t i = jordan ? 0 : r + 1; i < m.rows; ++i) {
            if (i == r)
                continue;
            mpz_class& lead = m.at(i, c);
            const std::size_t j0 = i < r ? 0 : c + 1;
            if (lead == 0) {
                if (piv == prev)
                    continue;
                for (std::size_t j = j0; j < m.cols; ++j) {
                    mpz_class& v = m.at(i, j);
                    if (v == 0)
                        continue;
                    mpz_mul(v.get_mpz_t(), v.get_mpz_t(), piv.get_mpz_t());
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                }
                continue;
            }
            for (std::size_t j = j0; j < m.cols; ++j) {
                if (j == c)
                    continue;
                mpz_class& v = m.at(i, j);
                const mpz_class& w = m.at(r, j);
                mpz_mul(t.get_mpz_t(), v.get_mpz_t(), piv.get_mpz_t());
                mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), w.get_mpz_t());
                mpz_divexact(v.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            lead = 0;
        }
        prev = piv;
        e.pivots.push_back(c);
        ++r;
    }
    e.last_pivot = prev;
    return e;
}

}  // namespace

std::size_t rank(const RationalMatrix& m)
{
    IntegerRows w = to_integer_rows(m, true);
    return bareiss(w, false).pivots.size();
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m)
{
    IntegerRows w = to_integer_rows(m, true);
    return bareiss(w, false).pivots;
}

std::vector<Vector> kernel_basis(const RationalMatrix& m)
{
    IntegerRows w = to_integer_rows(m, true);
    const Elimination e = bareiss(w, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            if (w.at(r, f) == 0)
                continue;
            v[e.pivots[r]] = Rational(-w.at(r, f), e.last_pivot);
            v[e.pivots[r]].canonicalize();
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const RationalMatrix& m)
{
    if (!m.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    IntegerRows w = to_integer_rows(m, false);
    const Elimination e = bareiss(w, false);
    if (e.pivots.size() < m.rows())
        return 0;
    Rational det(e.last_pivot * e.sign);
    for (const auto& s : w.scale)
        det /= s;
    return det;
}

RationalMatrix symmetrize(const RationalMatrix& m)
{
    if (!m.is_square())
        throw DimensionMismatch("symmetrize of a non-square matrix");
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = (m(i, j) + m(j, i)) / 2;
    return out;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (!m.is_square())
        throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    // Gauss-Jordan on [m | I]; row scaling of the augmented rows cancels out.
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    IntegerRows w = to_integer_rows(aug, false);
    const Elimination e = bareiss(w, true);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw DimensionMismatch("inverse of a singular matrix");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = Rational(w.at(i, n + j), e.last_pivot);
            inv(i, j).canonicalize();
        }
    return inv;
}

std::vector<Vector> image_basis(const RationalMatrix& m)
{
    std::vector<Vector> out;
    for (auto c : pivot_columns(m))
        out.push_back(m.column(c));
    return out;
}

std::size_t span_dimension(std::size_t dim, const std::vector<Vector>& vectors)
{
    if (vectors.empty())
        return 0;
    return rank(RationalMatrix::from_columns(dim, vectors));
}

bool span_contains(std::size_t dim, const std::vector<Vector>& outer, const std::vector<Vector>& inner)
{
    const std::size_t base = span_dimension(dim, outer);
    std::vector<Vector> both = outer;
    both.insert(both.end(), inner.begin(), inner.end());
    return span_dimension(dim, both) == base;
}

bool same_span(std::size_t dim, const std::vector<Vector>& a, const std::vector<Vector>& b)
{
    return span_contains(dim, a, b) && span_contains(dim, b, a);
}

}  // namespace algdef
