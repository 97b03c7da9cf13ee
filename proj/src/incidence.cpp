#include "algdef/incidence.hpp"

#include <map>

#include "algdef/errors.hpp"

namespace algdef {

namespace {

void check_same_dim(const MulTable& x, const MulTable& y)
{
    if (x.dim() != y.dim())
        throw DimensionMismatch("bilinear map of laws with different dimensions");
}

}  // namespace

Tensor3 beta(const MulTable& x, const MulTable& y)
{
    check_same_dim(x, y);
    const std::size_t n = x.dim();
    Tensor3 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational& v = r(i, j, k, m);
                    for (std::size_t l = 0; l < n; ++l) {
                        v += x(i, j, l) * y(l, k, m);
                        v -= y(i, l, m) * x(j, k, l);
                    }
                }
    return r;
}

Tensor3 b_bilinear(const MulTable& x, const MulTable& y)
{
    check_same_dim(x, y);
    const std::size_t n = x.dim();
    Tensor3 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational& v = r(i, j, k, m);
                    for (std::size_t l = 0; l < n; ++l) {
                        v += x(i, j, l) * y(l, k, m);
                        v -= x(i, k, l) * y(l, j, m);
                        v -= x(i, l, m) * y(j, k, l);
                    }
                }
    return r;
}

QFamily::QFamily(std::size_t n) : n_(n)
{
    if (n == 0)
        throw std::invalid_argument("QFamily needs n >= 1");
}

std::vector<QFamily::Entry> QFamily::entries(std::size_t phi) const
{
    const std::size_t n = n_;
    if (phi >= size())
        throw std::out_of_range("dual basis index out of range");
    const std::size_t i = phi / (n * n * n), j = phi / (n * n) % n, k = phi / n % n, m = phi % n;
    std::map<std::pair<std::size_t, std::size_t>, int> acc;
    for (std::size_t l = 0; l < n; ++l) {
        acc[{CanonicalIndex::idx(n, i, j, l), CanonicalIndex::idx(n, l, k, m)}] += 1;
        acc[{CanonicalIndex::idx(n, j, k, l), CanonicalIndex::idx(n, i, l, m)}] -= 1;
    }
    std::vector<Entry> out;
    for (const auto& [rc, v] : acc)
        if (v != 0)
            out.push_back({rc.first, rc.second, Rational(v)});
    return out;
}

RationalMatrix QFamily::matrix(std::size_t phi) const
{
    const std::size_t n3 = n_ * n_ * n_;
    RationalMatrix q(n3, n3);
    for (const auto& e : entries(phi))
        q(e.row, e.col) = e.value;
    return q;
}

RationalMatrix QFamily::sym_matrix(std::size_t phi) const { return symmetrize(matrix(phi)); }

Rational QFamily::pair(std::size_t phi, const Vector& x, const Vector& y) const
{
    Rational s;
    for (const auto& e : entries(phi))
        s += x.at(e.row) * e.value * y.at(e.col);
    return s;
}

Rational QFamily::sym_pair(std::size_t phi, const Vector& x, const Vector& y) const
{
    return (pair(phi, x, y) + pair(phi, y, x)) / 2;
}

QFamily build_q_family(std::size_t n) { return QFamily(n); }

RationalMatrix fiber_system_as(const MulTable& x)
{
    const std::size_t n = x.dim();
    const QFamily q(n);
    const Vector& xf = x.flat();
    RationalMatrix sys(q.size(), n * n * n);
    for (std::size_t phi = 0; phi < q.size(); ++phi)
        for (const auto& e : q.entries(phi)) {
            // (x^t sym(q))_c = (sum_r x_r q_rc + sum_r q_cr x_r) / 2
            sys(phi, e.col) += e.value * xf[e.row] / 2;
            sys(phi, e.row) += e.value * xf[e.col] / 2;
        }
    return sys;
}

bool incidence_member_as(const MulTable& x, const MulTable& y)
{
    check_same_dim(x, y);
    return is_zero(fiber_system_as(x) * y.flat());
}

FiberBasis fiber_as(const MulTable& x) { return {x, kernel_basis(fiber_system_as(x))}; }

Tensor3 leib_pair_residual(const MulTable& x, const MulTable& y) { return b_bilinear(x, y) + b_bilinear(y, x); }

RationalMatrix leib_pair_matrix(const MulTable& x)
{
    const std::size_t n = x.dim();
    const std::size_t n3 = n * n * n;
    std::vector<Vector> cols;
    cols.reserve(n3);
    for (std::size_t c = 0; c < n3; ++c) {
        MulTable unit(n);
        unit(c / (n * n), c / n % n, c % n) = 1;
        cols.push_back(leib_pair_residual(x, unit).flat());
    }
    return RationalMatrix::from_columns(n3 * n, cols);
}

FiberBasis fiber_leib(const MulTable& x) { return {x, kernel_basis(leib_pair_matrix(x))}; }

}  // namespace algdef
