#include "algdef/cohomology.hpp"

#include <stdexcept>

#include "algdef/errors.hpp"
#include "algdef/prime_field.hpp"

namespace algdef {

std::string_view name(Theory t)
{
    switch (t) {
    case Theory::hochschild: return "hochschild";
    case Theory::harrison: return "harrison";
    case Theory::leibniz: return "leibniz";
    case Theory::ce: return "ce";
    }
    return "?";
}

Theory parse_theory(std::string_view text)
{
    if (text == "hochschild" || text == "alg")
        return Theory::hochschild;
    if (text == "harrison" || text == "comm")
        return Theory::harrison;
    if (text == "leibniz" || text == "leib")
        return Theory::leibniz;
    if (text == "ce" || text == "lie")
        return Theory::ce;
    throw std::invalid_argument("unknown theory \"" + std::string(text) + "\"");
}

Theory theory_for(Variety v)
{
    switch (v) {
    case Variety::alg: return Theory::hochschild;
    case Variety::comm: return Theory::harrison;
    case Variety::leib: return Theory::leibniz;
    case Variety::lie: return Theory::ce;
    }
    return Theory::hochschild;
}

Variety variety_for(Theory t)
{
    switch (t) {
    case Theory::hochschild: return Variety::alg;
    case Theory::harrison: return Variety::comm;
    case Theory::leibniz: return Variety::leib;
    case Theory::ce: return Variety::lie;
    }
    return Variety::alg;
}

namespace {

std::size_t c1(std::size_t n, std::size_t p, std::size_t q) { return p * n + q; }
std::size_t c2(std::size_t n, std::size_t i, std::size_t j, std::size_t l) { return CanonicalIndex::idx(n, i, j, l); }
std::size_t c3(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t m)
{
    return CanonicalIndex::idx3(n, i, j, k, m);
}

}  // namespace

RationalMatrix hochschild_d0(const MulTable& x)
{
    const std::size_t n = x.dim();
    RationalMatrix d(n * n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                d(c1(n, i, l), p) = x(i, p, l) - x(p, i, l);
    return d;
}

RationalMatrix leibniz_d0(const MulTable& x)
{
    const std::size_t n = x.dim();
    RationalMatrix d(n * n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                d(c1(n, i, l), p) = x(i, p, l);
    return d;
}

RationalMatrix coboundary_d1(const MulTable& x)
{
    const std::size_t n = x.dim();
    RationalMatrix d(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t row = c2(n, i, j, l);
                for (std::size_t q = 0; q < n; ++q) {
                    d(row, c1(n, j, q)) += x(i, q, l);  // mu(a, f(b))
                    d(row, c1(n, i, q)) += x(q, j, l);  // mu(f(a), b)
                    d(row, c1(n, q, l)) -= x(i, j, q);  // f(mu(a, b))
                }
            }
    return d;
}

RationalMatrix hochschild_d2(const MulTable& x)
{
    const std::size_t n = x.dim();
    RationalMatrix d(n * n * n * n, n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    const std::size_t row = c3(n, i, j, k, m);
                    for (std::size_t s = 0; s < n; ++s) {
                        d(row, c2(n, i, j, s)) += x(s, k, m);  // mu_x(y(a,b), c)
                        d(row, c2(n, j, k, s)) -= x(i, s, m);  // mu_x(a, y(b,c))
                        d(row, c2(n, s, k, m)) += x(i, j, s);  // y(mu_x(a,b), c)
                        d(row, c2(n, i, s, m)) -= x(j, k, s);  // y(a, mu_x(b,c))
                    }
                }
    return d;
}

RationalMatrix leibniz_d2(const MulTable& x)
{
    const std::size_t n = x.dim();
    RationalMatrix d(n * n * n * n, n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    const std::size_t row = c3(n, i, j, k, m);
                    for (std::size_t s = 0; s < n; ++s) {
                        d(row, c2(n, i, j, s)) += x(s, k, m);  // mu(y(a,b), c)
                        d(row, c2(n, i, k, s)) -= x(s, j, m);  // mu(y(a,c), b)
                        d(row, c2(n, j, k, s)) -= x(i, s, m);  // mu(a, y(b,c))
                        d(row, c2(n, s, k, m)) += x(i, j, s);  // y(mu(a,b), c)
                        d(row, c2(n, s, j, m)) -= x(i, k, s);  // y(mu(a,c), b)
                        d(row, c2(n, i, s, m)) -= x(j, k, s);  // y(a, mu(b,c))
                    }
                }
    return d;
}

RationalMatrix symmetric_inclusion(std::size_t n)
{
    RationalMatrix s(n * n * n, n * n * (n + 1) / 2);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l, ++col) {
                s(c2(n, i, j, l), col) = 1;
                s(c2(n, j, i, l), col) = 1;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l, ++col)
            s(c2(n, i, i, l), col) = 1;
    return s;
}

RationalMatrix skew_inclusion(std::size_t n)
{
    RationalMatrix s(n * n * n, n * n * (n - 1) / 2);
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l, ++col) {
                s(c2(n, i, j, l), col) = 1;
                s(c2(n, j, i, l), col) = -1;
            }
    return s;
}

RationalMatrix symmetric_projection(std::size_t n)
{
    RationalMatrix p(n * n * (n + 1) / 2, n * n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l, ++row)
                p(row, c2(n, i, j, l)) = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l, ++row)
            p(row, c2(n, i, i, l)) = 1;
    return p;
}

RationalMatrix skew_projection(std::size_t n)
{
    RationalMatrix p(n * n * (n - 1) / 2, n * n * n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l, ++row)
                p(row, c2(n, i, j, l)) = 1;
    return p;
}

namespace {

// Expresses d1 in restricted coordinates. The image must already lie in the
// subspace; that is a property of on-variety points, so failure is a defect.
RationalMatrix restrict_codomain(const RationalMatrix& d1, const RationalMatrix& inclusion,
                                 const RationalMatrix& projection, std::string_view what)
{
    RationalMatrix restricted = projection * d1;
    if (!(inclusion * restricted == d1))
        throw InternalInconsistency("degree-1 coboundaries are not " + std::string(what));
    return restricted;
}

}  // namespace

ComplexSlice hochschild_slice(const MulTable& x)
{
    require_member(x, Variety::alg);
    return {Theory::hochschild, x, hochschild_d0(x), coboundary_d1(x), hochschild_d2(x), std::nullopt};
}

ComplexSlice harrison_slice(const MulTable& x)
{
    require_member(x, Variety::comm);
    const std::size_t n = x.dim();
    RationalMatrix inc = symmetric_inclusion(n);
    RationalMatrix d1 = restrict_codomain(coboundary_d1(x), inc, symmetric_projection(n), "symmetric");
    RationalMatrix d2 = hochschild_d2(x) * inc;
    return {Theory::harrison, x, hochschild_d0(x), std::move(d1), std::move(d2), std::move(inc)};
}

ComplexSlice leibniz_slice(const MulTable& x)
{
    require_member(x, Variety::leib);
    return {Theory::leibniz, x, leibniz_d0(x), coboundary_d1(x), leibniz_d2(x), std::nullopt};
}

ComplexSlice ce_slice(const MulTable& x)
{
    require_member(x, Variety::lie);
    const std::size_t n = x.dim();
    RationalMatrix inc = skew_inclusion(n);
    RationalMatrix d1 = restrict_codomain(coboundary_d1(x), inc, skew_projection(n), "skew");
    RationalMatrix d2 = leibniz_d2(x) * inc;
    return {Theory::ce, x, leibniz_d0(x), std::move(d1), std::move(d2), std::move(inc)};
}

ComplexSlice make_slice(const MulTable& x, Theory t)
{
    switch (t) {
    case Theory::hochschild: return hochschild_slice(x);
    case Theory::harrison: return harrison_slice(x);
    case Theory::leibniz: return leibniz_slice(x);
    case Theory::ce: return ce_slice(x);
    }
    throw std::invalid_argument("unknown theory");
}

std::size_t exact_rank(const RationalMatrix& m)
{
    // Entries of every differential are bounded by the structure constants;
    // beyond a few thousand cells the modular screen pays for itself.
    constexpr std::size_t kScreenThreshold = 256 * 64;
    if (m.rows() * m.cols() <= kScreenThreshold)
        return rank(m);
    return screened_rank(m).rank;
}

CohomologySummary summarize(const ComplexSlice& slice, RankField field)
{
    auto rank_of = [&](const RationalMatrix& m) {
        return field == RankField::prime ? rank_mod_p(m) : exact_rank(m);
    };
    CohomologySummary s;
    s.theory = slice.theory;
    s.field = field;
    s.exact = field == RankField::rational;
    const std::size_t r0 = rank_of(slice.d0);
    const std::size_t r1 = rank_of(slice.d1);
    const std::size_t r2 = rank_of(slice.d2);
    s.center_dim = slice.d0.cols() - r0;
    s.b1 = s.inner_dim = r0;
    s.z1 = s.derivations_dim = slice.d1.cols() - r1;
    s.b2 = r1;
    s.z2 = slice.d2.cols() - r2;
    s.rank_d2 = r2;
    if (s.z1 < s.b1 || s.z2 < s.b2)
        throw InternalInconsistency("coboundaries exceed cocycles; the complex property failed");
    s.h1 = s.z1 - s.b1;
    s.h2 = s.z2 - s.b2;
    return s;
}

namespace {

std::vector<Vector> push_forward(const ComplexSlice& slice, std::vector<Vector> vs)
{
    if (!slice.inclusion)
        return vs;
    for (auto& v : vs)
        v = *slice.inclusion * v;
    return vs;
}

}  // namespace

CocycleSpace cocycles(const ComplexSlice& slice)
{
    auto basis = push_forward(slice, kernel_basis(slice.d2));
    return {basis.size(), std::move(basis)};
}

CocycleSpace coboundaries(const ComplexSlice& slice)
{
    auto basis = push_forward(slice, image_basis(slice.d1));
    return {basis.size(), std::move(basis)};
}

CocycleSpace harrison_z2(const MulTable& x) { return cocycles(harrison_slice(x)); }

}  // namespace algdef
