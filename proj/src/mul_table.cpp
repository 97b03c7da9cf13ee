#include "algdef/mul_table.hpp"

#include <stdexcept>

namespace algdef {

MulTable::MulTable(std::size_t n, Vector coords) : n_(n), c_(std::move(coords))
{
    if (c_.size() != n * n * n)
        throw DimensionMismatch("structure constant vector must have length n^3");
}

Tensor3::Tensor3(std::size_t n, Vector coords) : n_(n), t_(std::move(coords))
{
    if (t_.size() != n * n * n * n)
        throw DimensionMismatch("tensor coordinate vector must have length n^4");
}

std::size_t Tensor3::nonzero_count() const
{
    std::size_t count = 0;
    for (const auto& v : t_)
        count += sgn(v) != 0;
    return count;
}

std::optional<std::array<std::size_t, 4>> Tensor3::first_nonzero() const
{
    for (std::size_t f = 0; f < t_.size(); ++f) {
        if (sgn(t_[f]) == 0)
            continue;
        const std::size_t n = n_;
        return std::array<std::size_t, 4>{f / (n * n * n), f / (n * n) % n, f / n % n, f % n};
    }
    return std::nullopt;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b)
{
    if (a.n_ != b.n_)
        throw DimensionMismatch("tensor sum dimension mismatch");
    Tensor3 out = a;
    for (std::size_t f = 0; f < out.t_.size(); ++f)
        out.t_[f] += b.t_[f];
    return out;
}

Tensor3 operator*(const Rational& s, const Tensor3& a)
{
    Tensor3 out = a;
    for (auto& v : out.t_)
        v *= s;
    return out;
}

Vector basis_vector(std::size_t n, std::size_t i)
{
    Vector v(n);
    v.at(i) = 1;
    return v;
}

Vector multiply(const MulTable& x, const Vector& a, const Vector& b)
{
    const std::size_t n = x.dim();
    if (a.size() != n || b.size() != n)
        throw DimensionMismatch("multiply: operand length differs from algebra dimension");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(b[j]) == 0)
                continue;
            const Rational ab = a[i] * b[j];
            for (std::size_t l = 0; l < n; ++l)
                if (sgn(x(i, j, l)) != 0)
                    out[l] += ab * x(i, j, l);
        }
    }
    return out;
}

RationalMatrix left_operator(const MulTable& x, const Vector& a)
{
    const std::size_t n = x.dim();
    if (a.size() != n)
        throw DimensionMismatch("left_operator: vector length differs from algebra dimension");
    RationalMatrix m(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        if (sgn(a[s]) == 0)
            continue;
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t l = 0; l < n; ++l)
                m(l, b) += a[s] * x(s, b, l);
    }
    return m;
}

RationalMatrix right_operator(const MulTable& x, const Vector& a)
{
    const std::size_t n = x.dim();
    if (a.size() != n)
        throw DimensionMismatch("right_operator: vector length differs from algebra dimension");
    RationalMatrix m(n, n);
    for (std::size_t s = 0; s < n; ++s) {
        if (sgn(a[s]) == 0)
            continue;
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t l = 0; l < n; ++l)
                m(l, b) += a[s] * x(b, s, l);
    }
    return m;
}

MulTable transport_components(const RationalMatrix& out, const RationalMatrix& in1, const RationalMatrix& in2,
                              const MulTable& x)
{
    const std::size_t n = x.dim();
    for (const auto* m : {&out, &in1, &in2})
        if (m->rows() != n || m->cols() != n)
            throw DimensionMismatch("transport: matrix size differs from algebra dimension");
    // Contract one slot at a time: output, then first input, then second.
    MulTable a(n), b(n), c(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t t = 0; t < n; ++t) {
                if (sgn(x(s, u, t)) == 0)
                    continue;
                for (std::size_t l = 0; l < n; ++l)
                    a(s, u, l) += out(l, t) * x(s, u, t);
            }
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(in1(s, i)) == 0)
                continue;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t l = 0; l < n; ++l)
                    b(i, u, l) += in1(s, i) * a(s, u, l);
        }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(in2(u, j)) == 0)
                continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l)
                    c(i, j, l) += in2(u, j) * b(i, u, l);
        }
    return c;
}

MulTable transport(const RationalMatrix& g, const MulTable& x)
{
    if (g.rows() != x.dim() || g.cols() != x.dim())
        throw DimensionMismatch("transport: matrix size differs from algebra dimension");
    const RationalMatrix h = inverse(g);
    return transport_components(g, h, h, x);
}

Tensor3 transport(const RationalMatrix& g, const Tensor3& t)
{
    const std::size_t n = t.dim();
    if (g.rows() != n || g.cols() != n)
        throw DimensionMismatch("transport: matrix size differs from tensor dimension");
    const RationalMatrix h = inverse(g);
    // T'(i,j,k,m) = sum g(m,t) h(s,i) h(u,j) h(v,k) T(s,u,v,t), one slot per pass.
    Tensor3 cur(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t tt = 0; tt < n; ++tt) {
                    if (sgn(t(s, u, v, tt)) == 0)
                        continue;
                    for (std::size_t m = 0; m < n; ++m)
                        cur(s, u, v, m) += g(m, tt) * t(s, u, v, tt);
                }
    for (int slot = 0; slot < 3; ++slot) {
        Tensor3 next(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t m = 0; m < n; ++m) {
                        const Rational& v = cur(a, b, c, m);
                        if (sgn(v) == 0)
                            continue;
                        for (std::size_t i = 0; i < n; ++i) {
                            if (slot == 0)
                                next(i, b, c, m) += h(a, i) * v;
                            else if (slot == 1)
                                next(a, i, c, m) += h(b, i) * v;
                            else
                                next(a, b, i, m) += h(c, i) * v;
                        }
                    }
        cur = std::move(next);
    }
    return cur;
}

RationalMatrix induced_action_v21(const RationalMatrix& g)
{
    const std::size_t n = g.rows();
    const RationalMatrix h = inverse(g);
    RationalMatrix a(n * n * n, n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t u = 0; u < n; ++u)
                        for (std::size_t t = 0; t < n; ++t)
                            a(CanonicalIndex::idx(n, i, j, l), CanonicalIndex::idx(n, s, u, t)) =
                                h(s, i) * h(u, j) * g(l, t);
    return a;
}

RationalMatrix induced_action_v31(const RationalMatrix& g)
{
    const std::size_t n = g.rows();
    const RationalMatrix h = inverse(g);
    const std::size_t n4 = n * n * n * n;
    RationalMatrix a(n4, n4);
    for (std::size_t row = 0; row < n4; ++row) {
        const std::size_t i = row / (n * n * n), j = row / (n * n) % n, k = row / n % n, m = row % n;
        for (std::size_t col = 0; col < n4; ++col) {
            const std::size_t s = col / (n * n * n), u = col / (n * n) % n, v = col / n % n, t = col % n;
            a(row, col) = h(s, i) * h(u, j) * h(v, k) * g(m, t);
        }
    }
    return a;
}

MulTable direct_sum(const MulTable& x1, const MulTable& x2)
{
    const std::size_t n1 = x1.dim(), n2 = x2.dim();
    MulTable out(n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j)
            for (std::size_t l = 0; l < n1; ++l)
                out(i, j, l) = x1(i, j, l);
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t l = 0; l < n2; ++l)
                out(n1 + i, n1 + j, n1 + l) = x2(i, j, l);
    return out;
}

namespace builders {

MulTable matrix_algebra(std::size_t r)
{
    if (r == 0)
        throw std::invalid_argument("matrix_algebra needs r >= 1");
    MulTable x(r * r);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t d = 0; d < r; ++d)
                x(a * r + b, b * r + d, a * r + d) = 1;
    return x;
}

MulTable split_etale(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("split_etale needs n >= 1");
    MulTable x(n);
    for (std::size_t i = 0; i < n; ++i)
        x(i, i, i) = 1;
    return x;
}

MulTable dual_numbers()
{
    MulTable x(2);
    x(0, 0, 0) = 1;
    x(0, 1, 1) = 1;
    x(1, 0, 1) = 1;
    return x;
}

MulTable sl2()
{
    MulTable x(3);
    constexpr std::size_t h = 0, e = 1, f = 2;
    x(h, e, e) = 2;
    x(e, h, e) = -2;
    x(h, f, f) = -2;
    x(f, h, f) = 2;
    x(e, f, h) = 1;
    x(f, e, h) = -1;
    return x;
}

MulTable abelian(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("abelian needs n >= 1");
    return MulTable(n);
}

MulTable leibniz2()
{
    MulTable x(2);
    x(1, 1, 0) = 1;
    return x;
}

MulTable nonassoc2()
{
    MulTable x(2);
    x(0, 0, 1) = 1;
    x(1, 0, 0) = 1;
    return x;
}

}  // namespace builders

namespace {

std::size_t parse_count(std::string_view text, std::string_view context)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("bad builder parameter \"" + std::string(text) + "\" in " +
                                    std::string(context));
    return std::stoul(std::string(text));
}

MulTable build_one(std::string_view term, std::optional<std::size_t> arg)
{
    std::string_view name = term;
    std::optional<std::size_t> k = arg;
    if (auto colon = term.find(':'); colon != std::string_view::npos) {
        name = term.substr(0, colon);
        k = parse_count(term.substr(colon + 1), term);
    }
    auto need = [&]() {
        if (!k)
            throw std::invalid_argument("builder \"" + std::string(name) + "\" needs a parameter (--arg k or name:k)");
        return *k;
    };
    if (name.size() > 1 && name[0] == 'm' && name.find_first_not_of("0123456789", 1) == std::string_view::npos)
        return builders::matrix_algebra(parse_count(name.substr(1), term));
    if (name == "matrix_algebra")
        return builders::matrix_algebra(need());
    if (name == "split_etale")
        return builders::split_etale(need());
    if (name == "abelian")
        return builders::abelian(need());
    if (name == "dual_numbers")
        return builders::dual_numbers();
    if (name == "sl2")
        return builders::sl2();
    if (name == "leibniz2")
        return builders::leibniz2();
    if (name == "nonassoc2")
        return builders::nonassoc2();
    throw std::invalid_argument("unknown builder \"" + std::string(name) + "\"");
}

}  // namespace

NamedAlgebra build_named(std::string_view spec, std::optional<std::size_t> arg)
{
    if (spec.empty())
        throw std::invalid_argument("empty builder name");
    std::vector<std::string_view> terms;
    for (std::size_t start = 0;;) {
        const auto plus = spec.find('+', start);
        terms.push_back(spec.substr(start, plus - start));
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    if (terms.size() > 1 && arg)
        throw std::invalid_argument("--arg applies to a single builder; use name:k inside sums");
    std::optional<MulTable> table;
    std::string name;
    for (auto term : terms) {
        MulTable x = build_one(term, arg);
        table = table ? direct_sum(*table, x) : x;
    }
    name = std::string(spec);
    if (arg)
        name += ":" + std::to_string(*arg);
    return {name, *table};
}

std::vector<std::string> builder_names()
{
    return {"matrix_algebra", "m<r>", "split_etale", "dual_numbers", "sl2", "abelian", "leibniz2", "nonassoc2"};
}

}  // namespace algdef
