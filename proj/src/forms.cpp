#include "algdef/forms.hpp"

#include "algdef/errors.hpp"
#include "algdef/identities.hpp"
#include "algdef/linalg.hpp"

namespace algdef {

namespace {

Rational trace(const RationalMatrix& m)
{
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

std::vector<RationalMatrix> right_operators(const MulTable& x)
{
    std::vector<RationalMatrix> ops;
    for (std::size_t i = 0; i < x.dim(); ++i) ops.push_back(right_operator(x, basis_vector(x.dim(), i)));
    return ops;
}

std::vector<RationalMatrix> left_operators(const MulTable& x)
{
    std::vector<RationalMatrix> ops;
    for (std::size_t i = 0; i < x.dim(); ++i) ops.push_back(left_operator(x, basis_vector(x.dim(), i)));
    return ops;
}

// Columns are the flattened images of the basis under v -> op(v).
RationalMatrix operator_map(std::size_t n, const std::vector<RationalMatrix>& ops)
{
    RationalMatrix m(n * n, n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r * n + c, s) = ops[s](r, c);
    return m;
}

Rational apply_functional(const Vector& f, const Vector& v)
{
    Rational acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * v[i];
    return acc;
}

}  // namespace

GramForm trace_gram(const MulTable& x)
{
    const std::size_t n = x.dim();
    Vector sigma_l(n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t b = 0; b < n; ++b) sigma_l[s] += x(s, b, b);

    RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < n; ++s) g(i, j) += x(i, j, s) * sigma_l[s];

    GramForm form{FormKind::trace, g, determinant(g)};
    form.semantics_apply = is_associative(x);
    return form;
}

bool is_separable(const MulTable& x)
{
    require_member(x, Variety::alg);
    return !is_zero(trace_gram(x).discriminant);
}

GramForm killing_gram(const MulTable& x)
{
    const std::size_t n = x.dim();
    RationalMatrix coord(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t r = 0; r < n; ++r) coord(i, j) += x(q, i, r) * x(r, j, q);

    const auto r_ops = right_operators(x);
    RationalMatrix op(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) op(i, j) = trace(r_ops[i] * r_ops[j]);

    if (!(coord == op))
        throw InternalInconsistency("killing_gram: coordinate and operator formulas disagree");
    return GramForm{FormKind::killing, op, determinant(op)};
}

bool is_semisimple_lie_point(const MulTable& x)
{
    require_member(x, Variety::leib);
    const bool nondegenerate = !is_zero(killing_gram(x).discriminant);
    if (nondegenerate && !is_lie(x))
        throw InternalInconsistency("nondegenerate Killing form at a non-Lie Leibniz point");
    return nondegenerate;
}

CharacterPair modular_characters(const MulTable& x)
{
    const std::size_t n = x.dim();
    CharacterPair c{Vector(n), Vector(n)};
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t b = 0; b < n; ++b) {
            c.sigma_L[s] += x(s, b, b);
            c.sigma_R[s] += x(b, s, b);
        }

    if (is_leibniz(x)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector prod(n);
                for (std::size_t l = 0; l < n; ++l) prod[l] = x(i, j, l);
                if (!is_zero(apply_functional(c.sigma_R, prod)))
                    throw InternalInconsistency("sigma_R does not vanish on mu(e_" + std::to_string(i) + ", e_" +
                                                std::to_string(j) + ")");
            }
    }
    return c;
}

bool is_right_unimodular(const CharacterPair& c) { return is_zero(c.sigma_R); }
bool is_left_unimodular(const CharacterPair& c) { return is_zero(c.sigma_L); }

std::vector<Vector> right_annihilator(const MulTable& x)
{
    return kernel_basis(operator_map(x.dim(), right_operators(x)));
}

std::vector<Vector> center(const MulTable& x)
{
    const std::size_t n = x.dim();
    auto ops = left_operators(x);
    const auto r_ops = right_operators(x);
    for (std::size_t s = 0; s < n; ++s) ops[s] = ops[s] - r_ops[s];
    return kernel_basis(operator_map(n, ops));
}

std::vector<Vector> leibniz_kernel(const MulTable& x)
{
    const std::size_t n = x.dim();
    std::vector<Vector> squares;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector a = basis_vector(n, i);
            a[j] += 1;
            squares.push_back(multiply(x, a, a));
        }
    if (squares.empty()) return {};

    RationalMatrix m(n, squares.size());
    for (std::size_t c = 0; c < squares.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) = squares[c][r];
    auto basis = image_basis(m);

    if (is_leibniz(x) && !span_contains(n, right_annihilator(x), basis))
        throw InternalInconsistency("Leibniz kernel not contained in the right annihilator");
    return basis;
}

OperatorIdentityResult operator_identities_check(const MulTable& x)
{
    const std::size_t n = x.dim();
    const auto r_ops = right_operators(x);
    const auto l_ops = left_operators(x);
    OperatorIdentityResult result;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vector prod(n);
            for (std::size_t l = 0; l < n; ++l) prod[l] = x(a, b, l);
            const auto r_prod = right_operator(x, prod);
            const auto l_prod = left_operator(x, prod);
            const auto bracket_rr = r_ops[a] * r_ops[b] - r_ops[b] * r_ops[a];
            if (!(r_prod + bracket_rr).is_zero()) {
                result = {false, std::pair{a, b}, "R_{mu(a,b)} = -[R_a, R_b]"};
                return result;
            }
            const auto bracket_rl = r_ops[b] * l_ops[a] - l_ops[a] * r_ops[b];
            if (!(bracket_rl - l_prod).is_zero()) {
                result = {false, std::pair{a, b}, "[R_b, L_a] = L_{mu(a,b)}"};
                return result;
            }
        }
    return result;
}

RationalMatrix adjoint_killing_gram(const MulTable& x)
{
    const std::size_t n = x.dim();
    auto ad = left_operators(x);
    const auto r_ops = right_operators(x);
    for (std::size_t s = 0; s < n; ++s) ad[s] = ad[s] - r_ops[s];
    RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = trace(ad[i] * ad[j]);
    return g;
}

}  // namespace algdef
