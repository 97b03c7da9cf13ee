#include "algdef/identities.hpp"

#include "algdef/errors.hpp"

namespace algdef {

std::string_view name(ResidualKind kind)
{
    switch (kind) {
    case ResidualKind::associative: return "associative";
    case ResidualKind::commutative: return "commutative";
    case ResidualKind::leibniz: return "leibniz";
    case ResidualKind::skew: return "skew";
    case ResidualKind::jacobi: return "jacobi";
    }
    return "?";
}

std::string_view name(Variety v)
{
    switch (v) {
    case Variety::alg: return "alg";
    case Variety::comm: return "comm";
    case Variety::leib: return "leib";
    case Variety::lie: return "lie";
    }
    return "?";
}

Tensor3 assoc_residual(const MulTable& x)
{
    const std::size_t n = x.dim();
    Tensor3 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational& v = r(i, j, k, m);
                    for (std::size_t l = 0; l < n; ++l) {
                        v += x(i, j, l) * x(l, k, m);
                        v -= x(i, l, m) * x(j, k, l);
                    }
                }
    return r;
}

Tensor3 leibniz_residual(const MulTable& x)
{
    const std::size_t n = x.dim();
    Tensor3 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational& v = r(i, j, k, m);
                    for (std::size_t l = 0; l < n; ++l) {
                        v += x(i, j, l) * x(l, k, m);
                        v -= x(i, k, l) * x(l, j, m);
                        v -= x(i, l, m) * x(j, k, l);
                    }
                }
    return r;
}

Tensor3 jacobi_residual(const MulTable& x)
{
    const std::size_t n = x.dim();
    Tensor3 r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational& v = r(i, j, k, m);
                    for (std::size_t l = 0; l < n; ++l) {
                        v += x(i, j, l) * x(l, k, m);
                        v += x(j, k, l) * x(l, i, m);
                        v += x(k, i, l) * x(l, j, m);
                    }
                }
    return r;
}

namespace {

ResidualReport from_tensor(ResidualKind kind, const Tensor3& t)
{
    ResidualReport rep{kind};
    rep.max_abs_violations = t.nonzero_count();
    rep.is_member = rep.max_abs_violations == 0;
    if (auto w = t.first_nonzero())
        rep.witness.assign(w->begin(), w->end());
    return rep;
}

ResidualReport linear(ResidualKind kind, const MulTable& x, int sign)
{
    ResidualReport rep{kind};
    const std::size_t n = x.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                const Rational v = x(i, j, l) + sign * x(j, i, l);
                if (sgn(v) == 0)
                    continue;
                if (rep.witness.empty())
                    rep.witness = {i, j, l};
                ++rep.max_abs_violations;
            }
    rep.is_member = rep.max_abs_violations == 0;
    return rep;
}

}  // namespace

ResidualReport residual_report(const MulTable& x, ResidualKind kind)
{
    switch (kind) {
    case ResidualKind::associative: return from_tensor(kind, assoc_residual(x));
    case ResidualKind::leibniz: return from_tensor(kind, leibniz_residual(x));
    case ResidualKind::jacobi: return from_tensor(kind, jacobi_residual(x));
    case ResidualKind::commutative: return linear(kind, x, -1);
    case ResidualKind::skew: return linear(kind, x, +1);
    }
    return {kind};
}

bool is_associative(const MulTable& x) { return assoc_residual(x).is_zero(); }
bool is_symmetric(const MulTable& x) { return residual_report(x, ResidualKind::commutative).is_member; }
bool is_skew(const MulTable& x) { return residual_report(x, ResidualKind::skew).is_member; }
bool is_commutative(const MulTable& x) { return is_symmetric(x) && is_associative(x); }
bool is_leibniz(const MulTable& x) { return leibniz_residual(x).is_zero(); }
bool is_lie(const MulTable& x) { return is_skew(x) && is_leibniz(x); }

bool is_member(const MulTable& x, Variety v)
{
    switch (v) {
    case Variety::alg: return is_associative(x);
    case Variety::comm: return is_commutative(x);
    case Variety::leib: return is_leibniz(x);
    case Variety::lie: return is_lie(x);
    }
    return false;
}

namespace {

std::string describe(const ResidualReport& rep)
{
    std::string s = std::string(name(rep.kind)) + " residual is nonzero at (";
    for (std::size_t k = 0; k < rep.witness.size(); ++k)
        s += (k ? "," : "") + std::to_string(rep.witness[k]);
    return s + ") (" + std::to_string(rep.max_abs_violations) + " nonzero coordinates)";
}

void require(const MulTable& x, ResidualKind kind, Variety v)
{
    const ResidualReport rep = residual_report(x, kind);
    if (!rep.is_member)
        throw OffVariety("law is not in " + std::string(name(v)) + ": " + describe(rep));
}

}  // namespace

void require_member(const MulTable& x, Variety v)
{
    switch (v) {
    case Variety::alg: require(x, ResidualKind::associative, v); break;
    case Variety::comm:
        require(x, ResidualKind::commutative, v);
        require(x, ResidualKind::associative, v);
        break;
    case Variety::leib: require(x, ResidualKind::leibniz, v); break;
    case Variety::lie:
        require(x, ResidualKind::skew, v);
        require(x, ResidualKind::leibniz, v);
        break;
    }
}

}  // namespace algdef
