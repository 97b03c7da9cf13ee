#include "algdef/moduli.hpp"

#include "algdef/errors.hpp"
#include "algdef/forms.hpp"
#include "algdef/linalg.hpp"

namespace algdef {

namespace {

// C^1 coordinate p*n + q means f(e_p) = e_q, so the matrix acting on columns
// is the transpose of the coordinate grid.
RationalMatrix endomorphism(std::size_t n, const Vector& f)
{
    RationalMatrix m(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) m(q, p) = f[p * n + q];
    return m;
}

}  // namespace

TangentSpace variety_tangent(const MulTable& x, Variety v)
{
    auto z = cocycles(make_slice(x, theory_for(v)));
    return {z.dimension, std::move(z.basis)};
}

MulTable transport_derivative(const MulTable& x, const Vector& f)
{
    const std::size_t n = x.dim();
    const auto id = RationalMatrix::identity(n);
    const auto fm = endomorphism(n, f);
    const auto out = transport_components(fm, id, id, x).flat();
    const auto in1 = transport_components(id, fm, id, x).flat();
    const auto in2 = transport_components(id, id, fm, x).flat();
    Vector d(out.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = out[i] - in1[i] - in2[i];
    return MulTable(n, std::move(d));
}

bool transport_derivative_matches(const MulTable& x, const Vector& f)
{
    const Vector d1f = coboundary_d1(x) * f;
    const Vector d = transport_derivative(x, f).flat();
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != -d1f[i]) return false;
    return true;
}

bool check_transport_derivative(const MulTable& x, std::uint64_t seed, std::size_t samples)
{
    const std::size_t n = x.dim();
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const auto m = random_matrix(n, rng);
        Vector f(n * n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) f[p * n + q] = m(p, q);
        if (!transport_derivative_matches(x, f)) return false;
    }
    return true;
}

TangentSpace orbit_tangent(const MulTable& x, Variety v, std::uint64_t seed, std::size_t samples)
{
    auto b = coboundaries(make_slice(x, theory_for(v)));
    if (!check_transport_derivative(x, seed, samples))
        throw InternalInconsistency("first-order transport does not match -d1 f");
    return {b.dimension, std::move(b.basis)};
}

RigidityVerdict rigidity_verdict(const MulTable& x, Variety v, RankField field)
{
    const auto summary = summarize(make_slice(x, theory_for(v)), field);
    RigidityVerdict r{v};
    r.variety_tangent_dim = summary.z2;
    r.orbit_tangent_dim = summary.b2;
    r.stack_tangent_dim = summary.z2 - summary.b2;
    r.orbit_open = r.variety_tangent_dim == r.orbit_tangent_dim;
    r.rigid_in_moduli = r.stack_tangent_dim == 0;

    const std::size_t n = x.dim();
    switch (v) {
    case Variety::alg:
        if (is_separable(x)) r.predicted_dim = n * n - n + summary.center_dim;
        break;
    case Variety::comm:
        if (is_separable(x)) r.predicted_dim = n * n;
        break;
    case Variety::lie:
        if (!is_zero(killing_gram(x).discriminant)) r.predicted_dim = n * n - n;
        break;
    case Variety::leib:
        break;
    }
    if (r.predicted_dim && summary.exact && *r.predicted_dim != r.variety_tangent_dim)
        throw InternalInconsistency("tangent dimension differs from the closed formula");
    return r;
}

StratumInvariant stratum_invariant(const MulTable& x, Theory t)
{
    return {t, exact_rank(make_slice(x, t).d2)};
}

bool semisimple_locus_check(const MulTable& x)
{
    if (!is_semisimple_lie_point(x)) return false;
    const auto verdict = rigidity_verdict(x, Variety::lie);
    if (!verdict.orbit_open || !verdict.rigid_in_moduli)
        throw InternalInconsistency("semisimple Lie point with nonzero stack tangent");
    return true;
}

}  // namespace algdef
