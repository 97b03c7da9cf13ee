#include "algdef/properties.hpp"

#include <algorithm>

#include "algdef/cohomology.hpp"
#include "algdef/forms.hpp"
#include "algdef/identities.hpp"
#include "algdef/incidence.hpp"
#include "algdef/linalg.hpp"
#include "algdef/moduli.hpp"

namespace algdef {

namespace {

constexpr std::size_t kRandomTablesPerTransform = 2;
constexpr std::size_t kPhiSamples = 4;

void record(LawResult& law, bool ok, const std::string& context)
{
    ++law.checks;
    if (ok) return;
    ++law.failures;
    if (!law.first_failure) law.first_failure = context;
}

bool same_summary(const CohomologySummary& a, const CohomologySummary& b)
{
    return a.z1 == b.z1 && a.b1 == b.b1 && a.z2 == b.z2 && a.b2 == b.b2 && a.center_dim == b.center_dim;
}

Rational power(const Rational& base, int e)
{
    Rational r = 1;
    const Rational b = e < 0 ? Rational(1 / base) : base;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= b;
    return r;
}

}  // namespace

bool BatteryReport::passed() const
{
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed(); });
}

std::vector<NamedAlgebra> builder_points(std::size_t n)
{
    std::vector<NamedAlgebra> pts;
    auto add = [&](std::string name, MulTable t) {
        if (t.dim() == n) pts.push_back({std::move(name), std::move(t)});
    };
    add("split_etale:" + std::to_string(n), builders::split_etale(n));
    add("abelian:" + std::to_string(n), builders::abelian(n));
    add("dual_numbers", builders::dual_numbers());
    add("leibniz2", builders::leibniz2());
    add("nonassoc2", builders::nonassoc2());
    add("sl2", builders::sl2());
    add("m1+split_etale:2", direct_sum(builders::matrix_algebra(1), builders::split_etale(2)));
    add("m1+dual_numbers", direct_sum(builders::matrix_algebra(1), builders::dual_numbers()));
    add("m1+leibniz2", direct_sum(builders::matrix_algebra(1), builders::leibniz2()));
    return pts;
}

BatteryReport equivariance_battery(std::size_t n, std::uint64_t seed, std::size_t transforms)
{
    BatteryReport rep;
    rep.n = n;
    rep.seed = seed;
    rep.transforms = transforms;

    LawResult beta_law{"beta_equivariance"};
    LawResult q_law{"q_congruence"};
    LawResult killing_law{"killing_covariance"};
    LawResult sep_law{"separability_invariance"};
    LawResult member_law{"membership_invariance"};
    LawResult coh_law{"cohomology_dimension_invariance"};
    LawResult stratum_law{"stratum_rank_invariance"};

    Rng rng(seed);
    const auto fixed = builder_points(n);
    const QFamily q(n);
    const std::size_t n3 = n * n * n;

    for (std::size_t t = 0; t < transforms; ++t) {
        const auto g = random_invertible(n, rng);
        const auto g_inv = inverse(g);
        const Rational det_g = determinant(g);
        const std::string tag = "transform " + std::to_string(t);

        std::vector<NamedAlgebra> points = fixed;
        for (std::size_t k = 0; k < kRandomTablesPerTransform; ++k)
            points.push_back({"random", random_table(n, rng)});

        // beta(g.x, g.y) = g.beta(x, y)
        for (std::size_t k = 0; k + 1 < points.size(); ++k) {
            const auto& x = points[k].table;
            const auto& y = points[k + 1].table;
            record(beta_law, beta(transport(g, x), transport(g, y)) == transport(g, beta(x, y)),
                   tag + ": " + points[k].name + ", " + points[k + 1].name);
        }

        // q congruence on sampled functionals: sum_psi (G3^{-1})_{phi,psi} q_psi = G2^{-t} q_phi G2^{-1}.
        {
            const auto g2_inv = induced_action_v21(g_inv);
            const auto g3_inv = induced_action_v31(g_inv);
            const auto x = random_table(n, rng, 0.5);
            const auto y = random_table(n, rng, 0.5);
            for (std::size_t s = 0; s < kPhiSamples; ++s) {
                const std::size_t phi = std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng);
                RationalMatrix lhs(n3, n3);
                for (std::size_t psi = 0; psi < q.size(); ++psi) {
                    const Rational& c = g3_inv(phi, psi);
                    if (is_zero(c)) continue;
                    for (const auto& e : q.entries(psi)) lhs(e.row, e.col) += c * e.value;
                }
                const auto rhs = g2_inv.transpose() * q.matrix(phi) * g2_inv;
                record(q_law, lhs == rhs, tag + ": phi " + std::to_string(phi));

                Rational paired = 0;
                for (std::size_t psi = 0; psi < q.size(); ++psi)
                    if (!is_zero(g3_inv(phi, psi))) paired += g3_inv(phi, psi) * q.pair(psi, x.flat(), y.flat());
                record(q_law, paired == q.pair(phi, g2_inv * x.flat(), g2_inv * y.flat()),
                       tag + ": pairing at phi " + std::to_string(phi));
            }
        }

        for (const auto& p : points) {
            const auto& x = p.table;
            const auto gx = transport(g, x);
            const std::string ctx = tag + ": " + p.name;

            const auto k = killing_gram(x);
            const auto gk = killing_gram(gx);
            record(killing_law, gk.discriminant == power(det_g, -2) * k.discriminant, ctx + " (determinant)");
            record(killing_law, gk.gram == g_inv.transpose() * k.gram * g_inv, ctx + " (gram)");

            for (Variety v : {Variety::alg, Variety::comm, Variety::leib, Variety::lie}) {
                const bool m = is_member(x, v);
                record(member_law, m == is_member(gx, v), ctx + " (" + std::string(name(v)) + ")");
                if (!m) continue;
                const Theory th = theory_for(v);
                const auto s = make_slice(x, th);
                const auto gs = make_slice(gx, th);
                record(coh_law, same_summary(summarize(s), summarize(gs)), ctx + " (" + std::string(name(th)) + ")");
                record(stratum_law, exact_rank(s.d2) == exact_rank(gs.d2), ctx + " (" + std::string(name(th)) + ")");
                if (v == Variety::alg) record(sep_law, is_separable(x) == is_separable(gx), ctx);
            }
        }
    }

    rep.laws = {beta_law, q_law, killing_law, sep_law, member_law, coh_law, stratum_law};
    return rep;
}

}  // namespace algdef
