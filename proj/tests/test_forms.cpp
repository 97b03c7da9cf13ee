#include <gtest/gtest.h>

#include "algdef/errors.hpp"
#include "algdef/forms.hpp"
#include "algdef/identities.hpp"
#include "algdef/linalg.hpp"
#include "algdef/random.hpp"
#include "oracles.hpp"

using namespace algdef;

namespace {

RationalMatrix grid_matrix(const oracle::Grid& g)
{
    RationalMatrix m(g.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) m(i, j) = g[i][j];
    return m;
}

std::vector<MulTable> leibniz_points()
{
    std::vector<MulTable> pts = {builders::sl2(), builders::leibniz2(), builders::abelian(3),
                                 direct_sum(builders::sl2(), builders::abelian(1)),
                                 direct_sum(builders::sl2(), builders::sl2()),
                                 direct_sum(builders::leibniz2(), builders::sl2())};
    Rng rng(71);
    for (int t = 0; t < 6; ++t) {
        const auto& b = pts[t % 4];
        pts.push_back(transport(random_invertible(b.dim(), rng), b));
    }
    return pts;
}

}  // namespace

TEST(TraceForm, Examples)
{
    const auto e2 = trace_gram(builders::split_etale(2));
    EXPECT_EQ(e2.gram, RationalMatrix::identity(2));
    EXPECT_EQ(e2.discriminant, 1);
    EXPECT_TRUE(e2.semantics_apply);

    const auto d = trace_gram(builders::dual_numbers());
    RationalMatrix expect(2, 2);
    expect(0, 0) = 2;
    EXPECT_EQ(d.gram, expect);
    EXPECT_EQ(d.discriminant, 0);

    EXPECT_EQ(trace_gram(builders::matrix_algebra(2)).discriminant, -16);
    EXPECT_FALSE(trace_gram(builders::sl2()).semantics_apply);
}

TEST(TraceForm, MatchesOperatorOracle)
{
    Rng rng(72);
    for (int t = 0; t < 30; ++t) {
        const auto x = random_table(1 + t % 4, rng, 0.5);
        const auto g = trace_gram(x);
        EXPECT_EQ(g.gram, grid_matrix(oracle::trace_gram(x)));
        EXPECT_EQ(g.discriminant, oracle::determinant(oracle::trace_gram(x)));
    }
}

TEST(Separability, Examples)
{
    EXPECT_TRUE(is_separable(builders::matrix_algebra(1)));
    EXPECT_TRUE(is_separable(builders::matrix_algebra(2)));
    EXPECT_FALSE(is_separable(builders::dual_numbers()));
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(is_separable(builders::split_etale(n)));
    EXPECT_THROW(is_separable(builders::sl2()), OffVariety);
}

TEST(Separability, InvariantUnderTransport)
{
    Rng rng(73);
    const MulTable points[] = {builders::matrix_algebra(2), builders::dual_numbers(), builders::split_etale(3),
                               direct_sum(builders::matrix_algebra(1), builders::dual_numbers())};
    for (const auto& x : points)
        for (int t = 0; t < 5; ++t)
            EXPECT_EQ(is_separable(x), is_separable(transport(random_invertible(x.dim(), rng), x)));
}

TEST(KillingForm, Examples)
{
    const auto k = killing_gram(builders::sl2());
    RationalMatrix expect(3, 3);
    expect(0, 0) = 8;
    expect(1, 2) = expect(2, 1) = 4;
    EXPECT_EQ(k.gram, expect);
    EXPECT_EQ(k.discriminant, -128);

    const auto a = killing_gram(builders::abelian(3));
    EXPECT_TRUE(a.gram.is_zero());
    EXPECT_EQ(a.discriminant, 0);

    const auto l = killing_gram(builders::leibniz2());
    EXPECT_EQ(l.discriminant, 0);
    const auto row0 = l.gram.row(0);
    EXPECT_TRUE(is_zero(Vector(row0.begin(), row0.end())));
}

TEST(KillingForm, MatchesOperatorOracleAndIsSymmetric)
{
    Rng rng(74);
    for (int t = 0; t < 30; ++t) {
        const auto x = random_table(1 + t % 4, rng, 0.5);
        const auto k = killing_gram(x);
        EXPECT_EQ(k.gram, grid_matrix(oracle::killing_gram(x)));
        EXPECT_EQ(k.gram, k.gram.transpose());
    }
}

TEST(KillingForm, CovarianceUnderTransport)
{
    Rng rng(75);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 2;
        const auto x = t % 3 == 0 ? builders::sl2() : random_table(n, rng, 0.5);
        const auto g = random_invertible(x.dim(), rng);
        const auto gi = inverse(g);
        const auto k = killing_gram(x), gk = killing_gram(transport(g, x));
        const Rational d = determinant(g);
        EXPECT_EQ(gk.discriminant, k.discriminant / (d * d));
        EXPECT_EQ(gk.gram, gi.transpose() * k.gram * gi);
    }
}

TEST(KillingForm, QuarterOfAdjointFormAtLiePoints)
{
    for (const auto& x : leibniz_points())
        if (is_lie(x)) EXPECT_EQ(Rational(4) * killing_gram(x).gram, adjoint_killing_gram(x));
}

TEST(Semisimple, Examples)
{
    EXPECT_TRUE(is_semisimple_lie_point(builders::sl2()));
    EXPECT_TRUE(is_semisimple_lie_point(direct_sum(builders::sl2(), builders::sl2())));
    EXPECT_FALSE(is_semisimple_lie_point(builders::leibniz2()));
    EXPECT_FALSE(is_semisimple_lie_point(direct_sum(builders::sl2(), builders::abelian(1))));
    EXPECT_FALSE(is_semisimple_lie_point(builders::abelian(2)));
    EXPECT_THROW(is_semisimple_lie_point(builders::nonassoc2()), OffVariety);
}

TEST(Characters, Examples)
{
    const auto s = modular_characters(builders::sl2());
    EXPECT_TRUE(is_zero(s.sigma_L));
    EXPECT_TRUE(is_zero(s.sigma_R));
    EXPECT_TRUE(is_zero(modular_characters(builders::leibniz2()).sigma_R));
    EXPECT_EQ(modular_characters(builders::split_etale(2)).sigma_L, (Vector{1, 1}));
}

TEST(Characters, RightCharacterKillsProductsOnLeibnizPoints)
{
    for (const auto& x : leibniz_points()) {
        const auto c = modular_characters(x);
        const std::size_t n = x.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto p = multiply(x, basis_vector(n, i), basis_vector(n, j));
                Rational v = 0;
                for (std::size_t s = 0; s < n; ++s) v += c.sigma_R[s] * p[s];
                EXPECT_EQ(v, 0);
            }
    }
}

TEST(Subspaces, Examples)
{
    EXPECT_TRUE(leibniz_kernel(builders::sl2()).empty());
    const auto k = leibniz_kernel(builders::leibniz2());
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE(same_span(2, k, {Vector{1, 0}}));
    EXPECT_TRUE(span_contains(2, right_annihilator(builders::leibniz2()), {Vector{1, 0}}));
    EXPECT_TRUE(leibniz_kernel(builders::abelian(3)).empty());
    EXPECT_EQ(right_annihilator(builders::abelian(3)).size(), 3u);
    EXPECT_EQ(center(builders::abelian(3)).size(), 3u);
    EXPECT_EQ(center(builders::matrix_algebra(2)).size(), 1u);
    EXPECT_TRUE(center(builders::sl2()).empty());
}

TEST(Subspaces, KernelInsideAnnihilatorAndKillingRadical)
{
    for (const auto& x : leibniz_points()) {
        const std::size_t n = x.dim();
        const auto k = leibniz_kernel(x);
        EXPECT_TRUE(span_contains(n, right_annihilator(x), k));
        const auto gram = killing_gram(x).gram;
        for (const auto& v : k) EXPECT_TRUE(is_zero(gram * v));
    }
}

TEST(OperatorIdentities, Examples)
{
    EXPECT_TRUE(operator_identities_check(builders::sl2()).ok);
    EXPECT_TRUE(operator_identities_check(builders::leibniz2()).ok);
    const auto bad = operator_identities_check(builders::nonassoc2());
    EXPECT_FALSE(bad.ok);
    ASSERT_TRUE(bad.violating_pair.has_value());
    EXPECT_FALSE(bad.failed_identity.empty());
}

TEST(OperatorIdentities, HoldOnLeibnizPoints)
{
    for (const auto& x : leibniz_points()) EXPECT_TRUE(operator_identities_check(x).ok);
}
