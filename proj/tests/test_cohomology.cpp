#include <gtest/gtest.h>

#include "algdef/cohomology.hpp"
#include "algdef/errors.hpp"
#include "algdef/forms.hpp"
#include "algdef/incidence.hpp"
#include "algdef/linalg.hpp"
#include "algdef/random.hpp"
#include "oracles.hpp"

using namespace algdef;

namespace {

struct Point {
    std::string name;
    MulTable x;
};

std::vector<Point> builder_set()
{
    return {{"m1", builders::matrix_algebra(1)},
            {"m2", builders::matrix_algebra(2)},
            {"split_etale:2", builders::split_etale(2)},
            {"split_etale:3", builders::split_etale(3)},
            {"dual_numbers", builders::dual_numbers()},
            {"leibniz2", builders::leibniz2()},
            {"sl2", builders::sl2()},
            {"abelian:2", builders::abelian(2)},
            {"abelian:3", builders::abelian(3)},
            {"sl2+abelian:1", direct_sum(builders::sl2(), builders::abelian(1))},
            {"m1+dual_numbers", direct_sum(builders::matrix_algebra(1), builders::dual_numbers())}};
}

// Builders plus 50 random transports of them.
std::vector<Point> test_points()
{
    auto pts = builder_set();
    const auto base = builder_set();
    Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        const auto& b = base[t % base.size()];
        if (b.x.dim() > 4) continue;
        pts.push_back({b.name + " transported", transport(random_invertible(b.x.dim(), rng), b.x)});
    }
    return pts;
}

CohomologySummary run(const MulTable& x, Theory t) { return summarize(make_slice(x, t)); }

void expect_dims(const CohomologySummary& s, std::size_t z2, std::size_t b2, std::size_t h2)
{
    EXPECT_EQ(s.z2, z2);
    EXPECT_EQ(s.b2, b2);
    EXPECT_EQ(s.h2, h2);
}

}  // namespace

TEST(Hochschild, Examples)
{
    const auto e2 = run(builders::split_etale(2), Theory::hochschild);
    expect_dims(e2, 4, 4, 0);
    EXPECT_EQ(e2.derivations_dim, 0u);
    EXPECT_EQ(e2.center_dim, 2u);

    const auto m2 = run(builders::matrix_algebra(2), Theory::hochschild);
    expect_dims(m2, 13, 13, 0);
    EXPECT_EQ(m2.derivations_dim, 3u);
    EXPECT_EQ(m2.center_dim, 1u);
    EXPECT_EQ(m2.rank_d2, 51u);

    EXPECT_EQ(run(builders::abelian(2), Theory::hochschild).b2, 0u);
}

TEST(Hochschild, DualNumbersGolden)
{
    // HH^2 of k[e]/e^2 is one-dimensional in characteristic 0.
    const auto s = run(builders::dual_numbers(), Theory::hochschild);
    expect_dims(s, 4, 3, 1);
    EXPECT_EQ(s.z1, 1u);
    EXPECT_EQ(s.b1, 0u);
    EXPECT_EQ(s.center_dim, 2u);
    const auto& x = builders::dual_numbers();
    EXPECT_EQ(s.z2, oracle::cocycle_dim(x, oracle::all_cochains(2), oracle::hochschild_delta));
    EXPECT_EQ(s.b2, oracle::coboundary_dim(x));
}

TEST(Harrison, Examples)
{
    EXPECT_EQ(harrison_z2(builders::split_etale(2)).dimension, 4u);
    EXPECT_EQ(harrison_z2(builders::split_etale(3)).dimension, 9u);
    const auto d = run(builders::dual_numbers(), Theory::harrison);
    expect_dims(d, 4, 3, 1);
    EXPECT_EQ(d.z2, oracle::cocycle_dim(builders::dual_numbers(), oracle::symmetric_cochains(2),
                                        oracle::hochschild_delta));
    EXPECT_THROW(harrison_slice(builders::matrix_algebra(2)), OffVariety);
    for (const auto& v : harrison_z2(builders::dual_numbers()).basis) {
        const MulTable y(2, v);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l) EXPECT_EQ(y(i, j, l), y(j, i, l));
    }
}

TEST(Leibniz, Examples)
{
    // HL^2(sl2) = 0: the Leibniz cocycles of sl2 are all coboundaries.
    expect_dims(run(builders::sl2(), Theory::leibniz), 6, 6, 0);
    expect_dims(run(builders::abelian(2), Theory::leibniz), 8, 0, 8);
    const auto s = leibniz_slice(builders::abelian(2));
    EXPECT_TRUE(s.d1.is_zero());
    EXPECT_TRUE(s.d2.is_zero());
}

TEST(Leibniz, Leibniz2Golden)
{
    const auto s = run(builders::leibniz2(), Theory::leibniz);
    EXPECT_EQ(s.z1, 2u);
    EXPECT_EQ(s.b1, 1u);
    EXPECT_EQ(s.h1, 1u);
    expect_dims(s, 3, 2, 1);
    EXPECT_EQ(s.center_dim, 1u);
    EXPECT_EQ(s.z2, oracle::cocycle_dim(builders::leibniz2(), oracle::all_cochains(2), oracle::leibniz_delta));
    EXPECT_EQ(s.b2, oracle::coboundary_dim(builders::leibniz2()));
}

TEST(Leibniz, D2IsThePairedBilinearization)
{
    for (const auto& p : test_points())
        if (is_leibniz(p.x)) EXPECT_EQ(leibniz_d2(p.x), leib_pair_matrix(p.x)) << p.name;
}

TEST(ChevalleyEilenberg, Examples)
{
    expect_dims(run(builders::sl2(), Theory::ce), 6, 6, 0);
    const auto a = run(builders::abelian(3), Theory::ce);
    expect_dims(a, 9, 0, 9);
    const auto s = ce_slice(builders::abelian(3));
    EXPECT_TRUE(s.d1.is_zero());
    EXPECT_TRUE(s.d2.is_zero());
    EXPECT_EQ(s.c2_dim(), 9u);
    EXPECT_THROW(ce_slice(builders::leibniz2()), OffVariety);
}

TEST(ChevalleyEilenberg, SkewCoboundaryIsFullyAlternating)
{
    // Observed symmetry type of the degree-2 differential on skew cochains at Lie points.
    const MulTable points[] = {builders::sl2(), direct_sum(builders::sl2(), builders::abelian(1)), builders::abelian(3)};
    for (const auto& x : points) {
        const std::size_t n = x.dim();
        const auto d2 = ce_slice(x).d2;
        for (std::size_t c = 0; c < d2.cols(); ++c) {
            const Tensor3 t(n, d2.column(c));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        for (std::size_t m = 0; m < n; ++m) {
                            EXPECT_EQ(t(i, j, k, m), -t(j, i, k, m));
                            EXPECT_EQ(t(i, j, k, m), -t(i, k, j, m));
                        }
        }
    }
}

TEST(Complex, DifferentialsCompose)
{
    for (const auto& p : test_points())
        for (auto v : {Variety::alg, Variety::comm, Variety::leib, Variety::lie}) {
            if (!is_member(p.x, v)) continue;
            const auto s = make_slice(p.x, theory_for(v));
            EXPECT_TRUE((s.d2 * s.d1).is_zero()) << p.name << " " << name(v);
            if (s.inclusion) {
                EXPECT_TRUE((*s.inclusion * s.d1 * s.d0).is_zero()) << p.name;
            } else {
                EXPECT_TRUE((s.d1 * s.d0).is_zero()) << p.name;
            }
        }
}

TEST(Complex, RankNullityAndDomainSizes)
{
    for (const auto& p : test_points()) {
        const std::size_t n = p.x.dim();
        for (auto v : {Variety::alg, Variety::comm, Variety::leib, Variety::lie}) {
            if (!is_member(p.x, v)) continue;
            const auto t = theory_for(v);
            const auto s = summarize(make_slice(p.x, t));
            std::size_t c2 = n * n * n;
            if (t == Theory::harrison) c2 = n * n * (n + 1) / 2;
            if (t == Theory::ce) c2 = n * n * (n - 1) / 2;
            EXPECT_EQ(s.z2 + s.rank_d2, c2) << p.name;
            EXPECT_EQ(s.h2, s.z2 - s.b2);
            EXPECT_EQ(s.h1, s.z1 - s.b1);
            EXPECT_EQ(s.derivations_dim, s.z1);
        }
    }
}

TEST(Complex, DimensionsMatchPointwiseOracle)
{
    for (const auto& p : test_points()) {
        const auto& x = p.x;
        if (x.dim() > 3) continue;
        const std::size_t n = x.dim();
        if (is_associative(x)) {
            const auto s = run(x, Theory::hochschild);
            EXPECT_EQ(s.z2, oracle::cocycle_dim(x, oracle::all_cochains(n), oracle::hochschild_delta)) << p.name;
            EXPECT_EQ(s.b2, oracle::coboundary_dim(x)) << p.name;
        }
        if (is_commutative(x))
            EXPECT_EQ(run(x, Theory::harrison).z2,
                      oracle::cocycle_dim(x, oracle::symmetric_cochains(n), oracle::hochschild_delta))
                << p.name;
        if (is_leibniz(x)) {
            const auto s = run(x, Theory::leibniz);
            EXPECT_EQ(s.z2, oracle::cocycle_dim(x, oracle::all_cochains(n), oracle::leibniz_delta)) << p.name;
            EXPECT_EQ(s.b2, oracle::coboundary_dim(x)) << p.name;
        }
        if (is_lie(x))
            EXPECT_EQ(run(x, Theory::ce).z2, oracle::cocycle_dim(x, oracle::skew_cochains(n), oracle::leibniz_delta))
                << p.name;
    }
}

TEST(Complex, D1MatchesPointwiseCoboundary)
{
    Rng rng(62);
    for (const auto& p : test_points()) {
        const std::size_t n = p.x.dim();
        const auto f = random_matrix(n, rng);
        Vector fc(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) fc[a * n + b] = f(b, a);
        EXPECT_EQ(coboundary_d1(p.x) * fc, oracle::coboundary(p.x, f).flat()) << p.name;
    }
}

TEST(Complex, InvariantUnderTransport)
{
    Rng rng(63);
    for (const auto& p : builder_set())
        for (auto v : {Variety::alg, Variety::comm, Variety::leib, Variety::lie}) {
            if (!is_member(p.x, v)) continue;
            const auto a = run(p.x, theory_for(v));
            const auto b = run(transport(random_invertible(p.x.dim(), rng), p.x), theory_for(v));
            EXPECT_EQ(a.z1, b.z1);
            EXPECT_EQ(a.b1, b.b1);
            EXPECT_EQ(a.z2, b.z2);
            EXPECT_EQ(a.b2, b.b2);
            EXPECT_EQ(a.center_dim, b.center_dim);
        }
}

TEST(Complex, DerivationsSatisfyLeibnizRule)
{
    for (const auto& p : builder_set()) {
        if (!is_associative(p.x)) continue;
        const std::size_t n = p.x.dim();
        for (const auto& v : kernel_basis(hochschild_slice(p.x).d1)) {
            RationalMatrix f(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) f(b, a) = v[a * n + b];
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto a = basis_vector(n, i), b = basis_vector(n, j);
                    auto rhs = multiply(p.x, f * a, b);
                    const auto r2 = multiply(p.x, a, f * b);
                    for (std::size_t l = 0; l < n; ++l) rhs[l] += r2[l];
                    EXPECT_EQ(f * multiply(p.x, a, b), rhs) << p.name;
                }
        }
    }
}

TEST(Complex, DegreeZeroKernels)
{
    // ker d0 is the center for Hochschild and the right annihilator for Leibniz.
    for (const auto& p : builder_set()) {
        if (is_associative(p.x))
            EXPECT_EQ(run(p.x, Theory::hochschild).center_dim, center(p.x).size()) << p.name;
        if (is_leibniz(p.x))
            EXPECT_EQ(run(p.x, Theory::leibniz).center_dim, right_annihilator(p.x).size()) << p.name;
        if (is_lie(p.x)) EXPECT_EQ(run(p.x, Theory::ce).center_dim, center(p.x).size()) << p.name;
    }
}

TEST(Complex, OffVarietyRejected)
{
    EXPECT_THROW(hochschild_slice(builders::sl2()), OffVariety);
    EXPECT_THROW(leibniz_slice(builders::nonassoc2()), OffVariety);
    EXPECT_THROW(ce_slice(builders::matrix_algebra(2)), OffVariety);
    EXPECT_NO_THROW(hochschild_slice(builders::leibniz2()));
}

TEST(Complex, PrimeFieldModeAgreesOnBuilders)
{
    for (const auto& p : builder_set())
        for (auto v : {Variety::alg, Variety::leib}) {
            if (!is_member(p.x, v)) continue;
            const auto s = make_slice(p.x, theory_for(v));
            const auto q = summarize(s, RankField::rational);
            const auto m = summarize(s, RankField::prime);
            EXPECT_FALSE(m.exact);
            EXPECT_EQ(q.z2, m.z2);
            EXPECT_EQ(q.b2, m.b2);
        }
}

TEST(Complex, ScreenedRankUsedAtSixDimensions)
{
    const auto x = direct_sum(builders::sl2(), builders::sl2());
    const auto s = ce_slice(x);
    EXPECT_EQ(s.d2.rows(), 1296u);
    EXPECT_EQ(s.d2.cols(), 90u);
    const auto sum = summarize(s);
    expect_dims(sum, 30, 30, 0);
    EXPECT_TRUE(sum.exact);
}

TEST(Theory, Names)
{
    EXPECT_EQ(parse_theory("lie"), Theory::ce);
    EXPECT_EQ(parse_theory("comm"), Theory::harrison);
    EXPECT_EQ(parse_theory("hochschild"), Theory::hochschild);
    EXPECT_THROW(parse_theory("bogus"), std::invalid_argument);
    for (auto t : {Theory::hochschild, Theory::harrison, Theory::leibniz, Theory::ce})
        EXPECT_EQ(theory_for(variety_for(t)), t);
}
