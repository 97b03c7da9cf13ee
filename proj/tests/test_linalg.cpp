#include <gtest/gtest.h>

#include "algdef/errors.hpp"
#include "algdef/linalg.hpp"
#include "algdef/random.hpp"
#include "oracles.hpp"

using namespace algdef;

namespace {

RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    const std::size_t r = rows.size(), c = rows.begin()->size();
    RationalMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

RationalMatrix random_rect(std::size_t r, std::size_t c, Rng& rng, int rank_cap)
{
    // Product of r x k and k x c factors with small fractions, so the rank is at most k.
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    RationalMatrix a(r, rank_cap), b(rank_cap, c);
    for (std::size_t i = 0; i < r; ++i)
        for (int k = 0; k < rank_cap; ++k) {
            a(i, k) = Rational(num(rng), den(rng));
            a(i, k).canonicalize();
        }
    for (int k = 0; k < rank_cap; ++k)
        for (std::size_t j = 0; j < c; ++j) {
            b(k, j) = Rational(num(rng), den(rng));
            b(k, j).canonicalize();
        }
    return a * b;
}

}  // namespace

TEST(Rational, ParsesAndRendersLowestTerms)
{
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("+3/6"), Rational(1, 2));
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_rational("4/2")), "2");
    EXPECT_THROW(parse_rational("3/-6"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1/2/3"), ParseError);
}

TEST(Rational, ArithmeticIsExact)
{
    Rng rng(1);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int t = 0; t < 100; ++t) {
        Rational a(d(rng), 1 + (d(rng) & 0xff)), b(d(rng), 1 + (d(rng) & 0xfff));
        a.canonicalize();
        b.canonicalize();
        const Rational s = a + b;
        EXPECT_EQ(s - b, a);
    }
}

TEST(Rank, Examples)
{
    EXPECT_EQ(rank(RationalMatrix::identity(3)), 3u);
    EXPECT_EQ(rank(RationalMatrix(2, 2)), 0u);
    EXPECT_EQ(rank(from_rows({{1, 2}, {2, 4}})), 1u);
    EXPECT_EQ(rank(RationalMatrix(0, 5)), 0u);
}

TEST(Kernel, Examples)
{
    EXPECT_TRUE(kernel_basis(RationalMatrix::identity(2)).empty());
    EXPECT_EQ(kernel_basis(RationalMatrix(2, 3)).size(), 3u);
    const auto k = kernel_basis(from_rows({{1, 1}}));
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (Vector{-1, 1}));
}

TEST(Kernel, EchelonNormalForm)
{
    // Free columns 1 and 3; each kernel vector has 1 at its free column and 0 at the other.
    const auto m = from_rows({{1, 2, 0, 3}, {0, 0, 1, 4}});
    const auto k = kernel_basis(m);
    ASSERT_EQ(k.size(), 2u);
    EXPECT_EQ(k[0], (Vector{-2, 1, 0, 0}));
    EXPECT_EQ(k[1], (Vector{-3, 0, -4, 1}));
}

TEST(Determinant, Examples)
{
    EXPECT_EQ(determinant(RationalMatrix::identity(2)), 1);
    EXPECT_EQ(determinant(from_rows({{2, 0}, {0, 0}})), 0);
    EXPECT_EQ(determinant(from_rows({{8, 0, 0}, {0, 0, 4}, {0, 4, 0}})), -128);
    EXPECT_THROW(determinant(RationalMatrix(2, 3)), DimensionMismatch);
}

TEST(Symmetrize, Examples)
{
    const auto s = from_rows({{1, 2}, {2, 5}});
    EXPECT_EQ(symmetrize(s), s);
    RationalMatrix expect(2, 2);
    expect(0, 1) = expect(1, 0) = Rational(1, 2);
    EXPECT_EQ(symmetrize(from_rows({{0, 1}, {0, 0}})), expect);
    EXPECT_TRUE(symmetrize(from_rows({{0, 3}, {-3, 0}})).is_zero());
    EXPECT_THROW(symmetrize(RationalMatrix(2, 3)), DimensionMismatch);
}

TEST(Linalg, RankNullityAndKernelAgainstOracle)
{
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + t % 7, c = 1 + (t * 5) % 9;
        const int cap = 1 + t % 5;
        const auto m = random_rect(r, c, rng, cap);
        const std::size_t rk = rank(m);
        EXPECT_EQ(rk, oracle::rank(oracle::to_grid(m)));
        const auto k = kernel_basis(m);
        EXPECT_EQ(rk + k.size(), c);
        for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
        EXPECT_EQ(span_dimension(c, k), k.size());
    }
}

TEST(Linalg, DeterminantAgainstOracleAndMultiplicative)
{
    Rng rng(12);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + t % 5;
        const auto a = random_rect(n, n, rng, static_cast<int>(n));
        const auto b = random_rect(n, n, rng, static_cast<int>(n));
        EXPECT_EQ(determinant(a), oracle::determinant(oracle::to_grid(a)));
        EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    }
}

TEST(Linalg, SymmetrizePreservesQuadraticValues)
{
    Rng rng(13);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto m = random_rect(n, n, rng, static_cast<int>(n));
        const auto s = symmetrize(m);
        EXPECT_EQ(s, s.transpose());
        Vector v(n);
        for (auto& e : v) e = d(rng);
        const auto mv = m * v, sv = s * v;
        Rational a = 0, b = 0;
        for (std::size_t i = 0; i < n; ++i) {
            a += v[i] * mv[i];
            b += v[i] * sv[i];
        }
        EXPECT_EQ(a, b);
    }
}

TEST(Linalg, InverseAndSpans)
{
    Rng rng(14);
    const auto g = random_invertible(4, rng);
    EXPECT_EQ(g * inverse(g), RationalMatrix::identity(4));
    EXPECT_THROW(inverse(from_rows({{1, 2}, {2, 4}})), DimensionMismatch);

    const auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    const auto img = image_basis(m);
    EXPECT_EQ(img.size(), 2u);
    EXPECT_EQ(pivot_columns(m), (std::vector<std::size_t>{0, 1}));
    EXPECT_TRUE(span_contains(3, img, {m.column(2)}));
    EXPECT_FALSE(span_contains(3, img, {Vector{1, 0, 0}}));
    EXPECT_TRUE(same_span(3, img, {m.column(2), m.column(1)}));
}

TEST(Linalg, LargeSparseRankMatchesOracle)
{
    // Tall matrix with repeated and scaled rows, the shape of degree-2 differentials.
    Rng rng(15);
    std::uniform_int_distribution<int> d(-2, 2);
    RationalMatrix m(200, 30);
    for (std::size_t r = 0; r < 60; ++r)
        for (std::size_t c = 0; c < 30; ++c)
            if (d(rng) == 2) {
                m(r, c) = Rational(d(rng), 1 + (r % 3));
                m(r, c).canonicalize();
            }
    for (std::size_t r = 60; r < 200; ++r)
        for (std::size_t c = 0; c < 30; ++c) m(r, c) = m(r % 60, c) * Rational(static_cast<long>(r % 7) - 3) / 2;
    EXPECT_EQ(rank(m), oracle::rank(oracle::to_grid(m)));
}
