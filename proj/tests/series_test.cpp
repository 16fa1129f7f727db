// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "sptq/series.hpp"
#include "test_oracles.hpp"

using namespace sptq;

namespace {

std::vector<long long> as_ll(const TruncatedSeries& s)
{
    std::vector<long long> out;
    for (const auto& c : s.coeffs()) {
        out.push_back(static_cast<long long>(c));
    }
    return out;
}

TruncatedSeries random_series(std::mt19937_64& rng, int order)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<Integer> c;
    for (int k = 0; k <= order; ++k) {
        c.emplace_back(coeff(rng));
    }
    return TruncatedSeries(std::move(c));
}

} // namespace

TEST(Series, ZeroAndMonomial)
{
    EXPECT_EQ(as_ll(zero(3)), (std::vector<long long>{0, 0, 0, 0}));
    EXPECT_EQ(as_ll(zero(0)), (std::vector<long long>{0}));
    EXPECT_EQ(as_ll(monomial(0, 1, 2)), (std::vector<long long>{1, 0, 0}));
    EXPECT_EQ(as_ll(monomial(4, -1, 3)), (std::vector<long long>{0, 0, 0, 0}));
    EXPECT_EQ(as_ll(monomial(1, 2, 2)), (std::vector<long long>{0, 2, 0}));
    EXPECT_THROW(zero(-1), std::invalid_argument);
}

TEST(Series, AddSubMinOrder)
{
    const TruncatedSeries a{1, 1};
    const TruncatedSeries b{0, 2};
    EXPECT_EQ(a + b, (TruncatedSeries{1, 3}));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((TruncatedSeries{1, 2, 3, 4, 5, 6} + TruncatedSeries{1, 1, 1, 1}).order(), 3);
    EXPECT_EQ((TruncatedSeries{1, 2, 3, 4, 5, 6} * TruncatedSeries{1, 1, 1, 1}).order(), 3);
    const TruncatedSeries s{3, -1, 4, 1, -5, 9};
    EXPECT_EQ(zero(5) + s, s);
    EXPECT_EQ(negate(s), scale(s, -1));
}

TEST(Series, Mul)
{
    EXPECT_EQ(TruncatedSeries({1, 1, 1}) * TruncatedSeries({1, 1, 1}), (TruncatedSeries{1, 2, 3}));
    const TruncatedSeries s{2, 0, -7, 1};
    EXPECT_EQ(s * one(3), s);
    EXPECT_EQ(qpoch_inf(1, 1, 7) * invert(qpoch_inf(1, 1, 7)), one(7));
}

TEST(Series, Invert)
{
    EXPECT_EQ(as_ll(invert(TruncatedSeries{1, -1, 0, 0, 0, 0, 0, 0, 0})),
              (std::vector<long long>{1, 1, 1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(as_ll(invert(qpoch_inf(1, 1, 6))), (std::vector<long long>{1, 1, 2, 3, 5, 7, 11}));
    EXPECT_THROW(invert(TruncatedSeries{2, 0, 0}), not_invertible);
    EXPECT_THROW(invert(TruncatedSeries{0, 1}), not_invertible);
    // Constant term -1 is a unit too.
    const TruncatedSeries neg{-1, 3, 0, 2};
    EXPECT_EQ(neg * invert(neg), one(3));
}

TEST(Series, QPochhammer)
{
    EXPECT_EQ(as_ll(qpoch_inf(1, 1, 7)), (std::vector<long long>{1, -1, -1, 0, 0, 1, 0, 1}));
    EXPECT_EQ(as_ll(qpoch_inf(3, 2, 2)), (std::vector<long long>{1, 0, 0}));
    EXPECT_EQ(as_ll(qpoch_inf(2, 2, 4)), (std::vector<long long>{1, 0, -1, 0, -1}));
    EXPECT_EQ(qpoch_fin(1, 1, 0, 5), one(5));
    EXPECT_EQ(as_ll(qpoch_fin(1, 1, 2, 4)), (std::vector<long long>{1, -1, -1, 1, 0}));
    EXPECT_EQ(as_ll(qpoch_fin(1, 2, 2, 4)), (std::vector<long long>{1, -1, 0, -1, 1}));
    EXPECT_THROW(qpoch_inf(0, 1, 4), std::invalid_argument);
    EXPECT_THROW(qpoch_fin(1, 1, -1, 4), std::invalid_argument);
}

TEST(Series, QPochhammerMatchesNaiveExpansion)
{
    for (int start = 1; start <= 4; ++start) {
        for (int step = 1; step <= 4; ++step) {
            constexpr int n = 40;
            std::vector<long long> expect(n + 1, 0);
            expect[0] = 1;
            for (int e = start; e <= n; e += step) {
                expect = oracle::poly_mul(expect, oracle::one_minus(e, n));
            }
            EXPECT_EQ(as_ll(qpoch_inf(start, step, n)), expect) << start << "," << step;
        }
    }
}

TEST(Series, PentagonalNumberPattern)
{
    constexpr int n = 60;
    const auto euler = qpoch_inf(1, 1, n);
    std::vector<long long> expect(n + 1, 0);
    for (int j = 0; j * (3 * j - 1) / 2 <= n; ++j) {
        const long long sign = j % 2 == 0 ? 1 : -1;
        expect[j * (3 * j - 1) / 2] = sign;
        if (j * (3 * j + 1) / 2 <= n) {
            expect[j * (3 * j + 1) / 2] = sign;
        }
    }
    EXPECT_EQ(as_ll(euler), expect);
}

TEST(Series, LambertSigma)
{
    EXPECT_EQ(as_ll(lambert_sigma(6)), (std::vector<long long>{0, 1, 3, 4, 7, 6, 12}));
    EXPECT_EQ(lambert_sigma(6).coeff(1), 1);
    EXPECT_EQ(as_ll(lambert_sigma(0)), (std::vector<long long>{0}));
    const auto s = lambert_sigma(300);
    for (int k = 1; k <= 300; ++k) {
        EXPECT_EQ(s.coeff(k), oracle::divisor_sum(k)) << k;
    }
}

TEST(Series, GeomSq)
{
    EXPECT_EQ(as_ll(geom_sq(1, 4)), (std::vector<long long>{0, 1, 2, 3, 4}));
    EXPECT_EQ(as_ll(geom_sq(3, 7)), (std::vector<long long>{0, 0, 0, 1, 0, 0, 2, 0}));
    EXPECT_TRUE(geom_sq(5, 4).is_zero());
    // q^m/(1-q^m)^2 through the product route.
    for (int m = 1; m <= 6; ++m) {
        EXPECT_EQ(geom_sq(m, 30), monomial(m, 1, 30) * invert(qpoch_fin(m, 1, 1, 30) * qpoch_fin(m, 1, 1, 30)));
    }
}

TEST(Series, DilateAndExtract)
{
    EXPECT_EQ(dilate(TruncatedSeries{1, 2, 3}, 1), (TruncatedSeries{1, 2, 3}));
    EXPECT_EQ(as_ll(dilate_to(TruncatedSeries{1, 2, 3}, 2, 5)), (std::vector<long long>{1, 0, 2, 0, 3, 0}));
    EXPECT_EQ(as_ll(dilate_to(lambert_sigma(3), 2, 6)), (std::vector<long long>{0, 0, 1, 0, 3, 0, 4}));
    EXPECT_EQ(as_ll(dilate(TruncatedSeries{1, 2, 3, 4}, 2)), (std::vector<long long>{1, 0, 2, 0}));
    EXPECT_THROW(dilate_to(TruncatedSeries{1, 2}, 2, 5), std::out_of_range);

    const TruncatedSeries s{5, 7, 9, 11};
    EXPECT_EQ(extract(s, 0, 2), (TruncatedSeries{5, 9}));
    EXPECT_EQ(extract(s, 1, 2), (TruncatedSeries{7, 11}));
    EXPECT_EQ(extract(s, 0, 1), s);
    EXPECT_THROW(extract(s, 2, 2), std::invalid_argument);
}

TEST(Series, CoeffOutOfRangeThrows)
{
    EXPECT_EQ(coeff(invert(qpoch_inf(1, 1, 6)), 5), 7);
    EXPECT_EQ(coeff(zero(3), 2), 0);
    EXPECT_THROW(coeff(TruncatedSeries{1, 2}, 5), std::out_of_range);
    EXPECT_THROW(coeff(TruncatedSeries{1, 2}, -1), std::out_of_range);
}

TEST(Series, SparseFactorsAgreeWithGenericOps)
{
    const TruncatedSeries s{1, 4, -2, 0, 7, 1, 1, -3, 2, 0, 5};
    for (int e = 1; e <= 5; ++e) {
        EXPECT_EQ(mul_one_minus(s, e), s * qpoch_fin(e, 1, 1, s.order()));
        EXPECT_EQ(div_one_minus(s, e), s * invert(qpoch_fin(e, 1, 1, s.order())));
    }
    EXPECT_EQ(shift(s, 3), s * monomial(3, 1, s.order()));
}

TEST(Series, BigCoefficientsStayExact)
{
    // p(400) has 20 digits, beyond 64-bit range.
    const auto partitions = invert(qpoch_inf(1, 1, 400));
    EXPECT_EQ(partitions.coeff(400).str(), "6727090051741041926");
    const auto sq = partitions * partitions;
    EXPECT_EQ(sq * invert(partitions), partitions);
}

// Randomized ring axioms: 1200 cases over orders 0..12 and mixed orders.
TEST(SeriesProperty, RingAxioms)
{
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<int> order(0, 12);
    for (int trial = 0; trial < 1200; ++trial) {
        const auto a = random_series(rng, order(rng));
        const auto b = random_series(rng, order(rng));
        const auto c = random_series(rng, order(rng));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a * one(a.order()), a);
        ASSERT_TRUE((a - a).is_zero());
        ASSERT_EQ(a * b, from_coefficients(oracle::to_integers(oracle::poly_mul(as_ll(a), as_ll(b))),
                                           std::min(a.order(), b.order())));
    }
}

TEST(SeriesProperty, InvertRoundTrip)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> order(0, 25);
    std::bernoulli_distribution sign;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto base = random_series(rng, order(rng));
        std::vector<Integer> c(base.coeffs().begin(), base.coeffs().end());
        c[0] = sign(rng) ? 1 : -1;
        const TruncatedSeries s(std::move(c));
        ASSERT_EQ(s * invert(s), one(s.order()));
        ASSERT_EQ(invert(invert(s)), s);
    }
}

TEST(SeriesProperty, ExtractUndoesDilate)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = random_series(rng, 10);
        for (int m = 1; m <= 4; ++m) {
            ASSERT_EQ(extract(dilate_to(s, m, m * s.order()), 0, m), s);
            ASSERT_EQ(extract(dilate(s, m), 0, m), s.truncate(s.order() / m));
        }
    }
}

TEST(SeriesProperty, PartitionCountsMatchEnumeration)
{
    const auto partitions = invert(qpoch_inf(1, 1, 30));
    for (int k = 0; k <= 30; ++k) {
        EXPECT_EQ(partitions.coeff(k), oracle::count_partitions(k)) << k;
    }
}
