// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "sptq/partitions.hpp"
#include "sptq/series.hpp"
#include "test_oracles.hpp"

using namespace sptq;

namespace {

std::vector<std::vector<int>> parts_of(int n)
{
    std::vector<std::vector<int>> out;
    for (const auto& pi : enumerate_partitions(n)) {
        out.emplace_back(pi.parts().begin(), pi.parts().end());
    }
    return out;
}

} // namespace

TEST(Partitions, EnumerationOrder)
{
    EXPECT_EQ(parts_of(4), (std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
    EXPECT_EQ(parts_of(0), (std::vector<std::vector<int>>{{}}));
    EXPECT_EQ(parts_of(1), (std::vector<std::vector<int>>{{1}}));
    EXPECT_THROW(enumerate_partitions(-1), std::invalid_argument);
}

TEST(Partitions, EnumerationIsStrictlyDecreasingAndComplete)
{
    for (int n = 1; n <= 18; ++n) {
        const auto all = parts_of(n);
        for (std::size_t i = 1; i < all.size(); ++i) {
            ASSERT_GT(all[i - 1], all[i]) << "n=" << n;
        }
        std::size_t expected = 0;
        oracle::ascending_partitions(n, [&](const std::vector<int>&) { ++expected; });
        ASSERT_EQ(all.size(), expected);
    }
}

TEST(Partitions, CountMatchesSeriesUpTo30)
{
    const auto gf = invert(qpoch_inf(1, 1, 30));
    for (int n = 0; n <= 30; ++n) {
        std::size_t count = 0;
        for_each_partition(n, [&](std::span<const int>) { ++count; });
        EXPECT_EQ(Integer(count), gf.coeff(n)) << n;
    }
}

TEST(Partitions, MinPartRestriction)
{
    std::vector<std::vector<int>> got;
    for_each_partition(7, [&](std::span<const int> p) { got.emplace_back(p.begin(), p.end()); }, 2);
    EXPECT_EQ(got, (std::vector<std::vector<int>>{{7}, {5, 2}, {4, 3}, {3, 2, 2}}));
}

TEST(Partitions, PartitionType)
{
    const Partition pi({4, 2, 2, 1});
    EXPECT_EQ(pi.size(), 9);
    EXPECT_EQ(pi.largest(), 4);
    EXPECT_EQ(pi.smallest(), 1);
    EXPECT_EQ(pi.count(), 4);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_THROW(Partition().smallest(), std::domain_error);
}

TEST(Partitions, PartitionPair)
{
    const PartitionPair one_pair(Partition({2, 2, 1}));
    EXPECT_EQ(one_pair.delta_index(), 1);
    EXPECT_TRUE(one_pair.delta().empty());
    EXPECT_EQ(one_pair.size(), 5);

    const PartitionPair three(Partition({3}));
    EXPECT_EQ(three.delta(), Partition({2, 1}));
    EXPECT_EQ(three.size(), 6);
    EXPECT_THROW(PartitionPair{Partition{}}, std::invalid_argument);
}

TEST(Partitions, PAndSigma)
{
    EXPECT_EQ(p(6), 11);
    EXPECT_EQ(p(0), 1);
    EXPECT_EQ(sigma(6), 12);
    EXPECT_EQ(sigma(0), 0);
    EXPECT_EQ(sigma(1), 1);
    const auto pn = partition_numbers(30);
    for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(pn[n], oracle::count_partitions(n)) << n;
    }
    for (int n = 1; n <= 500; ++n) {
        ASSERT_EQ(sigma(n), oracle::divisor_sum(n)) << n;
    }
}

TEST(Partitions, Rank)
{
    EXPECT_EQ(rank(Partition({4, 1})), 2);
    EXPECT_EQ(rank(Partition({2, 1, 1})), -1);
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(rank(Partition({n})), n - 1);
    }
    EXPECT_THROW(rank(Partition()), std::domain_error);
}

TEST(Partitions, Crank)
{
    EXPECT_EQ(crank(Partition({2})), 2);
    EXPECT_EQ(crank(Partition({1, 1})), -2);
    EXPECT_EQ(crank(Partition({2, 1})), 0);
    EXPECT_EQ(crank(Partition({4, 3, 1, 1})), 2 - 2);
    EXPECT_THROW(crank(Partition()), std::domain_error);
}

TEST(Partitions, Moments)
{
    EXPECT_EQ(n2(2), 2);
    EXPECT_EQ(n2(3), 8);
    EXPECT_EQ(m2(1), 2);
    EXPECT_EQ(m2(3), 18);
    EXPECT_THROW(n2(0), std::domain_error);
    EXPECT_THROW(m2(-3), std::domain_error);
    EXPECT_THROW(n2(kEnumerationLimit + 1), std::domain_error);
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(n2(n), oracle::rank_moment(n)) << n;
        if (n >= 2) {
            EXPECT_EQ(m2(n), oracle::crank_moment_combinatorial(n)) << n;
        }
    }
    // The single exception to the combinatorial crank moment.
    EXPECT_EQ(oracle::crank_moment_combinatorial(1), 1);
}

TEST(Partitions, Spt)
{
    EXPECT_EQ(spt(2), 3);
    EXPECT_EQ(spt(4), 10);
    EXPECT_EQ(spt(1), 1);
    EXPECT_THROW(spt(0), std::domain_error);
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(spt(n), oracle::spt(n)) << n;
    }
}

TEST(Partitions, OddCondition)
{
    EXPECT_FALSE(odd_condition(Partition({3, 1})));
    EXPECT_TRUE(odd_condition(Partition({2, 1, 1})));
    EXPECT_TRUE(odd_condition(Partition({3, 3})));
    EXPECT_TRUE(odd_condition(Partition({5, 3})));
    EXPECT_FALSE(odd_condition(Partition({7, 3})));
    EXPECT_TRUE(odd_condition(Partition({8, 1})));
}

TEST(Partitions, SptOPlus)
{
    EXPECT_EQ(spt_o_plus(3), 5);
    EXPECT_EQ(spt_o_plus(5), 12);
    // (2,1,1) qualifies and contributes 2, giving 9 rather than 7.
    EXPECT_EQ(spt_o_plus(4), 9);
    EXPECT_THROW(spt_o_plus(0), std::domain_error);
    for (int n = 1; n <= 24; ++n) {
        EXPECT_EQ(spt_o_plus(n), oracle::spt_o_plus(n)) << n;
    }
}

TEST(Partitions, SptOMinus)
{
    EXPECT_EQ(spt_o_minus(3), 5);
    EXPECT_EQ(spt_o_minus(5), 12);
    // Counting (3,1,1,1) and (3,2,1), which break the odd-part rule, gives 18.
    EXPECT_EQ(spt_o_minus(6), 16);
    EXPECT_THROW(spt_o_minus(-1), std::domain_error);
    for (int n = 1; n <= 24; ++n) {
        EXPECT_EQ(spt_o_minus(n), oracle::spt_o_minus(n)) << n;
    }
}

TEST(Partitions, SptOMinusPairsForThree)
{
    std::vector<std::vector<int>> pis;
    for_each_restricted_pair(3, [&](std::span<const int> p) { pis.emplace_back(p.begin(), p.end()); });
    EXPECT_EQ(pis, (std::vector<std::vector<int>>{{2, 1}, {1, 1, 1}, {2}}));
}

TEST(Partitions, SptO)
{
    EXPECT_EQ(spt_o(4), 3);
    EXPECT_EQ(spt_o(6), 5);
    EXPECT_EQ(spt_o(1), 0);
}

TEST(Partitions, T4)
{
    EXPECT_EQ(t4(0), 1);
    EXPECT_EQ(t4(1), 4);
    EXPECT_EQ(t4(2), 6);
    for (int n = 0; n <= 60; ++n) {
        EXPECT_EQ(t4(n), oracle::t4(n)) << n;
    }
}

TEST(Partitions, Sequence)
{
    const auto s = sequence("spt", 1, 4);
    EXPECT_EQ(s.values, (std::vector<Integer>{1, 3, 5, 10}));
    EXPECT_EQ(s.lo, 1);
    EXPECT_EQ(s.hi, 4);
    EXPECT_EQ(sequence("sigma", 1, 3).values, (std::vector<Integer>{1, 3, 4}));
    EXPECT_EQ(sequence("p", 0, 5).values, (std::vector<Integer>{1, 1, 2, 3, 5, 7}));
    EXPECT_EQ(sequence("spt_o", 2, 2).values, (std::vector<Integer>{1}));
    EXPECT_THROW(sequence("unknown", 1, 2), std::invalid_argument);
    EXPECT_THROW(sequence("spt", 0, 3), std::out_of_range);
    EXPECT_THROW(sequence("spt", 4, 3), std::out_of_range);
    EXPECT_THROW(sequence("n2", 1, kEnumerationLimit + 1), std::out_of_range);
    EXPECT_EQ(std::size(kSequences), 9u);
    for (const auto& info : kSequences) {
        const int lo = std::max(info.min_index, 1);
        EXPECT_EQ(sequence(info.id, lo, lo + 3).values.size(), 4u) << info.id;
    }
}

// Rank and crank distributions are symmetric under m -> -m, which makes
// N_2 and M_2 even and justifies every doubled comparison.
TEST(PartitionsProperty, RankCrankSymmetry)
{
    for (int n = 1; n <= 30; ++n) {
        std::map<int, long long> ranks;
        std::map<int, long long> cranks;
        for_each_partition(n, [&](std::span<const int> parts) {
            ++ranks[rank(parts)];
            ++cranks[crank(parts)];
        });
        for (const auto& [m, c] : ranks) {
            ASSERT_EQ(c, ranks[-m]) << "rank n=" << n << " m=" << m;
        }
        if (n >= 2) {
            for (const auto& [m, c] : cranks) {
                ASSERT_EQ(c, cranks[-m]) << "crank n=" << n << " m=" << m;
            }
        }
        EXPECT_EQ(n2(n) % 2, 0) << n;
        EXPECT_EQ(m2(n) % 2, 0) << n;
    }
}

TEST(PartitionsProperty, MomentRelations)
{
    const auto pn = partition_numbers(30);
    for (int n = 1; n <= 30; ++n) {
        EXPECT_EQ(m2(n), 2 * n * pn[n]) << n;
        EXPECT_EQ(2 * spt(n), m2(n) - n2(n)) << n;
        EXPECT_EQ(2 * spt(n), 2 * n * pn[n] - n2(n)) << n;
    }
}

TEST(PartitionsProperty, SptODoubling)
{
    for (int n = 1; n <= 15; ++n) {
        EXPECT_EQ(spt_o(2 * n), spt(n)) << n;
        EXPECT_EQ((spt_o_plus(2 * n) - spt(n)) % 2, 0) << n;
        EXPECT_EQ(spt_o_minus(2 * n) % 2, 0) << n;
    }
    for (int n = 0; n <= 14; ++n) {
        EXPECT_EQ(spt_o_plus(2 * n + 1), spt_o_minus(2 * n + 1)) << n;
    }
}

TEST(PartitionsProperty, SigmaIdentities)
{
    for (int n = 1; n <= 200; ++n) {
        Integer rhs = 3 * sigma(n);
        if (n % 2 == 0) {
            rhs -= 2 * sigma(n / 2);
        }
        ASSERT_EQ(sigma(2 * n), rhs) << n;
    }
    for (int n = 0; n <= 100; ++n) {
        ASSERT_EQ(sigma(2 * n + 1), t4(n)) << n;
    }
}
