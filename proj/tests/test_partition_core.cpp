#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "oddchar/partition.hpp"

using namespace oddchar;

TEST(Partition, RejectsMalformedParts)
{
    EXPECT_THROW(Partition({1, 2}), DomainError);
    EXPECT_THROW(Partition({2, 0}), DomainError);
    EXPECT_NO_THROW(Partition({3, 3, 1}));
    EXPECT_EQ(Partition::from_rows({2, 1, 0, 0}), Partition({2, 1}));
}

TEST(Partition, EmptyPartitionHasSizeZero)
{
    Partition p;
    EXPECT_EQ(p.size(), 0);
    EXPECT_TRUE(p.empty());
    EXPECT_EQ(partitions_of(0).size(), 1U);
}

TEST(Partition, ConjugateAndHookLengths)
{
    const Partition p{4, 2, 1};
    EXPECT_EQ(p.conjugate(), Partition({3, 2, 1, 1}));
    EXPECT_EQ(p.conjugate().conjugate(), p);
    const auto conj = p.conjugate();
    EXPECT_EQ(p.hook_length(0, 0, conj), 6);
    EXPECT_EQ(p.hook_length(1, 1, conj), 1);
    EXPECT_EQ(p.to_string(), "(4,2,1)");
}

TEST(Partition, CountsMatchPartitionNumbers)
{
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n)
        EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]) << n;
    auto ps = partitions_of(6);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
}

TEST(HookPartition, RoundTripsThroughPartition)
{
    for (int m = 1; m <= 8; ++m)
        for (int leg = 0; leg < m; ++leg) {
            HookPartition h(m, leg);
            EXPECT_EQ(HookPartition::from_partition(h.to_partition()), h);
            EXPECT_EQ(h.arm() + h.leg + 1, m);
        }
    EXPECT_THROW(HookPartition(3, 3), DomainError);
    EXPECT_THROW(HookPartition::from_partition(Partition{2, 2}), DomainError);
}

TEST(TwoAdic, Examples)
{
    EXPECT_EQ(two_adic(7).exponents, (std::vector<int>{2, 1, 0}));
    EXPECT_EQ(two_adic(1).exponents, (std::vector<int>{0}));
    EXPECT_EQ(two_adic(20).exponents, (std::vector<int>{4, 2}));
    EXPECT_TRUE(two_adic(0).exponents.empty());
    for (std::uint64_t n = 0; n < 300; ++n)
        EXPECT_EQ(two_adic(n).value(), n);
}

TEST(Nu2, ExamplesAndInfinity)
{
    EXPECT_EQ(nu2(12).value(), 4U);
    EXPECT_EQ(nu2(7).value(), 1U);
    EXPECT_TRUE(nu2(0).is_infinite());
    EXPECT_THROW(nu2(0).value(), DomainError);
    EXPECT_GT(nu2(0), nu2(std::uint64_t{1} << 40));
    EXPECT_EQ(nu2(0), TwoPart::infinity());
}

TEST(BinomIsOdd, AgreesWithPascalUpTo64)
{
    std::vector<bool> row{true};
    for (std::uint64_t n = 0; n <= 64; ++n) {
        for (std::uint64_t a = 0; a <= n; ++a)
            ASSERT_EQ(binom_is_odd(n, a), static_cast<bool>(row[a])) << n << " " << a;
        std::vector<bool> next(n + 2, true);
        for (std::uint64_t a = 1; a <= n; ++a)
            next[a] = row[a - 1] != row[a];
        row = next;
    }
    EXPECT_TRUE(binom_is_odd(7, 3));
    EXPECT_FALSE(binom_is_odd(4, 2));
    EXPECT_THROW(binom_is_odd(3, 4), DomainError);
}

TEST(OddMultinomialOrder, Examples)
{
    EXPECT_EQ(odd_multinomial_order({2, 4}), (std::vector<int>{2, 4}));
    EXPECT_EQ(odd_multinomial_order({4, 2}), (std::vector<int>{2, 4}));
    EXPECT_EQ(odd_multinomial_order({1, 2}), (std::vector<int>{1, 2}));
    EXPECT_FALSE(odd_multinomial_order({2, 2}).has_value());
    EXPECT_EQ(odd_multinomial_order({5, 2}), (std::vector<int>{5, 2}));
}

TEST(OddMultinomialOrder, ChainStartsAtTwoPartOfTotal)
{
    for (int a = 1; a <= 12; ++a)
        for (int b = 1; b <= 12; ++b)
            for (int c = 1; c <= 6; ++c) {
                auto out = odd_multinomial_order({a, b, c});
                if (!out)
                    continue;
                const auto total = static_cast<std::uint64_t>(a + b + c);
                EXPECT_EQ(nu2(static_cast<std::uint64_t>(out->front())), nu2(total));
                for (std::size_t i = 1; i < out->size(); ++i)
                    EXPECT_LT(nu2(static_cast<std::uint64_t>((*out)[i - 1])),
                              nu2(static_cast<std::uint64_t>((*out)[i])));
            }
}

TEST(UniqueDescent, Examples)
{
    EXPECT_EQ(unique_descent(6, 2), 1);
    EXPECT_EQ(unique_descent(3, 1), 0);
    EXPECT_EQ(unique_descent(7, 3), 2);
    EXPECT_EQ(unique_descent(5, 4), 4);
    EXPECT_THROW(unique_descent(4, 2), DomainError);
    EXPECT_THROW(unique_descent(4, 4), DomainError);
}

TEST(UniqueDescent, LowerWhenTwoPartOfAIsSmaller)
{
    for (int n = 2; n <= 64; ++n)
        for (int a = 1; a < n; ++a) {
            if (!binom_is_odd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a)))
                continue;
            if (nu2(static_cast<std::uint64_t>(a)) <= nu2(static_cast<std::uint64_t>(n - a)))
                EXPECT_EQ(unique_descent(n, a), a - 1) << n << " " << a;
        }
}

TEST(RimHooks, Examples)
{
    auto h = rim_hooks_of_length(Partition{2, 2, 1}, 4);
    ASSERT_EQ(h.size(), 1U);
    EXPECT_EQ(h[0].remainder, Partition{1});
    EXPECT_EQ(h[0].type.to_partition(), Partition({2, 1, 1}));
    EXPECT_EQ(h[0].hook.length, 4);

    auto row = rim_hooks_of_length(Partition{6}, 6);
    ASSERT_EQ(row.size(), 1U);
    EXPECT_TRUE(row[0].remainder.empty());
    EXPECT_EQ(row[0].type, HookPartition(6, 0));

    EXPECT_EQ(rim_hooks_of_length(Partition{2, 2}, 3).size(), 1U);
    EXPECT_EQ(rim_hooks_of_length(Partition{2, 2}, 2).size(), 2U);
    EXPECT_TRUE(rim_hooks_of_length(Partition{3, 1}, 3).empty());
}

TEST(RimHooks, CellsFormABorderStrip)
{
    for (int n = 1; n <= 12; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = 1; m <= n; ++m)
                for (const auto& rem : rim_hooks_of_length(lambda, m)) {
                    const auto& hk = rem.hook;
                    ASSERT_EQ(hk.rows_spanned + hk.cols_spanned, m + 1);
                    ASSERT_EQ(static_cast<int>(hk.cells.size()), m);
                    ASSERT_EQ(rem.remainder.size(), n - m);
                    ASSERT_TRUE(lambda.contains(rem.remainder));
                    ASSERT_EQ(rem.type.leg, hk.rows_spanned - 1);
                    std::set<std::pair<int, int>> cells(hk.cells.begin(), hk.cells.end());
                    for (auto [r, c] : hk.cells) {
                        ASSERT_GT(c, rem.remainder.row(r - 1));
                        ASSERT_LE(c, lambda.row(r - 1));
                        ASSERT_FALSE(cells.count({r + 1, c}) && cells.count({r, c + 1}) &&
                                     cells.count({r + 1, c + 1}));
                    }
                    for (std::size_t i = 1; i < hk.cells.size(); ++i) {
                        const auto [r0, c0] = hk.cells[i - 1];
                        const auto [r1, c1] = hk.cells[i];
                        ASSERT_EQ(std::abs(r1 - r0) + std::abs(c1 - c0), 1);
                    }
                }
}

TEST(RimHooks, CountEqualsHooksOfThatLength)
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const auto conj = lambda.conjugate();
            for (int m = 1; m <= n; ++m) {
                int hooks = 0;
                for (int i = 0; i < lambda.length(); ++i)
                    for (int j = 0; j < lambda.row(i); ++j)
                        hooks += lambda.hook_length(i, j, conj) == m;
                EXPECT_EQ(static_cast<int>(rim_hooks_of_length(lambda, m).size()), hooks);
            }
        }
}

TEST(MCore, Examples)
{
    EXPECT_EQ(m_core(Partition{2, 2, 1}, 4), Partition{1});
    EXPECT_EQ(m_core(Partition{5}, 7), Partition{5});
    EXPECT_TRUE(m_core(Partition{2, 1}, 3).empty());
}

namespace {

void all_cores(const Partition& lambda, int m, std::set<Partition>& out)
{
    const auto hooks = rim_hooks_of_length(lambda, m);
    if (hooks.empty()) {
        out.insert(lambda);
        return;
    }
    for (const auto& h : hooks)
        all_cores(h.remainder, m, out);
}

} // namespace

TEST(MCore, IndependentOfRemovalOrder)
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = 1; m <= n; ++m) {
                std::set<Partition> cores;
                all_cores(lambda, m, cores);
                ASSERT_EQ(cores.size(), 1U) << lambda.to_string() << " m=" << m;
                EXPECT_EQ(*cores.begin(), m_core(lambda, m));
                EXPECT_EQ(m_core(m_core(lambda, m), m), m_core(lambda, m));
            }
}

TEST(AttachUniqueGamma, Examples)
{
    EXPECT_EQ(attach_unique_gamma(Partition{1}, HookPartition(4, 2), 5), Partition({2, 2, 1}));
    EXPECT_EQ(attach_unique_gamma(Partition{}, HookPartition(5, 2), 5), Partition({3, 1, 1}));
    EXPECT_EQ(attach_unique_gamma(Partition{1}, HookPartition(2, 0), 3), Partition{3});
    EXPECT_THROW(attach_unique_gamma(Partition{2}, HookPartition(2, 0), 4), DomainError);
}

TEST(AttachUniqueGamma, BruteForceConfirmsUniqueness)
{
    for (int m = 1; m <= 8; ++m)
        for (int n = m; n <= 2 * m - 1; ++n)
            for (const auto& alpha : partitions_of(n - m))
                for (int leg = 0; leg < m; ++leg)
                    ASSERT_NO_THROW(attach_unique_gamma(alpha, HookPartition(m, leg), n, CrossCheck::on))
                        << alpha.to_string() << " m=" << m << " leg=" << leg;
}
