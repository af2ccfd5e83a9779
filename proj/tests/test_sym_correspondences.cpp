#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oddchar/permutation_group.hpp"
#include "oddchar/sym_correspondences.hpp"

using namespace oddchar;

namespace {

using Bits = std::vector<std::uint8_t>;

std::vector<Bits> odd_multiplicity_labels(const Partition& lambda, const PermutationGroup& p)
{
    std::vector<Bits> out;
    for (const auto& lc : restriction_multiplicities(lambda, p))
        if (lc.multiplicity % 2 != 0)
            out.push_back(lc.label);
    return out;
}

Integer multiplicity_of(const Partition& lambda, const PermutationGroup& p, const Bits& label)
{
    for (const auto& lc : restriction_multiplicities(lambda, p))
        if (lc.label == label)
            return lc.multiplicity;
    return -1;
}

} // namespace

TEST(StarSn, Examples)
{
    EXPECT_EQ(star_sn(Partition{6}), Partition{5});
    EXPECT_EQ(star_sn(Partition{2, 2, 1}), Partition({2, 1, 1}));
    EXPECT_EQ(star_sn(Partition{1, 1, 1}), Partition({1, 1}));
    EXPECT_THROW(star_sn(Partition{2, 2}), DomainError);
    EXPECT_THROW(star_sn(Partition{1}), DomainError);
}

TEST(StarSn, ExactlyOneOddBranchUpToTwelve)
{
    for (int n = 2; n <= 12; ++n)
        for (const auto& lambda : odd_partitions_of(n)) {
            int odd = 0;
            for (const auto& mu : branch_restrict(lambda))
                odd += is_odd_partition(mu);
            ASSERT_EQ(odd, 1) << lambda.to_string();
            EXPECT_TRUE(is_odd_partition(star_sn(lambda)));
        }
}

TEST(AlphaSn, Examples)
{
    EXPECT_EQ(alpha_sn(Partition{3, 1}).hooks, (std::vector<HookPartition>{HookPartition(4, 1)}));
    EXPECT_EQ(alpha_sn(Partition{2, 2, 1}).hooks,
              (std::vector<HookPartition>{HookPartition(4, 2), HookPartition(1, 0)}));
    EXPECT_EQ(alpha_sn(Partition{5}).hooks, (std::vector<HookPartition>{HookPartition(4, 0), HookPartition(1, 0)}));
    // (4,1) has even degree, so it has no alpha label
    EXPECT_EQ(degree(Partition{4, 1}), 4);
    EXPECT_THROW(alpha_sn(Partition{4, 1}), DomainError);
    EXPECT_FALSE(hook_strip(Partition{4, 1}).has_value());
}

TEST(AlphaSn, HookStripDetectsOddness)
{
    for (int n = 1; n <= 16; ++n)
        for (const auto& lambda : partitions_of(n))
            ASSERT_EQ(hook_strip(lambda).has_value(), is_odd_partition(lambda)) << lambda.to_string();
}

TEST(AlphaSn, BijectionOntoThetaUpToSixteen)
{
    for (int n = 1; n <= 16; ++n) {
        std::set<ThetaLabel> image;
        const auto odd = odd_partitions_of(n);
        for (const auto& lambda : odd) {
            const auto theta = alpha_sn(lambda);
            EXPECT_EQ(alpha_sn_inverse(theta), lambda);
            image.insert(theta);
        }
        EXPECT_EQ(image.size(), odd.size());
        EXPECT_EQ(Integer(odd.size()), count_odd_irr_sn(n)) << n;
    }
}

TEST(AlphaSnInverse, Examples)
{
    EXPECT_EQ(alpha_sn_inverse(ThetaLabel({HookPartition(4, 2), HookPartition(1, 0)})), Partition({2, 2, 1}));
    EXPECT_EQ(alpha_sn_inverse(ThetaLabel({HookPartition(8, 0)})), Partition{8});
    std::set<Partition> six;
    for (int leg4 = 0; leg4 < 4; ++leg4)
        for (int leg2 = 0; leg2 < 2; ++leg2)
            six.insert(alpha_sn_inverse(ThetaLabel({HookPartition(4, leg4), HookPartition(2, leg2)})));
    EXPECT_EQ(six.size(), 8U);
    for (const auto& p : six)
        EXPECT_TRUE(is_odd_partition(p));
    EXPECT_THROW(ThetaLabel({HookPartition(2, 0), HookPartition(4, 0)}), DomainError);
}

TEST(CountOddIrrSn, Examples)
{
    EXPECT_EQ(count_odd_irr_sn(4), 4);
    EXPECT_EQ(count_odd_irr_sn(1), 1);
    EXPECT_EQ(count_odd_irr_sn(6), 8);
    EXPECT_EQ(count_odd_irr_sn(7), 8);
}

TEST(HookLinearLabel, GrayCodeRoundTrip)
{
    for (int e = 0; e <= 6; ++e)
        for (int leg = 0; leg < (1 << e); ++leg) {
            const HookPartition h(1 << e, leg);
            const auto bits = hook_linear_label(h);
            ASSERT_EQ(static_cast<int>(bits.size()), e);
            EXPECT_EQ(hook_from_linear_label(e, bits), h);
        }
    EXPECT_EQ(hook_linear_label(HookPartition(4, 0)), (Bits{0, 0}));
    EXPECT_EQ(hook_linear_label(HookPartition(4, 1)), (Bits{0, 1}));
    EXPECT_EQ(hook_linear_label(HookPartition(4, 2)), (Bits{1, 1}));
    EXPECT_EQ(hook_linear_label(HookPartition(4, 3)), (Bits{1, 0}));
    EXPECT_THROW(hook_linear_label(HookPartition(3, 0)), DomainError);
}

TEST(SharpSn, Examples)
{
    EXPECT_EQ(sharp_sn(Partition{2}).flatten(), (Bits{0}));
    EXPECT_EQ(sharp_sn(Partition{3, 1}).flatten(), (Bits{0, 1}));
    EXPECT_EQ(sharp_sn(Partition{1}).flatten(), Bits{});
}

TEST(SharpSn, FrozenLabelsAtEight)
{
    const std::map<Partition, Bits> expected{
        {Partition{8}, {0, 0, 0}},
        {Partition{7, 1}, {0, 0, 1}},
        {Partition{6, 1, 1}, {0, 1, 1}},
        {Partition{5, 1, 1, 1}, {0, 1, 0}},
        {Partition{4, 1, 1, 1, 1}, {1, 1, 0}},
        {Partition{3, 1, 1, 1, 1, 1}, {1, 1, 1}},
        {Partition{2, 1, 1, 1, 1, 1, 1}, {1, 0, 1}},
        {Partition{1, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 0}},
    };
    std::set<Bits> labels;
    for (const auto& [lambda, bits] : expected) {
        EXPECT_EQ(sharp_sn(lambda).flatten(), bits) << lambda.to_string();
        labels.insert(bits);
    }
    EXPECT_EQ(labels.size(), 8U);
}

// For every odd lambda with n <= 8 the sharp label occurs in the restriction
// to the Sylow 2-subgroup.
TEST(SharpSn, IsAConstituentOfTheSylowRestriction)
{
    for (int n = 1; n <= 8; ++n) {
        const auto p = sylow2_subgroup(n);
        for (const auto& lambda : odd_partitions_of(n))
            EXPECT_GE(multiplicity_of(lambda, p, sharp_sn(lambda).flatten()), 1) << lambda.to_string();
    }
}

// At 2-powers the sharp label is the only linear character occurring with
// odd multiplicity.
TEST(SharpSn, UniqueOddLinearConstituentAtTwoPowers)
{
    for (int n : {1, 2, 4, 8}) {
        const auto p = sylow2_subgroup(n);
        for (const auto& lambda : odd_partitions_of(n))
            EXPECT_EQ(odd_multiplicity_labels(lambda, p), (std::vector<Bits>{sharp_sn(lambda).flatten()}))
                << lambda.to_string();
    }
}

TEST(SharpSn, UniqueOddLinearConstituentAtSixteen)
{
    const auto p = sylow2_subgroup(16);
    ASSERT_EQ(p.order(), 32768U);
    for (const auto& lambda : odd_partitions_of(16))
        EXPECT_EQ(odd_multiplicity_labels(lambda, p), (std::vector<Bits>{sharp_sn(lambda).flatten()}))
            << lambda.to_string();
}

// Away from 2-powers, several linear characters can occur with odd
// multiplicity, so odd multiplicity alone does not single out sharp.
TEST(SharpSn, SeveralOddLinearConstituentsAtFive)
{
    const auto p = sylow2_subgroup(5);
    EXPECT_EQ(odd_multiplicity_labels(Partition{3, 2}, p), (std::vector<Bits>{{0, 0}, {0, 1}, {1, 0}}));
    EXPECT_EQ(sharp_sn(Partition{3, 2}).flatten(), (Bits{0, 1}));
    EXPECT_EQ(multiplicity_of(Partition{4, 2, 1}, sylow2_subgroup(7), sharp_sn(Partition{4, 2, 1}).flatten()), 3);
}

TEST(SharpSn, InverseRoundTrip)
{
    for (int n = 1; n <= 16; ++n)
        for (const auto& lambda : odd_partitions_of(n))
            EXPECT_EQ(sharp_sn_inverse(sharp_sn(lambda)), lambda);
}

TEST(YoungStar, Examples)
{
    EXPECT_EQ(young_star(Partition{2, 2, 1}, {5}), (std::vector<Partition>{Partition{2, 2, 1}}));
    EXPECT_EQ(young_star(Partition{3}, {1, 2}), (std::vector<Partition>{Partition{1}, Partition{2}}));
    EXPECT_EQ(young_star(Partition{2, 2, 1}, {1, 4}), (std::vector<Partition>{Partition{1}, Partition{2, 1, 1}}));
    EXPECT_EQ(young_star(Partition{2, 2, 1}, {4, 1}), (std::vector<Partition>{Partition{2, 1, 1}, Partition{1}}));
    EXPECT_THROW(young_star(Partition{3, 1}, {2, 2}), DomainError);
    EXPECT_THROW(young_star(Partition{3, 1}, {1, 2}), DomainError);
}

TEST(YoungStar, BijectiveOnEveryOddIndexSplit)
{
    for (int n = 2; n <= 12; ++n)
        for (int a = 1; a < n; ++a) {
            if (!binom_is_odd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(a)))
                continue;
            std::set<std::vector<Partition>> image;
            for (const auto& lambda : odd_partitions_of(n)) {
                const auto out = young_star(lambda, {a, n - a});
                ASSERT_EQ(out.size(), 2U);
                EXPECT_EQ(out[0].size(), a);
                EXPECT_TRUE(is_odd_partition(out[0]) && is_odd_partition(out[1]));
                image.insert(out);
            }
            EXPECT_EQ(Integer(image.size()), count_odd_irr_sn(a) * count_odd_irr_sn(n - a));
            EXPECT_EQ(Integer(image.size()), count_odd_irr_sn(n));
        }
}

TEST(YoungStar, TwoPowerBlocksRecoverAlpha)
{
    for (int n = 1; n <= 12; ++n) {
        std::vector<int> blocks = two_adic(static_cast<std::uint64_t>(n)).block_sizes();
        for (const auto& lambda : odd_partitions_of(n)) {
            const auto factors = young_star(lambda, blocks);
            const auto theta = alpha_sn(lambda);
            for (std::size_t i = 0; i < factors.size(); ++i)
                EXPECT_EQ(factors[i], theta.hooks[i].to_partition());
        }
    }
}

TEST(SevenCounterexample, ThreeOddConstituentsOnS5xS2)
{
    for (const Partition& lambda : {Partition{4, 2, 1}, Partition{3, 2, 1, 1}}) {
        ASSERT_EQ(degree(lambda), 35);
        int odd = 0;
        for (const auto& a : odd_partitions_of(5))
            for (const auto& b : odd_partitions_of(2))
                odd += lr_coefficient(a, b, lambda) > 0;
        EXPECT_EQ(odd, 3) << lambda.to_string();
    }
}

TEST(WreathIndex, ExactArithmetic)
{
    EXPECT_TRUE(wreath_index_is_odd(2, 2));
    EXPECT_TRUE(wreath_index_is_odd(2, 3));
    EXPECT_TRUE(wreath_index_is_odd(4, 2));
    EXPECT_TRUE(wreath_index_is_odd(5, 1));
    // 6!/((3!)^2 2!) = 10
    EXPECT_FALSE(wreath_index_is_odd(3, 2));
    for (int k = 1; k <= 8; ++k)
        for (int t = 2; k * t <= 16; ++t)
            EXPECT_EQ(wreath_index_is_odd(k, t), (k & (k - 1)) == 0) << k << " " << t;
}

TEST(WreathStar, Examples)
{
    const auto triv = theorem_d_star(Partition{4}, 2, 2);
    ASSERT_EQ(triv.base.size(), 1U);
    EXPECT_EQ(triv.base[0].psi, Partition{2});
    EXPECT_EQ(triv.base[0].t, 2);
    EXPECT_EQ(triv.top, (std::vector<Partition>{Partition{2}}));
    EXPECT_THROW(theorem_d_star(Partition{3, 3}, 3, 2), DomainError);
    EXPECT_THROW(theorem_d_star(Partition{4}, 3, 2), DomainError);

    const auto whole = theorem_d_star(Partition{2, 2, 1}, 5, 1);
    EXPECT_EQ(whole.base[0].psi, Partition({2, 2, 1}));
    EXPECT_EQ(whole.top, (std::vector<Partition>{Partition{1}}));
}

TEST(WreathStar, BijectionOntoCliffordLabels)
{
    for (auto [k, t] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{4, 2}, std::pair{2, 4}}) {
        const int n = k * t;
        std::set<WreathOddLabel> image;
        for (const auto& lambda : odd_partitions_of(n)) {
            const auto label = theorem_d_star(lambda, k, t);
            EXPECT_TRUE(boost::multiprecision::bit_test(wreath_degree(label), 0));
            image.insert(label);
        }
        const auto clifford = wreath_odd_labels(k, t);
        EXPECT_EQ(image, std::set<WreathOddLabel>(clifford.begin(), clifford.end())) << k << " " << t;
        EXPECT_EQ(Integer(image.size()), count_odd_irr_sn(n));
    }
}
