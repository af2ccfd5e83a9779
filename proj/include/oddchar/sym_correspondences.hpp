#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddchar/errors.hpp"
#include "oddchar/oracles.hpp"
#include "oddchar/partition.hpp"

namespace oddchar {

/// One hook per 2-adic block of n, largest block first.
struct ThetaLabel {
    std::vector<HookPartition> hooks;

    ThetaLabel() = default;
    explicit ThetaLabel(std::vector<HookPartition> h) : hooks(std::move(h))
    {
        for (std::size_t i = 0; i < hooks.size(); ++i) {
            const int m = hooks[i].m;
            detail::require((m & (m - 1)) == 0, "theta label hooks must have 2-power size");
            detail::require(i == 0 || hooks[i - 1].m > m,
                            "theta label blocks must be strictly decreasing");
        }
    }

    int size() const
    {
        int n = 0;
        for (const auto& h : hooks)
            n += h.m;
        return n;
    }

    auto operator<=>(const ThetaLabel&) const = default;
};

/// Linear character of the Sylow 2-subgroup built by sylow2_subgroup(n):
/// one bit vector per 2-adic block 2^e, of length e, bit l-1 being the value
/// (0 for +1, 1 for -1) on the level-l generator of that block.
struct SylowLinearLabel {
    std::vector<std::vector<std::uint8_t>> blocks;

    /// Bits in generator order of sylow2_subgroup.
    std::vector<std::uint8_t> flatten() const
    {
        std::vector<std::uint8_t> out;
        for (const auto& b : blocks)
            out.insert(out.end(), b.begin(), b.end());
        return out;
    }

    auto operator<=>(const SylowLinearLabel&) const = default;
};

// Block labels use the reflected Gray code of the leg: level l carries bit
// e - l of leg ^ (leg >> 1).
inline std::vector<std::uint8_t> hook_linear_label(const HookPartition& hook)
{
    const int m = hook.m;
    detail::require(m >= 1 && (m & (m - 1)) == 0, "hook_linear_label: hook size must be a power of 2");
    const int e = std::countr_zero(static_cast<unsigned>(m));
    const unsigned gray = static_cast<unsigned>(hook.leg) ^ (static_cast<unsigned>(hook.leg) >> 1);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(e));
    for (int l = 1; l <= e; ++l)
        bits[static_cast<std::size_t>(l - 1)] = static_cast<std::uint8_t>((gray >> (e - l)) & 1U);
    return bits;
}

inline HookPartition hook_from_linear_label(int e, const std::vector<std::uint8_t>& bits)
{
    detail::require(e >= 0 && e < 31 && static_cast<int>(bits.size()) == e,
                    "hook_from_linear_label: expected one bit per level");
    unsigned gray = 0;
    for (int l = 1; l <= e; ++l) {
        const auto b = bits[static_cast<std::size_t>(l - 1)];
        detail::require(b <= 1, "hook_from_linear_label: bits must be 0 or 1");
        gray |= static_cast<unsigned>(b) << (e - l);
    }
    unsigned leg = 0;
    for (unsigned g = gray; g != 0; g >>= 1)
        leg ^= g;
    return HookPartition(1 << e, static_cast<int>(leg));
}

inline Partition star_sn(const Partition& lambda)
{
    detail::require(lambda.size() >= 2, "star: requires n >= 2");
    detail::require(is_odd_partition(lambda), lambda.to_string() + " is not an odd partition");
    std::optional<Partition> found;
    for (auto& mu : branch_restrict(lambda)) {
        if (!is_odd_partition(mu))
            continue;
        detail::ensure(!found, "two odd branches below " + lambda.to_string());
        found = std::move(mu);
    }
    detail::ensure(found.has_value(), "no odd branch below " + lambda.to_string());
    return *found;
}

/// Strips one rim hook per 2-adic block, largest block first. Returns
/// nullopt as soon as a block admits no rim hook, or more than one.
inline std::optional<ThetaLabel> hook_strip(const Partition& lambda)
{
    std::vector<HookPartition> hooks;
    Partition rest = lambda;
    for (int e : two_adic(static_cast<std::uint64_t>(lambda.size())).exponents) {
        auto found = rim_hooks_of_length(rest, 1 << e);
        if (found.size() != 1)
            return std::nullopt;
        hooks.push_back(found.front().type);
        rest = found.front().remainder;
    }
    return ThetaLabel(std::move(hooks));
}

inline ThetaLabel alpha_sn(const Partition& lambda)
{
    detail::require(is_odd_partition(lambda), lambda.to_string() + " is not an odd partition");
    auto theta = hook_strip(lambda);
    detail::ensure(theta.has_value(), "odd partition " + lambda.to_string() +
                                          " lacks a unique rim hook in some 2-adic block");
    return *theta;
}

inline Partition alpha_sn_inverse(const ThetaLabel& theta)
{
    Partition acc;
    for (auto it = theta.hooks.rbegin(); it != theta.hooks.rend(); ++it)
        acc = attach_unique_gamma(acc, *it, acc.size() + it->m);
    return acc;
}

inline SylowLinearLabel sharp_sn(const Partition& lambda)
{
    SylowLinearLabel out;
    for (const auto& h : alpha_sn(lambda).hooks)
        out.blocks.push_back(hook_linear_label(h));
    return out;
}

inline Partition sharp_sn_inverse(const SylowLinearLabel& label)
{
    std::vector<HookPartition> hooks;
    for (const auto& b : label.blocks)
        hooks.push_back(hook_from_linear_label(static_cast<int>(b.size()), b));
    return alpha_sn_inverse(ThetaLabel(std::move(hooks)));
}

/// Odd characters of the Young subgroup S_{k_1} x ... x S_{k_m}, in the
/// order the blocks were given.
inline std::vector<Partition> young_star(const Partition& lambda, const std::vector<int>& blocks)
{
    detail::require(!blocks.empty(), "young_star: blocks must be nonempty");
    int total = 0;
    for (int k : blocks)
        total += k;
    detail::require(total == lambda.size(), "young_star: blocks must sum to n");
    detail::require(odd_multinomial_order(blocks).has_value(),
                    "young_star: the Young subgroup has even index");

    const auto exps = two_adic(static_cast<std::uint64_t>(lambda.size())).exponents;
    const auto sharp = sharp_sn(lambda);
    std::vector<Partition> out;
    for (int k : blocks) {
        SylowLinearLabel factor;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if ((k >> exps[i]) & 1)
                factor.blocks.push_back(sharp.blocks[i]);
        out.push_back(sharp_sn_inverse(factor));
    }
    return out;
}

/// [S_{kt} : S_k wr S_t] is odd, by exact factorial arithmetic.
inline bool wreath_index_is_odd(int k, int t)
{
    detail::require(k >= 1 && t >= 1, "wreath index: k and t must be positive");
    Integer denom = factorial(t);
    const Integer fk = factorial(k);
    for (int i = 0; i < t; ++i)
        denom *= fk;
    const Integer index = factorial(k * t) / denom;
    return boost::multiprecision::bit_test(index, 0);
}

inline WreathOddLabel theorem_d_star(const Partition& lambda, int k, int t)
{
    detail::require(k >= 1 && t >= 1 && k * t == lambda.size(), "wreath-star: requires n = k*t");
    detail::require(wreath_index_is_odd(k, t), "wreath-star: S_k wr S_t has even index in S_n");
    detail::require(is_odd_partition(lambda), lambda.to_string() + " is not an odd partition");
    if (t == 1)
        return WreathOddLabel{{WreathBasePart{lambda, 1}}, {Partition{1}}};
    detail::ensure((k & (k - 1)) == 0, "odd-index wreath subgroup with t > 1 needs k a power of 2");

    const int a = std::countr_zero(static_cast<unsigned>(k));
    const auto exps = two_adic(static_cast<std::uint64_t>(lambda.size())).exponents;
    const auto sharp = sharp_sn(lambda);

    // group the blocks of n by their base bits; the top bits form a Sylow
    // label of S_{t_i}
    struct Group {
        std::vector<std::uint8_t> rho;
        int t = 0;
        SylowLinearLabel top;
    };
    std::map<unsigned, Group> groups;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const auto& bits = sharp.blocks[i];
        unsigned key = 0;
        for (int l = 0; l < a; ++l)
            key |= static_cast<unsigned>(bits[static_cast<std::size_t>(l)]) << l;
        auto& g = groups[key];
        g.rho.assign(bits.begin(), bits.begin() + a);
        g.t += 1 << (exps[i] - a);
        g.top.blocks.emplace_back(bits.begin() + a, bits.end());
    }

    std::vector<std::pair<WreathBasePart, Partition>> parts;
    for (const auto& [key, g] : groups)
        parts.emplace_back(WreathBasePart{hook_from_linear_label(a, g.rho).to_partition(), g.t},
                           sharp_sn_inverse(g.top));
    std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
        return nu2(static_cast<std::uint64_t>(x.first.t)) < nu2(static_cast<std::uint64_t>(y.first.t));
    });
    WreathOddLabel out;
    for (auto& [base, top] : parts) {
        out.base.push_back(std::move(base));
        out.top.push_back(std::move(top));
    }
    return out;
}

inline Integer count_odd_irr_sn(int n)
{
    detail::require(n >= 1, "count: requires n >= 1");
    return Integer(1) << two_adic(static_cast<std::uint64_t>(n)).exponent_sum();
}

} // namespace oddchar
