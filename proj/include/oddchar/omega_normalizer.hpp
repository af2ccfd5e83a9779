#pragma once

// Odd-degree characters of the Sylow 2-normalizer of GL_n(q) / GU_n(q),
// parametrized by one (residue, hook) pair per 2-adic block of n, and the
// sharp bijection from odd Dipper-James labels onto that set.

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "oddchar/errors.hpp"
#include "oddchar/glu_labels.hpp"
#include "oddchar/partition.hpp"
#include "oddchar/sym_correspondences.hpp"

namespace oddchar {

struct OmegaBlock {
    int exponent = 0;  // block of size 2^exponent
    int s = 0;
    HookPartition hook;

    auto operator<=>(const OmegaBlock&) const = default;
};

struct OmegaLabel {
    Kappa kappa = Kappa::plus;
    int q = 3;
    std::vector<OmegaBlock> blocks;  // descending block size

    int modulus() const { return residue_modulus(q, kappa); }

    int rank() const
    {
        int n = 0;
        for (const auto& b : blocks)
            n += 1 << b.exponent;
        return n;
    }

    auto operator<=>(const OmegaLabel&) const = default;
};

inline void validate(const OmegaLabel& omega)
{
    detail::require(is_odd_prime_power(omega.q), "q must be an odd prime power");
    const int mod = omega.modulus();
    for (std::size_t i = 0; i < omega.blocks.size(); ++i) {
        const auto& b = omega.blocks[i];
        detail::require(i == 0 || omega.blocks[i - 1].exponent > b.exponent,
                        "omega blocks must have strictly decreasing sizes");
        detail::require(b.hook.m == (1 << b.exponent), "omega block hook must match the block size");
        detail::require(b.s >= 0 && b.s < mod, "omega residue out of range");
    }
}

/// Local data of one block 2^m: the residue split as (gamma mod 2^a,
/// delta mod o) where q - kappa*1 = 2^a * o with o odd, and the hook
/// (2^m - 2k - j, 1^{2k+j}).
struct NormalizerLocalLabel {
    Kappa kappa = Kappa::plus;
    int q = 3;
    int m = 0;
    int gamma = 0;
    int delta = 0;
    int j = 0;
    int k = 0;

    auto operator<=>(const NormalizerLocalLabel&) const = default;
};

namespace detail {

struct ResidueSplit {
    int two_part;
    int odd_part;
};

inline ResidueSplit split_modulus(int mod)
{
    const int two = mod & -mod;
    return {two, mod / two};
}

} // namespace detail

inline std::pair<int, HookPartition> local_to_omega(const NormalizerLocalLabel& loc)
{
    detail::require(is_odd_prime_power(loc.q), "q must be an odd prime power");
    detail::require(loc.m >= 0 && loc.m < 30, "block exponent out of range");
    const auto [two, odd] = detail::split_modulus(residue_modulus(loc.q, loc.kappa));
    detail::require(loc.gamma >= 0 && loc.gamma < two, "gamma out of range");
    detail::require(loc.delta >= 0 && loc.delta < odd, "delta out of range");
    detail::require(loc.j == 0 || loc.j == 1, "j must be a bit");
    if (loc.m == 0)
        detail::require(loc.j == 0 && loc.k == 0, "the block of size 1 has only the hook (1)");
    else
        detail::require(loc.k >= 0 && loc.k < (1 << (loc.m - 1)), "k out of range");

    int s = loc.gamma;
    while (s % odd != loc.delta)
        s += two;
    return {s, HookPartition(1 << loc.m, 2 * loc.k + loc.j)};
}

inline NormalizerLocalLabel omega_to_local(Kappa kappa, int q, int s, const HookPartition& hook)
{
    detail::require(hook.m >= 1 && std::has_single_bit(static_cast<unsigned>(hook.m)),
                    "omega hooks have 2-power size");
    const int mod = residue_modulus(q, kappa);
    detail::require(s >= 0 && s < mod, "residue out of range");
    const auto [two, odd] = detail::split_modulus(mod);
    return {kappa, q, std::countr_zero(static_cast<unsigned>(hook.m)), s % two, s % odd,
            hook.leg % 2, hook.leg / 2};
}

inline OmegaLabel sharp_glu(const GLabel& label)
{
    detail::require(is_odd_label(label), "sharp-glu: label is not odd");
    OmegaLabel out{label.kappa(), label.q(), {}};
    for (const auto& p : canonical_order(label)) {
        const auto exps = two_adic(static_cast<std::uint64_t>(p.lambda.size())).exponents;
        std::vector<int> powers;
        for (int e : exps)
            powers.push_back(1 << e);
        const auto factors = young_star(p.lambda, powers);
        for (std::size_t i = 0; i < exps.size(); ++i)
            out.blocks.push_back({exps[i], p.s, HookPartition::from_partition(factors[i])});
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const OmegaBlock& a, const OmegaBlock& b) { return a.exponent > b.exponent; });
    const auto expected = two_adic(static_cast<std::uint64_t>(label.rank())).exponents;
    detail::ensure(out.blocks.size() == expected.size(), "each 2-adic block must be assigned once");
    for (std::size_t i = 0; i < expected.size(); ++i)
        detail::ensure(out.blocks[i].exponent == expected[i], "each 2-adic block must be assigned once");
    return out;
}

inline GLabel sharp_glu_inverse(const OmegaLabel& omega)
{
    validate(omega);
    detail::require(!omega.blocks.empty(), "omega label must have at least one block");
    std::map<int, std::vector<HookPartition>> by_s;
    for (const auto& b : omega.blocks)
        by_s[b.s].push_back(b.hook);
    std::vector<LabelPair> pairs;
    for (auto& [s, hooks] : by_s)
        pairs.push_back({s, alpha_sn_inverse(ThetaLabel(std::move(hooks)))});
    return GLabel(omega.kappa, omega.q, std::move(pairs));
}

struct GaloisElement {
    int i = 1;
};

inline int act_on_residue(int factor, int s, int mod) { return ((factor % mod) * s % mod + mod) % mod; }

inline GLabel galois_act(const GaloisElement& sigma, const GLabel& label)
{
    const int mod = label.modulus();
    detail::require(std::gcd(sigma.i, mod) == 1, "Galois element must be coprime to q - kappa*1");
    std::vector<LabelPair> pairs = label.pairs();
    for (auto& p : pairs)
        p.s = act_on_residue(sigma.i, p.s, mod);
    return GLabel(label.kappa(), label.q(), std::move(pairs));
}

inline OmegaLabel galois_act(const GaloisElement& sigma, const OmegaLabel& omega)
{
    const int mod = omega.modulus();
    detail::require(std::gcd(sigma.i, mod) == 1, "Galois element must be coprime to q - kappa*1");
    OmegaLabel out = omega;
    for (auto& b : out.blocks)
        b.s = act_on_residue(sigma.i, b.s, mod);
    return out;
}

enum class OuterGenerator { frobenius, transpose_inverse };

/// A word in F_p and tau, applied right to left.
struct OuterElement {
    std::vector<OuterGenerator> word;
};

inline int outer_factor(const OuterElement& d, Kappa kappa, int q)
{
    int factor = 1;
    for (auto g : d.word) {
        if (g == OuterGenerator::frobenius) {
            factor *= prime_of(q);
        } else {
            if (kappa != Kappa::plus)
                throw Unsupported("tau is only available for GL (kappa = +)");
            factor = -factor;
        }
        factor %= residue_modulus(q, kappa);
    }
    return factor;
}

inline GLabel outer_act(const OuterElement& d, const GLabel& label)
{
    return galois_act(GaloisElement{outer_factor(d, label.kappa(), label.q())}, label);
}

inline OmegaLabel outer_act(const OuterElement& d, const OmegaLabel& omega)
{
    return galois_act(GaloisElement{outer_factor(d, omega.kappa, omega.q)}, omega);
}

/// Every point of Omega(n), sorted.
inline std::vector<OmegaLabel> enumerate_omega_labels(int n, int q, Kappa kappa)
{
    detail::require(n >= 1, "enumerate_omega_labels: requires n >= 1");
    detail::require(is_odd_prime_power(q), "q must be an odd prime power");
    const auto exps = two_adic(static_cast<std::uint64_t>(n)).exponents;
    const int mod = residue_modulus(q, kappa);
    std::vector<OmegaLabel> out;
    OmegaLabel cur{kappa, q, {}};
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == exps.size()) {
            out.push_back(cur);
            return;
        }
        const int m = 1 << exps[i];
        for (int s = 0; s < mod; ++s)
            for (int leg = 0; leg < m; ++leg) {
                cur.blocks.push_back({exps[i], s, HookPartition(m, leg)});
                self(self, i + 1);
                cur.blocks.pop_back();
            }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Omega labels fixed by complex conjugation s -> -s.
inline Integer count_real_odd(int n, int q, Kappa kappa)
{
    Integer count = 0;
    for (const auto& omega : enumerate_omega_labels(n, q, kappa))
        if (galois_act(GaloisElement{-1}, omega) == omega)
            ++count;
    return count;
}

inline Integer real_odd_closed_form(int n)
{
    const auto d = two_adic(static_cast<std::uint64_t>(n));
    return Integer(1) << (d.exponent_sum() + d.blocks());
}

/// Odd labels of a Levi subgroup GL_{k_1} x ... x GL_{k_m}, in block order.
inline std::vector<GLabel> levi_star(const GLabel& label, const std::vector<int>& blocks)
{
    detail::require(!blocks.empty(), "levi-star: blocks must be nonempty");
    int total = 0;
    for (int k : blocks) {
        detail::require(k >= 1, "levi-star: blocks must be positive");
        total += k;
    }
    detail::require(total == label.rank(), "levi-star: blocks must sum to n");
    detail::require(odd_multinomial_order(blocks).has_value(), "levi-star: the Levi subgroup has even index");

    const auto omega = sharp_glu(label);
    std::vector<GLabel> out;
    for (int k : blocks) {
        OmegaLabel factor{omega.kappa, omega.q, {}};
        for (const auto& b : omega.blocks)
            if ((k >> b.exponent) & 1)
                factor.blocks.push_back(b);
        out.push_back(sharp_glu_inverse(factor));
    }
    return out;
}

} // namespace oddchar
