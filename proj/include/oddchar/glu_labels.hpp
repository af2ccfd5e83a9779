#pragma once

// Dipper-James labels {(s_i, lambda_i)} of irreducible characters of
// GL_n(q) (kappa = +) and GU_n(q) (kappa = -). A semisimple parameter s is a
// residue modulo q - kappa*1, read as an exponent of a fixed generator.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "oddchar/errors.hpp"
#include "oddchar/oracles.hpp"
#include "oddchar/partition.hpp"
#include "oddchar/sym_correspondences.hpp"

namespace oddchar {

enum class Kappa { plus, minus };

inline char kappa_symbol(Kappa k) { return k == Kappa::plus ? '+' : '-'; }

inline Kappa parse_kappa(const std::string& s)
{
    if (s == "+" || s == "gl" || s == "GL")
        return Kappa::plus;
    if (s == "-" || s == "gu" || s == "GU")
        return Kappa::minus;
    throw DomainError("kappa must be '+' or '-', got '" + s + "'");
}

/// Smallest prime factor of q, or 0 when q is not a prime power.
inline int prime_of(int q)
{
    if (q < 2)
        return 0;
    int p = 2;
    while (p * p <= q && q % p != 0)
        ++p;
    if (q % p != 0)
        p = q;
    int r = q;
    while (r % p == 0)
        r /= p;
    return r == 1 ? p : 0;
}

inline bool is_odd_prime_power(int q) { return q % 2 == 1 && prime_of(q) != 0; }

/// q - 1 for GL, q + 1 for GU.
inline int residue_modulus(int q, Kappa kappa) { return kappa == Kappa::plus ? q - 1 : q + 1; }

struct LabelPair {
    int s = 0;
    Partition lambda;

    auto operator<=>(const LabelPair&) const = default;
};

class GLabel {
public:
    GLabel(Kappa kappa, int q, std::vector<LabelPair> pairs)
        : kappa_(kappa), q_(q), pairs_(std::move(pairs))
    {
        detail::require(is_odd_prime_power(q), "q must be an odd prime power, got " + std::to_string(q));
        const int mod = modulus();
        std::set<int> seen;
        for (const auto& p : pairs_) {
            detail::require(p.s >= 0 && p.s < mod, "residue " + std::to_string(p.s) +
                                                       " out of range [0, " + std::to_string(mod) + ")");
            detail::require(seen.insert(p.s).second, "residues must be pairwise distinct");
            detail::require(!p.lambda.empty(), "label partitions must be nonempty");
        }
        std::sort(pairs_.begin(), pairs_.end());
    }

    Kappa kappa() const noexcept { return kappa_; }
    int q() const noexcept { return q_; }
    int modulus() const noexcept { return residue_modulus(q_, kappa_); }
    const std::vector<LabelPair>& pairs() const noexcept { return pairs_; }

    int rank() const
    {
        int n = 0;
        for (const auto& p : pairs_)
            n += p.lambda.size();
        return n;
    }

    auto operator<=>(const GLabel&) const = default;

private:
    Kappa kappa_;
    int q_;
    std::vector<LabelPair> pairs_;  // sorted by residue
};

inline bool is_odd_label(const GLabel& label)
{
    if (label.pairs().empty())
        return false;
    std::vector<int> sizes;
    for (const auto& p : label.pairs()) {
        if (!is_odd_partition(p.lambda))
            return false;
        sizes.push_back(p.lambda.size());
    }
    return odd_multinomial_order(sizes).has_value();
}

/// Pairs by strictly increasing 2-part of |lambda_i|.
inline std::vector<LabelPair> canonical_order(const GLabel& label)
{
    detail::require(is_odd_label(label), "canonical_order: label is not odd");
    std::vector<LabelPair> out = label.pairs();
    std::sort(out.begin(), out.end(), [](const LabelPair& a, const LabelPair& b) {
        return nu2(static_cast<std::uint64_t>(a.lambda.size())) <
               nu2(static_cast<std::uint64_t>(b.lambda.size()));
    });
    return out;
}

struct ParabolicCorrespondent {
    int line_s = 0;
    GLabel rest;

    auto operator<=>(const ParabolicCorrespondent&) const = default;
};

inline ParabolicCorrespondent parabolic_star(const GLabel& label)
{
    if (label.kappa() != Kappa::plus)
        throw Unsupported("parabolic-star is only available for GL (kappa = +)");
    detail::require(is_odd_label(label), "parabolic-star: label is not odd");
    detail::require(label.rank() >= 2, "parabolic-star: requires n >= 2");

    auto pairs = canonical_order(label);
    const int s1 = pairs.front().s;
    if (pairs.front().lambda.size() == 1)
        pairs.erase(pairs.begin());
    else
        pairs.front().lambda = star_sn(pairs.front().lambda);
    GLabel rest(label.kappa(), label.q(), std::move(pairs));
    detail::ensure(is_odd_label(rest), "parabolic correspondent of an odd label must be odd");
    return {s1, std::move(rest)};
}

/// Every odd label of rank n, sorted.
inline std::vector<GLabel> enumerate_odd_labels(int n, int q, Kappa kappa)
{
    detail::require(n >= 1, "enumerate_odd_labels: requires n >= 1");
    detail::require(is_odd_prime_power(q), "q must be an odd prime power");
    const int mod = residue_modulus(q, kappa);

    std::vector<std::vector<Partition>> odd_of(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k)
        odd_of[static_cast<std::size_t>(k)] = odd_partitions_of(k);

    std::vector<GLabel> out;
    std::vector<LabelPair> chosen;
    // residues are used in increasing order, so every multiset is seen once
    auto rec = [&](auto&& self, int next_s, int remaining) -> void {
        if (remaining == 0) {
            GLabel label(kappa, q, chosen);
            if (is_odd_label(label))
                out.push_back(std::move(label));
            return;
        }
        for (int s = next_s; s < mod; ++s)
            for (int k = 1; k <= remaining; ++k) {
                if (!binom_is_odd(static_cast<std::uint64_t>(remaining), static_cast<std::uint64_t>(k)))
                    continue;
                for (const auto& lam : odd_of[static_cast<std::size_t>(k)]) {
                    chosen.push_back({s, lam});
                    self(self, s + 1, remaining - k);
                    chosen.pop_back();
                }
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

inline Integer count_odd_irr_gl(int n, int q, Kappa kappa)
{
    return Integer(enumerate_odd_labels(n, q, kappa).size());
}

/// Product over the 2-adic blocks of n of (q - kappa*1) * 2^{n_i}.
inline Integer odd_irr_gl_closed_form(int n, int q, Kappa kappa)
{
    Integer out = 1;
    for (int e : two_adic(static_cast<std::uint64_t>(n)).exponents)
        out *= Integer(residue_modulus(q, kappa)) << e;
    return out;
}

/// Tensoring with a linear character of GL_n(q): every residue moves by t.
inline GLabel twist(const GLabel& label, int t)
{
    const int mod = label.modulus();
    std::vector<LabelPair> pairs = label.pairs();
    for (auto& p : pairs)
        p.s = ((p.s + t) % mod + mod) % mod;
    return GLabel(label.kappa(), label.q(), std::move(pairs));
}

struct SlCorrespondence {
    bool restriction_irreducible = false;
    std::vector<int> sizes;        // k_1 - 1, k_2, ..., k_m with a zero k_1 - 1 dropped
    GLabel rest;                   // label of the restriction of chi* to L_1
    GLabel normalized;             // rest twisted so that the line residue is 0

    auto operator<=>(const SlCorrespondence&) const = default;
};

inline SlCorrespondence sl_correspondence_data(const GLabel& label)
{
    if (label.kappa() != Kappa::plus)
        throw Unsupported("the SL correspondence is only available for GL (kappa = +)");
    detail::require(label.rank() % 2 == 1, "the SL correspondence requires odd n");
    detail::require(is_odd_label(label), "label is not odd");

    const auto ordered = canonical_order(label);
    std::vector<int> sizes;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        const int k = ordered[i].lambda.size() - (i == 0 ? 1 : 0);
        if (k > 0)
            sizes.push_back(k);
    }
    std::vector<int> sorted = sizes;
    std::sort(sorted.begin(), sorted.end());
    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

    if (label.rank() == 1)
        return {distinct, sizes, GLabel(label.kappa(), label.q(), {}),
                GLabel(label.kappa(), label.q(), {})};
    auto star = parabolic_star(label);
    GLabel normalized = twist(star.rest, -star.line_s);
    return {distinct, std::move(sizes), std::move(star.rest), std::move(normalized)};
}

/// Odd-degree characters of SL_n(q), counted as orbits of odd labels of
/// GL_n(q) under twisting by the q - 1 linear characters.
inline Integer count_odd_irr_sl(int n, int q)
{
    const auto labels = enumerate_odd_labels(n, q, Kappa::plus);
    std::set<GLabel> seen;
    Integer orbits = 0;
    for (const auto& l : labels) {
        if (seen.count(l))
            continue;
        ++orbits;
        for (int t = 0; t < q - 1; ++t)
            seen.insert(twist(l, t));
    }
    return orbits;
}

} // namespace oddchar
