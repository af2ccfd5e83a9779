#pragma once

// Brute-force character-theoretic oracles for symmetric groups. Nothing in
// here knows about the correspondences; the correspondence modules are
// checked against these.

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "oddchar/errors.hpp"
#include "oddchar/partition.hpp"

namespace oddchar {

inline Integer factorial(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

/// Conjugacy class of S_n, labelled by its cycle lengths.
struct CycleType {
    Partition cycles;

    CycleType() = default;
    explicit CycleType(Partition p) : cycles(std::move(p)) {}

    int degree() const noexcept { return cycles.size(); }

    /// n! / prod_i (i^{m_i} m_i!)
    Integer class_size() const
    {
        std::map<int, int> mult;
        for (int c : cycles.parts())
            ++mult[c];
        Integer denom = 1;
        for (auto [len, m] : mult) {
            for (int i = 0; i < m; ++i)
                denom *= len;
            denom *= factorial(m);
        }
        return factorial(cycles.size()) / denom;
    }

    /// +1 or -1.
    int sign() const noexcept
    {
        int s = 1;
        for (int c : cycles.parts())
            if (c % 2 == 0)
                s = -s;
        return s;
    }

    auto operator<=>(const CycleType& o) const { return cycles <=> o.cycles; }
    bool operator==(const CycleType& o) const { return cycles == o.cycles; }
};

/// Hook length formula, exact.
inline Integer degree(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i); ++j)
            hooks *= lambda.hook_length(i, j, conj);
    return factorial(lambda.size()) / hooks;
}

inline bool is_odd_partition(const Partition& lambda)
{
    return boost::multiprecision::bit_test(degree(lambda), 0);
}

inline std::vector<Partition> odd_partitions_of(int n)
{
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (is_odd_partition(p))
            out.push_back(std::move(p));
    return out;
}

/// Murnaghan-Nakayama recursion with a memo table owned by the evaluator.
/// One evaluator per thread; it is not internally synchronized.
class MurnaghanNakayama {
public:
    Integer value(const Partition& lambda, const CycleType& mu)
    {
        detail::require(lambda.size() == mu.degree(), "mn_value: lambda and mu must have equal size");
        return eval(lambda, mu.cycles.parts(), 0);
    }

private:
    Integer eval(const Partition& lambda, const std::vector<int>& cycles, std::size_t from)
    {
        if (from == cycles.size())
            return 1;
        std::vector<int> rest(cycles.begin() + static_cast<std::ptrdiff_t>(from), cycles.end());
        auto key = std::make_pair(lambda.parts(), std::move(rest));
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        Integer sum = 0;
        for (const auto& rem : rim_hooks_of_length(lambda, cycles[from])) {
            Integer v = eval(rem.remainder, cycles, from + 1);
            if (rem.type.leg % 2)
                sum -= v;
            else
                sum += v;
        }
        memo_.emplace(std::move(key), sum);
        return sum;
    }

    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo_;
};

inline Integer mn_value(const Partition& lambda, const CycleType& mu)
{
    MurnaghanNakayama mn;
    return mn.value(lambda, mu);
}

/// Partitions obtained by removing one removable cell, in decreasing order.
inline std::vector<Partition> branch_restrict(const Partition& lambda)
{
    detail::require(lambda.size() >= 1, "branch_restrict: requires n >= 1");
    std::vector<Partition> out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (lambda.row(i) > lambda.row(i + 1)) {
            std::vector<int> rows = lambda.parts();
            --rows[static_cast<std::size_t>(i)];
            out.push_back(Partition::from_rows(std::move(rows)));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Littlewood-Richardson coefficient c^gamma_{alpha beta}: the number of
/// semistandard fillings of gamma/alpha with content beta whose reverse
/// reading word is a lattice word. Zero when the sizes or shapes do not fit.
inline Integer lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma)
{
    if (alpha.size() + beta.size() != gamma.size() || !gamma.contains(alpha))
        return 0;

    // cells of gamma/alpha in reading order: rows top to bottom, right to left
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < gamma.length(); ++i)
        for (int j = gamma.row(i) - 1; j >= alpha.row(i); --j)
            cells.emplace_back(i, j);

    std::vector<std::vector<int>> fill(static_cast<std::size_t>(gamma.length()));
    for (int i = 0; i < gamma.length(); ++i)
        fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(gamma.row(i)), 0);

    const int letters = beta.length();
    std::vector<int> used(static_cast<std::size_t>(letters) + 1, 0);
    Integer count = 0;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[idx];
        int hi = letters;
        if (j + 1 < gamma.row(i))
            hi = std::min(hi, fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]);
        int lo = 1;
        if (i > 0 && j >= alpha.row(i - 1))
            lo = fill[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
        for (int v = lo; v <= hi; ++v) {
            auto uv = static_cast<std::size_t>(v);
            if (used[uv] >= beta.row(v - 1))
                continue;
            if (v > 1 && used[uv] + 1 > used[uv - 1])
                continue;
            ++used[uv];
            fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            self(self, idx + 1);
            --used[uv];
        }
        fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    };
    rec(rec, 0);
    return count;
}

// ---------------------------------------------------------------------------
// Odd-degree characters of S_k wr S_t by Clifford theory.

struct WreathBasePart {
    Partition psi;  ///< character of S_k, repeated t times
    int t = 0;

    auto operator<=>(const WreathBasePart&) const = default;
};

/// Clifford label (psi, alpha) of an irreducible character of S_k wr S_t:
/// base lists distinct psi_i with multiplicities t_i, top lists alpha_i of t_i.
struct WreathOddLabel {
    std::vector<WreathBasePart> base;
    std::vector<Partition> top;

    auto operator<=>(const WreathOddLabel&) const = default;
};

/// Degree of the wreath character with the given Clifford label:
/// t!/prod t_i! * prod psi_i(1)^{t_i} * prod alpha_i(1).
inline Integer wreath_degree(const WreathOddLabel& label)
{
    int t = 0;
    Integer d = 1;
    for (std::size_t i = 0; i < label.base.size(); ++i) {
        const auto& part = label.base[i];
        t += part.t;
        Integer psi_deg = degree(part.psi);
        for (int r = 0; r < part.t; ++r)
            d *= psi_deg;
        d *= degree(label.top[i]);
    }
    Integer multinomial = factorial(t);
    for (const auto& part : label.base)
        multinomial /= factorial(part.t);
    return d * multinomial;
}

/// All Clifford labels of S_k wr S_t whose degree is odd, enumerated over
/// every irreducible character and filtered by exact degree. Base parts are
/// listed by increasing 2-part of t_i.
inline std::vector<WreathOddLabel> wreath_odd_labels(int k, int t)
{
    detail::require(k >= 1 && t >= 1, "wreath_odd_labels: k and t must be positive");
    const auto base_chars = partitions_of(k);
    std::vector<WreathOddLabel> out;

    std::vector<std::pair<std::size_t, int>> chosen;  // (index into base_chars, multiplicity)
    auto with_tops = [&](const std::vector<WreathBasePart>& base) {
        std::vector<Partition> top;
        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == base.size()) {
                WreathOddLabel label{base, top};
                if (boost::multiprecision::bit_test(wreath_degree(label), 0))
                    out.push_back(std::move(label));
                return;
            }
            for (auto& a : partitions_of(base[i].t)) {
                top.push_back(a);
                self(self, i + 1);
                top.pop_back();
            }
        };
        rec(rec, 0);
    };

    auto rec = [&](auto&& self, std::size_t next, int remaining) -> void {
        if (remaining == 0) {
            std::vector<WreathBasePart> base;
            for (auto [idx, m] : chosen)
                base.push_back({base_chars[idx], m});
            std::sort(base.begin(), base.end(), [](const auto& x, const auto& y) {
                auto nx = nu2(static_cast<std::uint64_t>(x.t));
                auto ny = nu2(static_cast<std::uint64_t>(y.t));
                if (nx != ny)
                    return nx < ny;
                return x.psi > y.psi;
            });
            with_tops(base);
            return;
        }
        for (std::size_t idx = next; idx < base_chars.size(); ++idx) {
            for (int m = 1; m <= remaining; ++m) {
                chosen.emplace_back(idx, m);
                self(self, idx + 1, remaining - m);
                chosen.pop_back();
            }
        }
    };
    rec(rec, 0, t);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oddchar
