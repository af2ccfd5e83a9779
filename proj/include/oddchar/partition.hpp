#pragma once

// Integer partitions, Young diagrams, rim hooks, m-cores and the 2-adic
// arithmetic (binomial parity, 2-parts) that the correspondences are built on.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddchar/errors.hpp"

namespace oddchar {

/// Weakly decreasing list of positive parts. The empty list is the unique
/// partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            detail::require(parts_[i] >= 1, "partition parts must be positive");
            detail::require(i == 0 || parts_[i - 1] >= parts_[i],
                            "partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Drops trailing zeros before validating.
    static Partition from_rows(std::vector<int> rows)
    {
        while (!rows.empty() && rows.back() == 0)
            rows.pop_back();
        return Partition(std::move(rows));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Row length, 0-indexed; rows past the end have length 0.
    int row(int i) const noexcept
    {
        return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    Partition conjugate() const
    {
        std::vector<int> cols(static_cast<std::size_t>(row(0)), 0);
        for (int r : parts_)
            for (int c = 0; c < r; ++c)
                ++cols[static_cast<std::size_t>(c)];
        return Partition(std::move(cols));
    }

    /// Arm + leg + 1 of the cell (i, j), both 0-indexed.
    int hook_length(int i, int j, const Partition& conj) const noexcept
    {
        return (row(i) - j - 1) + (conj.row(j) - i - 1) + 1;
    }

    /// Young diagram containment.
    bool contains(const Partition& other) const noexcept
    {
        if (other.length() > length())
            return false;
        for (int i = 0; i < other.length(); ++i)
            if (other.row(i) > row(i))
                return false;
        return true;
    }

    bool is_hook() const noexcept { return length() <= 1 || row(1) <= 1; }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// A hook partition (m - leg, 1^leg), an element of H(m).
struct HookPartition {
    int m = 1;
    int leg = 0;

    HookPartition() = default;
    HookPartition(int m_, int leg_) : m(m_), leg(leg_)
    {
        detail::require(m >= 1, "hook size must be positive");
        detail::require(leg >= 0 && leg <= m - 1, "hook leg must lie in [0, m-1]");
    }

    int arm() const noexcept { return m - leg - 1; }

    Partition to_partition() const
    {
        std::vector<int> parts{m - leg};
        parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
        return Partition(std::move(parts));
    }

    static HookPartition from_partition(const Partition& p)
    {
        detail::require(!p.empty() && p.is_hook(), p.to_string() + " is not a hook partition");
        return HookPartition(p.size(), p.length() - 1);
    }

    auto operator<=>(const HookPartition&) const = default;
};

/// All partitions of n, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n)
{
    detail::require(n >= 0, "partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// ---------------------------------------------------------------------------
// 2-adic arithmetic

/// Exponents n_1 > n_2 > ... > n_r >= 0 with n = sum 2^{n_i}.
struct TwoAdicDecomposition {
    std::vector<int> exponents;

    std::uint64_t value() const
    {
        std::uint64_t v = 0;
        for (int e : exponents)
            v |= std::uint64_t{1} << e;
        return v;
    }

    /// Block sizes 2^{n_i}, descending.
    std::vector<int> block_sizes() const
    {
        std::vector<int> out;
        for (int e : exponents)
            out.push_back(1 << e);
        return out;
    }

    int exponent_sum() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
    int blocks() const { return static_cast<int>(exponents.size()); }

    bool operator==(const TwoAdicDecomposition&) const = default;
};

inline TwoAdicDecomposition two_adic(std::uint64_t n)
{
    TwoAdicDecomposition d;
    for (int e = 63; e >= 0; --e)
        if ((n >> e) & 1U)
            d.exponents.push_back(e);
    return d;
}

/// The 2-part [r]_2 of an integer, with [0]_2 the top element.
class TwoPart {
public:
    static TwoPart infinity() { return TwoPart(); }
    static TwoPart finite(std::uint64_t v) { return TwoPart(v); }

    bool is_infinite() const noexcept { return infinite_; }
    std::uint64_t value() const
    {
        detail::require(!infinite_, "the 2-part of 0 has no finite value");
        return value_;
    }

    std::strong_ordering operator<=>(const TwoPart& o) const noexcept
    {
        if (infinite_ || o.infinite_)
            return static_cast<int>(infinite_) <=> static_cast<int>(o.infinite_);
        return value_ <=> o.value_;
    }
    bool operator==(const TwoPart& o) const noexcept { return (*this <=> o) == 0; }

private:
    TwoPart() = default;
    explicit TwoPart(std::uint64_t v) : value_(v), infinite_(false) {}

    std::uint64_t value_ = 0;
    bool infinite_ = true;
};

inline TwoPart nu2(std::uint64_t r)
{
    if (r == 0)
        return TwoPart::infinity();
    return TwoPart::finite(r & (~r + 1));
}

/// C(n, a) is odd iff the binary digits of a are dominated by those of n.
inline bool binom_is_odd(std::uint64_t n, std::uint64_t a)
{
    detail::require(a <= n, "binom_is_odd: requires a <= n");
    return (a & ~n) == 0;
}

/// If n!/prod a_i! is odd, the unique reordering with strictly increasing
/// 2-parts (whose first entry then has the 2-part of n); otherwise nullopt.
inline std::optional<std::vector<int>> odd_multinomial_order(const std::vector<int>& parts)
{
    detail::require(!parts.empty(), "odd_multinomial_order: parts must be nonempty");
    std::uint64_t total = 0;
    for (int a : parts) {
        detail::require(a >= 1, "odd_multinomial_order: parts must be positive");
        const auto ua = static_cast<std::uint64_t>(a);
        total += ua;
        if (!binom_is_odd(total, ua))
            return std::nullopt;
    }
    std::vector<int> out = parts;
    std::sort(out.begin(), out.end(), [](int x, int y) {
        return nu2(static_cast<std::uint64_t>(x)) < nu2(static_cast<std::uint64_t>(y));
    });
    return out;
}

/// The unique c in {a-1, a} with C(n-1, c) odd, given C(n, a) odd and 0 < a < n.
inline int unique_descent(int n, int a)
{
    detail::require(0 < a && a < n, "unique_descent: requires 0 < a < n");
    const auto un = static_cast<std::uint64_t>(n);
    const auto ua = static_cast<std::uint64_t>(a);
    detail::require(binom_is_odd(un, ua), "unique_descent: C(n, a) must be odd");
    const bool lower = binom_is_odd(un - 1, ua - 1);
    const bool upper = binom_is_odd(un - 1, ua);
    detail::ensure(lower != upper, "Pascal recursion: exactly one of C(n-1,a-1), C(n-1,a) is odd");
    return lower ? a - 1 : a;
}

// ---------------------------------------------------------------------------
// Rim hooks

/// A rim hook of a Young diagram. Cells are 1-indexed (row, column), listed
/// from the top-right end of the strip to its bottom-left end.
struct RimHook {
    std::vector<std::pair<int, int>> cells;
    int length = 0;
    int rows_spanned = 0;
    int cols_spanned = 0;

    bool operator==(const RimHook&) const = default;
};

struct RimHookRemoval {
    RimHook hook;
    HookPartition type;   ///< (cols_spanned, 1^{rows_spanned - 1})
    Partition remainder;

    bool operator==(const RimHookRemoval&) const = default;
};

/// Every removable rim hook of length m, found through the cells whose hook
/// length is m (one rim hook per such cell).
inline std::vector<RimHookRemoval> rim_hooks_of_length(const Partition& lambda, int m)
{
    detail::require(m >= 1, "rim_hooks_of_length: m must be positive");
    std::vector<RimHookRemoval> out;
    const Partition conj = lambda.conjugate();
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.row(i); ++j) {
            if (lambda.hook_length(i, j, conj) != m)
                continue;
            const int leg = conj.row(j) - i - 1;
            const int last = i + leg;

            RimHook hook;
            for (int r = i; r <= last; ++r) {
                const int from = (r == last) ? j : lambda.row(r + 1) - 1;
                for (int c = lambda.row(r) - 1; c >= from; --c)
                    hook.cells.emplace_back(r + 1, c + 1);
            }
            hook.length = m;
            hook.rows_spanned = leg + 1;
            hook.cols_spanned = m - leg;

            std::vector<int> rows = lambda.parts();
            for (int r = i; r < last; ++r)
                rows[static_cast<std::size_t>(r)] = lambda.row(r + 1) - 1;
            rows[static_cast<std::size_t>(last)] = j;

            out.push_back({std::move(hook), HookPartition(m, leg), Partition::from_rows(std::move(rows))});
        }
    }
    return out;
}

/// Strips rim m-hooks until none remain.
inline Partition m_core(Partition lambda, int m)
{
    detail::require(m >= 1, "m_core: m must be positive");
    for (;;) {
        auto hooks = rim_hooks_of_length(lambda, m);
        if (hooks.empty())
            return lambda;
        lambda = std::move(hooks.front().remainder);
    }
}

enum class CrossCheck { off, on };

namespace detail {

// gamma whose rim m-hook starts in the first row and spans the first `rows`
// rows of the outer rim of alpha (requires rows <= length of alpha).
inline Partition attach_through_first_row(const Partition& alpha, int m, int rows)
{
    std::vector<int> g(alpha.parts());
    int rim_cells = 1;  // the outer-rim cell to the right of row 1
    for (int i = 1; i < rows; ++i) {
        rim_cells += alpha.row(i - 1) - alpha.row(i) + 1;
        g[static_cast<std::size_t>(i)] = alpha.row(i - 1) + 1;
    }
    ensure(rim_cells <= m - 1, "outer rim segment must be shorter than the hook");
    g[0] = alpha.row(0) + 1 + (m - rim_cells);
    return Partition(std::move(g));
}

} // namespace detail

/// The unique gamma of size n having a rim hook of type beta whose removal
/// leaves alpha. Requires |beta| = m, |alpha| = n - m and m <= n <= 2m - 1.
inline Partition attach_unique_gamma(const Partition& alpha, const HookPartition& beta, int n,
                                     CrossCheck check = CrossCheck::off)
{
    const int m = beta.m;
    detail::require(m <= n && n <= 2 * m - 1, "attach_unique_gamma: requires m <= n <= 2m-1");
    detail::require(alpha.size() == n - m, "attach_unique_gamma: |alpha| must equal n - m");

    const int rows = beta.leg + 1;     // rows spanned by the rim hook
    const int cols = m - beta.leg;     // columns spanned
    const int r = alpha.length();
    const int a1 = alpha.row(0);

    Partition gamma;
    if (rows <= r) {
        gamma = detail::attach_through_first_row(alpha, m, rows);
    } else if (cols <= a1) {
        // mirror image of the first-row case
        gamma = detail::attach_through_first_row(alpha.conjugate(), m, cols).conjugate();
    } else {
        // the whole outer rim, extended along the first row and first column
        std::vector<int> g{cols};
        for (int i = 0; i < r; ++i)
            g.push_back(alpha.row(i) + 1);
        g.insert(g.end(), static_cast<std::size_t>(rows - (r + 1)), 1);
        gamma = Partition(std::move(g));
    }

    if (check == CrossCheck::on) {
        std::vector<Partition> found;
        for (const Partition& cand : partitions_of(n))
            for (const auto& rem : rim_hooks_of_length(cand, m))
                if (rem.type == beta && rem.remainder == alpha)
                    found.push_back(cand);
        detail::ensure(found.size() == 1 && found.front() == gamma,
                       "attach_unique_gamma: brute force disagrees for alpha=" + alpha.to_string());
    }
    return gamma;
}

} // namespace oddchar
