#pragma once

// Small permutation groups enumerated element by element, used to compute
// restriction multiplicities of S_n characters onto linear characters.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "oddchar/errors.hpp"
#include "oddchar/oracles.hpp"
#include "oddchar/partition.hpp"

namespace oddchar {

/// Bijection of {0, ..., n-1}. Composition is right to left:
/// (a * b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size(), false);
        for (int x : images_) {
            detail::require(x >= 0 && static_cast<std::size_t>(x) < images_.size() &&
                                !seen[static_cast<std::size_t>(x)],
                            "permutation images must form a bijection");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 0);
        return Permutation(std::move(id));
    }

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation operator*(const Permutation& rhs) const
    {
        std::vector<int> out(images_.size());
        for (std::size_t x = 0; x < out.size(); ++x)
            out[x] = images_[static_cast<std::size_t>(rhs.images_[x])];
        Permutation p;
        p.images_ = std::move(out);
        return p;
    }

    Permutation inverse() const
    {
        std::vector<int> out(images_.size());
        for (std::size_t x = 0; x < out.size(); ++x)
            out[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
        Permutation p;
        p.images_ = std::move(out);
        return p;
    }

    CycleType cycle_type() const
    {
        std::vector<bool> seen(images_.size(), false);
        std::vector<int> lengths;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i])
                continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
                seen[j] = true;
                ++len;
            }
            lengths.push_back(len);
        }
        std::sort(lengths.begin(), lengths.end(), std::greater<>());
        return CycleType(Partition(std::move(lengths)));
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept
    {
        return boost::hash_range(p.images().begin(), p.images().end());
    }
};

using PermutationSet = std::unordered_set<Permutation, PermutationHash>;

/// Closure of a generating set under multiplication, breadth first. Throws
/// ElementCapExceeded instead of truncating.
inline std::vector<Permutation> enumerate_closure(int degree, const std::vector<Permutation>& gens,
                                                  std::size_t cap)
{
    std::vector<Permutation> elements{Permutation::identity(degree)};
    PermutationSet seen{elements.front()};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = elements[head] * g;
            if (seen.insert(next).second) {
                if (elements.size() >= cap)
                    throw ElementCapExceeded("permutation group exceeds element cap of " +
                                             std::to_string(cap));
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

class PermutationGroup {
public:
    static constexpr std::size_t default_cap = 200000;

    PermutationGroup(int degree, std::vector<Permutation> generators, std::size_t cap = default_cap)
        : degree_(degree), generators_(std::move(generators)), cap_(cap),
          cache_(std::make_shared<Cache>())
    {
        detail::require(degree >= 0, "permutation group degree must be nonnegative");
        for (const auto& g : generators_)
            detail::require(g.degree() == degree, "generator degree mismatch");
    }

    int degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }

    /// Full element list, identity first; computed on first use.
    const std::vector<Permutation>& elements() const
    {
        std::call_once(cache_->once, [this] {
            cache_->elements = enumerate_closure(degree_, generators_, cap_);
        });
        return cache_->elements;
    }

    std::size_t order() const { return elements().size(); }

private:
    struct Cache {
        std::once_flag once;
        std::vector<Permutation> elements;
    };

    int degree_;
    std::vector<Permutation> generators_;
    std::size_t cap_;
    std::shared_ptr<Cache> cache_;
};

/// Generator of the Sylow 2-subgroup: it swaps the two halves of the first
/// 2^level points of the block of size 2^exponent starting at `offset`.
struct SylowGenerator {
    int block_exponent;
    int level;   // 1 .. block_exponent
    int offset;
};

/// Generators in the order used by sylow2_subgroup: blocks by descending
/// size, levels ascending within a block.
inline std::vector<SylowGenerator> sylow2_generator_layout(int n)
{
    std::vector<SylowGenerator> out;
    int offset = 0;
    for (int e : two_adic(static_cast<std::uint64_t>(n)).exponents) {
        for (int level = 1; level <= e; ++level)
            out.push_back({e, level, offset});
        offset += 1 << e;
    }
    return out;
}

/// Iterated wreath product C_2 wr ... wr C_2 on each 2-adic block of n,
/// blocks placed consecutively (largest first).
inline PermutationGroup sylow2_subgroup(int n, std::size_t cap = PermutationGroup::default_cap)
{
    detail::require(n >= 1, "sylow2_subgroup: n must be positive");
    std::vector<Permutation> gens;
    for (const auto& g : sylow2_generator_layout(n)) {
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        const int half = 1 << (g.level - 1);
        for (int x = 0; x < half; ++x)
            std::swap(img[static_cast<std::size_t>(g.offset + x)],
                      img[static_cast<std::size_t>(g.offset + x + half)]);
        gens.emplace_back(std::move(img));
    }
    return PermutationGroup(n, std::move(gens), cap);
}

/// Derived subgroup, as the normal closure of the commutators of generators.
inline PermutationSet derived_subgroup(const PermutationGroup& group)
{
    const auto& gens = group.generators();
    const Permutation id = Permutation::identity(group.degree());
    std::vector<Permutation> normal_gens;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            Permutation c = a.inverse() * b.inverse() * a * b;
            if (c != id)
                normal_gens.push_back(std::move(c));
        }

    for (;;) {
        auto elems = enumerate_closure(group.degree(), normal_gens, PermutationGroup::default_cap);
        PermutationSet members(elems.begin(), elems.end());
        std::vector<Permutation> extra;
        for (const auto& g : gens)
            for (const auto& x : normal_gens) {
                Permutation y = g * x * g.inverse();
                if (!members.count(y))
                    extra.push_back(std::move(y));
            }
        if (extra.empty())
            return members;
        normal_gens.insert(normal_gens.end(), extra.begin(), extra.end());
    }
}

/// Linear character of a permutation group, named by its values on the
/// group's generators: bit k is 1 iff generator k maps to -1.
struct LinearConstituent {
    std::vector<std::uint8_t> label;
    Integer multiplicity;

    bool operator==(const LinearConstituent&) const = default;
};

/// Inner products <chi^lambda|_H, phi> for every linear character phi of H.
/// The linear characters are read off the quotient H/H' computed on the
/// enumerated elements; only quotients of exponent 2 (real linear
/// characters, as for 2-groups generated by involutions) are supported.
inline std::vector<LinearConstituent> restriction_multiplicities(const Partition& lambda,
                                                                 const PermutationGroup& group)
{
    detail::require(lambda.size() == group.degree(),
                    "restriction_multiplicities: partition size must equal the group degree");
    const auto& elems = group.elements();
    std::unordered_map<Permutation, std::size_t, PermutationHash> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index.emplace(elems[i], i);

    const auto derived = derived_subgroup(group);

    std::vector<int> coset(elems.size(), -1);
    std::vector<std::size_t> rep;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (coset[i] >= 0)
            continue;
        const int id = static_cast<int>(rep.size());
        rep.push_back(i);
        for (const auto& d : derived)
            coset[index.at(elems[i] * d)] = id;
    }
    auto coset_of = [&](const Permutation& p) { return coset[index.at(p)]; };
    auto coset_mul = [&](int a, int b) {
        return coset_of(elems[rep[static_cast<std::size_t>(a)]] * elems[rep[static_cast<std::size_t>(b)]]);
    };

    const auto& gens = group.generators();
    const int trivial = coset[0];
    for (const auto& g : gens)
        if (coset_of(g * g) != trivial)
            throw Unsupported("restriction_multiplicities: abelianization has exponent > 2");

    // coordinates of H/H' over F_2 with respect to a basis of generator images
    std::map<int, std::uint64_t> coords{{trivial, 0}};
    int dim = 0;
    for (const auto& g : gens) {
        const int c = coset_of(g);
        if (coords.count(c))
            continue;
        detail::require(dim < 63, "restriction_multiplicities: abelianization too large");
        const std::uint64_t bit = std::uint64_t{1} << dim++;
        std::vector<std::pair<int, std::uint64_t>> add;
        for (auto [x, v] : coords)
            add.emplace_back(coset_mul(x, c), v | bit);
        coords.insert(add.begin(), add.end());
    }
    detail::ensure(coords.size() == rep.size(), "generator images must span the abelianization");

    // chi is constant on (cycle type, coset) cells
    std::map<std::pair<CycleType, int>, Integer> cells;
    for (std::size_t i = 0; i < elems.size(); ++i)
        cells[{elems[i].cycle_type(), coset[i]}] += 1;
    std::map<CycleType, Integer> chi;
    MurnaghanNakayama mn;
    for (const auto& [key, count] : cells)
        if (!chi.count(key.first))
            chi.emplace(key.first, mn.value(lambda, key.first));

    const Integer order = elems.size();
    std::vector<LinearConstituent> out;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << dim); ++u) {
        Integer sum = 0;
        for (const auto& [key, count] : cells) {
            const bool negative = std::popcount(u & coords.at(key.second)) % 2;
            if (negative)
                sum -= chi.at(key.first) * count;
            else
                sum += chi.at(key.first) * count;
        }
        detail::ensure(sum % order == 0, "nonintegral inner product in restriction_multiplicities");
        LinearConstituent lc;
        for (const auto& g : gens)
            lc.label.push_back(static_cast<std::uint8_t>(std::popcount(u & coords.at(coset_of(g))) % 2));
        lc.multiplicity = sum / order;
        out.push_back(std::move(lc));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
    return out;
}

} // namespace oddchar
