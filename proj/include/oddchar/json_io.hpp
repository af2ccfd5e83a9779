#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddchar/errors.hpp"
#include "oddchar/glu_labels.hpp"
#include "oddchar/omega_normalizer.hpp"
#include "oddchar/oracles.hpp"
#include "oddchar/partition.hpp"
#include "oddchar/sym_correspondences.hpp"

namespace oddchar::json_io {

using json = nlohmann::json;

/// Exact integers: JSON numbers up to 2^53, decimal strings above.
inline json to_json(const Integer& v)
{
    const Integer limit = Integer(1) << 53;
    if (v <= limit && v >= -limit)
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const HookPartition& h) { return json{{"m", h.m}, {"leg", h.leg}}; }

inline json to_json(const ThetaLabel& t)
{
    json arr = json::array();
    for (const auto& h : t.hooks)
        arr.push_back(to_json(h));
    return arr;
}

inline json to_json(const SylowLinearLabel& l)
{
    json arr = json::array();
    for (const auto& b : l.blocks) {
        json bits = json::array();
        for (auto x : b)
            bits.push_back(static_cast<int>(x));
        arr.push_back(std::move(bits));
    }
    return arr;
}

inline json to_json(const WreathOddLabel& w)
{
    json base = json::array();
    for (const auto& b : w.base)
        base.push_back({{"psi", to_json(b.psi)}, {"t", b.t}});
    json top = json::array();
    for (const auto& a : w.top)
        top.push_back(to_json(a));
    return {{"base", base}, {"top", top}};
}

inline json to_json(const GLabel& l)
{
    json pairs = json::array();
    for (const auto& p : l.pairs())
        pairs.push_back({{"s", p.s}, {"lambda", to_json(p.lambda)}});
    return {{"kappa", std::string(1, kappa_symbol(l.kappa()))}, {"q", l.q()}, {"pairs", pairs}};
}

inline json to_json(const OmegaLabel& o)
{
    json blocks = json::array();
    for (const auto& b : o.blocks)
        blocks.push_back({{"size", 1 << b.exponent}, {"s", b.s}, {"hook", to_json(b.hook)}});
    return {{"kappa", std::string(1, kappa_symbol(o.kappa))}, {"q", o.q}, {"blocks", blocks}};
}

inline json to_json(const ParabolicCorrespondent& c)
{
    return {{"line", {{"s", c.line_s}, {"lambda", json::array({1})}}}, {"rest", to_json(c.rest)}};
}

// ---------------------------------------------------------------------------

inline Partition partition_from_json(const json& j)
{
    detail::require(j.is_array(), "partition must be a JSON array of integers");
    std::vector<int> parts;
    for (const auto& x : j) {
        detail::require(x.is_number_integer(), "partition must be a JSON array of integers");
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

inline HookPartition hook_from_json(const json& j)
{
    detail::require(j.is_object() && j.contains("m") && j.contains("leg"),
                    "hook must be an object with keys m and leg");
    return HookPartition(j.at("m").get<int>(), j.at("leg").get<int>());
}

inline GLabel glabel_from_json(const json& j)
{
    detail::require(j.is_object() && j.contains("kappa") && j.contains("q") && j.contains("pairs"),
                    "label must be an object with keys kappa, q, pairs");
    std::vector<LabelPair> pairs;
    for (const auto& p : j.at("pairs")) {
        detail::require(p.is_object() && p.contains("s") && p.contains("lambda"),
                        "label pairs must be objects with keys s and lambda");
        pairs.push_back({p.at("s").get<int>(), partition_from_json(p.at("lambda"))});
    }
    return GLabel(parse_kappa(j.at("kappa").get<std::string>()), j.at("q").get<int>(), std::move(pairs));
}

inline OmegaLabel omega_from_json(const json& j)
{
    detail::require(j.is_object() && j.contains("kappa") && j.contains("q") && j.contains("blocks"),
                    "omega label must be an object with keys kappa, q, blocks");
    OmegaLabel out{parse_kappa(j.at("kappa").get<std::string>()), j.at("q").get<int>(), {}};
    for (const auto& b : j.at("blocks")) {
        const auto hook = hook_from_json(b.at("hook"));
        const int size = b.contains("size") ? b.at("size").get<int>() : hook.m;
        detail::require(size >= 1 && (size & (size - 1)) == 0, "omega block size must be a power of 2");
        out.blocks.push_back({std::countr_zero(static_cast<unsigned>(size)), b.at("s").get<int>(), hook});
    }
    validate(out);
    return out;
}

} // namespace oddchar::json_io
