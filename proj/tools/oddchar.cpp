// oddchar: command-line front end. Every invocation prints one JSON document.
// Exit codes: 0 success, 1 a verify suite found failures, 2 usage or domain
// error, 3 internal consistency failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "oddchar/errors.hpp"
#include "oddchar/glu_labels.hpp"
#include "oddchar/json_io.hpp"
#include "oddchar/omega_normalizer.hpp"
#include "oddchar/sym_correspondences.hpp"
#include "oddchar/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace oddchar;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_violation = 3;

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        out.push_back(item);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

int parse_int(const std::string& s)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw DomainError("expected an integer, got '" + s + "'");
    }
    detail::require(used == s.size(), "expected an integer, got '" + s + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    for (const auto& item : split(s, ','))
        out.push_back(parse_int(item));
    return out;
}

/// "2,2,1", "[2,2,1]", "[]" or "" (the empty partition).
Partition parse_partition(std::string s)
{
    if (!s.empty() && s.front() == '[')
        return json_io::partition_from_json(json::parse(s));
    if (s.empty() || s == "0")
        return Partition();
    return Partition(parse_int_list(s));
}

/// "s=1:l=2,1;s=0:l=1", or a JSON array of {"s","lambda"} objects.
std::vector<LabelPair> parse_pairs(const std::string& s)
{
    std::vector<LabelPair> out;
    if (!s.empty() && s.front() == '[') {
        for (const auto& p : json::parse(s))
            out.push_back({p.at("s").get<int>(), json_io::partition_from_json(p.at("lambda"))});
        return out;
    }
    for (const auto& item : split(s, ';')) {
        const auto colon = item.find(':');
        detail::require(colon != std::string::npos && item.rfind("s=", 0) == 0 &&
                            item.compare(colon + 1, 2, "l=") == 0,
                        "pairs must look like s=1:l=2,1;s=0:l=1");
        out.push_back({parse_int(item.substr(2, colon - 2)), parse_partition(item.substr(colon + 3))});
    }
    return out;
}

struct LabelArgs {
    std::string kappa = "+";
    int q = 3;
    std::string pairs;
    std::string label;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--kappa", kappa, "+ for GL, - for GU")->capture_default_str();
        cmd->add_option("--q", q, "odd prime power")->capture_default_str();
        cmd->add_option("--pairs", pairs, "pairs as s=1:l=2,1;s=0:l=1");
        cmd->add_option("--label", label, "full label as JSON");
    }

    GLabel get() const
    {
        if (!label.empty())
            return json_io::glabel_from_json(json::parse(label));
        detail::require(!pairs.empty(), "either --pairs or --label is required");
        return GLabel(parse_kappa(kappa), q, parse_pairs(pairs));
    }
};

void emit(const json& doc) { std::cout << doc.dump() << '\n'; }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Canonical odd-degree character correspondences for S_n, GL_n(q) and GU_n(q)"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));

    std::string part;
    std::optional<json> result;
    int code = exit_ok;

    auto* star = app.add_subcommand("star", "odd constituent of the restriction to S_{n-1}");
    star->add_option("partition", part)->required();
    star->callback([&] { result = json{{"result", json_io::to_json(star_sn(parse_partition(part)))}}; });

    auto* alpha = app.add_subcommand("alpha", "one hook per 2-adic block");
    alpha->add_option("partition", part)->required();
    alpha->callback([&] { result = json{{"theta", json_io::to_json(alpha_sn(parse_partition(part)))}}; });

    auto* sharp = app.add_subcommand("sharp", "linear character of the Sylow 2-subgroup");
    sharp->add_option("partition", part)->required();
    sharp->callback([&] {
        const auto lambda = parse_partition(part);
        result = json{{"sharp", json_io::to_json(sharp_sn(lambda))},
                      {"blocks", two_adic(static_cast<std::uint64_t>(lambda.size())).block_sizes()}};
    });

    std::string blocks;
    auto* young = app.add_subcommand("young-star", "odd character of a Young subgroup of odd index");
    young->add_option("partition", part)->required();
    young->add_option("--blocks", blocks, "block sizes, e.g. 1,4")->required();
    young->callback([&] {
        json out = json::array();
        for (const auto& p : young_star(parse_partition(part), parse_int_list(blocks)))
            out.push_back(json_io::to_json(p));
        result = json{{"result", out}};
    });

    int k = 0;
    int t = 0;
    auto* wreath = app.add_subcommand("wreath-star", "odd character of S_k wr S_t");
    wreath->add_option("partition", part)->required();
    wreath->add_option("--k", k)->required();
    wreath->add_option("--t", t)->required();
    wreath->callback([&] { result = json{{"result", json_io::to_json(theorem_d_star(parse_partition(part), k, t))}}; });

    LabelArgs label_args;
    auto* parabolic = app.add_subcommand("parabolic-star", "odd character of the maximal parabolic (GL only)");
    label_args.attach(parabolic);
    parabolic->callback([&] { result = json_io::to_json(parabolic_star(label_args.get())); });

    auto* sharp_glu_cmd = app.add_subcommand("sharp-glu", "point of Omega(n) for an odd label");
    label_args.attach(sharp_glu_cmd);
    sharp_glu_cmd->callback([&] { result = json{{"omega", json_io::to_json(sharp_glu(label_args.get()))}}; });

    std::string omega_text;
    auto* omega_inv = app.add_subcommand("sharp-glu-inverse", "odd label for a point of Omega(n)");
    omega_inv->add_option("--omega", omega_text, "omega label as JSON")->required();
    omega_inv->callback([&] {
        result = json{{"label", json_io::to_json(sharp_glu_inverse(json_io::omega_from_json(json::parse(omega_text))))}};
    });

    auto* levi = app.add_subcommand("levi-star", "odd labels of a Levi subgroup of odd index");
    label_args.attach(levi);
    levi->add_option("--blocks", blocks, "block sizes, e.g. 1,2")->required();
    levi->callback([&] {
        json out = json::array();
        for (const auto& l : levi_star(label_args.get(), parse_int_list(blocks)))
            out.push_back(json_io::to_json(l));
        result = json{{"result", out}};
    });

    std::string what;
    int n = 0;
    int count_q = 3;
    std::string count_kappa = "+";
    auto* count = app.add_subcommand("count", "number of odd-degree characters");
    count->add_option("group", what)->required()->check(CLI::IsMember({"sn", "gl", "gu", "sl", "real"}));
    count->add_option("--n", n)->required();
    count->add_option("--q", count_q)->capture_default_str();
    count->add_option("--kappa", count_kappa, "for real: + or -")->capture_default_str();
    count->callback([&] {
        Integer c;
        if (what == "sn")
            c = count_odd_irr_sn(n);
        else if (what == "gl")
            c = count_odd_irr_gl(n, count_q, Kappa::plus);
        else if (what == "gu")
            c = count_odd_irr_gl(n, count_q, Kappa::minus);
        else if (what == "sl")
            c = count_odd_irr_sl(n, count_q);
        else
            c = count_real_odd(n, count_q, parse_kappa(count_kappa));
        result = json{{"count", json_io::to_json(c)}};
    });

    std::string suite;
    int max_n = 0;
    std::string qs;
    std::string kappas = "+,-";
    unsigned jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification sweep");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--max-n", max_n, "upper bound (suite default if omitted)");
    verify_cmd->add_option("--q", qs, "comma-separated list of q");
    verify_cmd->add_option("--kappa", kappas, "comma-separated kappas")->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    verify_cmd->callback([&] {
        verify::Options o;
        o.max_n = max_n;
        if (!qs.empty())
            o.qs = parse_int_list(qs);
        o.kappas.clear();
        for (const auto& s : split(kappas, ','))
            o.kappas.push_back(parse_kappa(s));
        o.jobs = std::max(1U, jobs);
        const auto report = verify::run_suite(suite, o);
        result = report.to_json();
        if (!report.ok())
            code = exit_verify_failed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        emit({{"error", e.what()}});
        return exit_usage;
    } catch (const TheoremViolation& e) {
        emit({{"error", e.what()}, {"kind", "theorem-violation"}});
        return exit_violation;
    } catch (const std::exception& e) {
        emit({{"error", e.what()}});
        return exit_usage;
    }
    if (result)
        emit(*result);
    return code;
}
