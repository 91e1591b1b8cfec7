#include "parteq/cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "parteq/bijections.hpp"
#include "parteq/enumerate.hpp"
#include "parteq/errors.hpp"
#include "parteq/identities.hpp"
#include "parteq/notation.hpp"
#include "parteq/roundtrip.hpp"
#include "parteq/statistics.hpp"
#include "parteq/table11.hpp"
#include "parteq/theorems.hpp"

namespace parteq {

namespace {

struct Globals {
    std::string format = "text";
    std::optional<int> limit;
    bool quiet = false;

    bool json() const { return format == "json"; }
    Limits limits() const
    {
        Limits l = Limits::from_env();
        if (limit)
            l.max_n = *limit;
        return l;
    }
};

int exit_code_for(ErrorKind k)
{
    switch (k) {
    case ErrorKind::usage:
    case ErrorKind::range: return exit_usage;
    case ErrorKind::limit: return exit_limit;
    case ErrorKind::structure:
    case ErrorKind::domain: return exit_domain;
    case ErrorKind::integrity:
    case ErrorKind::bijectivity: return exit_integrity;
    }
    return exit_usage;
}

int cmd_enumerate(const Globals& g, const std::string& family_tag, int n, std::optional<int> m,
                  std::optional<int> k, std::ostream& out)
{
    const Family family = parse_family(family_tag);
    const auto values = enumerate(family, n, m, k, g.limits());
    if (!g.quiet)
        for (const auto& v : values)
            out << (g.json() ? to_json(v).dump() : to_text(v)) << '\n';
    if (g.json())
        out << nlohmann::json{{"count", values.size()}}.dump() << '\n';
    else
        out << "count=" << values.size() << '\n';
    return exit_ok;
}

int cmd_map(const Globals& g, const std::string& tag, bool inverse, const std::string& input,
            std::ostream& out)
{
    const Bijection b = parse_bijection(tag);
    const Family from = inverse ? codomain_of(b) : domain_of(b);
    const FamilyValue value = parse_value(carrier_of(from), input);
    const FamilyValue image = inverse ? apply_inverse(b, value) : apply_forward(b, value);
    if (g.json()) {
        out << nlohmann::json{{"bijection", bijection_name(b)},
                              {"inverse", inverse},
                              {"input", to_json(value)},
                              {"output", to_json(image)},
                              {"text", to_text(image)}}
                   .dump()
            << '\n';
    } else {
        out << to_text(image) << '\n';
        if (!g.quiet)
            out << to_json(image).dump() << '\n';
    }
    return exit_ok;
}

template <class Report>
int emit(const Globals& g, const std::string& summary, bool ok, const std::string& first_failure,
         const Report& report, std::ostream& out)
{
    if (!g.json()) {
        out << (ok ? "PASS " : "FAIL ") << summary << '\n';
        if (!ok)
            out << "first counterexample: " << first_failure << '\n';
        if (!g.quiet)
            out << report.to_json().dump() << '\n';
    } else {
        out << report.to_json().dump() << '\n';
    }
    return ok ? exit_ok : exit_verification_failed;
}

int cmd_verify(const Globals& g, const std::string& target, std::optional<int> n_max,
               std::optional<int> order, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        const auto d = std::chrono::steady_clock::now() - start;
        return " (" + std::to_string(std::chrono::duration<double>(d).count()) + " s)";
    };
    const Limits limits = g.limits();

    if (target == "theorem1.2" || target == "theorem1.3" || target == "theorem1.4") {
        const int n = n_max.value_or(target == "theorem1.4" ? 22 : 30);
        const auto r = target == "theorem1.2"   ? verify_theorem12(n, limits)
                       : target == "theorem1.3" ? verify_theorem13(n, limits)
                                                : verify_theorem14(n, limits);
        return emit(g,
                    target + " n_max=" + std::to_string(n) + " cells=" + std::to_string(r.cells) +
                        " objects=" + std::to_string(r.objects) + elapsed(),
                    r.ok(), r.ok() ? "" : r.failures.front(), r, out);
    }
    if (is_identity(target)) {
        const int N = order.value_or(50);
        const auto r = verify_identity(target, N);
        std::string first;
        if (const auto* m = r.first_mismatch())
            first = m->lhs + " vs " + m->rhs + " at q^" + std::to_string(m->mismatch_degree) +
                    ": " + m->mismatch_lhs.to_string() + " != " + m->mismatch_rhs.to_string();
        return emit(g, target + " order=" + std::to_string(N) + elapsed(), r.equal, first, r, out);
    }
    const Bijection b = parse_bijection(target);
    const int n = n_max.value_or(b == Bijection::h ? 22 : 30);
    const auto r = roundtrip_report(b, n, limits);
    std::string first;
    if (!r.ok())
        first = r.failures.front().input + " [" + r.failures.front().stage + "] " +
                r.failures.front().detail;
    return emit(g,
                target + " n_max=" + std::to_string(n) + " checked=" + std::to_string(r.checked) +
                    " failures=" + std::to_string(r.failures.size()) + elapsed(),
                r.ok(), first, r, out);
}

int cmd_table11(const Globals& g, bool check, std::ostream& out)
{
    const auto rows = table11_rows();
    if (!g.quiet) {
        for (const auto& row : rows)
            out << row << '\n';
    }
    if (!check) {
        out << "rows=" << rows.size() << '\n';
        return exit_ok;
    }
    const auto diff = table11_mismatches();
    for (const auto& d : diff)
        out << d << '\n';
    out << (diff.empty() ? "PASS" : "FAIL") << " table11 rows=" << rows.size()
        << " mismatches=" << diff.size() << '\n';
    return diff.empty() ? exit_ok : exit_verification_failed;
}

int cmd_stats(const Globals& g, const std::string& family_tag, const std::string& input,
              std::ostream& out)
{
    const Family family = parse_family(family_tag);
    const FamilyValue value = parse_value(carrier_of(family), input);
    const auto verdict = validate_membership(family, value);
    const auto stats = statistics(value);
    if (g.json()) {
        nlohmann::json j = {{"family", family_name(family)},
                            {"object", to_json(value)},
                            {"statistics", stats},
                            {"member", verdict.ok}};
        if (!verdict.ok)
            j["reason"] = verdict.reason;
        out << j.dump() << '\n';
    } else {
        out << to_text(value) << '\n';
        for (const auto& [name, v] : stats)
            out << name << '=' << v << '\n';
        out << "member=" << (verdict.ok ? "true" : "false");
        if (!verdict.ok)
            out << " (" << verdict.reason << ')';
        out << '\n';
    }
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Enumerate, map and verify partitions with distinct even parts and their "
                 "signed, labeled and bicolored relatives"};
    app.name("parteq");
    app.require_subcommand(1);

    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--limit", g.limit, "Largest n any enumeration may reach (default 60)");
    app.add_flag("--quiet", g.quiet, "Only print summaries");

    std::string family, bijection, target, input;
    int n = 0;
    std::optional<int> m, k, n_max, order;
    bool inverse = false, check = false;

    auto* en = app.add_subcommand("enumerate", "List every member of a family cell");
    en->fallthrough();
    en->add_option("family", family, "ped, F, F_signed, V, A, A_signed, B or C")->required();
    en->add_option("--n", n, "Weight")->required();
    en->add_option("--m", m, "Length statistic (ped, F, F_signed only)");
    en->add_option("--k", k, "Second statistic");

    auto* mp = app.add_subcommand("map", "Apply a bijection or its inverse");
    mp->fallthrough();
    mp->add_option("bijection", bijection, "f1, f2, g1, g2 or h")->required();
    mp->add_flag("--inverse", inverse, "Apply the inverse map");
    mp->add_option("--input", input, "Object as JSON or text notation")->required();

    auto* vf = app.add_subcommand("verify", "Run an exhaustive or series check");
    vf->fallthrough();
    vf->add_option("target", target,
                   "theorem1.2, theorem1.3, theorem1.4, a bijection tag or an identity name")
        ->required();
    vf->add_option("--n-max", n_max, "Largest weight for exhaustive checks");
    vf->add_option("--order", order, "Truncation order for identities (default 50)");

    auto* tb = app.add_subcommand("table11", "Reproduce the n = 11 correspondence table for h");
    tb->fallthrough();
    tb->add_flag("--check", check, "Compare against the embedded golden table");

    auto* st = app.add_subcommand("stats", "Statistics and family membership of one object");
    st->fallthrough();
    st->add_option("family", family, "Family whose carrier type and rules apply")->required();
    st->add_option("--input", input, "Object as JSON or text notation")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*en)
            return cmd_enumerate(g, family, n, m, k, out);
        if (*mp)
            return cmd_map(g, bijection, inverse, input, out);
        if (*vf)
            return cmd_verify(g, target, n_max, order, out);
        if (*tb)
            return cmd_table11(g, check, out);
        if (*st)
            return cmd_stats(g, family, input, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_usage;
}

} // namespace parteq
