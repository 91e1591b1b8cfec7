#include "parteq/roundtrip.hpp"

#include <set>

#include "parteq/errors.hpp"
#include "parteq/notation.hpp"

namespace parteq {

namespace {

std::string cell_text(const Cell& c)
{
    std::string s = "(n=" + std::to_string(c.n);
    if (c.m >= 0)
        s += ", m=" + std::to_string(c.m);
    return s + ", k=" + std::to_string(c.k) + ")";
}

} // namespace

nlohmann::json RoundtripReport::to_json() const
{
    nlohmann::json failures_json = nlohmann::json::array();
    for (const auto& f : failures)
        failures_json.push_back({{"input", f.input}, {"stage", f.stage}, {"detail", f.detail}});
    return {{"bijection", bijection_name(bijection)},
            {"n_max", n_max},
            {"checked", checked},
            {"codomain_checked", codomain_checked},
            {"failures", failures_json}};
}

RoundtripReport roundtrip_report(Bijection b, int n_max, const Limits& limits)
{
    RoundtripReport report;
    report.bijection = b;
    report.n_max = n_max;
    const Family dom = domain_of(b);
    const Family cod = codomain_of(b);
    auto fail = [&](const FamilyValue& v, std::string stage, std::string detail) {
        report.failures.push_back({to_text(v), std::move(stage), std::move(detail)});
    };

    for (int n = 0; n <= n_max; ++n) {
        const auto domain = enumerate(dom, n, {}, {}, limits);
        const auto codomain = enumerate(cod, n, {}, {}, limits);
        std::set<std::string> images;

        for (const auto& x : domain) {
            ++report.checked;
            const Cell cell = cell_of(dom, x);
            ++report.cells[cell].domain;
            FamilyValue y;
            try {
                y = apply_forward(b, x);
            } catch (const Error& e) {
                fail(x, "forward", e.what());
                continue;
            }
            if (auto v = validate_membership(cod, y); !v) {
                fail(x, "codomain", to_text(y) + ": " + v.reason);
                continue;
            }
            // Each map sends cell (n, m, k) onto the codomain cell (n, m, k).
            if (cell_of(cod, y) != cell) {
                fail(x, "statistics",
                     to_text(y) + " is in " + cell_text(cell_of(cod, y)) + ", expected " +
                         cell_text(cell));
            }
            if (b == Bijection::g2) {
                const auto& s = std::get<SignedPartition>(y);
                if (s.positive_length() != std::get<XLabeledPartition>(x).length())
                    fail(x, "statistics", "g2 changed the number of parts");
            }
            if (!images.insert(to_text(y)).second)
                fail(x, "injectivity", "image " + to_text(y) + " repeats");
            try {
                if (apply_inverse(b, y) != x)
                    fail(x, "inverse", "inverse of " + to_text(y) + " is " +
                                           to_text(apply_inverse(b, y)));
            } catch (const Error& e) {
                fail(x, "inverse", e.what());
            }
        }

        for (const auto& y : codomain) {
            ++report.codomain_checked;
            ++report.cells[cell_of(cod, y)].codomain;
            try {
                if (apply_forward(b, apply_inverse(b, y)) != y)
                    fail(y, "codomain-roundtrip", "forward(inverse(y)) differs");
            } catch (const Error& e) {
                fail(y, "codomain-roundtrip", e.what());
            }
        }
    }

    for (const auto& [cell, counts] : report.cells)
        if (counts.domain != counts.codomain)
            report.failures.push_back({cell_text(cell), "cardinality",
                                       std::to_string(counts.domain) + " domain vs " +
                                           std::to_string(counts.codomain) + " codomain"});
    return report;
}

} // namespace parteq
