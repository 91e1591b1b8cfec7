#include "parteq/theorems.hpp"

#include <initializer_list>
#include <map>

#include "parteq/notation.hpp"
#include "parteq/statistics.hpp"

namespace parteq {

namespace {

using Tally = std::map<Cell, long>;

Tally tally(Family f, int n, const Limits& limits, long& objects, bool drop_m = false)
{
    Tally t;
    for (const auto& v : enumerate(f, n, {}, {}, limits)) {
        Cell c = cell_of(f, v);
        if (drop_m)
            c.m = -1;
        ++t[c];
        ++objects;
    }
    return t;
}

std::string cell_text(const Cell& c)
{
    std::string s = "(n=" + std::to_string(c.n);
    if (c.m >= 0)
        s += ", m=" + std::to_string(c.m);
    return s + ", k=" + std::to_string(c.k) + ")";
}

/// Compares named tallies cell by cell over the union of their cells.
void compare(CardinalityReport& r, std::initializer_list<std::pair<const char*, const Tally*>> ts)
{
    std::map<Cell, int> all;
    for (const auto& [name, t] : ts)
        for (const auto& [cell, count] : *t)
            all[cell] = 0;
    for (const auto& [cell, unused] : all) {
        ++r.cells;
        long first = -1;
        std::string line;
        bool same = true;
        for (const auto& [name, t] : ts) {
            const auto it = t->find(cell);
            const long c = it == t->end() ? 0 : it->second;
            if (first < 0)
                first = c;
            same = same && c == first;
            line += std::string(line.empty() ? "" : ", ") + name + "=" + std::to_string(c);
        }
        if (!same)
            r.failures.push_back(cell_text(cell) + ": " + line);
    }
}

} // namespace

nlohmann::json CardinalityReport::to_json() const
{
    return {{"name", name},   {"n_max", n_max},       {"cells", cells},
            {"objects", objects}, {"pass", ok()}, {"failures", failures}};
}

CardinalityReport verify_theorem12(int n_max, const Limits& limits)
{
    CardinalityReport r;
    r.name = "theorem1.2";
    r.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        const auto ped = tally(Family::ped, n, limits, r.objects);
        const auto f = tally(Family::F, n, limits, r.objects);
        const auto fs = tally(Family::F_signed, n, limits, r.objects);
        compare(r, {{"ped", &ped}, {"F", &f}, {"F_signed", &fs}});
    }
    return r;
}

CardinalityReport verify_theorem13(int n_max, const Limits& limits)
{
    CardinalityReport r;
    r.name = "theorem1.3";
    r.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        const auto v = tally(Family::V, n, limits, r.objects);
        const auto a = tally(Family::A, n, limits, r.objects);
        const auto as = tally(Family::A_signed, n, limits, r.objects);
        compare(r, {{"V", &v}, {"A", &a}, {"A_signed", &as}});

        long v_total = 0;
        for (const auto& [cell, c] : v)
            v_total += c;
        const long ped_total = static_cast<long>(enumerate_ped(n, {}, {}, limits).size());
        ++r.cells;
        if (v_total != ped_total)
            r.failures.push_back("n=" + std::to_string(n) + ": sum_k V(n,k)=" +
                                 std::to_string(v_total) + ", ped(n)=" + std::to_string(ped_total));
    }
    return r;
}

CardinalityReport verify_theorem14(int n_max, const Limits& limits)
{
    CardinalityReport r;
    r.name = "theorem1.4";
    r.n_max = n_max;
    for (int n = 0; n <= n_max; ++n) {
        const auto ped = tally(Family::ped, n, limits, r.objects, true);
        const auto b = tally(Family::B, n, limits, r.objects);
        compare(r, {{"ped", &ped}, {"B", &b}});
    }

    std::vector<std::string> b4;
    for (const auto& p : enumerate_B(4, {}, limits))
        b4.push_back(to_text(p));
    const std::vector<std::string> listed = {"4b", "3b+1b", "2b+2r", "2b+1b+1r"};
    if (b4 != listed) {
        std::string got;
        for (const auto& s : b4)
            got += (got.empty() ? "" : ", ") + s;
        r.failures.push_back("B(4) = {" + got + "}, expected {4b, 3b+1b, 2b+2r, 2b+1b+1r}");
    }
    return r;
}

} // namespace parteq
