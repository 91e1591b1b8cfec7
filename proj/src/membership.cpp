#include "parteq/membership.hpp"

#include <functional>
#include <string>

#include "parteq/errors.hpp"

namespace parteq {

namespace {

std::string str(int v) { return std::to_string(v); }

bool has_distinct_values(const Partition& p) { return p.has_distinct_parts(); }

} // namespace

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::ped: return "ped";
    case Family::F: return "F";
    case Family::F_signed: return "F_signed";
    case Family::V: return "V";
    case Family::A: return "A";
    case Family::A_signed: return "A_signed";
    case Family::B: return "B";
    case Family::C: return "C";
    }
    return "?";
}

Family parse_family(std::string_view tag)
{
    for (Family f : all_families)
        if (family_name(f) == tag)
            return f;
    if (tag == "F-1" || tag == "Fsigned")
        return Family::F_signed;
    if (tag == "A-1" || tag == "Asigned")
        return Family::A_signed;
    throw UsageError("unknown family '" + std::string(tag) + "'");
}

Verdict check_ped(const Partition& p)
{
    int previous_even = 0;
    for (int v : p) {
        if (v % 2 == 0) {
            if (v == previous_even)
                return Verdict::fail("even part " + str(v) + " repeats");
            previous_even = v;
        }
    }
    return Verdict::pass();
}

Verdict check_F(const FPartition& p)
{
    if (p.weight() == 0)
        return Verdict::pass();
    const int ones = p.ones();
    if (ones == 0)
        return Verdict::fail("no plain part equal to 1");
    const int bound = 2 * ones;
    int previous_odd = 0;
    for (int v : p.parts) {
        if (v > bound)
            return Verdict::fail("part " + str(v) + " exceeds twice the number of ones (" +
                                 str(bound) + ")");
        if (v > 1 && v % 2 == 1) {
            if (v == previous_odd)
                return Verdict::fail("odd part " + str(v) + " repeats");
            previous_odd = v;
        }
    }
    return Verdict::pass();
}

Verdict check_F_signed(const SignedPartition& s)
{
    if (s.weight() < 0)
        return Verdict::fail("negative weight");
    for (int v : s.positive)
        if (v % 2 != 0)
            return Verdict::fail("positive part " + str(v) + " is odd");
    if (!has_distinct_values(s.positive))
        return Verdict::fail("positive parts repeat");
    const int bound = 2 * s.positive_length() - 1;
    for (int v : s.negative) {
        if (v % 2 == 0)
            return Verdict::fail("negative part " + str(v) + " is even");
        if (v > bound)
            return Verdict::fail("negative part " + str(v) + " exceeds 2l+ - 1 = " + str(bound));
    }
    if (!has_distinct_values(s.negative))
        return Verdict::fail("negative parts repeat");
    return Verdict::pass();
}

Verdict check_V(const PartitionPair& pair)
{
    if (!has_distinct_values(pair.alpha))
        return Verdict::fail("alpha parts repeat");
    if (!has_distinct_values(pair.beta))
        return Verdict::fail("beta parts repeat");
    if (pair.beta.max_part() > pair.alpha.length())
        return Verdict::fail("max(beta) = " + str(pair.beta.max_part()) + " exceeds l(alpha) = " +
                             str(pair.alpha.length()));
    return Verdict::pass();
}

Verdict check_A(const XLabeledPartition& p)
{
    const auto& e = p.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i].x)
            continue;
        const int next = i + 1 < e.size() ? e[i + 1].value : 0;
        if (e[i].value - next < 2)
            return Verdict::fail("labeled part " + str(e[i].value) + " is within 1 of the next part");
    }
    return Verdict::pass();
}

Verdict check_A_signed(const SignedPartition& s)
{
    if (s.weight() < 0)
        return Verdict::fail("negative weight");
    const auto& pos = s.positive.parts();
    for (std::size_t i = 0; i + 1 < pos.size(); ++i)
        if (pos[i] - pos[i + 1] < 2)
            return Verdict::fail("positive parts " + str(pos[i]) + " and " + str(pos[i + 1]) +
                                 " differ by less than 2");
    if (!pos.empty() && pos.back() < 2)
        return Verdict::fail("smallest positive part is below 2");
    if (!has_distinct_values(s.negative))
        return Verdict::fail("negative parts repeat");
    if (s.negative.max_part() > s.positive_length())
        return Verdict::fail("negative part " + str(s.negative.max_part()) + " exceeds l+ = " +
                             str(s.positive_length()));
    return Verdict::pass();
}

std::optional<std::vector<std::size_t>> red_blue_matching(const BicoloredPartition& p)
{
    const auto& e = p.entries();
    std::vector<std::size_t> reds, blues;
    for (std::size_t i = 0; i < e.size(); ++i)
        (e[i].color == Color::red ? reds : blues).push_back(i);

    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> owner(blues.size(), none); // blue slot -> red slot
    std::vector<std::size_t> partner(reds.size(), none);

    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t r) {
        const int c = e[reds[r]].value;
        for (std::size_t b = 0; b < blues.size(); ++b) {
            const int v = e[blues[b]].value;
            if ((v != c && v != c + 1) || seen[b])
                continue;
            seen[b] = 1;
            if (owner[b] == none || augment(owner[b])) {
                owner[b] = r;
                partner[r] = b;
                return true;
            }
        }
        return false;
    };

    for (std::size_t r = 0; r < reds.size(); ++r) {
        seen.assign(blues.size(), 0);
        if (!augment(r))
            return std::nullopt;
    }
    std::vector<std::size_t> out(reds.size());
    for (std::size_t r = 0; r < reds.size(); ++r)
        out[r] = blues[partner[r]];
    return out;
}

Verdict check_B(const BicoloredPartition& p)
{
    if (!has_distinct_values(p.blue_values()))
        return Verdict::fail("blue parts repeat");
    if (!has_distinct_values(p.red_values()))
        return Verdict::fail("red parts repeat");
    if (!red_blue_matching(p))
        return Verdict::fail("no injective matching of reds c to blues c or c+1");
    return Verdict::pass();
}

Verdict check_C(const PartitionPair& pair)
{
    if (!has_distinct_values(pair.alpha))
        return Verdict::fail("alpha parts repeat");
    if (!has_distinct_values(pair.beta))
        return Verdict::fail("beta parts repeat");
    for (int v : pair.beta)
        if (v % 2 != 0)
            return Verdict::fail("beta part " + str(v) + " is odd");
    return Verdict::pass();
}

Verdict validate_membership(Family family, const FamilyValue& value)
{
    auto want = [&]<typename T>(auto&& check) -> Verdict {
        if (const T* v = std::get_if<T>(&value))
            return check(*v);
        return Verdict::fail("wrong object type for family " + std::string(family_name(family)));
    };
    switch (family) {
    case Family::ped: return want.template operator()<Partition>(check_ped);
    case Family::F: return want.template operator()<FPartition>(check_F);
    case Family::F_signed: return want.template operator()<SignedPartition>(check_F_signed);
    case Family::V: return want.template operator()<PartitionPair>(check_V);
    case Family::A: return want.template operator()<XLabeledPartition>(check_A);
    case Family::A_signed: return want.template operator()<SignedPartition>(check_A_signed);
    case Family::B: return want.template operator()<BicoloredPartition>(check_B);
    case Family::C: return want.template operator()<PartitionPair>(check_C);
    }
    throw UsageError("unknown family");
}

} // namespace parteq
