#include "parteq/notation.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "parteq/errors.hpp"

namespace parteq {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_empty_token(std::string_view s)
{
    s = trim(s);
    return s.empty() || s == "0" || s == "ε" || s == "eps";
}

std::vector<std::string_view> split_terms(std::string_view s)
{
    std::vector<std::string_view> out;
    if (is_empty_token(s))
        return out;
    std::size_t start = 0;
    for (;;) {
        const auto plus = s.find('+', start);
        out.push_back(trim(s.substr(start, plus == std::string_view::npos ? plus : plus - start)));
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    return out;
}

/// Leading integer of `term`; the remainder is returned in `suffix`.
int leading_int(std::string_view term, std::string_view& suffix)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), v);
    if (ec != std::errc() || ptr == term.data())
        throw StructureError("cannot read a part from '" + std::string(term) + "'");
    suffix = trim(term.substr(static_cast<std::size_t>(ptr - term.data())));
    return v;
}

int plain_int(std::string_view term)
{
    std::string_view suffix;
    const int v = leading_int(term, suffix);
    if (!suffix.empty())
        throw StructureError("unexpected suffix '" + std::string(suffix) + "' on part");
    return v;
}

template <class Range, class F>
std::string join(const Range& r, F&& render)
{
    std::string out;
    for (const auto& e : r) {
        if (!out.empty())
            out += '+';
        out += render(e);
    }
    return out.empty() ? "0" : out;
}

std::vector<int> int_array(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_array())
        throw StructureError(std::string("expected array field '") + key + "'");
    std::vector<int> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_number_integer())
            throw StructureError(std::string("non-integer entry in '") + key + "'");
        out.push_back(e.get<int>());
    }
    return out;
}

} // namespace

std::string to_text(const Partition& p)
{
    return join(p.parts(), [](int v) { return std::to_string(v); });
}

std::string to_text(const FPartition& p)
{
    std::vector<std::string> terms;
    bool pending = p.overlined_one;
    for (int v : p.parts) {
        if (v == 1 && pending) {
            terms.emplace_back("1*");
            pending = false;
        }
        terms.push_back(std::to_string(v));
    }
    if (pending)
        terms.emplace_back("1*");
    return join(terms, [](const std::string& s) { return s; });
}

std::string to_text(const SignedPartition& s)
{
    return to_text(s.positive) + " | " + to_text(s.negative);
}

std::string to_text(const XLabeledPartition& p)
{
    return join(p.entries(),
                [](const LabeledPart& e) { return std::to_string(e.value) + (e.x ? "x" : ""); });
}

std::string to_text(const BicoloredPartition& p)
{
    return join(p.entries(), [](const ColoredPart& e) {
        return std::to_string(e.value) + (e.color == Color::red ? "r" : "b");
    });
}

std::string to_text(const PartitionPair& p)
{
    return "(" + to_text(p.alpha) + ", " + to_text(p.beta) + ")";
}

std::string to_text(const FamilyValue& v)
{
    return std::visit([](const auto& x) { return to_text(x); }, v);
}

Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    for (auto term : split_terms(text))
        parts.push_back(plain_int(term));
    return Partition(std::move(parts));
}

FPartition parse_f_partition(std::string_view text)
{
    FPartition out;
    std::vector<int> parts;
    int last = 0;
    for (auto term : split_terms(text)) {
        std::string_view suffix;
        const int v = leading_int(term, suffix);
        if (suffix == "*") {
            if (v != 1)
                throw StructureError("only a part equal to 1 may be overlined");
            if (out.overlined_one)
                throw StructureError("more than one overlined 1");
            out.overlined_one = true;
        } else if (suffix.empty()) {
            parts.push_back(v);
        } else {
            throw StructureError("unexpected suffix '" + std::string(suffix) + "' on part");
        }
        if (last != 0 && v > last)
            throw StructureError("parts are not weakly decreasing");
        last = v;
    }
    out.parts = Partition(std::move(parts));
    return out;
}

SignedPartition parse_signed(std::string_view text)
{
    const auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw StructureError("signed partition needs 'POS | NEG'");
    return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

XLabeledPartition parse_x_labeled(std::string_view text)
{
    std::vector<LabeledPart> entries;
    for (auto term : split_terms(text)) {
        std::string_view suffix;
        const int v = leading_int(term, suffix);
        if (!suffix.empty() && suffix != "x")
            throw StructureError("unexpected suffix '" + std::string(suffix) + "' on part");
        entries.push_back({v, suffix == "x"});
    }
    return XLabeledPartition(std::move(entries));
}

BicoloredPartition parse_bicolored(std::string_view text)
{
    std::vector<ColoredPart> entries;
    for (auto term : split_terms(text)) {
        std::string_view suffix;
        const int v = leading_int(term, suffix);
        if (suffix == "_")
            suffix = {};
        if (!suffix.empty() && suffix.front() == '_')
            suffix.remove_prefix(1);
        if (suffix.empty() || suffix == "b")
            entries.push_back({v, Color::blue});
        else if (suffix == "r")
            entries.push_back({v, Color::red});
        else
            throw StructureError("unexpected suffix '" + std::string(suffix) + "' on part");
    }
    return BicoloredPartition(std::move(entries));
}

PartitionPair parse_pair(std::string_view text)
{
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw StructureError("pair needs '(ALPHA, BETA)'");
    text = text.substr(1, text.size() - 2);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw StructureError("pair needs '(ALPHA, BETA)'");
    return {parse_partition(text.substr(0, comma)), parse_partition(text.substr(comma + 1))};
}

json to_json(const Partition& p) { return {{"parts", p.parts()}}; }

json to_json(const FPartition& p)
{
    return {{"parts", p.parts.parts()}, {"overlined_one", p.overlined_one}};
}

json to_json(const SignedPartition& s)
{
    return {{"pos", s.positive.parts()}, {"neg", s.negative.parts()}};
}

json to_json(const XLabeledPartition& p)
{
    json entries = json::array();
    for (const auto& e : p.entries())
        entries.push_back({{"v", e.value}, {"x", e.x}});
    return {{"entries", entries}};
}

json to_json(const BicoloredPartition& p)
{
    json entries = json::array();
    for (const auto& e : p.entries())
        entries.push_back({{"v", e.value}, {"c", e.color == Color::red ? "r" : "b"}});
    return {{"entries", entries}};
}

json to_json(const PartitionPair& p)
{
    return {{"alpha", p.alpha.parts()}, {"beta", p.beta.parts()}};
}

json to_json(const FamilyValue& v)
{
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

Carrier carrier_of(Family f)
{
    switch (f) {
    case Family::ped: return Carrier::partition;
    case Family::F: return Carrier::f_partition;
    case Family::F_signed:
    case Family::A_signed: return Carrier::signed_partition;
    case Family::V:
    case Family::C: return Carrier::pair;
    case Family::A: return Carrier::x_labeled;
    case Family::B: return Carrier::bicolored;
    }
    throw UsageError("unknown family");
}

FamilyValue value_from_json(Carrier carrier, const json& j)
{
    if (!j.is_object())
        throw StructureError("expected a JSON object");
    switch (carrier) {
    case Carrier::partition:
        return Partition(int_array(j, "parts"));
    case Carrier::f_partition: {
        FPartition out{Partition(int_array(j, "parts")), false};
        if (j.contains("overlined_one")) {
            if (!j.at("overlined_one").is_boolean())
                throw StructureError("'overlined_one' must be a boolean");
            out.overlined_one = j.at("overlined_one").get<bool>();
        }
        return out;
    }
    case Carrier::signed_partition:
        return SignedPartition{Partition(int_array(j, "pos")), Partition(int_array(j, "neg"))};
    case Carrier::pair:
        return PartitionPair{Partition(int_array(j, "alpha")), Partition(int_array(j, "beta"))};
    case Carrier::x_labeled: {
        if (!j.contains("entries") || !j.at("entries").is_array())
            throw StructureError("expected array field 'entries'");
        std::vector<LabeledPart> entries;
        for (const auto& e : j.at("entries")) {
            if (!e.is_object() || !e.contains("v") || !e.at("v").is_number_integer())
                throw StructureError("x-labeled entry needs integer 'v'");
            const bool x = e.contains("x") && e.at("x").is_boolean() && e.at("x").get<bool>();
            entries.push_back({e.at("v").get<int>(), x});
        }
        return XLabeledPartition(std::move(entries));
    }
    case Carrier::bicolored: {
        if (!j.contains("entries") || !j.at("entries").is_array())
            throw StructureError("expected array field 'entries'");
        std::vector<ColoredPart> entries;
        for (const auto& e : j.at("entries")) {
            if (!e.is_object() || !e.contains("v") || !e.at("v").is_number_integer() ||
                !e.contains("c") || !e.at("c").is_string())
                throw StructureError("bicolored entry needs integer 'v' and color 'c'");
            const auto c = e.at("c").get<std::string>();
            if (c != "b" && c != "r")
                throw StructureError("color must be \"b\" or \"r\"");
            entries.push_back({e.at("v").get<int>(), c == "r" ? Color::red : Color::blue});
        }
        return BicoloredPartition(std::move(entries));
    }
    }
    throw UsageError("unknown carrier");
}

FamilyValue parse_value(Carrier carrier, std::string_view input)
{
    const auto t = trim(input);
    if (!t.empty() && t.front() == '{') {
        json j = json::parse(t.begin(), t.end(), nullptr, false);
        if (j.is_discarded())
            throw StructureError("input is not valid JSON");
        return value_from_json(carrier, j);
    }
    switch (carrier) {
    case Carrier::partition: return parse_partition(t);
    case Carrier::f_partition: return parse_f_partition(t);
    case Carrier::signed_partition: return parse_signed(t);
    case Carrier::x_labeled: return parse_x_labeled(t);
    case Carrier::pair: return parse_pair(t);
    case Carrier::bicolored: return parse_bicolored(t);
    }
    throw UsageError("unknown carrier");
}

} // namespace parteq
