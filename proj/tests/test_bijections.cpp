#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracle_tables.hpp"
#include "parteq/bijections.hpp"
#include "parteq/enumerate.hpp"
#include "parteq/errors.hpp"
#include "parteq/notation.hpp"
#include "parteq/roundtrip.hpp"
#include "parteq/table11.hpp"

using namespace parteq;

namespace {

Partition P(std::string_view s) { return parse_partition(s); }

} // namespace

TEST_SUITE("bijections")
{
    TEST_CASE("f1 and its inverse")
    {
        CHECK(to_text(apply_f1(P("2"))) == "1*+1");
        CHECK(to_text(apply_f1(P("4+3+1"))) == "4+1*+1+1+1");
        CHECK(to_text(apply_f1(P("1+1"))) == "1+1");
        CHECK(apply_f1_inv(parse_f_partition("1*+1")) == P("2"));
        CHECK(apply_f1_inv(parse_f_partition("4+1*+1+1+1")) == P("4+3+1"));
        CHECK(apply_f1_inv(parse_f_partition("1")) == P("1"));
        CHECK(apply_f1(Partition{}) == FPartition{});
    }

    TEST_CASE("f2 and its inverse")
    {
        CHECK(to_text(apply_f2(P("4+3+1"))) == "8+6+2 | 5+3");
        CHECK(to_text(apply_f2(P("2"))) == "2 | 0");
        CHECK(to_text(apply_f2(P("1"))) == "2 | 1");
        CHECK(apply_f2_inv(parse_signed("8+6+2 | 5+3")) == P("4+3+1"));
        CHECK(apply_f2_inv(parse_signed("2 | 0")) == P("2"));
        CHECK(apply_f2_inv(parse_signed("2 | 1")) == P("1"));
    }

    TEST_CASE("g1 and its inverse")
    {
        CHECK(to_text(apply_g1(parse_pair("(3+1, 2)"))) == "4+2x");
        CHECK(to_text(apply_g1(parse_pair("(2+1, 2+1)"))) == "4x+2x");
        CHECK(to_text(apply_g1(parse_pair("(5+2, 0)"))) == "5+2");
        CHECK(apply_g1_inv(parse_x_labeled("4+2x")) == parse_pair("(3+1, 2)"));
        CHECK(apply_g1_inv(parse_x_labeled("4x+2x")) == parse_pair("(2+1, 2+1)"));
        CHECK(apply_g1_inv(parse_x_labeled("5+2")) == parse_pair("(5+2, 0)"));
    }

    TEST_CASE("g2 and its inverse")
    {
        CHECK(to_text(apply_g2(parse_x_labeled("3x+1"))) == "4+2 | 2");
        CHECK(to_text(apply_g2(parse_x_labeled("3+1"))) == "5+2 | 2+1");
        CHECK(apply_g2(XLabeledPartition{}) == SignedPartition{});
        CHECK(apply_g2_inv(parse_signed("4+2 | 2")) == parse_x_labeled("3x+1"));
        CHECK(apply_g2_inv(parse_signed("5+2 | 2+1")) == parse_x_labeled("3+1"));
        CHECK(apply_g2_inv(SignedPartition{}) == XLabeledPartition{});
    }

    TEST_CASE("h on the worked examples")
    {
        CHECK(to_text(apply_h(parse_pair("(3, 8)"))) == "5b+4r+2b");
        CHECK(to_text(apply_h(parse_pair("(2+1, 8)"))) == "5b+5r+1b");
        CHECK(to_text(apply_h(parse_pair("(11, 0)"))) == "11b");
        CHECK(to_text(apply_h(parse_pair("(3+2, 4+2)"))) == "3b+3r+2b+2r+1b");
        CHECK(apply_h_inv(parse_bicolored("5b+4r+2b")) == parse_pair("(3, 8)"));
        CHECK(apply_h_inv(parse_bicolored("6b+5r")) == parse_pair("(1, 10)"));
        CHECK(apply_h_inv(parse_bicolored("4b")) == parse_pair("(4, 0)"));
    }

    TEST_CASE("domain violations are rejected before mapping")
    {
        CHECK_THROWS_AS(apply_f1(P("2+2")), DomainError);
        CHECK_THROWS_AS(apply_f2_inv(parse_signed("2 | 3")), DomainError);
        CHECK_THROWS_AS(apply_g1(parse_pair("(1, 2)")), DomainError);
        CHECK_THROWS_AS(apply_g2(parse_x_labeled("2x+1x")), DomainError);
        CHECK_THROWS_AS(apply_h(parse_pair("(3, 3)")), DomainError);
        CHECK_THROWS_AS(apply_h_inv(parse_bicolored("3b+1r")), DomainError);
        CHECK_THROWS_AS(apply_forward(Bijection::h, FamilyValue{P("3")}), DomainError);
    }

    TEST_CASE("type-erased dispatch")
    {
        CHECK(to_text(apply_forward(Bijection::f2, FamilyValue{P("4+3+1")})) == "8+6+2 | 5+3");
        CHECK(to_text(apply_inverse(Bijection::g2, FamilyValue{parse_signed("4+2 | 2")})) == "3x+1");
        CHECK(parse_bijection("h") == Bijection::h);
        CHECK_THROWS_AS(parse_bijection("k"), UsageError);
        CHECK(domain_of(Bijection::g1) == Family::V);
        CHECK(codomain_of(Bijection::g2) == Family::A_signed);
    }

    TEST_CASE("roundtrip reports")
    {
        const auto g2 = roundtrip_report(Bijection::g2, 0);
        CHECK(g2.checked == 1);
        CHECK(g2.ok());
        const auto f1 = roundtrip_report(Bijection::f1, 20);
        CHECK(f1.ok());
        long long expected = 0;
        for (int n = 0; n <= 20; ++n)
            expected += oracle::ped_totals[n];
        CHECK(f1.checked == expected);
        const auto h = roundtrip_report(Bijection::h, 16);
        CHECK(h.ok());
        const auto j = h.to_json();
        CHECK(j["failures"].empty());
        CHECK(j["bijection"] == "h");
    }

    TEST_CASE("each red in the h sequence sits right after its paired blue")
    {
        for (int n = 0; n <= 22; ++n) {
            for (const auto& pair : enumerate_C(n)) {
                const auto seq = h_sequence(pair);
                std::vector<ColoredPart> as_entries;
                std::set<int> pairs_seen;
                for (std::size_t i = 0; i < seq.size(); ++i) {
                    as_entries.push_back({seq[i].value, seq[i].color});
                    if (i > 0)
                        CHECK(seq[i - 1].value >= seq[i].value);
                    if (seq[i].color != Color::red)
                        continue;
                    REQUIRE(i > 0);
                    const auto& blue = seq[i - 1];
                    CHECK(blue.color == Color::blue);
                    CHECK(blue.pair == seq[i].pair);
                    CHECK((blue.value == seq[i].value || blue.value == seq[i].value + 1));
                    pairs_seen.insert(seq[i].pair);
                }
                CHECK(static_cast<int>(pairs_seen.size()) == pair.beta.length());
                CHECK(BicoloredPartition::canonical(as_entries) == apply_h(pair));
            }
        }
    }

    TEST_CASE("canonical order may separate a red from its paired blue")
    {
        const auto pair = parse_pair("(2, 4+2)");
        const auto seq = h_sequence(pair);
        REQUIRE(seq.size() == 4);
        CHECK(seq[1] == HSlot{2, Color::red, 0});
        CHECK(seq[2] == HSlot{2, Color::blue, 1});
        CHECK(to_text(apply_h(pair)) == "3b+2b+2r+1r");
        CHECK(apply_h_inv(parse_bicolored("3b+2b+2r+1r")) == pair);
    }

    TEST_CASE("h preimages are unique on B(n) for n <= 14")
    {
        for (int n = 0; n <= 14; ++n)
            for (const auto& lambda : enumerate_B(n))
                CHECK(h_preimages(lambda).size() == 1);
    }

    TEST_CASE("table rows for n = 11")
    {
        const auto rows = table11_rows();
        REQUIRE(rows.size() == 38);
        CHECK(rows.front() == "(11, ε) -> 11");
        CHECK(std::count(rows.begin(), rows.end(), "(3, 8) -> 5+4r+2") == 1);
        CHECK(std::count(rows.begin(), rows.end(), "(2+1, 8) -> 5+5r+1") == 1);
        CHECK(std::count(rows.begin(), rows.end(), "(1, 10) -> 6+5r") == 1);
        CHECK(table11_mismatches().empty());
    }
}
