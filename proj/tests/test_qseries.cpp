#include "doctest.h"

#include <random>

#include "oracle_tables.hpp"
#include "parteq/enumerate.hpp"
#include "parteq/errors.hpp"
#include "parteq/identities.hpp"
#include "parteq/series.hpp"
#include "parteq/statistics.hpp"

using namespace parteq;

namespace {

TruncatedSeries random_series(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> coeff(-5, 5), deg(0, 2);
    TruncatedSeries s(order);
    for (int n = 0; n < order; ++n)
        for (int t = 0; t < 3; ++t)
            s[n] += CoeffPoly(coeff(rng), Monomial{deg(rng), deg(rng)});
    return s;
}

// Sum over the enumerated family of x^m y^k at weight n.
CoeffPoly refined_count(Family f, int n)
{
    CoeffPoly p;
    for (const auto& v : enumerate(f, n)) {
        const Cell c = cell_of(f, v);
        p += CoeffPoly(1, Monomial{c.m < 0 ? c.k : c.m, c.m < 0 ? 0 : c.k});
    }
    return p;
}

} // namespace

TEST_SUITE("coeff_poly")
{
    TEST_CASE("arithmetic and rendering")
    {
        const auto x = CoeffPoly::x(), y = CoeffPoly::y();
        CHECK((x * x + x * y).to_string() == "x^2+xy");
        CHECK(CoeffPoly(12).to_string() == "12");
        CHECK(CoeffPoly().to_string() == "0");
        CHECK((CoeffPoly(1) - CoeffPoly(3) * x * x * y).to_string() == "-3x^2y+1");
        CHECK((x - x).is_zero());
        CHECK((x + y).sum() == 2);
        CHECK((CoeffPoly(5) * x).at({1, 0}) == 5);
    }

    TEST_CASE("coefficients do not overflow")
    {
        CoeffPoly p(1);
        for (int i = 0; i < 5; ++i)
            p *= CoeffPoly(Integer("100000000000000000000"), Monomial{});
        CHECK(p.to_string() == "1" + std::string(100, '0'));
    }
}

TEST_SUITE("series")
{
    TEST_CASE("two-term product")
    {
        const auto a = TruncatedSeries::one(5) + TruncatedSeries::monomial(5, {1, 1, 0, 1});
        const auto b = TruncatedSeries::one(5) + TruncatedSeries::monomial(5, {1, 0, 1, 1});
        const auto c = series_mul(a, b);
        CHECK(c.coefficient(0) == CoeffPoly(1));
        CHECK(c.coefficient(1) == CoeffPoly::x() + CoeffPoly::y());
        CHECK(c.coefficient(2) == CoeffPoly::x() * CoeffPoly::y());
        CHECK(c.coefficient(3).is_zero());
        CHECK(series_mul(a, TruncatedSeries::one(5)) == a);
    }

    TEST_CASE("ring axioms on random series")
    {
        std::mt19937 rng(20261019);
        for (int trial = 0; trial < 20; ++trial) {
            const int N = 1 + trial % 7;
            const auto a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(series_add(a, b) - b == a);
        }
    }

    TEST_CASE("errors")
    {
        CHECK_THROWS_AS(TruncatedSeries(0), UsageError);
        CHECK_THROWS_AS(series_add(TruncatedSeries(3), TruncatedSeries(4)), UsageError);
        CHECK_THROWS_AS((void)TruncatedSeries(3).coefficient(3), RangeError);
    }

    TEST_CASE("binomial division inverts multiplication")
    {
        std::mt19937 rng(7);
        auto s = random_series(rng, 12);
        const auto original = s;
        s.multiply_binomial({-1, 1, 0, 2});
        s.divide_binomial({-1, 1, 0, 2});
        CHECK(s == original);
        auto unit = original;
        unit[0] = CoeffPoly(-1);
        CHECK(unit * unit.inverse() == TruncatedSeries::one(12));
    }

    TEST_CASE("Pochhammer products")
    {
        CHECK(poch_finite({1, 0, 0, 1}, 1, 0, 6) == TruncatedSeries::one(6));
        const auto p = poch_finite({-1, 0, 0, 1}, 1, 2, 6);
        CHECK(p == TruncatedSeries::from_integers(6, {1, 1, 1, 1}));

        const auto euler = poch_infinite({1, 0, 0, 1}, 1, 6);
        CHECK(euler == TruncatedSeries::from_integers(6, {1, -1, -1, 0, 0, 1}));

        const auto odd = divide_poch_infinite(TruncatedSeries::one(5), {1, 0, 0, 1}, 2);
        CHECK(odd.coefficient(4) == CoeffPoly(2));

        CHECK(poch_infinite({1, 0, 0, 1}, 1, 1) == TruncatedSeries::one(1));
    }

    TEST_CASE("generating function prefix")
    {
        const auto s = ped_product(8);
        CHECK(s == TruncatedSeries::from_integers(8, {1, 1, 2, 3, 4, 6, 9, 12}));
        const auto big = ped_product(31);
        for (int n = 0; n <= 30; ++n)
            CHECK(big.coefficient(n) == CoeffPoly(oracle::ped_totals[n]));
    }

    TEST_CASE("even parts tracked by 1/(q^2;q^2)_n reproduce F counts")
    {
        const auto f = f_series(13);
        for (int n = 0; n <= 12; ++n)
            CHECK(f.coefficient(n) == refined_count(Family::F, n));
    }

    TEST_CASE("refined coefficients")
    {
        const auto f = f_series(3);
        CHECK(f.coefficient(2).to_string() == "x^2+xy");
        for (int n = 0; n <= 16; ++n) {
            const auto ped = refined_count(Family::ped, n);
            CHECK(ped == refined_count(Family::F_signed, n));
        }
        const auto a = lebesgue_series(17);
        for (int n = 0; n <= 16; ++n) {
            CHECK(a.coefficient(n) == refined_count(Family::A, n));
            CHECK(a.coefficient(n) == refined_count(Family::V, n));
        }
        for (const auto& s : {f_series(4), f_signed_series(4), lebesgue_series(4), lebesgue_product(4),
                              a_signed_series(4), ped_even_refined_product(4)})
            CHECK(s.coefficient(0) == CoeffPoly(1));
    }
}

TEST_SUITE("identities")
{
    TEST_CASE("catalog at small orders")
    {
        for (auto name : identity_names()) {
            CAPTURE(name);
            CHECK(verify_identity(name, 1).equal);
            CHECK(verify_identity(name, 40).equal);
        }
        CHECK(identity_names().size() == 7);
    }

    TEST_CASE("report shape")
    {
        const auto r = verify_identity("lebesgue", 50);
        CHECK(r.equal);
        CHECK(r.first_mismatch() == nullptr);
        const auto j = r.to_json();
        CHECK(j["name"] == "lebesgue");
        CHECK(j["order"] == 50);
        CHECK(j["equal"] == true);
        CHECK_FALSE(j.contains("first_mismatch"));
    }

    TEST_CASE("unknown identities")
    {
        CHECK_FALSE(is_identity("nope"));
        CHECK_THROWS_AS(verify_identity("nope", 5), UsageError);
        CHECK_THROWS_AS(verify_identity("euler", 0), UsageError);
    }
}
