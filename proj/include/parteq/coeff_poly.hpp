#pragma once

#include <compare>
#include <map>
#include <string>

#include <gmpxx.h>

namespace parteq {

using Integer = mpz_class;

/// x^x * y^y.
struct Monomial {
    int x = 0;
    int y = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in x and y with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class CoeffPoly {
public:
    CoeffPoly() = default;
    CoeffPoly(long c); // NOLINT: integers convert implicitly
    CoeffPoly(const Integer& c, Monomial m);

    static CoeffPoly x(int power = 1) { return {1, {power, 0}}; }
    static CoeffPoly y(int power = 1) { return {1, {0, power}}; }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
    /// Coefficient of a monomial (zero when absent).
    Integer at(Monomial m) const;
    /// Sum of all coefficients, i.e. the value at x = y = 1.
    Integer sum() const;

    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly& operator*=(const CoeffPoly& o);

    /// this += sign * x^m.x y^m.y * o
    void add_shifted(const CoeffPoly& o, Monomial m, int sign);

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(CoeffPoly a, const CoeffPoly& b) { return a *= b; }
    friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

    /// Monomials in descending (x, y) order: "x^2+xy", "12", "-3x^2y+1", "0".
    std::string to_string() const;

private:
    void add_term(Monomial m, const Integer& c);

    std::map<Monomial, Integer> terms_;
};

} // namespace parteq
