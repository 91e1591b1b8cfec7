#pragma once

#include <vector>

#include "parteq/coeff_poly.hpp"

namespace parteq {

/// sign * x^x * y^y * q^q with sign = +1 or -1; the parameter a of a
/// q-Pochhammer symbol.
struct QMonomial {
    int sign = 1;
    int x = 0;
    int y = 0;
    int q = 0;
};

/// Power series in q truncated at q^order (exclusive), with CoeffPoly
/// coefficients. All arithmetic is exact modulo q^order.
class TruncatedSeries {
public:
    /// The zero series. Throws UsageError unless order >= 1.
    explicit TruncatedSeries(int order);

    static TruncatedSeries one(int order);
    static TruncatedSeries monomial(int order, QMonomial m);
    /// Integer coefficients c[0..], dropped past the order.
    static TruncatedSeries from_integers(int order, const std::vector<Integer>& c);

    int order() const noexcept { return static_cast<int>(coeffs_.size()); }
    /// Throws RangeError when n is outside 0..order-1.
    const CoeffPoly& coefficient(int n) const;
    CoeffPoly& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    /// Cauchy product. Mismatched orders throw UsageError.
    TruncatedSeries& operator*=(const TruncatedSeries& o);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// this *= a (a monomial, possibly with q^0).
    TruncatedSeries& shift(QMonomial a);
    /// this *= (1 - a).
    TruncatedSeries& multiply_binomial(QMonomial a);
    /// this /= (1 - a). Needs a.q >= 1 so that 1 - a is invertible.
    TruncatedSeries& divide_binomial(QMonomial a);
    /// Multiplicative inverse; the constant coefficient must be 1 or -1.
    TruncatedSeries inverse() const;

    /// The same series reduced modulo q^order (order <= this->order()).
    TruncatedSeries truncated(int order) const;
    /// this += a * s, where s may have a smaller order; terms of s pushed
    /// past this->order() are dropped.
    TruncatedSeries& add_shifted(const TruncatedSeries& s, QMonomial a);

    /// Index of the first differing coefficient, or -1 when equal.
    int first_difference(const TruncatedSeries& o) const;

private:
    void require_same_order(const TruncatedSeries& o) const;

    std::vector<CoeffPoly> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// (a; q^step)_n = prod_{j=0}^{n-1} (1 - a q^{j*step}) mod q^order.
TruncatedSeries poch_finite(QMonomial a, int step, int n, int order);
/// (a; q^step)_inf mod q^order: factors stop once their q-degree reaches
/// the order. Needs step >= 1.
TruncatedSeries poch_infinite(QMonomial a, int step, int order);

/// s / (a; q^step)_n and s / (a; q^step)_inf, by repeated divide_binomial.
TruncatedSeries divide_poch_finite(TruncatedSeries s, QMonomial a, int step, int n);
TruncatedSeries divide_poch_infinite(TruncatedSeries s, QMonomial a, int step);

} // namespace parteq
