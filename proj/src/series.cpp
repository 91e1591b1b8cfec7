#include "parteq/series.hpp"

#include <string>

#include "parteq/errors.hpp"

namespace parteq {

TruncatedSeries::TruncatedSeries(int order)
{
    if (order < 1)
        throw UsageError("truncation order must be at least 1");
    coeffs_.resize(static_cast<std::size_t>(order));
}

TruncatedSeries TruncatedSeries::one(int order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = CoeffPoly(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, QMonomial m)
{
    TruncatedSeries s(order);
    if (m.q >= 0 && m.q < order)
        s.coeffs_[static_cast<std::size_t>(m.q)] = CoeffPoly(m.sign, {m.x, m.y});
    return s;
}

TruncatedSeries TruncatedSeries::from_integers(int order, const std::vector<Integer>& c)
{
    TruncatedSeries s(order);
    for (std::size_t i = 0; i < c.size() && i < s.coeffs_.size(); ++i)
        s.coeffs_[i] = CoeffPoly(c[i], {});
    return s;
}

const CoeffPoly& TruncatedSeries::coefficient(int n) const
{
    if (n < 0 || n >= order())
        throw RangeError("q-degree " + std::to_string(n) + " is outside the truncation order " +
                         std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::require_same_order(const TruncatedSeries& o) const
{
    if (order() != o.order())
        throw UsageError("series orders differ: " + std::to_string(order()) + " vs " +
                         std::to_string(o.order()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o)
{
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o)
{
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o)
{
    require_same_order(o);
    const std::size_t n = coeffs_.size();
    std::vector<CoeffPoly> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            if (!o.coeffs_[j].is_zero())
                out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries& TruncatedSeries::shift(QMonomial a)
{
    if (a.q < 0)
        throw UsageError("negative q-degree shift");
    const int n = order();
    std::vector<CoeffPoly> out(coeffs_.size());
    for (int i = 0; i + a.q < n; ++i)
        out[static_cast<std::size_t>(i + a.q)].add_shifted(coeffs_[static_cast<std::size_t>(i)],
                                                          {a.x, a.y}, a.sign);
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries& TruncatedSeries::multiply_binomial(QMonomial a)
{
    if (a.q < 0)
        throw UsageError("negative q-degree in a Pochhammer parameter");
    const int n = order();
    if (a.q == 0) {
        // (1 - a) with a free of q multiplies every coefficient.
        const CoeffPoly factor = CoeffPoly(1) - CoeffPoly(a.sign, {a.x, a.y});
        for (auto& c : coeffs_)
            c *= factor;
        return *this;
    }
    for (int i = n - 1; i >= a.q; --i)
        coeffs_[static_cast<std::size_t>(i)].add_shifted(
            coeffs_[static_cast<std::size_t>(i - a.q)], {a.x, a.y}, -a.sign);
    return *this;
}

TruncatedSeries& TruncatedSeries::divide_binomial(QMonomial a)
{
    if (a.q < 1)
        throw UsageError("1 - a is not invertible as a power series unless a has positive q-degree");
    const int n = order();
    // 1/(1 - a) = 1 + a + a^2 + ...: c[i] += a * c[i - d], in increasing i.
    for (int i = a.q; i < n; ++i)
        coeffs_[static_cast<std::size_t>(i)].add_shifted(
            coeffs_[static_cast<std::size_t>(i - a.q)], {a.x, a.y}, a.sign);
    return *this;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    const CoeffPoly& c0 = coeffs_[0];
    int unit = 0;
    if (c0 == CoeffPoly(1))
        unit = 1;
    else if (c0 == CoeffPoly(-1))
        unit = -1;
    else
        throw UsageError("series inverse needs constant coefficient 1 or -1");

    const std::size_t n = coeffs_.size();
    TruncatedSeries out(order());
    out.coeffs_[0] = CoeffPoly(unit);
    // b_i = -unit * sum_{j=1}^{i} a_j b_{i-j}
    for (std::size_t i = 1; i < n; ++i) {
        CoeffPoly acc;
        for (std::size_t j = 1; j <= i; ++j)
            if (!coeffs_[j].is_zero() && !out.coeffs_[i - j].is_zero())
                acc += coeffs_[j] * out.coeffs_[i - j];
        out.coeffs_[i].add_shifted(acc, {}, -unit);
    }
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    if (order > this->order())
        throw UsageError("cannot extend a truncated series");
    TruncatedSeries out(order);
    for (int i = 0; i < order; ++i)
        out.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

TruncatedSeries& TruncatedSeries::add_shifted(const TruncatedSeries& s, QMonomial a)
{
    if (a.q < 0)
        throw UsageError("negative q-degree shift");
    for (int i = 0; i < s.order() && i + a.q < order(); ++i)
        coeffs_[static_cast<std::size_t>(i + a.q)].add_shifted(
            s.coeffs_[static_cast<std::size_t>(i)], {a.x, a.y}, a.sign);
    return *this;
}

int TruncatedSeries::first_difference(const TruncatedSeries& o) const
{
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i])
            return static_cast<int>(i);
    return -1;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

namespace {

QMonomial nth_factor(QMonomial a, int step, int j)
{
    a.q += j * step;
    return a;
}

void require_params(QMonomial a, int step)
{
    if (a.sign != 1 && a.sign != -1)
        throw UsageError("Pochhammer parameter sign must be +1 or -1");
    if (a.q < 0 || step < 0 || a.x < 0 || a.y < 0)
        throw UsageError("Pochhammer parameter degrees must be non-negative");
}

} // namespace

TruncatedSeries poch_finite(QMonomial a, int step, int n, int order)
{
    require_params(a, step);
    if (n < 0)
        throw UsageError("Pochhammer length must be non-negative");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int j = 0; j < n; ++j) {
        const QMonomial f = nth_factor(a, step, j);
        if (f.q >= order)
            break;
        s.multiply_binomial(f);
    }
    return s;
}

TruncatedSeries poch_infinite(QMonomial a, int step, int order)
{
    require_params(a, step);
    if (step < 1)
        throw UsageError("infinite Pochhammer product needs step >= 1");
    TruncatedSeries s = TruncatedSeries::one(order);
    for (int j = 0; a.q + j * step < order; ++j)
        s.multiply_binomial(nth_factor(a, step, j));
    return s;
}

TruncatedSeries divide_poch_finite(TruncatedSeries s, QMonomial a, int step, int n)
{
    require_params(a, step);
    for (int j = 0; j < n; ++j) {
        const QMonomial f = nth_factor(a, step, j);
        if (f.q >= s.order())
            break;
        s.divide_binomial(f);
    }
    return s;
}

TruncatedSeries divide_poch_infinite(TruncatedSeries s, QMonomial a, int step)
{
    require_params(a, step);
    if (step < 1)
        throw UsageError("infinite Pochhammer product needs step >= 1");
    for (int j = 0; a.q + j * step < s.order(); ++j)
        s.divide_binomial(nth_factor(a, step, j));
    return s;
}

} // namespace parteq
