#include "parteq/coeff_poly.hpp"

namespace parteq {

CoeffPoly::CoeffPoly(long c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, Integer(c));
}

CoeffPoly::CoeffPoly(const Integer& c, Monomial m)
{
    if (c != 0)
        terms_.emplace(m, c);
}

Integer CoeffPoly::at(Monomial m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer CoeffPoly::sum() const
{
    Integer s = 0;
    for (const auto& [m, c] : terms_)
        s += c;
    return s;
}

void CoeffPoly::add_term(Monomial m, const Integer& c)
{
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o)
{
    add_shifted(o, {}, -1);
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o)
{
    CoeffPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    *this = std::move(out);
    return *this;
}

void CoeffPoly::add_shifted(const CoeffPoly& o, Monomial m, int sign)
{
    if (this == &o) {
        const CoeffPoly copy = o;
        add_shifted(copy, m, sign);
        return;
    }
    for (const auto& [mo, c] : o.terms_) {
        const Monomial key{mo.x + m.x, mo.y + m.y};
        if (sign >= 0)
            add_term(key, c);
        else
            add_term(key, -c);
    }
}

std::string CoeffPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool constant = m.x == 0 && m.y == 0;
        Integer mag = abs(c);
        if (c < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        if (constant || mag != 1)
            out += mag.get_str();
        if (m.x > 0)
            out += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
        if (m.y > 0)
            out += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
    }
    return out;
}

} // namespace parteq
