#include "parteq/statistics.hpp"

#include "parteq/errors.hpp"

namespace parteq {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

} // namespace

Statistics statistics(const FamilyValue& value)
{
    return std::visit(
        overloaded{
            [](const Partition& p) -> Statistics {
                return {{"weight", p.weight()},
                        {"length", p.length()},
                        {"even_parts", p.even_parts()},
                        {"odd_parts", p.odd_parts()}};
            },
            [](const FPartition& p) -> Statistics {
                return {{"weight", p.weight()},
                        {"length", p.parts.length() + (p.overlined_one ? 1 : 0)},
                        {"ones", p.ones()},
                        {"odd_overlined", p.odd_overlined()}};
            },
            [](const SignedPartition& s) -> Statistics {
                return {{"weight", s.weight()},
                        {"positive_parts", s.positive_length()},
                        {"negative_parts", s.negative_length()}};
            },
            [](const XLabeledPartition& p) -> Statistics {
                return {{"weight", p.weight()}, {"length", p.length()}, {"x_labels", p.labeled()}};
            },
            [](const PartitionPair& p) -> Statistics {
                return {{"weight", p.weight()},
                        {"alpha_length", p.alpha.length()},
                        {"beta_length", p.beta.length()}};
            },
            [](const BicoloredPartition& p) -> Statistics {
                return {{"weight", p.weight()}, {"length", p.length()}, {"red_parts", p.reds()}};
            },
        },
        value);
}

Cell cell_of(Family family, const FamilyValue& value)
{
    auto as = [&]<typename T>() -> const T& {
        if (const T* v = std::get_if<T>(&value))
            return *v;
        throw UsageError("wrong object type for family " + std::string(family_name(family)));
    };
    switch (family) {
    case Family::ped: {
        const auto& p = as.template operator()<Partition>();
        return {p.weight(), p.length(), p.even_parts()};
    }
    case Family::F: {
        const auto& p = as.template operator()<FPartition>();
        return {p.weight(), p.ones(), p.odd_overlined()};
    }
    case Family::F_signed: {
        const auto& s = as.template operator()<SignedPartition>();
        return {s.weight(), s.positive_length(), s.positive_length() - s.negative_length()};
    }
    case Family::V:
    case Family::C: {
        const auto& p = as.template operator()<PartitionPair>();
        return {p.weight(), -1, p.beta.length()};
    }
    case Family::A: {
        const auto& p = as.template operator()<XLabeledPartition>();
        return {p.weight(), -1, p.labeled()};
    }
    case Family::A_signed: {
        const auto& s = as.template operator()<SignedPartition>();
        return {s.weight(), -1, s.positive_length() - s.negative_length()};
    }
    case Family::B: {
        const auto& p = as.template operator()<BicoloredPartition>();
        return {p.weight(), -1, p.reds()};
    }
    }
    throw UsageError("unknown family");
}

} // namespace parteq
