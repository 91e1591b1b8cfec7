#include "parteq/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "parteq/errors.hpp"

namespace parteq {

namespace {

void require_positive(int v)
{
    if (v < 1)
        throw StructureError("part " + std::to_string(v) + " is not positive");
}

} // namespace

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require_positive(parts_[i]);
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw StructureError("parts are not weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts))
{
}

Partition Partition::canonical(std::vector<int> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::count(int value) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Partition::even_parts() const noexcept
{
    return static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; }));
}

bool Partition::has_distinct_parts() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

Partition merge(const Partition& a, const Partition& b)
{
    std::vector<int> out;
    out.reserve(a.parts().size() + b.parts().size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

int FPartition::odd_overlined() const noexcept
{
    int n = overlined_one ? 1 : 0;
    for (int p : parts)
        if (p > 1 && p % 2 == 1)
            ++n;
    return n;
}

XLabeledPartition::XLabeledPartition(std::vector<LabeledPart> entries)
    : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        require_positive(entries_[i].value);
        if (i > 0 && entries_[i - 1].value <= entries_[i].value)
            throw StructureError("x-labeled values are not strictly decreasing");
    }
}

XLabeledPartition XLabeledPartition::canonical(std::vector<LabeledPart> entries)
{
    std::sort(entries.begin(), entries.end(),
              [](const LabeledPart& a, const LabeledPart& b) { return a.value > b.value; });
    return XLabeledPartition(std::move(entries));
}

int XLabeledPartition::weight() const noexcept
{
    int w = 0;
    for (const auto& e : entries_)
        w += e.value;
    return w;
}

int XLabeledPartition::labeled() const noexcept
{
    return static_cast<int>(
        std::count_if(entries_.begin(), entries_.end(), [](const LabeledPart& e) { return e.x; }));
}

Partition XLabeledPartition::values() const
{
    std::vector<int> v;
    v.reserve(entries_.size());
    for (const auto& e : entries_)
        v.push_back(e.value);
    return Partition(std::move(v));
}

BicoloredPartition::BicoloredPartition(std::vector<ColoredPart> entries)
    : entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        require_positive(entries_[i].value);
        if (i > 0 && entries_[i - 1] < entries_[i])
            throw StructureError("bicolored entries are not in canonical order");
    }
}

BicoloredPartition BicoloredPartition::canonical(std::vector<ColoredPart> entries)
{
    std::sort(entries.begin(), entries.end(), std::greater<>());
    return BicoloredPartition(std::move(entries));
}

int BicoloredPartition::weight() const noexcept
{
    int w = 0;
    for (const auto& e : entries_)
        w += e.value;
    return w;
}

int BicoloredPartition::reds() const noexcept
{
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                          [](const ColoredPart& e) { return e.color == Color::red; }));
}

Partition BicoloredPartition::blue_values() const
{
    std::vector<int> v;
    for (const auto& e : entries_)
        if (e.color == Color::blue)
            v.push_back(e.value);
    return Partition(std::move(v));
}

Partition BicoloredPartition::red_values() const
{
    std::vector<int> v;
    for (const auto& e : entries_)
        if (e.color == Color::red)
            v.push_back(e.value);
    return Partition(std::move(v));
}

} // namespace parteq
