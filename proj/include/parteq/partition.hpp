#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace parteq {

/// A weakly decreasing sequence of positive integers. The empty partition
/// (weight 0) is the default value.
class Partition {
public:
    Partition() = default;

    /// Throws StructureError unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Sorts `parts` into descending order first; still rejects parts < 1.
    static Partition canonical(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    bool empty() const noexcept { return parts_.empty(); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    int max_part() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    int count(int value) const noexcept;
    int even_parts() const noexcept;
    int odd_parts() const noexcept { return length() - even_parts(); }
    bool has_distinct_parts() const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Multiset union.
Partition merge(const Partition& a, const Partition& b);

/// A partition that may carry one extra overlined 1. `parts` holds only the
/// plain parts; the overlined 1, when present, adds 1 to the weight.
struct FPartition {
    Partition parts;
    bool overlined_one = false;

    int weight() const noexcept { return parts.weight() + (overlined_one ? 1 : 0); }
    /// Plain (non-overlined) ones.
    int ones() const noexcept { return parts.count(1); }
    /// Odd parts above 1, plus the overlined 1.
    int odd_overlined() const noexcept;

    friend bool operator==(const FPartition&, const FPartition&) = default;
    friend auto operator<=>(const FPartition&, const FPartition&) = default;
};

/// Positive parts minus negative parts. The weight may be negative for the
/// raw type; the signed families keep it non-negative.
struct SignedPartition {
    Partition positive;
    Partition negative;

    int weight() const noexcept { return positive.weight() - negative.weight(); }
    int positive_length() const noexcept { return positive.length(); }
    int negative_length() const noexcept { return negative.length(); }

    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
    friend auto operator<=>(const SignedPartition&, const SignedPartition&) = default;
};

struct PartitionPair {
    Partition alpha;
    Partition beta;

    int weight() const noexcept { return alpha.weight() + beta.weight(); }

    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
    friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

struct LabeledPart {
    int value = 0;
    bool x = false;

    friend bool operator==(const LabeledPart&, const LabeledPart&) = default;
    friend auto operator<=>(const LabeledPart&, const LabeledPart&) = default;
};

/// Distinct parts, each optionally labeled x. Whether the labels respect the
/// gap rule is a family question, not a structural one.
class XLabeledPartition {
public:
    XLabeledPartition() = default;
    /// Throws StructureError unless values are positive and strictly decreasing.
    explicit XLabeledPartition(std::vector<LabeledPart> entries);

    static XLabeledPartition canonical(std::vector<LabeledPart> entries);

    const std::vector<LabeledPart>& entries() const noexcept { return entries_; }
    const LabeledPart& operator[](std::size_t i) const { return entries_[i]; }
    bool empty() const noexcept { return entries_.empty(); }
    int length() const noexcept { return static_cast<int>(entries_.size()); }
    int weight() const noexcept;
    int labeled() const noexcept;
    Partition values() const;

    friend bool operator==(const XLabeledPartition&, const XLabeledPartition&) = default;
    friend auto operator<=>(const XLabeledPartition&, const XLabeledPartition&) = default;

private:
    std::vector<LabeledPart> entries_;
};

// Declared so that the derived ordering on ColoredPart ranks blue above red:
// entries sorted descending put blue before red at equal value.
enum class Color : std::uint8_t { red = 0, blue = 1 };

struct ColoredPart {
    int value = 0;
    Color color = Color::blue;

    friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
    friend auto operator<=>(const ColoredPart&, const ColoredPart&) = default;
};

/// Parts colored blue or red, stored by value descending with blue before
/// red at equal value.
class BicoloredPartition {
public:
    BicoloredPartition() = default;
    /// Throws StructureError unless values are positive and already canonical.
    explicit BicoloredPartition(std::vector<ColoredPart> entries);

    static BicoloredPartition canonical(std::vector<ColoredPart> entries);

    const std::vector<ColoredPart>& entries() const noexcept { return entries_; }
    const ColoredPart& operator[](std::size_t i) const { return entries_[i]; }
    bool empty() const noexcept { return entries_.empty(); }
    int length() const noexcept { return static_cast<int>(entries_.size()); }
    int weight() const noexcept;
    int reds() const noexcept;
    Partition blue_values() const;
    Partition red_values() const;

    friend bool operator==(const BicoloredPartition&, const BicoloredPartition&) = default;
    friend auto operator<=>(const BicoloredPartition&, const BicoloredPartition&) = default;

private:
    std::vector<ColoredPart> entries_;
};

} // namespace parteq
