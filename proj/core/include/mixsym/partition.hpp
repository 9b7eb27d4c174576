#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mixsym {

/// A weakly decreasing finite sequence of positive integers. Zero parts are
/// never stored; the empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped. Throws std::invalid_argument if the parts
    /// are not weakly decreasing or contain a negative value.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const;
    /// Part k (0-based), or 0 past the end.
    int at(std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }

    std::string to_string() const;
    /// Parses "11,9,6,2,1"; the empty (or all-whitespace) string is the empty
    /// partition.
    static Partition parse(std::string_view text);

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A strictly decreasing finite sequence of positive integers.
class StrictPartition {
public:
    StrictPartition() = default;
    /// Trailing zeros are dropped. Throws std::invalid_argument unless the
    /// remaining parts are strictly decreasing and positive.
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const;
    int at(std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
    bool contains_part(int value) const;

    Partition as_partition() const { return Partition(parts_); }

    std::string to_string() const;
    static StrictPartition parse(std::string_view text);

    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;
    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

enum class Color : int { zero = 0, one = 1 };

/// Color of column j (1-based): 0 for j = 0,1 mod 4 and 1 for j = 2,3 mod 4.
Color color(int column);

/// The 4-bar core c_m: (4m-3,...,5,1) for m > 0, empty for m = 0 and
/// (-4m-1,...,7,3) for m < 0.
StrictPartition bar_core(int m);

/// All strict partitions obtained from `base` by adding `count` nodes, every
/// one of which sits in a column of the given color. New rows below `base`
/// are allowed. Sorted in decreasing lexicographic order of parts.
std::vector<StrictPartition> add_set(const StrictPartition& base, Color color, int count);

/// Parses a comma-separated list of integers (no ordering checks).
std::vector<int> parse_parts(std::string_view text);
std::string join_parts(std::span<const int> parts);

}  // namespace mixsym
