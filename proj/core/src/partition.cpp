#include "mixsym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mixsym {

namespace {

void drop_trailing_zeros(std::vector<int>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

// Number of consecutive columns, starting at `from`, that carry color `c`.
int color_run(int from, Color c) {
    int run = 0;
    while (color(from + run) == c) ++run;
    return run;
}

}  // namespace

std::vector<int> parse_parts(std::string_view text) {
    std::vector<int> parts;
    text = trim(text);
    if (text.empty()) return parts;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        int value = 0;
        const auto* end = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (token.empty() || ec != std::errc() || ptr != end) {
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

std::string join_parts(std::span<const int> parts) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts[k]);
    }
    return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    drop_trailing_zeros(parts_);
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive: " + join_parts(parts_));
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing: " + join_parts(parts_));
        }
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const { return join_parts(parts_); }

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    drop_trailing_zeros(parts_);
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw std::invalid_argument("strict partition parts must be positive: " + join_parts(parts_));
        if (k + 1 < parts_.size() && parts_[k] <= parts_[k + 1]) {
            throw std::invalid_argument("strict partition parts must be strictly decreasing: " + join_parts(parts_));
        }
    }
}

int StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool StrictPartition::contains_part(int value) const {
    return std::binary_search(parts_.begin(), parts_.end(), value, std::greater<>());
}

std::string StrictPartition::to_string() const { return join_parts(parts_); }

StrictPartition StrictPartition::parse(std::string_view text) { return StrictPartition(parse_parts(text)); }

Color color(int column) {
    if (column <= 0) throw std::invalid_argument("column index must be positive, got " + std::to_string(column));
    const int r = column % 4;
    return (r == 0 || r == 1) ? Color::zero : Color::one;
}

StrictPartition bar_core(int m) {
    std::vector<int> parts;
    if (m > 0) {
        for (int p = 4 * m - 3; p >= 1; p -= 4) parts.push_back(p);
    } else if (m < 0) {
        for (int p = -4 * m - 1; p >= 3; p -= 4) parts.push_back(p);
    }
    return StrictPartition(std::move(parts));
}

std::vector<StrictPartition> add_set(const StrictPartition& base, Color c, int count) {
    if (count < 0) return {};
    if (count == 0) return {base};

    const auto& rows = base.parts();
    // Longest admissible new row: columns 1..p must all carry color c.
    const int new_row_max = color_run(1, c);

    std::vector<StrictPartition> out;
    std::vector<int> current;
    current.reserve(rows.size() + static_cast<std::size_t>(new_row_max));

    // New rows of distinct lengths strictly below `limit`, summing to `left`.
    std::function<void(int, int)> place_new_rows = [&](int limit, int left) {
        if (left == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(limit - 1, new_row_max); p >= 1; --p) {
            if (p > left) continue;
            current.push_back(p);
            place_new_rows(p, left - p);
            current.pop_back();
        }
    };

    std::function<void(std::size_t, int)> extend_row = [&](std::size_t r, int left) {
        if (r == rows.size()) {
            place_new_rows(current.empty() ? new_row_max + 1 : current.back(), left);
            return;
        }
        const int run = std::min(color_run(rows[r] + 1, c), left);
        for (int e = 0; e <= run; ++e) {
            const int len = rows[r] + e;
            if (!current.empty() && current.back() <= len) break;
            current.push_back(len);
            extend_row(r + 1, left - e);
            current.pop_back();
        }
    };
    extend_row(0, count);

    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace mixsym
