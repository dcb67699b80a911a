#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "eigencones/errors.hpp"

namespace eigencones {

/// Weakly decreasing sequence of non-negative integers, trailing zeros
/// stripped. Two partitions are equal iff their nonzero parts agree.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i] < parts_[i + 1])
                throw BadRangeError("partition parts must be weakly decreasing");
        if (!parts_.empty() && parts_.back() < 0)
            throw BadRangeError("partition parts must be non-negative");
        normalize();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Number of nonzero parts.
    size_t length() const { return parts_.size(); }

    bool empty() const { return parts_.empty(); }

    /// k-th part (0-based), zero beyond the length.
    int part(size_t k) const { return k < parts_.size() ? parts_[k] : 0; }

    /// Sum of the parts.
    long long weight() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    const std::vector<int>& parts() const { return parts_; }

    /// Componentwise containment (Young-diagram inclusion).
    bool contains(const Partition& other) const {
        if (other.length() > length()) return false;
        for (size_t i = 0; i < other.length(); ++i)
            if (parts_[i] < other.parts_[i]) return false;
        return true;
    }

    bool fits_in_box(int rows, int cols) const {
        return length() <= static_cast<size_t>(rows) && part(0) <= cols;
    }

    Partition scaled(int k) const {
        std::vector<int> p = parts_;
        for (int& x : p) x *= k;
        return Partition(std::move(p));
    }

    /// True when this/inner is a vertical strip: at most one box per row.
    bool is_vertical_strip_over(const Partition& inner) const {
        if (!contains(inner)) return false;
        for (size_t i = 0; i < length(); ++i)
            if (part(i) - inner.part(i) > 1) return false;
        return true;
    }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    auto operator<=>(const Partition& other) const = default;

private:
    void normalize() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    std::vector<int> parts_;
};

/// All partitions fitting in a rows x cols box, in lexicographic order.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int maxPart) -> void {
        out.push_back(Partition(cur));
        if (row == rows) return;
        for (int p = 1; p <= maxPart; ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, cols);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace eigencones
