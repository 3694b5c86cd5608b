#pragma once

// Diagrams (integer partitions) and the shape-level operations built on them.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fimult/errors.hpp"

namespace fimult {

/// An integer partition lambda_1 >= lambda_2 >= ... > 0, viewed as an
/// upper-left justified set of boxes (row, column), both 1-indexed.
class Diagram {
public:
    Diagram() = default;

    explicit Diagram(std::vector<int> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] <= 0) throw InvalidArgument("partition parts must be positive");
            if (i > 0 && rows_[i] > rows_[i - 1])
                throw InvalidArgument("partition parts must be non-increasing");
        }
    }

    const std::vector<int>& rows() const noexcept { return rows_; }
    std::size_t length() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    int size() const {
        int total = 0;
        for (int r : rows_) total += r;
        return total;
    }

    /// lambda_i with the convention lambda_i = 0 past the last row.
    int row(std::size_t i) const { return i >= 1 && i <= rows_.size() ? rows_[i - 1] : 0; }

    int column_height(int j) const {
        int h = 0;
        for (int r : rows_)
            if (r >= j) ++h;
        return h;
    }

    bool contains(int i, int j) const {
        return i >= 1 && j >= 1 && static_cast<std::size_t>(i) <= rows_.size() &&
               j <= rows_[static_cast<std::size_t>(i - 1)];
    }

    bool contains(const Diagram& other) const {
        if (other.length() > length()) return false;
        for (std::size_t i = 0; i < other.length(); ++i)
            if (other.rows_[i] > rows_[i]) return false;
        return true;
    }

    Diagram conjugate() const {
        std::vector<int> cols;
        for (int j = 1; j <= row(1); ++j) cols.push_back(column_height(j));
        return Diagram(std::move(cols));
    }

    /// Number of boxes of the hook at (i, j).
    int hook_length(int i, int j) const {
        return row(static_cast<std::size_t>(i)) - j + column_height(j) - i + 1;
    }

    auto operator<=>(const Diagram&) const = default;

private:
    std::vector<int> rows_;
};

/// Descending lexicographic order, the order partitions(k) produces.
struct CanonicalOrder {
    bool operator()(const Diagram& a, const Diagram& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(b.rows().begin(), b.rows().end(), a.rows().begin(),
                                            a.rows().end());
    }
};

/// All partitions of k in descending lexicographic order, e.g.
/// 3 -> (3), (2,1), (1,1,1). partitions(0) is the single empty partition.
inline std::vector<Diagram> partitions(int k) {
    if (k < 0) throw InvalidArgument("cannot partition a negative integer");
    std::vector<Diagram> out;
    std::vector<int> parts;
    auto extend = [&](auto&& self, int remaining, int largest) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, largest); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    extend(extend, k, k);
    return out;
}

/// Partitions of every size 0..max_size, by size then canonical order.
inline std::vector<Diagram> partitions_up_to(int max_size) {
    std::vector<Diagram> out;
    for (int k = 0; k <= max_size; ++k) {
        auto layer = partitions(k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

/// Number of standard tableaux by the hook length formula.
inline unsigned long long hook_length_dimension(const Diagram& shape) {
    // k! / prod(hooks); exact in 128 bits for |shape| <= 33.
    if (shape.size() > 33) throw InvalidArgument("hook_length_dimension: shape too large");
    unsigned __int128 numerator = 1;
    for (int m = 2; m <= shape.size(); ++m) numerator *= static_cast<unsigned>(m);
    unsigned __int128 denominator = 1;
    for (std::size_t i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape.row(i); ++j)
            denominator *= static_cast<unsigned>(shape.hook_length(static_cast<int>(i), j));
    return static_cast<unsigned long long>(numerator / denominator);
}

/// lambda with a new top row of length n: (n, lambda_1, lambda_2, ...).
inline Diagram lambda_plus_n(const Diagram& shape, int n) {
    if (n < shape.row(1))
        throw InvalidArgument("new top row of length " + std::to_string(n) +
                              " is shorter than the first row " + std::to_string(shape.row(1)));
    if (n == 0) return shape;
    std::vector<int> rows{n};
    rows.insert(rows.end(), shape.rows().begin(), shape.rows().end());
    return Diagram(std::move(rows));
}

/// The diagram obtained by deleting the first row (inverse of lambda_plus_n).
inline Diagram remove_first_row(const Diagram& shape) {
    if (shape.empty()) return shape;
    return Diagram(std::vector<int>(shape.rows().begin() + 1, shape.rows().end()));
}

/// True iff inner is contained in outer and the difference has at most one
/// box in each column.
inline bool is_horizontal_strip_extension(const Diagram& inner, const Diagram& outer) {
    if (!outer.contains(inner)) return false;
    // Boxes of outer \ inner in column j are rows inner_height(j)+1 .. outer_height(j).
    for (int j = 1; j <= outer.row(1); ++j)
        if (outer.column_height(j) - inner.column_height(j) > 1) return false;
    return true;
}

/// Python-list style, matching the printed corank tables: "[2, 1]", "[]".
inline std::string to_string(const Diagram& shape) {
    std::string out = "[";
    for (std::size_t i = 0; i < shape.length(); ++i) {
        if (i) out += ", ";
        out += std::to_string(shape.rows()[i]);
    }
    return out + "]";
}

/// Command-line spelling: "2,2,1"; the empty partition is "0".
inline std::string to_compact_string(const Diagram& shape) {
    if (shape.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < shape.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(shape.rows()[i]);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Diagram& shape) {
    return os << to_string(shape);
}

}  // namespace fimult

template <>
struct std::hash<fimult::Diagram> {
    std::size_t operator()(const fimult::Diagram& d) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int r : d.rows()) h = (h ^ static_cast<std::size_t>(r)) * 0x100000001b3ULL;
        return h;
    }
};
