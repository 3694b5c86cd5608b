#pragma once

// Incremental exact row echelon basis for large, very sparse rational
// systems. The brute-force oracle feeds relation vectors of length ~10^3
// with a handful of nonzeros each; dense Bareiss over such systems spends
// nearly all its time multiplying zeros.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "fimult/errors.hpp"
#include "fimult/rational_matrix.hpp"

namespace fimult {

/// (index, value) pairs sorted by index, no stored zeros.
using SparseVector = std::vector<std::pair<std::uint32_t, Rational>>;

/// Row space basis in echelon form: each stored row has leading entry 1 at
/// its pivot column and no entries to the left of it. After reduce() every
/// row is also zero in all other pivot columns (reduced echelon form).
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t dimension)
        : dimension_(dimension), pivot_row_(dimension, kNone), scratch_(dimension), live_(dimension, false) {}

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<SparseVector>& rows() const noexcept { return rows_; }
    const std::vector<std::uint32_t>& pivots() const noexcept { return pivots_; }
    bool reduced() const noexcept { return reduced_; }

    /// Adds v to the spanning set. Returns true iff v was independent of the
    /// rows already present.
    bool insert(const SparseVector& v) {
        for (const auto& [index, value] : v) {
            if (index >= dimension_) throw DimensionError("sparse vector index out of range");
            if (sgn(value) != 0) touch(index, value);
        }
        while (!frontier_.empty()) {
            const std::uint32_t c = frontier_.top();
            frontier_.pop();
            if (!live_[c] || sgn(scratch_[c]) == 0) {
                live_[c] = false;
                continue;
            }
            const std::size_t r = pivot_row_[c];
            if (r == kNone) {
                frontier_.push(c);
                return adopt();
            }
            const Rational factor = scratch_[c];
            for (const auto& [index, value] : rows_[r]) {
                if (index == c) {
                    scratch_[c] = 0;
                    live_[c] = false;
                } else {
                    touch(index, -factor * value);
                }
            }
        }
        return false;
    }

    /// Back-substitutes so each row vanishes at every other pivot column.
    void reduce() {
        if (reduced_) return;
        // Process pivots right to left; rows with larger pivots are already reduced.
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
        for (std::size_t r : order) {
            bool needs_work = false;
            for (const auto& [index, value] : rows_[r])
                if (index != pivots_[r] && pivot_row_[index] != kNone) needs_work = true;
            if (!needs_work) continue;
            for (const auto& [index, value] : rows_[r]) touch(index, value);
            SparseVector out;
            while (!frontier_.empty()) {
                const std::uint32_t c = frontier_.top();
                frontier_.pop();
                if (!live_[c]) continue;
                live_[c] = false;
                if (sgn(scratch_[c]) == 0) continue;
                const std::size_t s = pivot_row_[c];
                if (s == kNone || s == r) {
                    out.emplace_back(c, scratch_[c]);
                    scratch_[c] = 0;
                    continue;
                }
                const Rational factor = scratch_[c];
                scratch_[c] = 0;
                for (const auto& [index, value] : rows_[s])
                    if (index != c) touch(index, -factor * value);
            }
            rows_[r] = std::move(out);
        }
        reduced_ = true;
    }

    /// Entry of row r at the given column (binary search).
    Rational entry(std::size_t r, std::uint32_t column) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), column,
                                   [](const auto& e, std::uint32_t c) { return e.first < c; });
        return it != row.end() && it->first == column ? it->second : Rational(0);
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void touch(std::uint32_t index, const Rational& delta) {
        if (!live_[index]) {
            live_[index] = true;
            scratch_[index] = delta;
            frontier_.push(index);
        } else {
            scratch_[index] += delta;
        }
    }

    // The smallest live column c has no pivot row: drain the scratch into a
    // new normalized row led by c.
    bool adopt() {
        SparseVector row;
        while (!frontier_.empty()) {
            const std::uint32_t c = frontier_.top();
            frontier_.pop();
            if (!live_[c]) continue;
            live_[c] = false;
            if (sgn(scratch_[c]) != 0) row.emplace_back(c, scratch_[c]);
            scratch_[c] = 0;
        }
        const Rational lead = row.front().second;
        for (auto& [index, value] : row) value /= lead;
        pivot_row_[row.front().first] = rows_.size();
        pivots_.push_back(row.front().first);
        rows_.push_back(std::move(row));
        reduced_ = false;
        return true;
    }

    std::size_t dimension_;
    std::vector<SparseVector> rows_;
    std::vector<std::uint32_t> pivots_;
    std::vector<std::size_t> pivot_row_;
    std::vector<Rational> scratch_;
    std::vector<bool> live_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> frontier_;
    bool reduced_ = true;
};

/// Rank of the span of the given vectors.
inline std::size_t sparse_rank(std::size_t dimension, const std::vector<SparseVector>& vectors) {
    SparseEchelon basis(dimension);
    for (const auto& v : vectors) basis.insert(v);
    return basis.rank();
}

}  // namespace fimult
