#pragma once

// Standard Young tableaux and the combinatorial functions zeta, chi and the
// row/column words that index the matrices built elsewhere.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fimult/diagram.hpp"
#include "fimult/errors.hpp"
#include "fimult/permutation.hpp"

namespace fimult {

/// A standard tableau stored as its rows; row i lists the entries placed in
/// row i from left to right.
class Tableau {
public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        std::size_t k = 0;
        for (const auto& row : rows_) {
            lengths.push_back(static_cast<int>(row.size()));
            k += row.size();
        }
        shape_ = Diagram(lengths);  // throws unless the row lengths form a partition
        std::vector<bool> seen(k + 1, false);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                int v = rows_[i][j];
                if (v < 1 || static_cast<std::size_t>(v) > k || seen[static_cast<std::size_t>(v)])
                    throw InvalidArgument("tableau entries must be 1..k, each once");
                seen[static_cast<std::size_t>(v)] = true;
                if (j > 0 && rows_[i][j - 1] >= v)
                    throw InvalidArgument("tableau rows must increase");
                if (i > 0 && rows_[i - 1][j] >= v)
                    throw InvalidArgument("tableau columns must increase");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    const Diagram& shape() const noexcept { return shape_; }
    int size() const { return shape_.size(); }

    /// Entries read row by row, top to bottom.
    std::vector<int> reading_word() const {
        std::vector<int> out;
        for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
        return out;
    }

    auto operator<=>(const Tableau& other) const { return rows_ <=> other.rows_; }
    bool operator==(const Tableau& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    Diagram shape_;
};

/// Standard tableaux of the given shape, ordered lexicographically by
/// reading word. For (2,2,1) this gives
///   [12/34/5], [12/35/4], [13/24/5], [13/25/4], [14/25/3].
inline std::vector<Tableau> standard_tableaux(const Diagram& shape) {
    const int k = shape.size();
    std::vector<std::vector<int>> rows(shape.length());
    std::vector<Tableau> out;
    // Place 1..k one at a time into an addable corner; every prefix is a diagram.
    auto place = [&](auto&& self, int next) -> void {
        if (next > k) {
            out.emplace_back(rows);
            return;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const int filled = static_cast<int>(rows[i].size());
            if (filled >= shape.rows()[i]) continue;
            if (i > 0 && static_cast<int>(rows[i - 1].size()) <= filled) continue;
            rows[i].push_back(next);
            self(self, next + 1);
            rows[i].pop_back();
        }
    };
    place(place, 1);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

/// zeta(t): the reading word as a permutation; satisfies t o zeta(t) = t_lambda.
inline Permutation zeta(const Tableau& t) { return Permutation(t.reading_word()); }

/// Position l holds the row of the box containing entry l.
inline std::vector<int> row_word(const Tableau& t) {
    std::vector<int> out(static_cast<std::size_t>(t.size()));
    for (std::size_t i = 0; i < t.rows().size(); ++i)
        for (int v : t.rows()[i]) out[static_cast<std::size_t>(v - 1)] = static_cast<int>(i + 1);
    return out;
}

/// Position l holds the column of the box containing entry l.
inline std::vector<int> col_word(const Tableau& t) {
    std::vector<int> out(static_cast<std::size_t>(t.size()));
    for (const auto& row : t.rows())
        for (std::size_t j = 0; j < row.size(); ++j)
            out[static_cast<std::size_t>(row[j] - 1)] = static_cast<int>(j + 1);
    return out;
}

/// l -> a(sigma(l)).
inline std::vector<int> compose_word(std::span<const int> a, const Permutation& sigma) {
    if (static_cast<int>(a.size()) != sigma.degree())
        throw DimensionError("word length != permutation degree");
    std::vector<int> out(a.size());
    for (std::size_t l = 0; l < a.size(); ++l) out[l] = a[static_cast<std::size_t>(sigma.images()[l] - 1)];
    return out;
}

/// chi(a, b): 0 if the boxes (a(l), b(l)) are not pairwise distinct, else
/// the sign of the permutation sending each box to its position in the
/// lexicographically sorted box list. Only distinctness is checked; the
/// boxes need not form a diagram.
inline int chi(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw DimensionError("chi: words of different length");
    const std::size_t k = a.size();
    std::vector<std::pair<int, int>> boxes(k);
    for (std::size_t l = 0; l < k; ++l) boxes[l] = {a[l], b[l]};
    std::vector<std::pair<int, int>> lex = boxes;
    std::sort(lex.begin(), lex.end());
    if (std::adjacent_find(lex.begin(), lex.end()) != lex.end()) return 0;
    std::vector<int> perm(k);
    for (std::size_t l = 0; l < k; ++l)
        perm[l] = static_cast<int>(std::lower_bound(lex.begin(), lex.end(), boxes[l]) - lex.begin()) + 1;
    return Permutation(std::move(perm)).sign();
}

inline std::string to_string(const Tableau& t) {
    std::string out = "[";
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i) out += " / ";
        for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j) out += " ";
            out += std::to_string(t.rows()[i][j]);
        }
    }
    return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << to_string(t); }

}  // namespace fimult
