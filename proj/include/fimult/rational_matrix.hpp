#pragma once

// Dense exact rational matrices over GMP rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fimult/errors.hpp"

namespace fimult {

using Rational = mpq_class;
using Integer = mpz_class;

/// Rational(a, b) from gmpxx keeps the fraction as written; GMP arithmetic
/// requires lowest terms, so values from outside pass through here.
inline Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

/// Row-major dense matrix of rationals. Entries are kept canonical (lowest
/// terms, positive denominator) by mpq_class arithmetic. Zero rows or zero
/// columns are valid shapes.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionError("ragged matrix literal");
            for (const auto& q : row) data_.push_back(canonical(q));
        }
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Rational trace() const {
        if (!square()) throw DimensionError("trace of a non-square matrix");
        Rational out = 0;
        for (std::size_t i = 0; i < rows_; ++i) out += (*this)(i, i);
        return out;
    }

    bool operator==(const RationalMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("multiply: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Rational& factor = a(i, l);
            if (sgn(factor) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(l, j)) != 0) c(i, j) += factor * b(l, j);
        }
    return c;
}

inline RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shape mismatch");
    RationalMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

inline RationalMatrix scale(const Rational& alpha, const RationalMatrix& m) {
    RationalMatrix c = m;
    const Rational a = canonical(alpha);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) *= a;
    return c;
}

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return multiply(a, b); }
inline RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) { return add(a, b); }
inline RationalMatrix operator*(const Rational& alpha, const RationalMatrix& m) { return scale(alpha, m); }

namespace detail {

/// Rows scaled by the lcm of their denominators, so every entry is an integer.
/// Row scaling preserves rank.
inline std::vector<std::vector<Integer>> clear_denominators(const RationalMatrix& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer common = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (common / m(i, j).get_den());
    }
    return out;
}

/// Fraction-free (Bareiss) row echelon reduction in place. Returns the rank;
/// on exit the first `rank` rows are an echelon form and `last_pivot` holds
/// the final pivot, which for a square full-rank input is +-det.
/// Pivot choice: among the candidate rows, the entry of least absolute value.
inline std::size_t bareiss_echelon(std::vector<std::vector<Integer>>& a, std::size_t cols,
                                   Integer* last_pivot = nullptr, int* swap_sign = nullptr) {
    const std::size_t rows = a.size();
    Integer previous = 1;
    std::size_t rank = 0;
    int sign = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (sgn(a[i][c]) == 0) continue;
            if (pivot == rows || mpz_cmpabs(a[i][c].get_mpz_t(), a[pivot][c].get_mpz_t()) < 0) pivot = i;
        }
        if (pivot == rows) continue;
        if (pivot != rank) {
            std::swap(a[pivot], a[rank]);
            sign = -sign;
        }
        const Integer& p = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            auto& row = a[i];
            const Integer factor = row[c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                row[j] = p * row[j] - factor * a[rank][j];
                mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), previous.get_mpz_t());
            }
            row[c] = 0;
        }
        previous = p;
        ++rank;
    }
    if (last_pivot) *last_pivot = previous;
    if (swap_sign) *swap_sign = sign;
    return rank;
}

}  // namespace detail

/// Exact rank over Q by fraction-free elimination.
inline std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto a = detail::clear_denominators(m);
    return detail::bareiss_echelon(a, m.cols());
}

/// Row count minus rank.
inline std::size_t corank(const RationalMatrix& m) { return m.rows() - rank(m); }

inline Rational determinant(const RationalMatrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Rational scale_back = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer common = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale_back /= Rational(common);
    }
    auto a = detail::clear_denominators(m);
    Integer last;
    int sign = 1;
    if (detail::bareiss_echelon(a, m.cols(), &last, &sign) < m.rows()) return 0;
    return Rational(last) * sign * scale_back;
}

/// Exact inverse by Gauss-Jordan elimination; throws SingularMatrixError.
inline RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (sgn(a(i, c)) != 0) {
                pivot = i;
                break;
            }
        if (pivot == n) throw SingularMatrixError("matrix is singular");
        if (pivot != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(c, j));
                std::swap(inv(pivot, j), inv(c, j));
            }
        const Rational p = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a(i, c)) == 0) continue;
            const Rational factor = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (sgn(a(c, j)) != 0) a(i, j) -= factor * a(c, j);
                if (sgn(inv(c, j)) != 0) inv(i, j) -= factor * inv(c, j);
            }
        }
    }
    return inv;
}

/// Row and column block sizes of a block matrix.
struct BlockLayout {
    std::vector<std::size_t> row_sizes;
    std::vector<std::size_t> col_sizes;

    std::size_t total_rows() const {
        std::size_t t = 0;
        for (auto s : row_sizes) t += s;
        return t;
    }
    std::size_t total_cols() const {
        std::size_t t = 0;
        for (auto s : col_sizes) t += s;
        return t;
    }
};

/// Flattens a grid of blocks (indexed [block row][block col]) into one
/// matrix. Every block must match the layout cell it occupies.
inline RationalMatrix assemble_blocks(const BlockLayout& layout,
                                      const std::vector<std::vector<RationalMatrix>>& blocks) {
    if (blocks.size() != layout.row_sizes.size())
        throw DimensionError("assemble_blocks: wrong number of block rows");
    RationalMatrix out(layout.total_rows(), layout.total_cols());
    std::size_t row_offset = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        if (blocks[bi].size() != layout.col_sizes.size())
            throw DimensionError("assemble_blocks: wrong number of block columns");
        std::size_t col_offset = 0;
        for (std::size_t bj = 0; bj < blocks[bi].size(); ++bj) {
            const RationalMatrix& block = blocks[bi][bj];
            if (block.rows() != layout.row_sizes[bi] || block.cols() != layout.col_sizes[bj])
                throw DimensionError("assemble_blocks: block (" + std::to_string(bi) + "," +
                                     std::to_string(bj) + ") does not match its layout cell");
            for (std::size_t i = 0; i < block.rows(); ++i)
                for (std::size_t j = 0; j < block.cols(); ++j)
                    out(row_offset + i, col_offset + j) = block(i, j);
            col_offset += layout.col_sizes[bj];
        }
        row_offset += layout.row_sizes[bi];
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells.push_back(m(i, j).get_str());
            width = std::max(width, cells.back().size());
        }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& s = cells[i * m.cols() + j];
            os << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << "]\n";
    }
    return os;
}

}  // namespace fimult
