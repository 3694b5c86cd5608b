#pragma once

// Brute-force evaluation of a presented FI-module at a single degree n.
//
// M[n] is the cokernel of the relation matrix between free modules,
//   (+)_j F^{y_j}[n]  ->  (+)_i F^{x_i}[n],
// with bases the injections [y_j] -> [n] and [x_i] -> [n]. S_n acts on both
// by post-composition; the image is S_n-stable, so the cokernel character
// is the ambient character minus the character on the image. Decomposition
// into irreducibles uses Murnaghan-Nakayama characters and class sizes.
// Nothing here uses the corank formula.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fimult/diagram.hpp"
#include "fimult/errors.hpp"
#include "fimult/multiplicity.hpp"
#include "fimult/parallel.hpp"
#include "fimult/permutation.hpp"
#include "fimult/presentation.hpp"
#include "fimult/rational_matrix.hpp"
#include "fimult/sparse_echelon.hpp"
#include "fimult/specht.hpp"

namespace fimult {

inline constexpr std::size_t kDefaultOracleMaxRows = 5000;
inline constexpr const char* kOracleMaxRowsEnv = "FIMULT_ORACLE_MAX_ROWS";

/// The ambient-dimension cap: $FIMULT_ORACLE_MAX_ROWS if set to a positive
/// integer, else 5000.
inline std::size_t oracle_max_rows() {
    if (const char* env = std::getenv(kOracleMaxRowsEnv)) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultOracleMaxRows;
}

/// Position of an injection [x] -> [n] in the lexicographic list
/// all_injections(x, n).
inline std::size_t injection_rank(const Injection& f) {
    const int x = f.source();
    const int n = f.target();
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::size_t rank = 0;
    for (int l = 0; l < x; ++l) {
        const int v = f.images()[static_cast<std::size_t>(l)];
        int smaller_free = 0;
        for (int w = 1; w < v; ++w)
            if (!used[static_cast<std::size_t>(w)]) ++smaller_free;
        rank += static_cast<std::size_t>(smaller_free) * falling_factorial(n - l - 1, x - l - 1);
        used[static_cast<std::size_t>(v)] = true;
    }
    return rank;
}

/// Sum over generators of |FI(x_i, n)|.
inline std::size_t ambient_dimension(const PresentationMatrix& z, int n) {
    std::size_t total = 0;
    for (int x : z.generator_degrees()) total += falling_factorial(n, x);
    return total;
}

namespace detail {

inline void check_budget(const PresentationMatrix& z, int n, std::size_t max_rows) {
    const std::size_t rows = ambient_dimension(z, n);
    if (rows > max_rows)
        throw ResourceLimitError("degree " + std::to_string(n) + " needs " + std::to_string(rows) +
                                 " ambient rows, above the cap of " + std::to_string(max_rows) + " (set " +
                                 kOracleMaxRowsEnv + " to raise it)");
}

inline std::vector<std::size_t> generator_offsets(const PresentationMatrix& z, int n) {
    std::vector<std::size_t> offsets{0};
    for (int x : z.generator_degrees()) offsets.push_back(offsets.back() + falling_factorial(n, x));
    return offsets;
}

/// Column (j, h) of the relation matrix: term alpha * g of entry (i, j)
/// contributes alpha at row (i, h o g).
inline std::vector<SparseVector> relation_columns(const PresentationMatrix& z, int n) {
    const auto offsets = generator_offsets(z, n);
    std::vector<SparseVector> columns;
    for (std::size_t j = 0; j < z.relation_count(); ++j) {
        std::vector<std::pair<std::size_t, const FormalSum*>> touching;
        for (std::size_t i = 0; i < z.generator_count(); ++i)
            if (const FormalSum* s = z.entry(i, j)) touching.emplace_back(i, s);
        for (const Injection& h : all_injections(z.relation_degrees()[j], n)) {
            std::map<std::uint32_t, Rational> column;
            for (const auto& [i, sum] : touching)
                for (const auto& [g, alpha] : sum->terms()) {
                    const auto row = static_cast<std::uint32_t>(offsets[i] + injection_rank(compose(h, g)));
                    column[row] += alpha;
                }
            SparseVector v;
            for (auto& [row, value] : column)
                if (sgn(value) != 0) v.emplace_back(row, std::move(value));
            columns.push_back(std::move(v));
        }
    }
    return columns;
}

}  // namespace detail

/// Dense relation matrix at degree n: rows (i, injection [x_i] -> [n]),
/// columns (j, injection [y_j] -> [n]), generator- and relation-major, with
/// injections in lexicographic order.
inline RationalMatrix relation_matrix_at(const PresentationMatrix& z, int n,
                                         std::size_t max_rows = oracle_max_rows()) {
    detail::check_budget(z, n, max_rows);
    const auto columns = detail::relation_columns(z, n);
    RationalMatrix out(ambient_dimension(z, n), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [row, value] : columns[c]) out(row, c) = value;
    return out;
}

/// M[n] with a reduced echelon basis of the image of the relation matrix,
/// ready for dimension and trace queries.
class DegreeEvaluation {
public:
    DegreeEvaluation(const PresentationMatrix& z, int n, std::size_t max_rows = oracle_max_rows())
        : n_(n), generator_degrees_(z.generator_degrees()), image_(0) {
        if (n < 0) throw InvalidArgument("negative degree");
        detail::check_budget(z, n, max_rows);
        offsets_ = detail::generator_offsets(z, n);
        image_ = SparseEchelon(offsets_.back());
        auto columns = detail::relation_columns(z, n);
        std::sort(columns.begin(), columns.end());
        columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
        for (const auto& v : columns) image_.insert(v);
        image_.reduce();
    }

    int degree() const noexcept { return n_; }
    std::size_t ambient_dimension() const noexcept { return offsets_.back(); }
    std::size_t image_rank() const noexcept { return image_.rank(); }
    std::size_t cokernel_dimension() const noexcept { return ambient_dimension() - image_rank(); }

    /// Trace of sigma on the ambient free module: the injections fixed by
    /// post-composition are those whose image lies in Fix(sigma).
    Integer ambient_trace(const Permutation& sigma) const {
        check_degree(sigma);
        Integer total = 0;
        for (int x : generator_degrees_) total += Integer(static_cast<unsigned long>(falling_factorial(sigma.fixed_points(), x)));
        return total;
    }

    /// Trace of sigma on the image. With reduced basis rows b_r (pivot p_r),
    /// the coordinate of sigma b_r on b_r is (sigma b_r)[p_r] = b_r[sigma^{-1} p_r].
    Rational image_trace(const Permutation& sigma) const {
        check_degree(sigma);
        const Permutation back = sigma.inverse();
        Rational total = 0;
        for (std::size_t r = 0; r < image_.rank(); ++r) {
            const std::uint32_t pivot = image_.pivots()[r];
            total += image_.entry(r, static_cast<std::uint32_t>(act(back, pivot)));
        }
        return total;
    }

    Integer cokernel_trace(const Permutation& sigma) const {
        const Rational image = image_trace(sigma);
        if (image.get_den() != 1) throw ConsistencyError("non-integral trace on the relation image");
        return ambient_trace(sigma) - image.get_num();
    }

private:
    void check_degree(const Permutation& sigma) const {
        if (sigma.degree() != n_) throw DimensionError("permutation degree != evaluation degree");
    }

    // Basis index of sigma o g for the basis vector (i, g) at `index`.
    std::size_t act(const Permutation& sigma, std::size_t index) const {
        const std::size_t i = static_cast<std::size_t>(
            std::upper_bound(offsets_.begin(), offsets_.end(), index) - offsets_.begin() - 1);
        const int x = generator_degrees_[i];
        const Injection g = injection_unrank(x, index - offsets_[i]);
        return offsets_[i] + injection_rank(compose(sigma, g));
    }

    Injection injection_unrank(int x, std::size_t rank) const {
        std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
        std::vector<int> images;
        for (int l = 0; l < x; ++l) {
            const std::size_t block = falling_factorial(n_ - l - 1, x - l - 1);
            std::size_t skip = rank / block;
            rank %= block;
            for (int v = 1; v <= n_; ++v) {
                if (used[static_cast<std::size_t>(v)]) continue;
                if (skip-- == 0) {
                    images.push_back(v);
                    used[static_cast<std::size_t>(v)] = true;
                    break;
                }
            }
        }
        return Injection(std::move(images), n_);
    }

    int n_;
    std::vector<int> generator_degrees_;
    std::vector<std::size_t> offsets_;
    SparseEchelon image_;
};

/// dim M[n].
inline std::size_t dimension_at(const PresentationMatrix& z, int n, std::size_t max_rows = oracle_max_rows()) {
    return DegreeEvaluation(z, n, max_rows).cokernel_dimension();
}

/// Falling-factorial count of fixed injections; needs no linear algebra.
inline Integer ambient_trace(const PresentationMatrix& z, int n, const Diagram& cycle_type) {
    if (cycle_type.size() != n) throw DimensionError("class is not a partition of n");
    const int fixed = cycle_type.column_height(1) - cycle_type.column_height(2);
    Integer total = 0;
    for (int x : z.generator_degrees()) total += Integer(static_cast<unsigned long>(falling_factorial(fixed, x)));
    return total;
}

inline Integer cokernel_trace(const PresentationMatrix& z, int n, const Diagram& cycle_type,
                              std::size_t max_rows = oracle_max_rows()) {
    if (cycle_type.size() != n) throw DimensionError("class is not a partition of n");
    return DegreeEvaluation(z, n, max_rows).cokernel_trace(class_representative(cycle_type.rows()));
}

/// Multiplicity of every irreducible of S_n in M[n], in canonical order.
struct Decomposition {
    struct Row {
        Diagram shape;
        std::size_t multiplicity;
    };

    int n = 0;
    std::size_t dimension = 0;
    std::vector<Row> rows;

    std::size_t at(const Diagram& shape) const {
        for (const auto& row : rows)
            if (row.shape == shape) return row.multiplicity;
        return 0;
    }
};

inline Decomposition decompose(const DegreeEvaluation& evaluation, unsigned threads = 1) {
    const int n = evaluation.degree();
    const auto classes = partitions(n);
    const auto traces = parallel_map<Integer>(classes.size(), threads, [&](std::size_t c) {
        return evaluation.cokernel_trace(class_representative(classes[c].rows()));
    });
    std::vector<Integer> sizes;
    for (const auto& mu : classes) sizes.push_back(class_size(mu));
    const Integer order = factorial(n);

    Decomposition out;
    out.n = n;
    out.dimension = evaluation.cokernel_dimension();
    Integer accounted = 0;
    for (const auto& shape : classes) {
        Integer inner = 0;
        for (std::size_t c = 0; c < classes.size(); ++c)
            inner += sizes[c] * traces[c] * Integer(static_cast<long>(mn_character(shape, classes[c])));
        if (inner % order != 0 || sgn(inner) < 0)
            throw ConsistencyError("multiplicity of " + to_string(shape) + " in degree " + std::to_string(n) +
                                   " is " + canonical(Rational(inner, order)).get_str() + ", not a non-negative integer");
        const Integer m = inner / order;
        out.rows.push_back({shape, static_cast<std::size_t>(m.get_ui())});
        accounted += m * Integer(static_cast<unsigned long>(hook_length_dimension(shape)));
    }
    if (accounted != Integer(static_cast<unsigned long>(out.dimension)))
        throw ConsistencyError("decomposition in degree " + std::to_string(n) + " accounts for dimension " +
                               accounted.get_str() + " of " + std::to_string(out.dimension));
    return out;
}

inline Decomposition decompose_at(const PresentationMatrix& z, int n, unsigned threads = 1,
                                  std::size_t max_rows = oracle_max_rows()) {
    return decompose(DegreeEvaluation(z, n, max_rows), threads);
}

/// Comparison of the oracle decomposition at n against the corank table.
struct VerificationReport {
    enum class Status { Pass, Fail, PreStable };

    struct ShapeCheck {
        Diagram shape;       // irreducible of S_n
        Diagram stable;      // shape with its first row removed
        std::size_t observed;
        std::size_t expected;
        bool matches() const { return observed == expected; }
    };

    int n = 0;
    int onset = 0;             // dimension polynomial threshold
    int multiplicity_onset = 0;
    std::vector<ShapeCheck> shapes;
    /// Table entries with nonzero multiplicity whose lambda^{+(n-|lambda|)}
    /// is not a partition yet.
    std::vector<Diagram> unrepresentable;
    std::size_t observed_dimension = 0;
    Integer polynomial_value;
    std::string polynomial;

    bool stable() const { return n >= multiplicity_onset; }
    bool dimension_matches() const { return Integer(static_cast<unsigned long>(observed_dimension)) == polynomial_value; }
    bool all_shapes_match() const {
        for (const auto& s : shapes)
            if (!s.matches()) return false;
        return true;
    }
    Status status() const {
        if (all_shapes_match() && dimension_matches()) return Status::Pass;
        if (stable() || (n >= onset && !dimension_matches())) return Status::Fail;
        return Status::PreStable;
    }
};

inline const char* to_string(VerificationReport::Status status) {
    switch (status) {
        case VerificationReport::Status::Pass: return "PASS";
        case VerificationReport::Status::Fail: return "FAIL";
        case VerificationReport::Status::PreStable: return "PRE-STABLE";
    }
    return "?";
}

inline VerificationReport verify(const PresentationMatrix& z, int n, unsigned threads = 1,
                                 std::size_t max_rows = oracle_max_rows()) {
    const MultiplicityTable table = eventual_multiplicities(z, threads);
    const DimensionPolynomial poly = dimension_polynomial(table, onset_bound(z));
    const Decomposition observed = decompose_at(z, n, threads, max_rows);

    VerificationReport report;
    report.n = n;
    report.onset = onset_bound(z);
    report.multiplicity_onset = multiplicity_onset(z);
    report.observed_dimension = observed.dimension;
    report.polynomial_value = poly.integer_value(n);
    report.polynomial = poly.to_string();
    const int x_max = table.x_max.value_or(-1);
    for (const auto& row : observed.rows) {
        const Diagram stable = remove_first_row(row.shape);
        const std::size_t expected = stable.size() <= x_max ? table.at(stable) : 0;
        report.shapes.push_back({row.shape, stable, row.multiplicity, expected});
    }
    for (const auto& row : table.rows)
        if (row.multiplicity > 0 && n - row.shape.size() < row.shape.row(1)) report.unrepresentable.push_back(row.shape);
    return report;
}

}  // namespace fimult
