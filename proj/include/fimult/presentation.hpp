#pragma once

// Presentation matrices of finitely presented FI-modules and the tableau
// matrices A_lambda built from them.
//
// Index order of A_lambda(f): rows are pairs (p, t) with p in OI(k, x) and t
// a standard tableau, p outer and t inner; columns likewise over OI(k, y).
// OI is lexicographic and tableaux follow standard_tableaux().

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fimult/diagram.hpp"
#include "fimult/errors.hpp"
#include "fimult/permutation.hpp"
#include "fimult/rational_matrix.hpp"
#include "fimult/specht.hpp"
#include "fimult/tableau.hpp"

namespace fimult {

/// A finite Q-linear combination of injections [x] -> [y]. Zero
/// coefficients are never stored, so equality is equality of the term maps.
class FormalSum {
public:
    FormalSum(int source, int target) : source_(source), target_(target) {
        if (source < 0 || target < 0) throw InvalidArgument("negative arity");
    }

    static FormalSum single(const Injection& f, const Rational& coefficient = 1) {
        FormalSum s(f.source(), f.target());
        s.add_term(f, coefficient);
        return s;
    }

    int source() const noexcept { return source_; }
    int target() const noexcept { return target_; }
    const std::map<Injection, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds coefficient * f, merging with an existing term.
    void add_term(const Injection& f, const Rational& coefficient) {
        if (f.source() != source_ || f.target() != target_)
            throw DimensionError("injection [" + std::to_string(f.source()) + "] -> [" +
                                 std::to_string(f.target()) + "] in a sum of arity (" +
                                 std::to_string(source_) + ", " + std::to_string(target_) + ")");
        if (sgn(coefficient) == 0) return;
        auto [it, inserted] = terms_.try_emplace(f, canonical(coefficient));
        if (!inserted) {
            it->second += canonical(coefficient);
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Rational coefficient_sum() const {
        Rational total = 0;
        for (const auto& [f, alpha] : terms_) total += alpha;
        return total;
    }

    FormalSum& operator+=(const FormalSum& other) {
        for (const auto& [f, alpha] : other.terms_) add_term(f, alpha);
        return *this;
    }

    bool operator==(const FormalSum& other) const = default;

private:
    int source_;
    int target_;
    std::map<Injection, Rational> terms_;
};

inline FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }

inline FormalSum operator*(const Rational& alpha, const FormalSum& s) {
    FormalSum out(s.source(), s.target());
    const Rational a = canonical(alpha);
    for (const auto& [f, beta] : s.terms()) out.add_term(f, a * beta);
    return out;
}

/// Generator degrees x_1..x_g, relation degrees y_1..y_r and a sparse g x r
/// grid of formal sums; entry (i, j) has arity (x_i, y_j). Indices are
/// 0-based in this API.
class PresentationMatrix {
public:
    PresentationMatrix() = default;

    PresentationMatrix(std::vector<int> generator_degrees, std::vector<int> relation_degrees)
        : generators_(std::move(generator_degrees)), relations_(std::move(relation_degrees)) {
        for (int d : generators_)
            if (d < 0) throw InvalidArgument("negative generator degree");
        for (int d : relations_)
            if (d < 0) throw InvalidArgument("negative relation degree");
    }

    const std::vector<int>& generator_degrees() const noexcept { return generators_; }
    const std::vector<int>& relation_degrees() const noexcept { return relations_; }
    std::size_t generator_count() const noexcept { return generators_.size(); }
    std::size_t relation_count() const noexcept { return relations_.size(); }

    /// Largest generator degree; empty when there are no generators.
    std::optional<int> x_max() const {
        if (generators_.empty()) return std::nullopt;
        return *std::max_element(generators_.begin(), generators_.end());
    }

    /// Largest relation degree, 0 when there are no relations.
    int y_max() const {
        return relations_.empty() ? 0 : *std::max_element(relations_.begin(), relations_.end());
    }

    void set_entry(std::size_t i, std::size_t j, FormalSum sum) {
        if (i >= generators_.size() || j >= relations_.size())
            throw DimensionError("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                 ") outside a " + std::to_string(generators_.size()) + " x " +
                                 std::to_string(relations_.size()) + " presentation");
        if (sum.source() != generators_[i] || sum.target() != relations_[j])
            throw DimensionError("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                 ") must have arity (" + std::to_string(generators_[i]) + ", " +
                                 std::to_string(relations_[j]) + ")");
        if (sum.is_zero())
            entries_.erase({i, j});
        else
            entries_.insert_or_assign({i, j}, std::move(sum));
    }

    /// nullptr for a zero entry.
    const FormalSum* entry(std::size_t i, std::size_t j) const {
        auto it = entries_.find({i, j});
        return it == entries_.end() ? nullptr : &it->second;
    }

    const std::map<std::pair<std::size_t, std::size_t>, FormalSum>& entries() const noexcept { return entries_; }

    bool operator==(const PresentationMatrix& other) const = default;

private:
    std::vector<int> generators_;
    std::vector<int> relations_;
    std::map<std::pair<std::size_t, std::size_t>, FormalSum> entries_;
};

namespace detail {

/// Shared data for building many A_lambda blocks of one shape.
class TableauMatrixBuilder {
public:
    explicit TableauMatrixBuilder(const Diagram& shape)
        : shape_(shape), tableaux_(standard_tableaux(shape)) {}

    int k() const { return shape_.size(); }
    std::size_t tableau_count() const { return tableaux_.size(); }
    const std::vector<Tableau>& tableaux() const { return tableaux_; }

    std::size_t rows_for(int x) const { return monotone_injections(k(), x).size() * tableau_count(); }

    /// out[row_offset.., col_offset..] += alpha * A_lambda(f).
    void accumulate(const Injection& f, const Rational& alpha, RationalMatrix& out, std::size_t row_offset,
                    std::size_t col_offset) {
        const std::size_t d = tableau_count();
        const auto sources = monotone_injections(k(), f.source());
        const auto& target_index = index_of(f.target());
        for (std::size_t pi = 0; pi < sources.size(); ++pi) {
            const Injection image = compose(f, sources[pi]);
            const std::size_t qi = target_index.at(nu(image).images());
            const RationalMatrix& block = raw_block(xi(image));
            for (std::size_t t = 0; t < d; ++t)
                for (std::size_t u = 0; u < d; ++u) {
                    const Rational& v = block(t, u);
                    if (sgn(v) != 0) out(row_offset + pi * d + t, col_offset + qi * d + u) += alpha * v;
                }
        }
    }

private:
    const std::map<std::vector<int>, std::size_t>& index_of(int n) {
        auto [it, inserted] = oi_index_.try_emplace(n);
        if (inserted) {
            const auto oi = monotone_injections(k(), n);
            for (std::size_t i = 0; i < oi.size(); ++i) it->second.emplace(oi[i].images(), i);
        }
        return it->second;
    }

    const RationalMatrix& raw_block(const Permutation& sigma) {
        auto it = blocks_.find(sigma);
        if (it == blocks_.end()) it = blocks_.emplace(sigma, w_raw_block(tableaux_, sigma)).first;
        return it->second;
    }

    Diagram shape_;
    std::vector<Tableau> tableaux_;
    std::map<int, std::map<std::vector<int>, std::size_t>> oi_index_;
    std::map<Permutation, RationalMatrix> blocks_;
};

}  // namespace detail

/// A_lambda(f) for an injection f : [x] -> [y]; entry ((p,t),(q,u)) is
/// chi(row_word(u) o xi(f o p), col_word(t)) when f o p and q have the same
/// image, else 0. Has no rows when |shape| > x.
inline RationalMatrix a_lambda_injection(const Diagram& shape, const Injection& f) {
    detail::TableauMatrixBuilder builder(shape);
    RationalMatrix out(builder.rows_for(f.source()), builder.rows_for(f.target()));
    builder.accumulate(f, 1, out, 0, 0);
    return out;
}

/// Linear extension of a_lambda_injection to formal sums.
inline RationalMatrix a_lambda_sum(const Diagram& shape, const FormalSum& s) {
    detail::TableauMatrixBuilder builder(shape);
    RationalMatrix out(builder.rows_for(s.source()), builder.rows_for(s.target()));
    for (const auto& [f, alpha] : s.terms()) builder.accumulate(f, alpha, out, 0, 0);
    return out;
}

/// Block layout of A_lambda Z: one block row per generator, one block column
/// per relation.
inline BlockLayout a_lambda_layout(const Diagram& shape, const PresentationMatrix& z) {
    const std::size_t d = standard_tableaux(shape).size();
    BlockLayout layout;
    for (int x : z.generator_degrees()) layout.row_sizes.push_back(monotone_injections(shape.size(), x).size() * d);
    for (int y : z.relation_degrees()) layout.col_sizes.push_back(monotone_injections(shape.size(), y).size() * d);
    return layout;
}

/// A_lambda applied entrywise to the presentation and flattened. Zero
/// entries give zero blocks and are skipped without enumerating injections.
inline RationalMatrix a_lambda_presentation(const Diagram& shape, const PresentationMatrix& z) {
    const BlockLayout layout = a_lambda_layout(shape, z);
    RationalMatrix out(layout.total_rows(), layout.total_cols());
    if (out.rows() == 0 || out.cols() == 0) return out;
    std::vector<std::size_t> row_offset(layout.row_sizes.size() + 1, 0);
    std::vector<std::size_t> col_offset(layout.col_sizes.size() + 1, 0);
    for (std::size_t i = 0; i < layout.row_sizes.size(); ++i) row_offset[i + 1] = row_offset[i] + layout.row_sizes[i];
    for (std::size_t j = 0; j < layout.col_sizes.size(); ++j) col_offset[j + 1] = col_offset[j] + layout.col_sizes[j];
    detail::TableauMatrixBuilder builder(shape);
    for (const auto& [ij, sum] : z.entries()) {
        if (layout.row_sizes[ij.first] == 0 || layout.col_sizes[ij.second] == 0) continue;
        for (const auto& [f, alpha] : sum.terms())
            builder.accumulate(f, alpha, out, row_offset[ij.first], col_offset[ij.second]);
    }
    return out;
}

/// The g x r matrix of coefficient sums (every injection replaced by 1).
inline RationalMatrix epsilon_presentation(const PresentationMatrix& z) {
    RationalMatrix out(z.generator_count(), z.relation_count());
    for (const auto& [ij, sum] : z.entries()) out(ij.first, ij.second) = sum.coefficient_sum();
    return out;
}

/// A matrix-valued S_k action W with W(sigma) W(tau) = W(tau o sigma).
using SymmetricAction = std::function<RationalMatrix(const Permutation&)>;

/// The OI(k,x) x OI(k,y) block matrix whose (p, q) block is W(xi(f o p))
/// when nu(f o p) = q and zero otherwise.
inline RationalMatrix v_matrix(const SymmetricAction& action, int k, const Injection& f) {
    const std::size_t dim = action(Permutation::identity(k)).rows();
    const auto sources = monotone_injections(k, f.source());
    const auto targets = monotone_injections(k, f.target());
    std::map<std::vector<int>, std::size_t> target_index;
    for (std::size_t i = 0; i < targets.size(); ++i) target_index.emplace(targets[i].images(), i);
    RationalMatrix out(sources.size() * dim, targets.size() * dim);
    for (std::size_t pi = 0; pi < sources.size(); ++pi) {
        const Injection image = compose(f, sources[pi]);
        const std::size_t qi = target_index.at(nu(image).images());
        const RationalMatrix block = action(xi(image));
        if (block.rows() != dim || block.cols() != dim) throw DimensionError("action matrices change size");
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) out(pi * dim + a, qi * dim + b) = block(a, b);
    }
    return out;
}

/// Regular representation of S_k in the same composition convention: basis
/// e_pi for pi in all_permutations(k), and W(sigma) e_pi = e_{sigma o pi}
/// read along rows.
inline SymmetricAction regular_action(int k) {
    auto perms = std::make_shared<std::vector<Permutation>>(all_permutations(k));
    return [perms](const Permutation& sigma) {
        const std::size_t n = perms->size();
        RationalMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const Permutation image = compose(sigma, (*perms)[i]);
            const std::size_t j = static_cast<std::size_t>(
                std::lower_bound(perms->begin(), perms->end(), image) - perms->begin());
            out(i, j) = 1;
        }
        return out;
    };
}

/// Action of f on the induced module M(lambda) in the basis indexed like
/// the rows of A_lambda: A_lambda(1_x)^{-1} * A_lambda(f).
inline RationalMatrix induced_action(const Diagram& shape, const Injection& f) {
    return multiply(inverse(a_lambda_injection(shape, Injection::identity(f.source()))),
                    a_lambda_injection(shape, f));
}

}  // namespace fimult
