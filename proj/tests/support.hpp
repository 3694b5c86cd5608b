#pragma once

// Fixtures and independent reference computations shared by the tests.

#include <algorithm>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "fimult/fimult.hpp"

namespace fimult::testing {

// The module spanned by z_ijk modulo z_ijk + z_jkl + z_kli + z_lij.
inline PresentationMatrix e_presentation() {
    PresentationMatrix z({3}, {4});
    FormalSum s(3, 4);
    for (const auto& images : std::vector<std::vector<int>>{{1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {4, 1, 2}})
        s.add_term(Injection(images, 4), 1);
    z.set_entry(0, 0, s);
    return z;
}

inline PresentationMatrix free_presentation(int k) { return PresentationMatrix({k}, {}); }

// One degree-0 generator, killed by the unique map [0] -> [1].
inline PresentationMatrix torsion_presentation() {
    PresentationMatrix z({0}, {1});
    z.set_entry(0, 0, FormalSum::single(Injection({}, 1)));
    return z;
}

inline Diagram shape(std::vector<int> parts) { return Diagram(std::move(parts)); }

inline Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

// Random presentation with generator degrees <= max_x, relation degrees
// <= max_y and integer coefficients in [-max_coef, max_coef]. Each entry is
// zero with probability 1/4 (or whenever x_i > y_j).
struct RandomPresentationLimits {
    int max_generators = 2;
    int max_relations = 3;
    int max_x = 3;
    int max_y = 4;
    int max_coef = 2;
    int max_terms = 3;
};

inline PresentationMatrix random_presentation(std::mt19937& rng, const RandomPresentationLimits& limits = {}) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int g = uniform(1, limits.max_generators);
    const int r = uniform(0, limits.max_relations);
    std::vector<int> xs;
    std::vector<int> ys;
    for (int i = 0; i < g; ++i) xs.push_back(uniform(0, limits.max_x));
    for (int j = 0; j < r; ++j) ys.push_back(uniform(0, limits.max_y));
    PresentationMatrix z(xs, ys);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < r; ++j) {
            if (xs[static_cast<std::size_t>(i)] > ys[static_cast<std::size_t>(j)] || uniform(0, 3) == 0) continue;
            const auto maps = all_injections(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]);
            FormalSum s(xs[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(j)]);
            const int terms = uniform(1, limits.max_terms);
            for (int t = 0; t < terms; ++t)
                s.add_term(maps[static_cast<std::size_t>(uniform(0, static_cast<int>(maps.size()) - 1))],
                           uniform(-limits.max_coef, limits.max_coef));
            z.set_entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j), std::move(s));
        }
    return z;
}

// Textbook Gaussian elimination over Q with no fraction-free tricks.
inline std::size_t naive_rank(RationalMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || sgn(m(i, c)) == 0) continue;
            const Rational factor = m(i, c) / m(rank, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

inline RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    RationalMatrix m(rows, cols);
    std::uniform_int_distribution<int> d(lo, hi);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

// lambda <=_h mu by interlacing: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
inline bool interlaces(const Diagram& inner, const Diagram& outer) {
    const std::size_t len = std::max(inner.length(), outer.length());
    for (std::size_t i = 1; i <= len; ++i) {
        if (inner.row(i) > outer.row(i)) return false;
        if (outer.row(i + 1) > inner.row(i)) return false;
    }
    return true;
}

// Multiplicity of W(mu) in F^k[n] from Pieri: sum over lambda |- k with
// lambda <=_h mu of the number of standard tableaux of lambda, counted by
// the hook formula.
inline std::size_t free_module_multiplicity(int k, const Diagram& mu) {
    std::size_t total = 0;
    for (const auto& lambda : partitions(k))
        if (interlaces(lambda, mu)) total += static_cast<std::size_t>(hook_length_dimension(lambda));
    return total;
}

// Eventual multiplicity of lambda^+ in F^k: sum over lambda' |- k with
// lambda <=_h lambda' of the number of standard tableaux of lambda'.
inline std::size_t eventual_free_multiplicity(int k, const Diagram& lambda) {
    std::size_t total = 0;
    for (const auto& outer : partitions(k))
        if (interlaces(lambda, outer)) total += static_cast<std::size_t>(hook_length_dimension(outer));
    return total;
}

// Observed decompositions of E[n] for n = 3..8 as (partition, multiplicity).
inline std::vector<std::vector<std::pair<Diagram, std::size_t>>> e_decompositions() {
    return {
        {{Diagram({3}), 1}, {Diagram({2, 1}), 2}, {Diagram({1, 1, 1}), 1}},
        {{Diagram({3, 1}), 3}, {Diagram({2, 2}), 1}, {Diagram({2, 1, 1}), 2}, {Diagram({1, 1, 1, 1}), 1}},
        {{Diagram({4, 1}), 2}, {Diagram({3, 2}), 2}, {Diagram({3, 1, 1}), 2}},
        {{Diagram({5, 1}), 2}, {Diagram({4, 2}), 1}, {Diagram({4, 1, 1}), 2}, {Diagram({3, 3}), 1}},
        {{Diagram({6, 1}), 2}, {Diagram({5, 2}), 1}, {Diagram({5, 1, 1}), 2}},
        {{Diagram({7, 1}), 2}, {Diagram({6, 2}), 1}, {Diagram({6, 1, 1}), 2}},
    };
}

inline const std::vector<std::size_t>& e_dimensions() {
    static const std::vector<std::size_t> dims{0, 0, 0, 6, 18, 30, 44, 56, 76, 99, 125};
    return dims;
}

// Nonzero rows of a decomposition, in its order.
inline std::vector<std::pair<Diagram, std::size_t>> nonzero_rows(const Decomposition& d) {
    std::vector<std::pair<Diagram, std::size_t>> rows;
    for (const auto& row : d.rows)
        if (row.multiplicity) rows.emplace_back(row.shape, row.multiplicity);
    return rows;
}

}  // namespace fimult::testing
