#pragma once

// Specht module action matrices and irreducible symmetric group characters.
//
// Composition convention: the action matrices satisfy
//   specht_action(shape, sigma) * specht_action(shape, tau)
//     == specht_action(shape, compose(tau, sigma)),
// i.e. sigma acts first on the right.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "fimult/diagram.hpp"
#include "fimult/errors.hpp"
#include "fimult/permutation.hpp"
#include "fimult/rational_matrix.hpp"
#include "fimult/tableau.hpp"

namespace fimult {

namespace detail {

inline void require_degree(const Diagram& shape, int degree) {
    if (shape.size() != degree)
        throw DimensionError("shape of size " + std::to_string(shape.size()) +
                             " paired with a permutation of degree " + std::to_string(degree));
}

/// Rows and columns indexed by `tableaux`; entry (t, u) is
/// chi(row_word(u) o sigma, col_word(t)).
inline RationalMatrix w_raw_block(const std::vector<Tableau>& tableaux, const Permutation& sigma) {
    const std::size_t d = tableaux.size();
    std::vector<std::vector<int>> rows_moved(d);
    std::vector<std::vector<int>> cols(d);
    for (std::size_t i = 0; i < d; ++i) {
        rows_moved[i] = compose_word(row_word(tableaux[i]), sigma);
        cols[i] = col_word(tableaux[i]);
    }
    RationalMatrix out(d, d);
    for (std::size_t t = 0; t < d; ++t)
        for (std::size_t u = 0; u < d; ++u) out(t, u) = chi(rows_moved[u], cols[t]);
    return out;
}

}  // namespace detail

/// The unnormalized matrix W_lambda(sigma) over standard_tableaux(shape).
inline RationalMatrix w_raw(const Diagram& shape, const Permutation& sigma) {
    detail::require_degree(shape, sigma.degree());
    return detail::w_raw_block(standard_tableaux(shape), sigma);
}

/// W_lambda(1)^{-1} * W_lambda(sigma): the Specht representation matrix.
inline RationalMatrix specht_action(const Diagram& shape, const Permutation& sigma) {
    detail::require_degree(shape, sigma.degree());
    const auto tableaux = standard_tableaux(shape);
    const auto base = detail::w_raw_block(tableaux, Permutation::identity(shape.size()));
    return multiply(inverse(base), detail::w_raw_block(tableaux, sigma));
}

/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of the class mu.
inline Integer centralizer_order(const Diagram& cycle_type) {
    Integer z = 1;
    std::map<int, int> multiplicity;
    for (int part : cycle_type.rows()) ++multiplicity[part];
    for (const auto& [part, m] : multiplicity)
        for (int l = 1; l <= m; ++l) z *= part * l;
    return z;
}

inline Integer factorial(int n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// n! / z_mu.
inline Integer class_size(const Diagram& cycle_type) {
    return factorial(cycle_type.size()) / centralizer_order(cycle_type);
}

namespace detail {

// Murnaghan-Nakayama on beta-sets: a rim hook of length h is removed by
// sliding one bead from position b to the free position b - h; the sign is
// (-1)^(beads strictly between). Parts of the class are consumed from the
// largest down.
inline long long mn_recursive(std::vector<int> shape, const std::vector<int>& parts, std::size_t next,
                              std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (next == parts.size()) return 1;  // shape is empty here
    auto key = std::make_pair(shape, next);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int h = parts[next];
    const std::size_t len = shape.size();
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) beta[i] = shape[i] + static_cast<int>(len - 1 - i);

    long long total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int target = beta[i] - h;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (std::size_t j = 0; j < len; ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (std::size_t j = 0; j < len; ++j) {
            int part = moved[j] - static_cast<int>(len - 1 - j);
            if (part > 0) smaller.push_back(part);
        }
        const long long rest = mn_recursive(std::move(smaller), parts, next + 1, memo);
        total += (between % 2 == 0 ? rest : -rest);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// Irreducible character chi_shape evaluated on the class of the given cycle
/// type, by the Murnaghan-Nakayama rule. Memoized per class; thread-safe.
inline long long mn_character(const Diagram& shape, const Diagram& cycle_type) {
    if (shape.size() != cycle_type.size())
        throw DimensionError("mn_character: shape and class have different sizes");
    using Memo = std::map<std::pair<std::vector<int>, std::size_t>, long long>;
    static std::mutex mutex;
    static std::map<std::vector<int>, Memo> memo_by_class;
    std::lock_guard lock(mutex);
    Memo& memo = memo_by_class[cycle_type.rows()];
    return detail::mn_recursive(shape.rows(), cycle_type.rows(), 0, memo);
}

/// Trace of specht_action on the standard representative of the class.
inline long long character_of_action(const Diagram& shape, const Diagram& cycle_type) {
    if (shape.size() != cycle_type.size())
        throw DimensionError("character_of_action: shape and class have different sizes");
    const Rational tr = specht_action(shape, class_representative(cycle_type.rows())).trace();
    if (tr.get_den() != 1) throw ConsistencyError("non-integral Specht character");
    return tr.get_num().get_si();
}

}  // namespace fimult
