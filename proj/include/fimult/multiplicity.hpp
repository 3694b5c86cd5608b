#pragma once

// Eventual multiplicities, eventual dimension polynomial and stabilization
// onset of a finitely presented FI-module, computed from its presentation.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fimult/diagram.hpp"
#include "fimult/errors.hpp"
#include "fimult/parallel.hpp"
#include "fimult/presentation.hpp"
#include "fimult/rational_matrix.hpp"

namespace fimult {

/// mu(lambda^+, M) for every lambda with |lambda| <= x_max, ordered by size
/// and then canonical (descending lexicographic) order. Empty when the
/// presentation has no generators.
struct MultiplicityTable {
    struct Row {
        Diagram shape;
        std::size_t multiplicity;
    };

    std::vector<Row> rows;
    std::optional<int> x_max;
    int y_max = 0;

    /// 0 for shapes outside the table, which is exactly where the
    /// multiplicity vanishes.
    std::size_t at(const Diagram& shape) const {
        for (const auto& row : rows)
            if (row.shape == shape) return row.multiplicity;
        return 0;
    }
};

/// x_max + y_max (y_max = 0 without relations, 0 for a presentation without
/// generators). dim M[n] agrees with the dimension polynomial from here on.
inline int onset_bound(const PresentationMatrix& z) { return z.x_max().value_or(0) + z.y_max(); }

/// Degree from which every irreducible multiplicity equals its table entry:
/// onset_bound(z), but at least 2 x_max. Below 2 x_max the irreducible of
/// shape lambda^{+(n-|lambda|)} need not follow its character polynomial;
/// F^2 at n = 2 is the regular representation (2) + (1,1), while the table
/// predicts (1,1) twice.
inline int multiplicity_onset(const PresentationMatrix& z) {
    const int x = z.x_max().value_or(0);
    return std::max(onset_bound(z), 2 * x);
}

/// Corank of A_lambda Z.
inline std::size_t eventual_multiplicity(const Diagram& shape, const PresentationMatrix& z) {
    return corank(a_lambda_presentation(shape, z));
}

/// Every corank, one shape per task; `threads` does not affect the result.
inline MultiplicityTable eventual_multiplicities(const PresentationMatrix& z, unsigned threads = 1) {
    MultiplicityTable table;
    table.x_max = z.x_max();
    table.y_max = z.y_max();
    if (!table.x_max) return table;
    const auto shapes = partitions_up_to(*table.x_max);
    const auto coranks = parallel_map<std::size_t>(shapes.size(), threads, [&](std::size_t i) {
        return eventual_multiplicity(shapes[i], z);
    });
    for (std::size_t i = 0; i < shapes.size(); ++i) table.rows.push_back({shapes[i], coranks[i]});
    return table;
}

/// Eventual multiplicity of the trivial representation: corank of the
/// coefficient-sum matrix.
inline std::size_t eventual_invariants(const PresentationMatrix& z) {
    return corank(epsilon_presentation(z));
}

/// Exact polynomial in n with rational coefficients (index = power of n),
/// plus the degree from which it agrees with dim M[n].
class DimensionPolynomial {
public:
    DimensionPolynomial() = default;
    DimensionPolynomial(std::vector<Rational> coefficients, int threshold)
        : coefficients_(std::move(coefficients)), threshold_(threshold) {
        trim();
    }

    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    int threshold() const noexcept { return threshold_; }
    bool is_zero() const noexcept { return coefficients_.empty(); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

    Rational evaluate(long long n) const {
        Rational value = 0;
        const Rational x = Rational(Integer(static_cast<long>(n)));
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * x + *it;
        return value;
    }

    /// evaluate(n) as an integer; throws ConsistencyError if it is not one.
    Integer integer_value(long long n) const {
        const Rational v = evaluate(n);
        if (v.get_den() != 1)
            throw ConsistencyError("dimension polynomial is not integral at n = " + std::to_string(n));
        return v.get_num();
    }

    /// E.g. "(3n^2 - 5n)/2", "n", "0".
    std::string to_string() const {
        if (coefficients_.empty()) return "0";
        Integer common = 1;
        for (const auto& c : coefficients_) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
        std::string body;
        for (int power = degree(); power >= 0; --power) {
            const Rational& c = coefficients_[static_cast<std::size_t>(power)];
            if (sgn(c) == 0) continue;
            Integer a = c.get_num() * (common / c.get_den());
            if (body.empty()) {
                if (sgn(a) < 0) body += "-";
            } else {
                body += sgn(a) < 0 ? " - " : " + ";
            }
            a = abs(a);
            if (a != 1 || power == 0) body += a.get_str();
            if (power >= 1) body += "n";
            if (power >= 2) body += "^" + std::to_string(power);
        }
        return common == 1 ? body : "(" + body + ")/" + common.get_str();
    }

    bool operator==(const DimensionPolynomial&) const = default;

private:
    void trim() {
        while (!coefficients_.empty() && sgn(coefficients_.back()) == 0) coefficients_.pop_back();
    }

    std::vector<Rational> coefficients_;
    int threshold_ = 0;
};

/// The dimension of the irreducible with shape lambda^{+(n - |lambda|)} as a
/// polynomial in n: prod_{i<j}(l_i - l_j) / prod_i l_i! * prod_i (n - l_i)
/// with l_i = lambda_i + |lambda| - i, i = 1..|lambda|. Constant 1 for the
/// empty shape.
inline std::vector<Rational> stable_dimension_polynomial(const Diagram& shape) {
    const int k = shape.size();
    std::vector<long> l(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) l[static_cast<std::size_t>(i - 1)] = shape.row(static_cast<std::size_t>(i)) + k - i;
    Rational leading = 1;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) leading *= Rational(Integer(l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)]));
    for (long li : l) leading /= Rational(factorial(static_cast<int>(li)));
    std::vector<Rational> poly{leading};
    for (long li : l) {
        // poly *= (n - li)
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t p = 0; p < poly.size(); ++p) {
            next[p + 1] += poly[p];
            next[p] -= poly[p] * Rational(Integer(li));
        }
        poly = std::move(next);
    }
    return poly;
}

/// Sum over the table of corank * stable_dimension_polynomial, valid from
/// onset_bound(z).
inline DimensionPolynomial dimension_polynomial(const MultiplicityTable& table, int threshold) {
    std::vector<Rational> total;
    for (const auto& row : table.rows) {
        if (row.multiplicity == 0) continue;
        const auto poly = stable_dimension_polynomial(row.shape);
        if (total.size() < poly.size()) total.resize(poly.size());
        for (std::size_t p = 0; p < poly.size(); ++p) total[p] += poly[p] * static_cast<unsigned long>(row.multiplicity);
    }
    return DimensionPolynomial(std::move(total), threshold);
}

inline DimensionPolynomial dimension_polynomial(const PresentationMatrix& z, unsigned threads = 1) {
    return dimension_polynomial(eventual_multiplicities(z, threads), onset_bound(z));
}

}  // namespace fimult
