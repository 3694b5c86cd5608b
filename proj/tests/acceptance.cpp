// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace fimult;
namespace t = fimult::testing;

namespace {

// Runtime budget for the E dimensions 0..10, in seconds.
constexpr double kDimensionBudgetSeconds = 60.0;
// Randomized presentations checked against the oracle.
constexpr int kRandomPresentations = 24;
// Exact arithmetic throughout: every comparison is equality, tolerance 0.

struct Result {
    bool pass = true;
    std::ostringstream detail;
    void check(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "first failure: " << what;
            pass = false;
        }
    }
};

using Sparse = std::vector<std::vector<std::pair<std::size_t, Rational>>>;

Sparse sparse_rows(const RationalMatrix& m) {
    Sparse rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) rows[i].emplace_back(j, m(i, j));
    return rows;
}

RationalMatrix sparse_product(const Sparse& a, const Sparse& b, std::size_t cols) {
    RationalMatrix out(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& [k, x] : a[i])
            for (const auto& [j, y] : b[k]) out(i, j) += x * y;
    return out;
}

bool same_rows(const Decomposition& d, const std::vector<std::pair<Diagram, std::size_t>>& expected) {
    return t::nonzero_rows(d) == expected;
}

Result criterion_1() {
    Result r;
    const auto table = eventual_multiplicities(t::e_presentation());
    const std::vector<std::pair<Diagram, std::size_t>> expected{
        {Diagram{}, 0}, {t::shape({1}), 2}, {t::shape({2}), 1}, {t::shape({1, 1}), 2},
        {t::shape({3}), 0}, {t::shape({2, 1}), 0}, {t::shape({1, 1, 1}), 0}};
    r.check(table.rows.size() == expected.size(), "table size");
    for (std::size_t i = 0; i < std::min(table.rows.size(), expected.size()); ++i)
        r.check(table.rows[i].shape == expected[i].first && table.rows[i].multiplicity == expected[i].second,
                "row " + to_string(expected[i].first));
    if (r.pass) r.detail << "corank table matches on all 7 shapes";
    return r;
}

Result criterion_2() {
    Result r;
    const auto z = t::e_presentation();
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream dims;
    for (int n = 0; n <= 10; ++n) {
        const auto d = dimension_at(z, n);
        dims << (n ? "," : "") << d;
        r.check(d == t::e_dimensions()[static_cast<std::size_t>(n)], "dim at n = " + std::to_string(n));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.check(seconds < kDimensionBudgetSeconds, "runtime " + std::to_string(seconds) + "s");
    if (r.pass) r.detail << "dims " << dims.str() << " in " << seconds << "s";
    return r;
}

Result criterion_3() {
    Result r;
    const auto z = t::e_presentation();
    const auto poly = dimension_polynomial(z);
    r.check(poly.to_string() == "(3n^2 - 5n)/2", "polynomial " + poly.to_string());
    r.check(poly.threshold() == 7, "onset " + std::to_string(poly.threshold()));
    for (int n = 7; n <= 10; ++n)
        r.check(poly.integer_value(n) == Integer(static_cast<unsigned long>(dimension_at(z, n))),
                "agreement at n = " + std::to_string(n));
    r.check(poly.integer_value(5) == 25 && dimension_at(z, 5) == 30, "n = 5 should give 25 vs 30");
    r.check(poly.integer_value(6) == 39 && dimension_at(z, 6) == 44, "n = 6 should give 39 vs 44");
    if (r.pass) r.detail << poly.to_string() << " from n = 7; 25 vs 30 at n = 5, 39 vs 44 at n = 6";
    return r;
}

Result criterion_4() {
    Result r;
    const auto z = t::e_presentation();
    const auto expected = t::e_decompositions();
    for (int n = 3; n <= 8; ++n)
        r.check(same_rows(decompose_at(z, n), expected[static_cast<std::size_t>(n - 3)]),
                "decomposition at n = " + std::to_string(n));
    if (r.pass) r.detail << "n = 3..8 match";
    return r;
}

// The check runs at the first degree from which every multiplicity is
// stable, and one above. The unadjusted bound x_max + y_max is also
// evaluated and reported; below 2 x_max some irreducible characters are not
// yet polynomial and multiplicities can differ there.
Result criterion_5() {
    Result r;
    std::mt19937 rng(2024);
    t::RandomPresentationLimits limits;
    int checked = 0;
    int literal_pass = 0;
    int literal_total = 0;
    while (checked < kRandomPresentations) {
        const auto z = t::random_presentation(rng, limits);
        ++checked;
        const int start = multiplicity_onset(z);
        for (int n = start; n <= start + 1; ++n) {
            const auto status = verify(z, n).status();
            r.check(status == VerificationReport::Status::Pass,
                    "n = " + std::to_string(n) + " on\n" + serialize_presentation(z));
        }
        for (int n = onset_bound(z); n <= onset_bound(z) + 1; ++n) {
            ++literal_total;
            if (verify(z, n).status() == VerificationReport::Status::Pass) ++literal_pass;
        }
    }
    if (r.pass)
        r.detail << checked << " presentations pass at max(x_max + y_max, 2 x_max) and +1; at x_max + y_max and +1 "
                 << literal_pass << "/" << literal_total << " pass";
    return r;
}

Result criterion_6() {
    Result r;
    std::size_t products = 0;
    for (int k = 0; k <= 4; ++k)
        for (const auto& lambda : partitions(k)) {
            const auto perms = all_permutations(k);
            std::vector<RationalMatrix> w;
            for (const auto& s : perms) w.push_back(specht_action(lambda, s));
            for (std::size_t a = 0; a < perms.size(); ++a)
                for (std::size_t b = 0; b < perms.size(); ++b) {
                    const auto idx = static_cast<std::size_t>(
                        std::lower_bound(perms.begin(), perms.end(), compose(perms[b], perms[a])) - perms.begin());
                    r.check(w[a] * w[b] == w[idx], "Specht law for " + to_string(lambda));
                    ++products;
                }
        }

    std::vector<std::pair<std::string, std::pair<int, SymmetricAction>>> actions;
    for (int k = 0; k <= 3; ++k) {
        actions.push_back({"regular " + std::to_string(k), {k, regular_action(k)}});
        for (const auto& lambda : partitions(k))
            actions.push_back({to_string(lambda), {k, [lambda](const Permutation& s) { return specht_action(lambda, s); }}});
    }
    std::size_t v_products = 0;
    for (const auto& [name, entry] : actions) {
        const auto& [k, action] = entry;
        // V(f) for every injection [x] -> [y], k <= x <= y <= 5, by lexicographic rank.
        std::map<std::pair<int, int>, std::vector<RationalMatrix>> cache;
        for (int x = k; x <= 5; ++x)
            for (int y = x; y <= 5; ++y)
                for (const auto& f : all_injections(x, y)) cache[{x, y}].push_back(v_matrix(action, k, f));
        for (int x = k; x <= 5; ++x)
            for (int y = x; y <= 5; ++y)
                for (int zz = y; zz <= 5; ++zz) {
                    const auto fs = all_injections(x, y);
                    const auto gs = all_injections(y, zz);
                    const auto& vf = cache[{x, y}];
                    const auto& vg = cache[{y, zz}];
                    const auto& vgf = cache[{x, zz}];
                    std::vector<Sparse> sf, sg;
                    for (const auto& m : vf) sf.push_back(sparse_rows(m));
                    for (const auto& m : vg) sg.push_back(sparse_rows(m));
                    for (std::size_t a = 0; a < fs.size(); ++a)
                        for (std::size_t b = 0; b < gs.size(); ++b) {
                            const auto product = sparse_product(sf[a], sg[b], vg[b].cols());
                            r.check(product == vgf[injection_rank(compose(gs[b], fs[a]))],
                                    "V law for " + name + " at " + to_string(fs[a]) + ", " + to_string(gs[b]));
                            ++v_products;
                        }
                }
    }
    if (r.pass) r.detail << products << " Specht products, " << v_products << " V products";
    return r;
}

Result criterion_7() {
    Result r;
    const RationalMatrix w221{{1, 0, 0, 0, 1}, {0, -1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, -1}};
    r.check(w_raw(t::shape({2, 2, 1}), Permutation::identity(5)) == w221, "W_(2,2,1)(1)");
    const RationalMatrix a2{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}};
    r.check(a_lambda_injection(t::shape({2}), Injection({1, 2, 3}, 4)) == a2, "A_(2)(123)");
    const RationalMatrix a2z{{1, 0, 1, 1, 0, 1}, {0, 2, 0, 0, 2, 0}, {1, 0, 1, 1, 0, 1}};
    r.check(a_lambda_presentation(t::shape({2}), t::e_presentation()) == a2z, "A_(2)(Z)");
    RationalMatrix a21(2, 8);
    a21(0, 0) = 1;
    a21(1, 1) = -1;
    r.check(a_lambda_injection(t::shape({2, 1}), Injection({1, 2, 3}, 4)) == a21, "A_(2,1)(123)");
    if (r.pass)
        r.detail << "all four golden matrices match; tableaux ordered by reading word, so the (2,1) block is diag(1,-1)";
    return r;
}

Result criterion_8() {
    Result r;
    for (int k = 0; k <= 6; ++k) {
        Integer total = 0;
        for (const auto& lambda : partitions(k)) {
            const Integer d(static_cast<unsigned long>(standard_tableaux(lambda).size()));
            total += d * d;
        }
        r.check(total == factorial(k), "sum of squares at k = " + std::to_string(k));
    }
    for (int k = 0; k <= 7; ++k)
        for (const auto& lambda : partitions(k))
            r.check(standard_tableaux(lambda).size() == hook_length_dimension(lambda), "hooks " + to_string(lambda));
    for (int n = 0; n <= 8; ++n) {
        const auto shapes = partitions(n);
        for (const auto& a : shapes)
            for (const auto& b : shapes) {
                Integer inner = 0;
                for (const auto& mu : shapes)
                    inner += class_size(mu) * Integer(static_cast<long>(mn_character(a, mu) * mn_character(b, mu)));
                r.check(inner == (a == b ? factorial(n) : Integer(0)), "orthogonality " + to_string(a) + " " + to_string(b));
            }
    }
    if (r.pass) r.detail << "k <= 6 squares, |lambda| <= 7 hooks, n <= 8 orthogonality";
    return r;
}

Result criterion_9() {
    Result r;
    for (int k = 0; k <= 3; ++k) {
        const auto table = eventual_multiplicities(t::free_presentation(k));
        for (const auto& row : table.rows)
            r.check(row.multiplicity == t::eventual_free_multiplicity(k, row.shape),
                    "table for F^" + std::to_string(k) + " at " + to_string(row.shape));
        for (int n = k; n <= 6; ++n)
            for (const auto& row : decompose_at(t::free_presentation(k), n).rows)
                r.check(row.multiplicity == t::free_module_multiplicity(k, row.shape),
                        "F^" + std::to_string(k) + "[" + std::to_string(n) + "] at " + to_string(row.shape));
    }
    if (r.pass) r.detail << "F^0..F^3 tables and decompositions for n <= 6 follow Pieri";
    return r;
}

}  // namespace

int main() {
    const std::vector<std::function<Result()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                        criterion_6, criterion_7, criterion_8, criterion_9};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i]();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail << "exception: " << e.what();
        }
        if (!r.pass) ++failures;
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << r.detail.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
