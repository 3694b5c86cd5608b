#pragma once

// Text format for presentation matrices:
//
//   generators: 3
//   relations: 4
//   entry 1 1 : [1 2 3] + [2 3 4] + [3 4 1] + [4 1 2]
//
// Entries are 1-based. A term is an optional rational coefficient followed
// by '*' and a bracketed injection; '#' starts a comment. Unlisted entries
// are zero.

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fimult/errors.hpp"
#include "fimult/permutation.hpp"
#include "fimult/presentation.hpp"
#include "fimult/rational_matrix.hpp"

namespace fimult {

namespace detail {

class LineCursor {
public:
    LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    std::size_t column() const { return pos_ + 1; }
    /// Column of the next token.
    std::size_t mark() {
        skip_space();
        return column();
    }
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }
    [[noreturn]] void fail_at(std::size_t column, const std::string& message) const {
        throw ParseError(line_, column, message);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t end = pos_ + word.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    /// Non-negative decimal integer.
    int natural(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        if (pos_ - start > 9) fail_at(start + 1, std::string(what) + " is too large");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    /// Unsigned rational "a" or "a/b".
    Rational rational() {
        skip_space();
        const std::size_t start = pos_;
        auto digits = [&] {
            const std::size_t from = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return pos_ > from;
        };
        if (!digits()) fail("expected a coefficient");
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            if (!digits()) fail("expected a denominator");
        }
        const std::string token(text_.substr(start, pos_ - start));
        Rational value;
        value.set_str(token, 10);
        if (value.get_den() == 0) fail_at(start + 1, "zero denominator");
        value.canonicalize();
        return value;
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

inline std::vector<int> parse_degrees(LineCursor& cur) {
    std::vector<int> degrees;
    while (!cur.at_end()) degrees.push_back(cur.natural("a degree"));
    return degrees;
}

inline std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace detail

/// Parses the text format; every error is a ParseError carrying the line and
/// column of the offending token.
inline PresentationMatrix parse_presentation(std::string_view text) {
    std::optional<std::vector<int>> generators;
    std::optional<std::vector<int>> relations;
    std::optional<PresentationMatrix> z;
    std::set<std::pair<std::size_t, std::size_t>> seen;

    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = detail::strip_comment(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_number;
        start = end + 1;

        detail::LineCursor cur(line, line_number);
        if (cur.at_end()) continue;

        if (cur.accept_word("generators")) {
            if (generators) cur.fail("second 'generators' line");
            if (z) cur.fail("'generators' after the first entry");
            cur.expect(':');
            generators = detail::parse_degrees(cur);
            continue;
        }
        if (cur.accept_word("relations")) {
            if (relations) cur.fail("second 'relations' line");
            if (z) cur.fail("'relations' after the first entry");
            cur.expect(':');
            relations = detail::parse_degrees(cur);
            continue;
        }
        if (!cur.accept_word("entry")) cur.fail("expected 'generators:', 'relations:' or 'entry'");

        if (!generators || !relations) cur.fail("'entry' before both 'generators:' and 'relations:'");
        if (!z) z.emplace(*generators, *relations);

        const std::size_t i_column = cur.mark();
        const int i = cur.natural("a generator index");
        const std::size_t j_column = cur.mark();
        const int j = cur.natural("a relation index");
        if (i < 1 || static_cast<std::size_t>(i) > generators->size())
            cur.fail_at(i_column, "generator index " + std::to_string(i) + " outside 1.." +
                                      std::to_string(generators->size()));
        if (j < 1 || static_cast<std::size_t>(j) > relations->size())
            cur.fail_at(j_column, "relation index " + std::to_string(j) + " outside 1.." +
                                      std::to_string(relations->size()));
        const auto gi = static_cast<std::size_t>(i - 1);
        const auto rj = static_cast<std::size_t>(j - 1);
        if (!seen.insert({gi, rj}).second)
            cur.fail_at(i_column, "duplicate entry " + std::to_string(i) + " " + std::to_string(j));
        cur.expect(':');

        const int x = (*generators)[gi];
        const int y = (*relations)[rj];
        FormalSum sum(x, y);
        bool first = true;
        while (true) {
            Rational sign = 1;
            if (cur.accept('-')) {
                sign = -1;
            } else if (!cur.accept('+') && !first) {
                cur.fail("expected '+', '-' or end of line");
            }
            Rational coefficient = 1;
            if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
                coefficient = cur.rational();
                cur.expect('*');
            }
            const std::size_t bracket_column = cur.mark();
            cur.expect('[');
            std::vector<int> images;
            while (!cur.accept(']')) {
                if (cur.at_end()) cur.fail("unterminated injection");
                const std::size_t value_column = cur.mark();
                const int v = cur.natural("an injection value");
                if (v < 1 || v > y)
                    cur.fail_at(value_column, "value " + std::to_string(v) + " outside 1.." + std::to_string(y));
                for (int w : images)
                    if (w == v) cur.fail_at(value_column, "repeated value " + std::to_string(v));
                images.push_back(v);
            }
            if (static_cast<int>(images.size()) != x)
                cur.fail_at(bracket_column, "injection has " + std::to_string(images.size()) +
                                                " values, entry " + std::to_string(i) + " " + std::to_string(j) +
                                                " needs " + std::to_string(x));
            sum.add_term(Injection(std::move(images), y), sign * coefficient);
            first = false;
            if (cur.at_end()) break;
        }
        z->set_entry(gi, rj, std::move(sum));
    }

    if (!generators) throw ParseError(line_number, 1, "missing 'generators:' line");
    if (!relations) throw ParseError(line_number, 1, "missing 'relations:' line");
    if (!z) z.emplace(*generators, *relations);
    return *z;
}

/// Writes z in the text format; parse_presentation inverts it.
inline std::string serialize_presentation(const PresentationMatrix& z) {
    std::ostringstream out;
    out << "generators:";
    for (int d : z.generator_degrees()) out << ' ' << d;
    out << "\nrelations:";
    for (int d : z.relation_degrees()) out << ' ' << d;
    out << '\n';
    for (const auto& [index, sum] : z.entries()) {
        out << "entry " << index.first + 1 << ' ' << index.second + 1 << " :";
        bool first = true;
        for (const auto& [f, alpha] : sum.terms()) {
            const bool negative = sgn(alpha) < 0;
            if (first)
                out << (negative ? " -" : " ");
            else
                out << (negative ? " - " : " + ");
            const Rational magnitude = abs(alpha);
            if (magnitude != 1) out << magnitude.get_str() << '*';
            out << '[';
            for (std::size_t l = 0; l < f.images().size(); ++l) out << (l ? " " : "") << f.images()[l];
            out << ']';
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace fimult
