#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams, so tests can drive it without a process.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input or usage,
// 3 resource cap exceeded, 4 internal consistency failure.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fimult/diagram.hpp"
#include "fimult/errors.hpp"
#include "fimult/multiplicity.hpp"
#include "fimult/oracle.hpp"
#include "fimult/permutation.hpp"
#include "fimult/presentation.hpp"
#include "fimult/presentation_io.hpp"
#include "fimult/specht.hpp"
#include "fimult/tableau.hpp"

namespace fimult::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitResourceLimit = 3;
inline constexpr int kExitInternal = 4;

/// "2,2,1" -> (2,2,1); "0" and "" -> the empty partition.
inline Diagram parse_shape(const std::string& text) {
    std::string trimmed;
    std::remove_copy_if(text.begin(), text.end(), std::back_inserter(trimmed),
                        [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (trimmed.empty() || trimmed == "0") return Diagram{};
    std::vector<int> parts;
    std::stringstream in(trimmed);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || item.size() > 6)
            throw InvalidArgument("bad partition '" + text + "'");
        parts.push_back(std::stoi(item));
    }
    if (!trimmed.empty() && trimmed.back() == ',') throw InvalidArgument("bad partition '" + text + "'");
    return Diagram(parts);
}

/// "2,1,3" or "(2,1,3)" in one-line notation; "" is the permutation of [0].
inline Permutation parse_permutation(const std::string& text) {
    std::string body;
    std::remove_copy_if(text.begin(), text.end(), std::back_inserter(body),
                        [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::vector<int> images;
    if (!body.empty()) {
        std::stringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty() || item.size() > 6 ||
                !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw InvalidArgument("bad permutation '" + text + "'");
            images.push_back(std::stoi(item));
        }
        if (body.back() == ',') throw InvalidArgument("bad permutation '" + text + "'");
    }
    return Permutation(std::move(images));
}

/// Reads a presentation from a path, or from stdin for "-".
inline PresentationMatrix load_presentation(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InvalidArgument("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return parse_presentation(text);
    } catch (const ParseError& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

inline nlohmann::ordered_json multiplicities_json(const MultiplicityTable& table, const DimensionPolynomial& poly) {
    nlohmann::ordered_json out;
    out["x_max"] = table.x_max ? nlohmann::ordered_json(*table.x_max) : nlohmann::ordered_json(nullptr);
    out["y_max"] = table.y_max;
    out["onset"] = poly.threshold();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json entry;
        entry["shape"] = row.shape.rows();
        entry["multiplicity"] = row.multiplicity;
        rows.push_back(std::move(entry));
    }
    out["multiplicities"] = std::move(rows);
    nlohmann::ordered_json dimension;
    auto coefficients = nlohmann::ordered_json::array();
    for (const auto& c : poly.coefficients()) coefficients.push_back(c.get_str());
    dimension["coefficients"] = std::move(coefficients);
    dimension["text"] = poly.to_string();
    dimension["valid_from"] = poly.threshold();
    out["dimension_polynomial"] = std::move(dimension);
    return out;
}

namespace detail {

// Labels "12×T1" for the rows or columns of A_lambda Z, with a "g2:" prefix
// when there is more than one block.
inline std::vector<std::string> amatrix_labels(const Diagram& shape, const std::vector<int>& degrees,
                                               std::size_t tableau_count, char block_letter) {
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < degrees.size(); ++b) {
        const std::string prefix = degrees.size() > 1 ? block_letter + std::to_string(b + 1) + ":" : "";
        for (const auto& p : monotone_injections(shape.size(), degrees[b])) {
            const std::string name = shape.size() == 0 ? "()" : to_string(p);
            for (std::size_t t = 0; t < tableau_count; ++t)
                labels.push_back(prefix + name + "×T" + std::to_string(t + 1));
        }
    }
    return labels;
}

// Display width of a label containing the two-byte multiplication sign.
inline std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

inline void print_labelled(std::ostream& out, const RationalMatrix& m, const std::vector<std::string>& row_labels,
                           const std::vector<std::string>& col_labels) {
    std::size_t row_width = 0;
    for (const auto& l : row_labels) row_width = std::max(row_width, display_width(l));
    std::size_t width = 1;
    for (const auto& l : col_labels) width = std::max(width, display_width(l));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) width = std::max(width, m(i, j).get_str().size());
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, display_width(s)), ' ') + s; };
    out << std::string(row_width, ' ');
    for (const auto& l : col_labels) out << ' ' << pad(l, width);
    out << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << pad(row_labels[i], row_width);
        for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << pad(m(i, j).get_str(), width);
        out << '\n';
    }
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eventual multiplicities of symmetric group irreducibles in finitely presented FI-modules", "fimult"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for per-shape and per-class work")
        ->check(CLI::Range(1u, 256u));

    std::string file;
    bool json = false;
    int n = -1;
    std::string shape_text;
    std::string perm_text;
    bool raw = false;

    auto* multiplicities = app.add_subcommand("multiplicities", "Eventual multiplicity of every lambda^+");
    multiplicities->add_option("file", file, "Presentation file, '-' for stdin")->required();
    multiplicities->add_flag("--json", json, "Machine-readable output");

    auto* dimension = app.add_subcommand("dimension", "Eventual dimension polynomial");
    dimension->add_option("file", file, "Presentation file")->required();

    auto* evaluate = app.add_subcommand("evaluate", "dim M[n] by direct computation");
    evaluate->add_option("file", file, "Presentation file")->required();
    evaluate->add_option("--n", n, "Degree")->required()->check(CLI::NonNegativeNumber);

    auto* decompose_cmd = app.add_subcommand("decompose", "Irreducible decomposition of M[n] by direct computation");
    decompose_cmd->add_option("file", file, "Presentation file")->required();
    decompose_cmd->add_option("--n", n, "Degree")->required()->check(CLI::NonNegativeNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Compare the multiplicity table with a direct computation at n");
    verify_cmd->add_option("file", file, "Presentation file")->required();
    verify_cmd->add_option("--n", n, "Degree (default: first degree where every multiplicity is stable)")
        ->check(CLI::NonNegativeNumber);

    auto* specht = app.add_subcommand("specht", "Specht representation matrix of a permutation");
    specht->add_option("--shape", shape_text, "Partition, e.g. 2,2,1")->required();
    specht->add_option("--perm", perm_text, "Permutation in one-line notation, e.g. 2,1,3")->required();
    specht->add_flag("--raw", raw, "Print the unnormalized matrix W(sigma)");

    auto* amatrix = app.add_subcommand("amatrix", "The block matrix A_lambda Z with row and column labels");
    amatrix->add_option("file", file, "Presentation file")->required();
    amatrix->add_option("--shape", shape_text, "Partition, e.g. 2,1")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (multiplicities->parsed()) {
            const auto z = load_presentation(file);
            const auto table = eventual_multiplicities(z, threads);
            if (json) {
                out << multiplicities_json(table, dimension_polynomial(table, onset_bound(z))).dump(2) << '\n';
            } else {
                for (const auto& row : table.rows) out << to_compact_string(row.shape) << ": " << row.multiplicity << '\n';
            }
        } else if (dimension->parsed()) {
            const auto z = load_presentation(file);
            const auto poly = dimension_polynomial(z, threads);
            out << poly.to_string() << " valid for n >= " << poly.threshold() << '\n';
        } else if (evaluate->parsed()) {
            out << dimension_at(load_presentation(file), n) << '\n';
        } else if (decompose_cmd->parsed()) {
            const auto d = decompose_at(load_presentation(file), n, threads);
            for (const auto& row : d.rows)
                if (row.multiplicity) out << to_compact_string(row.shape) << ": " << row.multiplicity << '\n';
            out << "dimension: " << d.dimension << '\n';
        } else if (verify_cmd->parsed()) {
            const auto z = load_presentation(file);
            if (n < 0) n = multiplicity_onset(z);
            const auto report = verify(z, n, threads);
            for (const auto& s : report.shapes) {
                if (s.observed == 0 && s.expected == 0) continue;
                out << to_compact_string(s.shape) << " (" << to_compact_string(s.stable) << "+): observed "
                    << s.observed << ", expected " << s.expected << (s.matches() ? "" : "  MISMATCH") << '\n';
            }
            for (const auto& shape : report.unrepresentable)
                out << to_compact_string(shape) << "+: not yet a partition at n = " << n << '\n';
            out << "dimension: observed " << report.observed_dimension << ", polynomial " << report.polynomial
                << " gives " << report.polynomial_value.get_str() << '\n';
            out << to_string(report.status()) << " at n = " << n << " (multiplicities stable from n = "
                << report.multiplicity_onset << ", dimension from n = " << report.onset << ")\n";
            if (report.status() == VerificationReport::Status::Fail) return kExitVerificationFailed;
        } else if (specht->parsed()) {
            const Diagram shape = parse_shape(shape_text);
            const Permutation sigma = parse_permutation(perm_text);
            const auto tableaux = standard_tableaux(shape);
            for (std::size_t t = 0; t < tableaux.size(); ++t) out << "T" << t + 1 << " = " << to_string(tableaux[t]) << '\n';
            out << (raw ? w_raw(shape, sigma) : specht_action(shape, sigma));
        } else if (amatrix->parsed()) {
            const auto z = load_presentation(file);
            const Diagram shape = parse_shape(shape_text);
            const auto tableaux = standard_tableaux(shape);
            const auto m = a_lambda_presentation(shape, z);
            detail::print_labelled(out, m, detail::amatrix_labels(shape, z.generator_degrees(), tableaux.size(), 'g'),
                                   detail::amatrix_labels(shape, z.relation_degrees(), tableaux.size(), 'r'));
            for (std::size_t t = 0; t < tableaux.size(); ++t) out << "T" << t + 1 << " = " << to_string(tableaux[t]) << '\n';
        }
    } catch (const ResourceLimitError& e) {
        err << "fimult: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const ConsistencyError& e) {
        err << "fimult: internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const Error& e) {
        err << "fimult: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitOk;
}

}  // namespace fimult::cli
