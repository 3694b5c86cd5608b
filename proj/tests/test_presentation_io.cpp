#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "support.hpp"

using namespace fimult;
using fimult::testing::e_presentation;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(FIMULT_DATA_DIR) + "/" + name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Line and column of the ParseError thrown by parse_presentation(text).
std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
    try {
        parse_presentation(text);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return {0, 0};
}

}  // namespace

TEST(PresentationIo, ModuleEFile) {
    const auto z = parse_presentation(read_data("e_module.pres"));
    EXPECT_EQ(z.generator_degrees(), std::vector<int>{3});
    EXPECT_EQ(z.relation_degrees(), std::vector<int>{4});
    ASSERT_NE(z.entry(0, 0), nullptr);
    EXPECT_EQ(*z.entry(0, 0), *e_presentation().entry(0, 0));
}

TEST(PresentationIo, OtherDataFiles) {
    const auto free = parse_presentation(read_data("free_2.pres"));
    EXPECT_EQ(free.generator_degrees(), std::vector<int>{2});
    EXPECT_TRUE(free.relation_degrees().empty());

    const auto torsion = parse_presentation(read_data("torsion.pres"));
    EXPECT_EQ(torsion.generator_degrees(), std::vector<int>{0});
    ASSERT_NE(torsion.entry(0, 0), nullptr);
    EXPECT_EQ(torsion.entry(0, 0)->coefficient_sum(), 1);

    const auto mixed = parse_presentation(read_data("mixed.pres"));
    EXPECT_EQ(mixed.entries().size(), 3u);
    EXPECT_EQ(mixed.entry(1, 0)->coefficient_sum(), Rational(1, 2));
    EXPECT_EQ(mixed.entry(1, 1)->coefficient_sum(), 0);
}

TEST(PresentationIo, RationalCoefficientsAndSigns) {
    const auto z = parse_presentation("generators: 1\nrelations: 2\nentry 1 1 : 1/2*[1] - [2]\n");
    FormalSum expected(1, 2);
    expected.add_term(Injection({1}, 2), Rational(1, 2));
    expected.add_term(Injection({2}, 2), -1);
    EXPECT_EQ(*z.entry(0, 0), expected);

    const auto w = parse_presentation("generators: 1\nrelations: 2\nentry 1 1 : -3/6*[2] + 2*[1] + [1]");
    FormalSum other(1, 2);
    other.add_term(Injection({2}, 2), Rational(-1, 2));
    other.add_term(Injection({1}, 2), 3);
    EXPECT_EQ(*w.entry(0, 0), other);
}

TEST(PresentationIo, CommentsBlankLinesAndCrlf) {
    const auto z = parse_presentation(
        "# a comment\r\n\r\ngenerators: 0 1   # trailing\r\nrelations: 1\r\n  entry 2 1 : [1]\r\n");
    EXPECT_EQ(z.generator_degrees(), (std::vector<int>{0, 1}));
    EXPECT_EQ(z.entries().size(), 1u);
}

TEST(PresentationIo, EmptyPresentation) {
    const auto z = parse_presentation("generators:\nrelations:\n");
    EXPECT_EQ(z.generator_count(), 0u);
    EXPECT_EQ(z.relation_count(), 0u);
}

TEST(PresentationIo, ErrorPositions) {
    const std::string head = "generators: 2\nrelations: 3\n";
    EXPECT_EQ(error_position(head + "entry 1 1 : [1 4]\n"), (std::pair<std::size_t, std::size_t>{3, 16}));
    EXPECT_EQ(error_position(head + "entry 1 1 : [1 1]\n"), (std::pair<std::size_t, std::size_t>{3, 16}));
    EXPECT_EQ(error_position(head + "entry 1 1 : [1]\n"), (std::pair<std::size_t, std::size_t>{3, 13}));
    EXPECT_EQ(error_position(head + "entry 2 1 : [1 2]\n"), (std::pair<std::size_t, std::size_t>{3, 7}));
    EXPECT_EQ(error_position(head + "entry 1 4 : [1 2]\n"), (std::pair<std::size_t, std::size_t>{3, 9}));
    EXPECT_EQ(error_position(head + "entry 1 1 : [1 2\n"), (std::pair<std::size_t, std::size_t>{3, 17}));
    EXPECT_EQ(error_position(head + "entry 1 1 : [1 2] [2 3]\n"), (std::pair<std::size_t, std::size_t>{3, 19}));
    EXPECT_EQ(error_position(head + "entry 1 1 : [1 2]\nentry 1 1 : [2 3]\n"), (std::pair<std::size_t, std::size_t>{4, 7}));
    EXPECT_EQ(error_position(head + "entry 1 1 : 1/0*[1 2]\n"), (std::pair<std::size_t, std::size_t>{3, 13}));
    EXPECT_EQ(error_position(head + "entry 1 1 : 2 [1 2]\n"), (std::pair<std::size_t, std::size_t>{3, 15}));
    EXPECT_EQ(error_position(head + "bogus\n"), (std::pair<std::size_t, std::size_t>{3, 1}));
    EXPECT_EQ(error_position("relations: 1\nentry 1 1 : []\n"), (std::pair<std::size_t, std::size_t>{2, 6}));
    EXPECT_EQ(error_position("generators: 1\ngenerators: 1\n").first, 2u);
    EXPECT_EQ(error_position("generators: a\n"), (std::pair<std::size_t, std::size_t>{1, 13}));
    EXPECT_EQ(error_position("generators: 1\n").first, 2u);
}

TEST(PresentationIo, ErrorMessageNamesPosition) {
    try {
        parse_presentation("generators: 2\nrelations: 3\nentry 1 1 : [1 4]\n");
        FAIL();
    } catch (const ParseError& e) {
        const std::string what = e.what();
        EXPECT_NE(what.find("line 3, column 16"), std::string::npos) << what;
        EXPECT_NE(what.find("outside 1..3"), std::string::npos) << what;
    }
}

TEST(PresentationIo, SerializeFormat) {
    EXPECT_EQ(serialize_presentation(e_presentation()),
              "generators: 3\nrelations: 4\nentry 1 1 : [1 2 3] + [2 3 4] + [3 4 1] + [4 1 2]\n");
    const auto z = parse_presentation("generators: 1\nrelations: 2\nentry 1 1 : -2*[2] + 1/3*[1]\n");
    EXPECT_EQ(serialize_presentation(z), "generators: 1\nrelations: 2\nentry 1 1 : 1/3*[1] - 2*[2]\n");
}

TEST(PresentationIo, RoundTripRandomPresentations) {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        auto z = fimult::testing::random_presentation(rng);
        // Give some entries fractional coefficients.
        for (const auto& [index, sum] : std::map(z.entries())) z.set_entry(index.first, index.second, Rational(trial % 5 + 1, 3) * sum);
        const auto text = serialize_presentation(z);
        const auto back = parse_presentation(text);
        EXPECT_EQ(back.generator_degrees(), z.generator_degrees());
        EXPECT_EQ(back.relation_degrees(), z.relation_degrees());
        EXPECT_EQ(back.entries(), z.entries()) << text;
        EXPECT_EQ(serialize_presentation(back), text);
    }
}
