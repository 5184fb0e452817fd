#include "algcomb/perm.hpp"

#include <gtest/gtest.h>

using namespace algcomb;

namespace {

Perm P(const char* s) { return parse_perm(s); }

}

TEST(Compose, ProductsOfFourLetterPerms)
{
    EXPECT_EQ(compose(P("2314"), P("4213")), P("4321"));
    EXPECT_EQ(compose(P("4213"), P("2314")), P("2143"));
    EXPECT_EQ(compose(P("2314"), identity(4)), P("2314"));
}

TEST(Compose, RejectsSizeMismatch) { EXPECT_THROW(compose(P("21"), P("123")), std::invalid_argument); }

TEST(Inverse, Examples)
{
    EXPECT_EQ(inverse(P("2314")), P("3124"));
    EXPECT_EQ(inverse(identity(5)), identity(5));
    for (const auto& s : all_perms(5)) {
        EXPECT_EQ(inverse(inverse(s)), s);
        EXPECT_EQ(compose(s, inverse(s)), identity(5));
    }
}

TEST(Lehmer, CodeAndRoundTrip)
{
    EXPECT_EQ(lehmer_code(P("523461")), (std::vector<int>{4, 1, 1, 1, 1, 0}));
    EXPECT_EQ(lehmer_code(identity(4)), std::vector<int>(4, 0));
    for (const auto& s : all_perms(4)) {
        EXPECT_TRUE(is_lehmer_code(lehmer_code(s)));
        EXPECT_EQ(from_lehmer_code(lehmer_code(s)), s);
    }
    EXPECT_FALSE(is_lehmer_code({3, 0, 0}));
}

TEST(LengthStats, Example)
{
    const auto st = length_stats(P("523461"));
    EXPECT_EQ(st.length, 8);
    EXPECT_EQ(st.descents, (std::vector<int>{1, 5}));
    EXPECT_EQ(st.recoils, (std::vector<int>{1, 4}));
    EXPECT_EQ(st.inversions.size(), 8u);
    EXPECT_EQ(st.coinversions.size(), 8u);
    EXPECT_EQ(length_stats(identity(4)).length, 0);
    EXPECT_TRUE(length_stats(identity(4)).descents.empty());
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(length(longest(n)), n * (n - 1) / 2);
}

TEST(ReducedWord, EvaluatesBack)
{
    EXPECT_EQ(evaluate({4, 3, 2, 1, 2, 3, 4, 5}, 6), P("523461"));
    EXPECT_TRUE(reduced_word(identity(3)).empty());
    for (const auto& s : all_perms(5)) {
        const auto w = reduced_word(s);
        EXPECT_EQ(static_cast<int>(w.size()), length(s));
        EXPECT_EQ(evaluate(w, 5), s);
    }
}

TEST(Standardize, Words)
{
    const std::string u = "ddabcbbaa", v = "baa";
    EXPECT_EQ(standardize(std::vector<char>(u.begin(), u.end())), P("891475623"));
    EXPECT_EQ(standardize(std::vector<char>(v.begin(), v.end())), P("312"));
    EXPECT_EQ(standardize(P("4213")), P("4213"));
}

TEST(Pattern, Containment)
{
    EXPECT_TRUE(contains_pattern(P("4213"), P("312")));
    EXPECT_TRUE(contains_pattern(P("4213"), P("1")));
    EXPECT_TRUE(contains_pattern(P("2143"), P("2143")));
    EXPECT_FALSE(contains_pattern(P("1234"), P("2143")));
    EXPECT_FALSE(contains_pattern(P("123"), P("21")));
}

TEST(Transposition, RightAndLeft)
{
    EXPECT_EQ(apply_transposition(P("342615"), 2, 5, Side::right), P("312645"));
    EXPECT_EQ(apply_transposition(P("342615"), 2, 5, Side::left), P("345612"));
    for (auto side : {Side::right, Side::left})
        EXPECT_EQ(apply_transposition(apply_transposition(P("342615"), 1, 4, side), 1, 4, side), P("342615"));
}

TEST(Cycles, DecompositionAndRebuild)
{
    const auto cs = cycle_decomposition(P("524613"));
    EXPECT_EQ(cs.size(), 3u);
    EXPECT_EQ(cycles_to_string(cs), "(1,5)(2)(3,4,6)");
    EXPECT_EQ(cycle_decomposition(identity(4)).size(), 4u);
    for (const auto& s : all_perms(5))
        EXPECT_EQ(from_cycles(cycle_decomposition(s), 5), s);
}

TEST(Parse, Formats)
{
    EXPECT_EQ(P("[3, 1, 2]"), P("312"));
    EXPECT_EQ(to_string(P("312")), "312");
    EXPECT_THROW(P("113"), std::invalid_argument);
    EXPECT_THROW(P("1x2"), std::invalid_argument);
}
