#include "algcomb/hopf.hpp"
#include "algcomb/intervalposet.hpp"
#include "algcomb/verify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace algcomb;

namespace {

HopfElement E(Algebra a, HopfBasis b, const char* w, int m = 1) { return hopf_element(a, b, parse_word(w), m); }
HopfElement F(const char* w) { return E(Algebra::FQSym, HopfBasis::F, w); }
HopfElement G(const char* w) { return E(Algebra::FQSym, HopfBasis::G, w); }
HopfElement P(const char* w) { return E(Algebra::PBT, HopfBasis::P, w); }

HopfElement tree_element(HopfBasis b, const BinaryTree& t) { return hopf_element(Algebra::PBT, b, pbt_index(t)); }

}

TEST(FQSym, ShiftedShuffle)
{
    auto s = shifted_shuffle(parse_word("12"), parse_word("21"), 2);
    std::sort(s.begin(), s.end());
    const std::vector<Word> want = {
        parse_word("1243"), parse_word("1423"), parse_word("1432"), parse_word("4123"), parse_word("4132"), parse_word("4312")};
    EXPECT_EQ(s, want);
}

TEST(FQSym, ProductsAndCoproducts)
{
    EXPECT_EQ(to_string(product(F("21"), F("1"))), "F[213] + F[231] + F[321]");
    EXPECT_EQ(to_string(product(G("21"), G("1"))), "G[213] + G[312] + G[321]");
    EXPECT_EQ(to_string(coproduct(F("231"))), "F[231] ⊗ 1 + F[12] ⊗ F[1] + F[1] ⊗ F[21] + 1 ⊗ F[231]");
    EXPECT_EQ(to_string(coproduct(G("312"))), "G[312] ⊗ 1 + G[12] ⊗ G[1] + G[1] ⊗ G[21] + 1 ⊗ G[312]");
    EXPECT_EQ(to_string(coproduct(F(""))), "1 ⊗ 1");
    EXPECT_EQ(product(F(""), F("312")), F("312"));
    EXPECT_EQ(product(G("21"), G("")), G("21"));
}

TEST(FQSym, AlgebraLaws)
{
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (const auto& x : all_perms(a))
                for (const auto& y : all_perms(b)) {
                    const auto X = hopf_element(Algebra::FQSym, HopfBasis::F, x);
                    const auto Y = hopf_element(Algebra::FQSym, HopfBasis::F, y);
                    EXPECT_EQ(coproduct(product(X, Y)), product(coproduct(X), coproduct(Y)));
                    EXPECT_EQ(product(product(X, Y), F("21")), product(X, product(Y, F("21"))));
                    const auto GX = hopf_element(Algebra::FQSym, HopfBasis::G, x);
                    const auto GY = hopf_element(Algebra::FQSym, HopfBasis::G, y);
                    EXPECT_EQ(verify::oracle::realize(product(GX, GY), 5),
                        verify::oracle::concat_product(verify::oracle::realize(GX, 5), verify::oracle::realize(GY, 5)));
                }
    for (const auto& x : all_perms(4)) {
        const auto X = hopf_element(Algebra::FQSym, HopfBasis::G, x);
        EXPECT_EQ(verify::detail::coproduct_left(X), verify::detail::coproduct_right(X));
    }
}

TEST(PBT, ProductsAndCoproducts)
{
    EXPECT_EQ(to_string(product(P("4213"), P("312"))),
        "P[7421356] + P[7452136] + P[7456213] + P[7542136] + P[7546213] + P[7564213]");
    EXPECT_EQ(to_string(coproduct(P("4213"))),
        "P[4213] ⊗ 1 + P[213] ⊗ P[1] + P[231] ⊗ P[1] + P[321] ⊗ P[1] + P[12] ⊗ P[12] + P[21] ⊗ P[12] + "
        "P[21] ⊗ P[21] + P[1] ⊗ P[213] + P[1] ⊗ P[312] + 1 ⊗ P[4213]");
    const auto two = product(P("1"), P("1"));
    std::set<BinaryTree> support;
    for (const auto& [w, c] : two.terms)
        support.insert(pbt_tree(w));
    EXPECT_EQ(support, std::set<BinaryTree>(all_trees(2).begin(), all_trees(2).end()));
    EXPECT_EQ(product(P(""), P("4213")), P("4213"));
    EXPECT_THROW(P("132"), std::invalid_argument);
}

TEST(PBT, EmbedsInFQSym)
{
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& t1 : all_trees(a))
                for (const auto& t2 : all_trees(b)) {
                    const auto x = tree_element(HopfBasis::P, t1), y = tree_element(HopfBasis::P, t2);
                    EXPECT_EQ(to_F(product(x, y)), product(to_F(x), to_F(y)));
                }
}

TEST(PBT, MultiplicativeBases)
{
    EXPECT_EQ(pbt_HE_convert(pbt_index(right_comb(3)), HopfBasis::E).terms.size(), 1u);
    EXPECT_EQ(pbt_HE_convert(pbt_index(left_comb(3)), HopfBasis::H).terms.size(), 1u);
    for (int n = 0; n <= 5; ++n)
        for (const auto& t : all_trees(n))
            EXPECT_EQ(mpz_class(pbt_HE_convert(pbt_index(t), HopfBasis::H).terms.size()),
                coefficient_sum(tamari_polynomial(t)));
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& t1 : all_trees(a))
                for (const auto& t2 : all_trees(b))
                    for (auto bs : {HopfBasis::H, HopfBasis::E}) {
                        const auto h = product(tree_element(bs, t1), tree_element(bs, t2));
                        ASSERT_EQ(h.terms.size(), 1u);
                        const auto lhs = product(pbt_HE_convert(pbt_index(t1), bs), pbt_HE_convert(pbt_index(t2), bs));
                        EXPECT_EQ(lhs, pbt_HE_convert(h.terms.begin()->first, bs));
                    }
    EXPECT_THROW(coproduct(tree_element(HopfBasis::H, leaf())), std::invalid_argument);
}

TEST(Stutter, Standardization)
{
    EXPECT_EQ(m_standardize(std::string("ababaa"), 2), parse_word("131322"));
    EXPECT_EQ(m_standardize(std::string("abbbba"), 2), parse_word("122331"));
    EXPECT_EQ(m_standardize(parse_word("112233"), 2), parse_word("112233"));
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> letter(1, 4);
    for (int t = 0; t < 200; ++t) {
        Word u;
        for (int k = 1; k <= 4; ++k)
            u.insert(u.end(), 2, k);
        std::shuffle(u.begin(), u.end(), rng);
        EXPECT_EQ(standardize(m_standardize(u, 2)), standardize(u));
    }
}

TEST(FQSymM, ProductsAndCoproducts)
{
    auto G2 = [](const char* w) { return E(Algebra::FQSymM, HopfBasis::G, w, 2); };
    auto F2 = [](const char* w) { return E(Algebra::FQSymM, HopfBasis::F, w, 2); };
    EXPECT_EQ(to_string(product(G2("1221"), G2("11"))), "G2[122133] + G2[133122] + G2[233211]");
    EXPECT_EQ(to_string(coproduct(F2("121233"))), "F2[121233] ⊗ 1 + F2[1212] ⊗ F2[11] + 1 ⊗ F2[121233]");
    EXPECT_EQ(to_string(coproduct(F2("121323"))), "F2[121323] ⊗ 1 + 1 ⊗ F2[121323]");
    EXPECT_THROW(F2("1213"), std::invalid_argument);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (const auto& x : all_perms(a))
                for (const auto& y : all_perms(b))
                    for (auto bs : {HopfBasis::F, HopfBasis::G}) {
                        const auto one = product(hopf_element(Algebra::FQSymM, bs, x, 1), hopf_element(Algebra::FQSymM, bs, y, 1));
                        const auto ref = product(hopf_element(Algebra::FQSym, bs, x), hopf_element(Algebra::FQSym, bs, y));
                        EXPECT_EQ(one.terms, ref.terms);
                    }
}

TEST(PBTM, ProductsAndCoproducts)
{
    auto P2 = [](const char* w) { return E(Algebra::PBTM, HopfBasis::P, w, 2); };
    EXPECT_EQ(to_string(product(P2("2112"), P2("11"))), "P2[211233] + P2[321123] + P2[332112]");
    EXPECT_EQ(to_string(coproduct(P2("211233"))), "P2[211233] ⊗ 1 + P2[2112] ⊗ P2[11] + 1 ⊗ P2[211233]");
    for (int n = 0; n <= 3; ++n)
        for (const auto& t : all_m_binary_trees(n, 2)) {
            const auto w = pbtm_index(t, 2);
            EXPECT_EQ(pbtm_tree(w), t);
            EXPECT_TRUE(avoids_132(standardize(w)));
        }
}
