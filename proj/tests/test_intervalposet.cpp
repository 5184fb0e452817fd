#include "algcomb/intervalposet.hpp"

#include <gtest/gtest.h>

using namespace algcomb;

namespace {

size_t linear_extensions(const IntervalPoset& p)
{
    size_t count = 0;
    for (const auto& order : all_perms(p.size())) {
        std::vector<int> pos(p.size() + 1);
        for (int i = 0; i < p.size(); ++i)
            pos[order[i]] = i;
        bool ok = true;
        for (const auto& [a, b] : p.relations())
            ok = ok && pos[a] < pos[b];
        count += ok;
    }
    return count;
}

// Every partial order on {1..n}, as closures of arbitrary relation sets.
std::set<IntervalPoset> all_posets(int n)
{
    std::vector<Relation> pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (a != b)
                pairs.emplace_back(a, b);
    std::set<IntervalPoset> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Relation> rels;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                rels.push_back(pairs[i]);
        try {
            out.insert(IntervalPoset::from_relations(n, rels));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

StatPoly tamari_down_poly(const BinaryTree& t)
{
    StatPoly q;
    for (const auto& s : all_trees(t.size()))
        if (tamari_leq(s, t))
            q += stat_monomial(left_branch(s), 0);
    return q;
}

}

TEST(Forests, SmallCases)
{
    EXPECT_TRUE(initial_forest(leaf()).relations().empty());
    EXPECT_TRUE(final_forest(leaf()).relations().empty());
    EXPECT_EQ(interval_poset(left_comb(3), left_comb(3)), bst_poset(left_comb(3)));
}

TEST(Forests, ExtensionsCountLowerIntervals)
{
    for (int n = 0; n <= 6; ++n)
        for (const auto& t : all_trees(n)) {
            unsigned long long lower = 0;
            for (const auto& s : all_trees(n))
                if (tamari_leq(s, t))
                    lower += hook_count(s);
            EXPECT_EQ(linear_extensions(initial_forest(t)), lower);
        }
}

TEST(Intervals, CountsAndRoundTrip)
{
    const std::vector<size_t> counts = {1, 1, 3, 13, 68, 399};
    for (int n = 0; n <= 5; ++n) {
        size_t c = 0;
        for (const auto& a : all_trees(n))
            for (const auto& b : all_trees(n))
                if (tamari_leq(a, b)) {
                    ++c;
                    const auto p = interval_poset(a, b);
                    EXPECT_TRUE(p.is_interval_poset());
                    EXPECT_EQ(decompose(p), std::make_pair(a, b));
                }
        EXPECT_EQ(c, counts[n]);
        EXPECT_EQ(all_interval_posets(n).size(), counts[n]);
        EXPECT_EQ(interval_count_formula(n), counts[n]);
    }
}

TEST(Intervals, ContainmentIsExtension)
{
    std::vector<std::pair<BinaryTree, BinaryTree>> iv;
    for (const auto& a : all_trees(4))
        for (const auto& b : all_trees(4))
            if (tamari_leq(a, b))
                iv.emplace_back(a, b);
    for (const auto& [a, b] : iv)
        for (const auto& [c, d] : iv) {
            const bool inside = tamari_leq(c, a) && tamari_leq(b, d);
            EXPECT_EQ(interval_poset(a, b).extends(interval_poset(c, d)), inside);
        }
}

TEST(Recognizer, ExhaustiveSmallPosets)
{
    EXPECT_TRUE(IntervalPoset(3).is_interval_poset());
    EXPECT_FALSE(IntervalPoset::from_relations(3, {{1, 3}}).is_interval_poset());
    EXPECT_TRUE(IntervalPoset::from_relations(3, {{1, 3}, {2, 3}}).is_interval_poset());
    for (int n = 0; n <= 4; ++n) {
        const auto images = all_interval_posets(n);
        const std::set<IntervalPoset> valid(images.begin(), images.end());
        for (const auto& p : all_posets(n))
            EXPECT_EQ(p.is_interval_poset(), valid.count(p) > 0) << to_string(p);
    }
}

TEST(Composition, ProductsAndStatistic)
{
    const auto one = compose(IntervalPoset(0), IntervalPoset(0));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.begin()->first, single_vertex());

    const auto a = IntervalPoset::from_relations(3, {{2, 1}});
    const auto b = IntervalPoset::from_relations(3, {{1, 2}, {3, 2}});
    const auto lp = left_product(a, b);
    EXPECT_TRUE(lp.is_interval_poset());
    EXPECT_EQ(right_product(a, b).size(), static_cast<size_t>(b.trees()) + 1);

    EXPECT_EQ(stat(IntervalPoset(4)), stat_monomial(4, 4));
    EXPECT_EQ(stat(bst_poset(right_comb(2)), true), stat_monomial(1, 2, 1));
    EXPECT_EQ(bilinear_B(stat_monomial(2, 3), stat_monomial(3, 4)),
        stat_monomial(6, 8) + stat_monomial(5, 8) + stat_monomial(4, 8) + stat_monomial(3, 8));
    EXPECT_EQ(bilinear_B(stat_monomial(2, 3, 1), stat_monomial(3, 4, 1), true),
        stat_monomial(6, 8, 2) + stat_monomial(5, 8, 3) + stat_monomial(4, 8, 3) + stat_monomial(3, 8, 3));
}

TEST(Composition, MorphismAndDecomposition)
{
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n1 + n2 <= 4; ++n2)
            for (const auto& a : all_interval_posets(n1))
                for (const auto& b : all_interval_posets(n2)) {
                    const auto s = compose(a, b);
                    EXPECT_EQ(s.size(), static_cast<size_t>(b.trees()) + 1);
                    for (bool wb : {false, true})
                        EXPECT_EQ(stat(s, wb), bilinear_B(stat(a, wb), stat(b, wb), wb));
                    for (const auto& [p, c] : s) {
                        EXPECT_TRUE(p.is_interval_poset());
                        EXPECT_EQ(unique_decomposition(p), std::make_pair(a, b));
                    }
                }
    EXPECT_THROW(unique_decomposition(IntervalPoset(0)), std::invalid_argument);
}

TEST(Composition, PivotOfBinarySearchPoset)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : all_trees(n)) {
            const auto [l, r] = unique_decomposition(bst_poset(t));
            EXPECT_EQ(l, bst_poset(t.left()));
            EXPECT_EQ(r, bst_poset(t.right()));
        }
}

TEST(TamariPolynomial, Values)
{
    EXPECT_EQ(tamari_polynomial(BinaryTree{}), stat_monomial(0, 0));
    EXPECT_EQ(tamari_polynomial(left_comb(4)), stat_monomial(4, 0));
    EXPECT_EQ(tamari_polynomial(right_comb(2)), stat_monomial(1, 0) + stat_monomial(2, 0));
    for (int n = 0; n <= 7; ++n)
        for (const auto& t : all_trees(n)) {
            const auto p = tamari_polynomial(t);
            EXPECT_EQ(p, tamari_down_poly(t));
            EXPECT_EQ(delta(p), delta_by_division(p));
        }
}

TEST(Series, Coefficients)
{
    const auto phi = phi_series(6);
    EXPECT_EQ(y_coefficient(phi, 0), stat_monomial(0, 0));
    EXPECT_EQ(y_coefficient(phi, 3), stat_monomial(1, 0, 0, 3) + stat_monomial(2, 0, 0, 5) + stat_monomial(3, 0, 0, 5));
    for (int n = 0; n <= 6; ++n)
        EXPECT_EQ(coefficient_sum(y_coefficient(phi, n)), interval_count_formula(n));
    EXPECT_EQ(interval_count_formula(5), 399);
    EXPECT_EQ(stat_to_string(y_coefficient(phi, 3)), "3*x + 5*x^2 + 5*x^3");
}
