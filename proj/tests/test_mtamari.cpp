#include "algcomb/mtamari.hpp"

#include <gtest/gtest.h>

#include <queue>

using namespace algcomb;

namespace {

const std::vector<std::pair<int, int>> sizes = {{1, 2}, {2, 2}, {3, 2}, {4, 2}, {1, 3}, {2, 3}, {3, 1}, {4, 1}, {2, 4}};

std::map<std::string, std::set<std::string>> ballot_upsets(int n, int m)
{
    std::map<std::string, std::set<std::string>> up;
    for (const auto& p : all_ballot_paths(n, m)) {
        std::set<std::string> seen{p};
        std::queue<std::string> q;
        q.push(p);
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            for (const auto& y : ballot_rotations(x, m))
                if (seen.insert(y).second)
                    q.push(y);
        }
        up[p] = seen;
    }
    return up;
}

std::string repeat(const std::string& s, int k)
{
    std::string r;
    for (int i = 0; i < k; ++i)
        r += s;
    return r;
}

}

TEST(Ballot, Bijection)
{
    EXPECT_EQ(ballot_to_dyck(repeat("100", 3), 2), repeat("1100", 3));
    EXPECT_EQ(ballot_to_dyck("1010", 1), "1010");
    EXPECT_EQ(all_ballot_paths(3, 2).size(), 12u);
    EXPECT_THROW(ballot_to_dyck("0100", 2), std::invalid_argument);
    for (auto [n, m] : sizes)
        for (const auto& p : all_ballot_paths(n, m)) {
            EXPECT_EQ(dyck_to_ballot(ballot_to_dyck(p, m), m), p);
            EXPECT_EQ(mpz_class(all_ballot_paths(n, m).size()), m_catalan(n, m));
        }
}

TEST(Comb, Shape)
{
    EXPECT_EQ(to_dyck(comb_tree(3, 2)), "110011001100");
    EXPECT_EQ(comb_tree(4, 1), left_comb(4));
    EXPECT_TRUE(is_m_binary(comb_tree(3, 2), 2));
    EXPECT_FALSE(is_m_binary(left_comb(5), 2));
    std::vector<Relation> chain;
    for (int a = 1; a < 6; ++a)
        if (a % 2)
            chain.emplace_back(a + 1, a);
    EXPECT_EQ(final_forest(comb_tree(3, 2)), IntervalPoset::from_relations(6, chain));
}

TEST(MBinary, UpperSetOfComb)
{
    for (auto [n, m] : sizes) {
        if (n * m > 8)
            continue;
        const auto mb = all_m_binary_trees(n, m);
        EXPECT_EQ(mpz_class(mb.size()), m_catalan(n, m));
        size_t above = 0;
        for (const auto& t : all_trees(n * m)) {
            const bool ge = tamari_leq(comb_tree(n, m), t);
            EXPECT_EQ(is_m_binary(t, m), ge);
            above += ge;
        }
        EXPECT_EQ(above, mb.size());
        for (const auto& t : mb)
            EXPECT_EQ(mary_to_binary(binary_to_mary(t, m), m), t);
    }
}

TEST(MBinary, OrderMatchesBallotRotations)
{
    for (auto [n, m] : sizes) {
        auto up = ballot_upsets(n, m);
        for (const auto& [p, ups] : up)
            for (const auto& [q, unused] : up) {
                const auto a = from_dyck(ballot_to_dyck(p, m)), b = from_dyck(ballot_to_dyck(q, m));
                EXPECT_EQ(m_tamari_leq(a, b, m), ups.count(q) > 0) << p << " " << q;
            }
    }
}

TEST(MComposition, WorkedExample)
{
    const auto ch = m_chain(2);
    EXPECT_EQ(m_stat(ch, 2), stat_monomial(1, 1));
    const auto r = IntervalPoset::from_relations(4, {{2, 1}, {4, 3}, {2, 3}});
    EXPECT_TRUE(is_m_interval_poset(r, 2));
    const auto s = m_compose(ch, {r, ch}, 2);
    EXPECT_EQ(s.size(), 7u);
    EXPECT_EQ(m_stat(s, 2),
        stat_monomial(2, 5, 0, 2) + stat_monomial(3, 5, 0, 2) + stat_monomial(4, 5, 0, 2) + stat_monomial(5, 5));
    EXPECT_EQ(bilinear_B_m(stat_monomial(1, 1), {stat_monomial(2, 2), stat_monomial(1, 1)}), m_stat(s, 2));
    EXPECT_EQ(right_delta_over_x(stat_monomial(1, 1), stat_monomial(4, 7) + stat_monomial(3, 7)),
        stat_monomial(1, 8, 0, 2) + stat_monomial(2, 8, 0, 2) + stat_monomial(3, 8, 0, 2) + stat_monomial(4, 8));
    const auto empty = m_compose(IntervalPoset(0), {IntervalPoset(0), IntervalPoset(0)}, 2);
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_EQ(empty.begin()->first, ch);
    for (const auto& part : m_decompose(ch, 2))
        EXPECT_EQ(part.size(), 0);
}

TEST(MComposition, RoundTripAndMorphism)
{
    for (auto [n, m] : sizes) {
        if (m < 2)
            continue;
        for (const auto& p : all_m_interval_posets(n, m)) {
            const auto d = m_decompose(p, m);
            ASSERT_EQ(d.size(), static_cast<size_t>(m) + 1);
            const auto s = m_compose(d[0], {d.begin() + 1, d.end()}, m);
            EXPECT_TRUE(s.count(p));
            std::vector<StatPoly> rights;
            for (size_t i = 1; i < d.size(); ++i)
                rights.push_back(m_stat(d[i], m));
            EXPECT_EQ(m_stat(s, m), bilinear_B_m(m_stat(d[0], m), rights));
        }
    }
}

TEST(MPolynomial, Values)
{
    const MAryTree l = mary_node({{}, {}, {}});
    const MAryTree t = mary_node({l, l, l});
    EXPECT_EQ(m_tamari_polynomial(t, 2), stat_monomial(2, 0, 0, 2) + stat_monomial(3, 0, 0, 2) + stat_monomial(4, 0));
    EXPECT_EQ(m_tamari_polynomial(MAryTree{}, 2), stat_monomial(0, 0));
    EXPECT_EQ(parse_mary_tree(to_bracket(t), 2), t);
    for (auto [n, m] : sizes) {
        auto up = ballot_upsets(n, m);
        for (const auto& [p, unused] : up) {
            StatPoly down;
            for (const auto& [r, ups] : up)
                if (ups.count(p))
                    down += stat_monomial(returns_to_zero(ballot_to_dyck(r, m)), 0);
            EXPECT_EQ(m_tamari_polynomial(from_dyck(ballot_to_dyck(p, m)), m), down) << p;
        }
    }
}

TEST(MCounts, Formula)
{
    EXPECT_EQ(m_interval_count_formula(2, 2), 6);
    EXPECT_EQ(m_interval_count_formula(3, 2), 58);
    EXPECT_EQ(m_interval_count_formula(3, 1), 13);
    EXPECT_EQ(m_interval_count_formula(1, 5), 1);
    for (auto [n, m] : sizes) {
        EXPECT_EQ(mpz_class(all_m_interval_posets(n, m).size()), m_interval_count_formula(n, m));
        EXPECT_EQ(count_m_intervals(n, m), m_interval_count_formula(n, m));
        EXPECT_EQ(y_coefficient(m_phi_series(n, m), n), y_coefficient(m_interval_polynomial(n, m), n));
    }
}
