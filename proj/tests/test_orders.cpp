#include "algcomb/orders.hpp"

#include <gtest/gtest.h>

#include <queue>

using namespace algcomb;

namespace {

Perm P(const char* s) { return parse_perm(s); }

std::set<Perm> weak_closure(const Perm& s, Side side)
{
    std::set<Perm> seen{s};
    std::queue<Perm> q;
    q.push(s);
    const int n = static_cast<int>(s.size());
    while (!q.empty()) {
        Perm x = q.front();
        q.pop();
        for (int i = 1; i < n; ++i) {
            Perm y = side == Side::right ? right_simple(x, i) : left_simple(x, i);
            if (length(y) > length(x) && seen.insert(y).second)
                q.push(y);
        }
    }
    return seen;
}

}

TEST(Weak, ExampleAndClosure)
{
    EXPECT_TRUE(weak_leq(P("3124"), P("4312"), Side::right));
    EXPECT_TRUE(weak_leq(P("2413"), P("2413"), Side::left));
    for (auto side : {Side::right, Side::left})
        for (const auto& a : all_perms(4)) {
            const auto up = weak_closure(a, side);
            for (const auto& b : all_perms(4))
                EXPECT_EQ(weak_leq(a, b, side), up.count(b) > 0);
        }
}

TEST(Key, ColumnsOfExample)
{
    const Key k = key(P("361425"));
    const Key want = {{3}, {6, 3}, {6, 3, 1}, {6, 4, 3, 1}, {6, 4, 3, 2, 1}, {6, 5, 4, 3, 2, 1}};
    EXPECT_EQ(k, want);
    const Key id = key(identity(3));
    EXPECT_EQ(id, (Key{{1}, {2, 1}, {3, 2, 1}}));
    std::set<Key> seen;
    for (const auto& s : all_perms(5))
        EXPECT_TRUE(seen.insert(key(s)).second);
}

TEST(Bruhat, Examples)
{
    EXPECT_TRUE(bruhat_leq(P("2143"), P("3421")));
    EXPECT_TRUE(bruhat_leq(P("2143"), P("4123")));
    EXPECT_FALSE(weak_leq(P("2143"), P("4123"), Side::right));
    EXPECT_FALSE(weak_leq(P("2143"), P("4123"), Side::left));
    EXPECT_FALSE(bruhat_leq(P("4123"), P("2143")));
}

TEST(Bruhat, SuccessorsOfExample)
{
    const auto s = P("251436");
    EXPECT_TRUE(is_bruhat_transposition(s, 1, 4));
    EXPECT_FALSE(is_bruhat_transposition(s, 1, 6));
    const auto succ = bruhat_successors(s);
    EXPECT_NE(std::find(succ.begin(), succ.end(), P("451236")), succ.end());
    EXPECT_EQ(bruhat_successors(identity(5)).size(), 4u);
    for (const auto& a : all_perms(5))
        for (const auto& b : bruhat_successors(a)) {
            EXPECT_EQ(length(b), length(a) + 1);
            EXPECT_TRUE(bruhat_leq(a, b));
        }
}

TEST(Projection, Examples)
{
    const auto s = P("361425");
    EXPECT_EQ(project_positions(s, 3), P("136245"));
    EXPECT_EQ(project_values(s, 4), P("152346"));
    EXPECT_EQ(project_positions(s, 3, true), P("631542"));
    EXPECT_EQ(project_both(s, 4, 3), P("125346"));
}

TEST(Sup, Examples)
{
    const auto a = bruhat_sup({P("52134"), P("34251")});
    ASSERT_TRUE(a.perm.has_value());
    EXPECT_EQ(*a.perm, P("53241"));
    const auto b = bruhat_sup({P("42531"), P("34251")});
    EXPECT_FALSE(b.perm.has_value());
    EXPECT_TRUE(is_monotone_triangle(b.triangle));
    const auto c = bruhat_sup({P("2413")});
    EXPECT_EQ(c.triangle, key(P("2413")));
}

TEST(Interval, Sizes)
{
    EXPECT_EQ(bruhat_interval(P("136254"), P("156432")).size(), 14u);
    EXPECT_EQ(bruhat_interval(P("2413"), P("2413")), std::set<Perm>{P("2413")});
    EXPECT_TRUE(bruhat_interval(P("4321"), P("1234")).empty());
    const auto all = all_perms(4);
    for (const auto& a : all)
        for (const auto& b : all) {
            size_t c = 0;
            for (const auto& x : all)
                c += bruhat_leq(a, x) && bruhat_leq(x, b);
            EXPECT_EQ(bruhat_interval(a, b).size(), c);
        }
}

TEST(CosetMax, Example)
{
    EXPECT_EQ(coset_interval_max(P("13245"), P("54123"), 2), P("31524"));
    EXPECT_EQ(coset_interval_max(P("13245"), P("31245"), 2), P("31245"));
}
