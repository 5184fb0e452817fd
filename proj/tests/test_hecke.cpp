#include "algcomb/hecke.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace algcomb;

namespace {

Perm P(const char* s) { return parse_perm(s); }

HeckeSum single(HeckeBasis b, const char* s) { return hecke_element(b, P(s)); }

bool is_coset_max(const Perm& s, int k)
{
    for (int i = 1; i < static_cast<int>(s.size()); ++i)
        if (i != k && s[i - 1] < s[i])
            return false;
    return true;
}

}

TEST(Hecke, ChangeBasis)
{
    const auto w = single(HeckeBasis::K, "321");
    EXPECT_EQ(change_basis(w), single(HeckeBasis::KHat, "321"));
    HeckeSum want{HeckeBasis::KHat, {}};
    want.add(P("231"), 1);
    want.add(P("321"), 1);
    EXPECT_EQ(change_basis(single(HeckeBasis::K, "231")), want);
    std::mt19937 rng(1);
    const auto perms = all_perms(4);
    std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int t = 0; t < 20; ++t) {
        HeckeSum h{t % 2 ? HeckeBasis::K : HeckeBasis::KHat, {}};
        for (int j = 0; j < 5; ++j)
            h.add(perms[pick(rng)], coef(rng));
        EXPECT_EQ(change_basis(change_basis(h)), h);
    }
}

TEST(Hecke, Action)
{
    EXPECT_EQ(act(single(HeckeBasis::K, "21"), HeckeOp::pi, 1), single(HeckeBasis::K, "12"));
    EXPECT_EQ(act(single(HeckeBasis::K, "12"), HeckeOp::pi, 1), single(HeckeBasis::K, "12"));
    HeckeSum neg{HeckeBasis::KHat, {}};
    neg.add(P("12"), -1);
    EXPECT_EQ(act(single(HeckeBasis::KHat, "12"), HeckeOp::pihat, 1), neg);
    EXPECT_THROW(act(single(HeckeBasis::K, "12"), HeckeOp::pihat, 1), std::invalid_argument);
    // the action commutes with the change of basis
    for (const auto& s : all_perms(4))
        for (int i = 1; i < 4; ++i) {
            const auto k = hecke_element(HeckeBasis::K, s);
            HeckeSum hat = change_basis(k);
            HeckeSum via = act(hat, HeckeOp::pihat, i);
            via += hat;
            EXPECT_EQ(change_basis(act(k, HeckeOp::pi, i)), via);
        }
}

TEST(PieriWord, Letters)
{
    using T = std::vector<Transposition>;
    EXPECT_EQ(build_W(P("136254"), 4).letters, (T{{2, 6}, {2, 5}, {4, 6}, {4, 5}}));
    EXPECT_EQ(build_W(P("1372654"), 4).letters, (T{{2, 7}, {2, 6}, {2, 5}, {4, 7}, {4, 6}, {4, 5}}));
    EXPECT_EQ(build_W(identity(5), 3).letters, (T{{3, 4}}));
}

TEST(PieriWord, Compatibility)
{
    const auto W = build_W(P("1372654"), 4);
    EXPECT_FALSE(is_compatible({{2, 6}, {2, 5}, {4, 7}}, W));
    EXPECT_TRUE(is_compatible({}, W));
}

TEST(PieriWord, CompatibleSubwordsAreChains)
{
    for (int n = 2; n <= 5; ++n)
        for (const auto& s : all_perms(n))
            for (int k = 1; k < n; ++k) {
                const auto W = build_W(s, k);
                const size_t m = W.letters.size();
                for (unsigned mask = 0; mask < (1u << m); ++mask) {
                    std::vector<Transposition> w;
                    for (size_t i = 0; i < m; ++i)
                        if (mask >> i & 1)
                            w.push_back(W.letters[i]);
                    bool chain = true;
                    Perm cur = s;
                    for (auto [a, b] : w) {
                        chain = chain && is_bruhat_transposition(cur, a, b);
                        cur = apply_transposition(cur, a, b, Side::right);
                    }
                    EXPECT_EQ(is_compatible(w, W), chain) << to_string(s) << " k=" << k << " mask=" << mask;
                }
            }
}

TEST(Pieri, ExampleSet)
{
    const auto e = pieri_set(P("136254"), 4);
    EXPECT_EQ(to_string(e),
        "+K(136254) - K(136452) - K(136524) + K(136542) - K(146253) + K(146352) + K(146523) - K(146532) - "
        "K(156234) + K(156243) + K(156324) - K(156342) - K(156423) + K(156432)");
    EXPECT_EQ(eta(P("136254"), 4), P("156432"));
    const auto r = verify_interval(P("136254"), 4);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.terms, 14u);
    EXPECT_EQ(pieri_by_operators(P("136254"), {4}), e);
}

TEST(Pieri, CosetMaximumGivesUpperInterval)
{
    for (const auto& s : all_perms(5))
        for (int k = 1; k < 5; ++k) {
            if (!is_coset_max(s, k))
                continue;
            HeckeSum want{HeckeBasis::K, {}};
            for (const auto& m : bruhat_interval(s, longest(5)))
                want.add(m, (length(m) - length(s)) % 2 ? -1 : 1);
            EXPECT_EQ(pieri_set(s, k), want) << to_string(s) << " " << k;
        }
}

TEST(Pieri, EtaIsTheLongestTerm)
{
    EXPECT_EQ(eta(P("2413"), 0), P("2413"));
    for (const auto& s : all_perms(5))
        for (int k = 1; k < 5; ++k) {
            const auto e = pieri_set(s, k);
            int best = -1, count = 0;
            Perm top;
            for (const auto& [p, c] : e.terms) {
                if (length(p) > best) {
                    best = length(p);
                    count = 0;
                    top = p;
                }
                count += length(p) == best;
            }
            EXPECT_EQ(count, 1);
            EXPECT_EQ(eta(s, k), top);
            EXPECT_TRUE(verify_interval(s, k).ok);
            EXPECT_EQ(pieri_by_operators(s, {k}), e);
        }
    const auto id = verify_interval(identity(4), 2);
    EXPECT_TRUE(id.ok);
    EXPECT_EQ(id.terms, 2u);
}

TEST(EtaCycles, Examples)
{
    const auto cs = eta_cycles(P("1362547"));
    ASSERT_GE(cs.size(), 2u);
    EXPECT_EQ(cs[0], (Cycle{1, 2, 4}));
    EXPECT_EQ(cs[1], (Cycle{1, 2, 3, 5, 6}));
    EXPECT_EQ(cycles_to_string(eta_cycles(P("123"))), "(1,2)(1,2,3)(2,3)");
    for (const auto& s : all_perms(4)) {
        size_t total = 0;
        for (const auto& c : eta_cycles(s))
            total += c.size();
        EXPECT_EQ(total, 2 * bruhat_successors(s).size() + 4) << to_string(s);
    }
}

TEST(Parabolic, Examples)
{
    const auto pp = parabolic_pieri(P("251463"), {2, 4});
    std::vector<Perm> maxima;
    for (const auto& [m, c] : pp.terms) {
        bool top = true;
        for (const auto& [q, d] : pp.terms)
            top = top && (q == m || !bruhat_leq(m, q));
        if (top)
            maxima.push_back(m);
    }
    EXPECT_EQ(maxima, (std::vector<Perm>{P("362541"), P("461532")}));
    EXPECT_EQ(parabolic_pieri(P("136254"), {4}), pieri_set(P("136254"), 4));

    HeckeSum rhs{HeckeBasis::K, {}};
    for (auto [s, c] : std::vector<std::pair<const char*, int>>{
             {"124635", 1}, {"124653", -1}, {"125634", -1}, {"125643", 1}})
        for (const auto& [p, d] : pieri_set(P(s), 2).terms)
            rhs.add(p, c * d);
    EXPECT_EQ(parabolic_pieri(P("124635"), {2, 5}), rhs);
    EXPECT_EQ(pieri_by_operators(P("124635"), {2, 5}), rhs);
}
