#include "algcomb/bases.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace algcomb;

namespace {

QPoly X(const char* s) { return parse_polynomial(s); }

// x_i^{-1} -> 1 - x_i on a polynomial in inverse variables.
QPoly invert_substitute(const QPoly& f)
{
    QPoly r;
    for (const auto& [v, c] : f.terms()) {
        QPoly m(c);
        for (size_t i = 0; i < v.size(); ++i) {
            EXPECT_LE(v[i], 0);
            m = m * (QPoly(Rational(1)) - QPoly::var(static_cast<int>(i) + 1)).pow(static_cast<unsigned>(-v[i]));
        }
        r += m;
    }
    return r;
}

QPoly h(int k, int n) { return k < 0 ? QPoly() : k == 0 ? QPoly(Rational(1)) : schur({k}, n); }

QPoly jacobi_trudi(const std::vector<int>& lambda, int n)
{
    const int l = static_cast<int>(lambda.size());
    QPoly det;
    for (const auto& p : all_perms(l)) {
        QPoly term(Rational(sign(p)));
        for (int i = 0; i < l; ++i)
            term = term * h(lambda[i] - (i + 1) + p[i], n);
        det += term;
    }
    return det;
}

std::vector<std::vector<int>> partitions(int total, int max_part)
{
    if (total == 0)
        return {{}};
    std::vector<std::vector<int>> out;
    for (int first = std::min(total, max_part); first >= 1; --first)
        for (auto rest : partitions(total - first, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

std::vector<Exponent> small_indices(int n, int max_total)
{
    std::vector<Exponent> out{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<Exponent> next;
        for (const auto& v : out)
            for (int a = 0; a <= max_total; ++a) {
                auto w = v;
                w.push_back(a);
                int s = 0;
                for (int x : w)
                    s += x;
                if (s <= max_total)
                    next.push_back(w);
            }
        out = next;
    }
    return out;
}

}

TEST(Expand, KeyAndSchubertExamples)
{
    const QPoly y = expand(Basis::Y, {1, 2, 2, 3});
    EXPECT_EQ(y.size(), 13u);
    EXPECT_EQ(y.coefficient({2, 2, 2, 2}), 3);
    EXPECT_EQ(expand(Basis::Y, {1, 0, 1}), X("x[1,1,0] + x[1,0,1] + x[2,0,0]"));
    EXPECT_EQ(expand(Basis::K, {1, 0, 1}), X("x[1,1,0] + x[1,0,1]"));
}

TEST(Expand, OtherRootTypes)
{
    EXPECT_EQ(expand(Basis::K, {2, -1, 1}, RootType::B),
        X("x[2,-1,1] + x[2,0,0] + x[2,0,1] + x[2,1,-1] + x[2,1,0] + x[2,1,1]"));
    EXPECT_EQ(expand(Basis::K, {2, -1, 1}, RootType::C), X("x[2,-1,1] + x[2,0,0] + x[2,1,-1] + x[2,1,1]"));
    EXPECT_EQ(expand(Basis::K, {2, -2, 1}, RootType::D),
        X("x[2,2,-1] + x[2,1,0] + x[2,-1,2] + x[2,0,1] + x[2,1,-2] + x[2,-1,0] + x[2,-2,1] + x[2,0,-1]"));
}

TEST(Expand, Grothendieck)
{
    EXPECT_EQ(expand(Basis::GPos, {0, 1}), X("x[1,0] - x[1,1] + x[0,1]"));
    EXPECT_EQ(expand(Basis::GNeg, {0, 1}), X("x[0,0] - x[-1,-1]"));
    for (const auto& s : all_perms(4)) {
        const auto v = lehmer_code(s);
        const QPoly neg = expand(Basis::GNeg, v);
        EXPECT_EQ(invert_substitute(neg), expand(Basis::GPos, v)) << to_string(s);
    }
}

TEST(Expand, DominantIndices)
{
    EXPECT_EQ(expand(Basis::K, {3, 1, 0}), X("x[3,1,0]"));
    const DoublePoly y = expand_double(Basis::YDouble, {2, 1, 0});
    auto xv = [](int i) { return DoublePoly::var(i); };
    auto yv = [](int j) { return DoublePoly(QPoly::var(j)); };
    EXPECT_EQ(y, (xv(1) - yv(1)) * (xv(1) - yv(2)) * (xv(2) - yv(1)));
    EXPECT_EQ(to_string(expand_double(Basis::GDouble, {1, 0})), "(-y[1])*x[-1, 0] + x[0, 0]");
}

TEST(ToBasis, ExamplesFromMonomials)
{
    const QPoly f = X("x[2,4,1] + x[5,5,2]");
    EXPECT_EQ(to_string(to_basis(f, Basis::Y)), "Y(2, 4, 1) - Y(3, 3, 1) - Y(4, 2, 1) + Y(5, 5, 2)");
    EXPECT_EQ(to_string(to_basis(f, Basis::GPos)),
        "G(2, 4, 1) - G(3, 3, 1) + G(3, 4, 1) - G(4, 2, 1) + G(4, 4, 1) + G(5, 5, 2)");
    EXPECT_THROW(to_basis(f, Basis::GNeg), std::invalid_argument);
}

TEST(ToBasis, RoundTrip)
{
    std::mt19937 rng(17);
    const auto idx = small_indices(3, 4);
    std::uniform_int_distribution<size_t> pick(0, idx.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (Basis b : {Basis::Y, Basis::GPos, Basis::K, Basis::KHat})
        for (int trial = 0; trial < 10; ++trial) {
            BasisPolynomial p{b};
            for (int t = 0; t < 4; ++t)
                p.add(idx[pick(rng)], coef(rng));
            const auto q = to_basis(expand(p), b);
            EXPECT_EQ(expand(q), expand(p));
            EXPECT_EQ(q.terms.size(), p.terms.size()) << basis_name(b);
        }
}

TEST(Convert, Examples)
{
    EXPECT_EQ(to_string(convert(basis_element(Basis::Y, {1, 0, 1}), Basis::K)), "K(1, 0, 1) + K(2, 0, 0)");
    EXPECT_EQ(to_string(convert(basis_element(Basis::GPos, {1, 4, 2}), Basis::Y)),
        "Y(1, 4, 2) - 2*Y(2, 4, 2) - Y(3, 4, 1) + Y(3, 4, 2)");
    const auto k = basis_element(Basis::K, {0, 2, 1});
    EXPECT_EQ(convert(k, Basis::K), k);
}

TEST(Product, SquareAndUnit)
{
    BasisPolynomial p{Basis::Y};
    p.add({1, 3, 2}, 1);
    p.add({2, 1, 2}, 1);
    const auto sq = basis_product(p, p);
    EXPECT_EQ(sq.terms.size(), 17u);
    EXPECT_EQ(to_string(sq),
        "Y(2, 6, 4) + 2*Y(3, 4, 4) + 2*Y(3, 5, 3) + Y(3, 5, 4) + Y(3, 6, 3) + Y(4, 2, 4) + Y(4, 3, 3) + "
        "2*Y(4, 4, 3) + Y(4, 4, 4) + 2*Y(4, 5, 2) + Y(4, 5, 3) + Y(5, 2, 3) + 2*Y(5, 2, 4) + 2*Y(5, 3, 3) + "
        "Y(5, 5, 2) + Y(6, 2, 2) + 2*Y(6, 2, 3)");
    EXPECT_EQ(basis_product(p, basis_element(Basis::Y, {0, 0, 0})), p);
    const auto a = basis_element(Basis::K, {1, 0, 2}), b = basis_element(Basis::K, {0, 1, 1});
    EXPECT_EQ(expand(basis_product(a, b)), expand(a) * expand(b));
}

TEST(Operators, IndexRulesMatchPolynomials)
{
    BasisPolynomial p{Basis::Y};
    p.add({1, 3, 2}, 1);
    p.add({2, 1, 2}, 1);
    EXPECT_EQ(to_string(operator_on_basis(p, op_d(1))), "Y(1, 1, 2)");
    EXPECT_EQ(operator_on_basis(basis_element(Basis::K, {2, 2, 0}), op_pi(1)), basis_element(Basis::K, {2, 2, 0}));
    struct Case {
        Basis b;
        OperatorSpec op;
    };
    const std::vector<Case> cases = {{Basis::Y, op_d(1)}, {Basis::Y, op_d(2)}, {Basis::K, op_pi(1)},
        {Basis::K, op_pihat(2)}, {Basis::KHat, op_pihat(1)}, {Basis::KHat, op_pi(2)}, {Basis::GNeg, op_pi(2)}};
    for (const auto& c : cases)
        for (const auto& v : small_indices(3, 3)) {
            const auto e = basis_element(c.b, v);
            EXPECT_EQ(expand(operator_on_basis(e, c.op)), apply(expand(e), c.op))
                << basis_name(c.b) << " " << exponent_to_string(v);
        }
}

TEST(Schur, ExamplesAndJacobiTrudi)
{
    EXPECT_EQ(schur({1}, 3), X("x[1,0,0] + x[0,1,0] + x[0,0,1]"));
    EXPECT_EQ(schur({2, 2, 1}, 4) * schur({2}, 4),
        schur({2, 2, 2, 1}, 4) + schur({3, 2, 1, 1}, 4) + schur({3, 2, 2}, 4) + schur({4, 2, 1}, 4));
    for (int total = 1; total <= 5; ++total)
        for (const auto& lambda : partitions(total, total))
            EXPECT_EQ(jacobi_trudi(lambda, 5), schur(lambda, 5));
    EXPECT_THROW(schur({1, 2}, 3), std::invalid_argument);
}

TEST(ProjectiveDegree, Values)
{
    EXPECT_EQ(projective_degree(parse_perm("2143")), 78);
    EXPECT_EQ(projective_degree(parse_perm("4321")), 1);
    EXPECT_EQ(projective_degree(parse_perm("1234")), 720);
    EXPECT_EQ(projective_degree(parse_perm("1324")), 280);
    EXPECT_EQ(projective_degree(parse_perm("2134")), 220);
    EXPECT_EQ(projective_degree(parse_perm("12")), 1);
    EXPECT_EQ(projective_degree(parse_perm("21")), 1);
}
