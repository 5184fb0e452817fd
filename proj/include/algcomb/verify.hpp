#pragma once

#include "bases.hpp"
#include "hecke.hpp"
#include "hopf.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <future>
#include <numeric>
#include <tuple>

namespace algcomb::verify {

struct Options {
    int max_size = 5;
};

struct Outcome {
    int id = 0;
    std::string title;
    bool pass = true;
    long checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0;
};

class Recorder {
public:
    explicit Recorder(Outcome& o) : out_(o) {}

    void expect(bool ok, const std::string& what)
    {
        ++out_.checks;
        if (ok)
            return;
        out_.pass = false;
        if (out_.failures.size() < 12)
            out_.failures.push_back(what);
    }

    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what)
    {
        expect(got == want, what);
    }

    void note(const std::string& s) { out_.notes.push_back(s); }

private:
    Outcome& out_;
};

// Independent brute-force routines used as references.
namespace oracle {

// Tableau criterion: #{a <= i : sigma(a) >= j} bounded by the same count for mu.
inline bool rank_leq(const Perm& sigma, const Perm& mu)
{
    const int n = static_cast<int>(sigma.size());
    for (int j = 1; j <= n; ++j) {
        int cs = 0, cm = 0;
        for (int i = 0; i < n; ++i) {
            cs += sigma[i] >= j;
            cm += mu[i] >= j;
            if (cs > cm)
                return false;
        }
    }
    return true;
}

// Elements below nu: products of reduced subwords of one reduced word of nu.
inline std::set<Perm> subword_lower_set(const Perm& nu)
{
    const int n = static_cast<int>(nu.size());
    const Word w = reduced_word(nu);
    std::set<Perm> out;
    for (unsigned long mask = 0; mask < (1ul << w.size()); ++mask) {
        Word sub;
        for (size_t i = 0; i < w.size(); ++i)
            if (mask >> i & 1)
                sub.push_back(w[i]);
        const Perm p = evaluate(sub, n);
        if (length(p) == static_cast<int>(sub.size()))
            out.insert(p);
    }
    return out;
}

// Weak-order upper set by repeated covers.
inline std::set<Perm> weak_up(const Perm& sigma, Side side)
{
    std::set<Perm> seen{sigma};
    std::vector<Perm> stack{sigma};
    const int n = static_cast<int>(sigma.size());
    while (!stack.empty()) {
        Perm p = stack.back();
        stack.pop_back();
        const Perm pi = side == Side::right ? p : inverse(p);
        for (int i = 1; i < n; ++i)
            if (pi[i - 1] < pi[i]) {
                Perm q = side == Side::right ? right_simple(p, i) : left_simple(p, i);
                if (seen.insert(q).second)
                    stack.push_back(q);
            }
    }
    return seen;
}

inline std::set<BinaryTree> tamari_up(const BinaryTree& t)
{
    std::set<BinaryTree> seen{t};
    std::vector<BinaryTree> stack{t};
    while (!stack.empty()) {
        BinaryTree x = stack.back();
        stack.pop_back();
        for (auto& y : rotation_successors(x))
            if (seen.insert(y).second)
                stack.push_back(y);
    }
    return seen;
}

inline std::set<std::string> ballot_up(const std::string& p, int m)
{
    std::set<std::string> seen{p};
    std::vector<std::string> stack{p};
    while (!stack.empty()) {
        std::string x = stack.back();
        stack.pop_back();
        for (auto& y : ballot_rotations(x, m))
            if (seen.insert(y).second)
                stack.push_back(y);
    }
    return seen;
}

// Maximum of [sigma, nu] within the coset by exhaustive search; nullopt if not unique.
inline std::optional<Perm> coset_max(const Perm& sigma, const Perm& nu, const std::vector<int>& cuts,
    const std::vector<Perm>& all)
{
    auto same_blocks = [&](const Perm& p) {
        int from = 0;
        for (size_t j = 0; j <= cuts.size(); ++j) {
            const int to = j < cuts.size() ? cuts[j] : static_cast<int>(p.size());
            std::set<int> a(p.begin() + from, p.begin() + to), b(sigma.begin() + from, sigma.begin() + to);
            if (a != b)
                return false;
            from = to;
        }
        return true;
    };
    std::vector<Perm> members;
    for (const auto& p : all)
        if (same_blocks(p) && rank_leq(sigma, p) && rank_leq(p, nu))
            members.push_back(p);
    std::vector<Perm> maximal;
    for (const auto& p : members) {
        bool top = true;
        for (const auto& q : members)
            if (q != p && rank_leq(p, q))
                top = false;
        if (top)
            maximal.push_back(p);
    }
    if (maximal.size() != 1)
        return std::nullopt;
    return maximal[0];
}

// All words of length len over {1..alphabet} whose letter counts are multiples of m, grouped by
// their (m-)standardization.
inline std::map<Word, std::vector<Word>> words_by_std(int len, int alphabet, int m)
{
    std::map<Word, std::vector<Word>> out;
    Word u(len, 1);
    while (true) {
        std::map<int, int> count;
        for (int x : u)
            ++count[x];
        bool ok = true;
        for (auto& [x, c] : count)
            ok = ok && c % m == 0;
        if (ok)
            out[detail::std_of(u, m)].push_back(u);
        int i = len - 1;
        while (i >= 0 && u[i] == alphabet)
            u[i--] = 1;
        if (i < 0)
            break;
        ++u[i];
    }
    return out;
}

// G-basis element as a sum of words.
inline std::map<Word, long long> realize(const HopfElement& e, int alphabet)
{
    std::map<Word, long long> out;
    std::map<int, std::map<Word, std::vector<Word>>> cache;
    for (const auto& [w, c] : e.terms) {
        const int len = static_cast<int>(w.size());
        if (!cache.count(len))
            cache[len] = words_by_std(len, alphabet, e.m);
        for (const auto& u : cache[len][w])
            out[u] += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline std::map<Word, long long> concat_product(const std::map<Word, long long>& a, const std::map<Word, long long>& b)
{
    std::map<Word, long long> out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b)
            out[concat(u, v)] += cu * cv;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// Equivalence classes of S_n under a c ... b -> c a ... b with a < b < c.
inline std::vector<std::set<Perm>> rewriting_classes(int n)
{
    const auto perms = all_perms(n);
    std::map<Perm, size_t> index;
    for (size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = i;
    std::vector<size_t> parent(perms.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& p : perms)
        for (int i = 0; i + 1 < n; ++i) {
            const int a = p[i], c = p[i + 1];
            if (a > c)
                continue;
            for (int j = i + 2; j < n; ++j)
                if (p[j] > a && p[j] < c) {
                    Perm q = p;
                    std::swap(q[i], q[i + 1]);
                    parent[find(index[p])] = find(index[q]);
                    break;
                }
        }
    std::map<size_t, std::set<Perm>> groups;
    for (const auto& p : perms)
        groups[find(index[p])].insert(p);
    std::vector<std::set<Perm>> out;
    for (auto& [k, s] : groups)
        out.push_back(std::move(s));
    return out;
}

} // namespace oracle

namespace detail {

inline QPoly poly_of(const std::vector<std::pair<Exponent, long>>& terms)
{
    QPoly p;
    for (const auto& [v, c] : terms)
        p.add_term(v, Rational(c));
    return p;
}

inline HopfElement element(Algebra alg, HopfBasis b, int m, const std::vector<std::string>& words)
{
    HopfElement e{alg, b, m, {}};
    for (const auto& w : words)
        add_to(e.terms, parse_word(w), 1);
    return e;
}

inline HopfTensor tensor(Algebra alg, HopfBasis b, int m, const std::vector<std::pair<std::string, std::string>>& pairs)
{
    HopfTensor t{alg, b, m, {}};
    for (const auto& [l, r] : pairs)
        add_to(t.terms, Tensor{parse_word(l), parse_word(r)}, 1);
    return t;
}

inline std::vector<Word> hopf_indices(Algebra alg, int n, int m)
{
    if (alg == Algebra::FQSym)
        return all_perms(n);
    if (alg == Algebra::FQSymM)
        return all_stutter_perms(n, m);
    std::vector<Word> out;
    if (alg == Algebra::PBT) {
        for (const auto& t : all_trees(n))
            out.push_back(pbt_index(t));
    } else {
        for (const auto& t : all_m_binary_trees(n, m))
            out.push_back(pbtm_index(t, m));
    }
    return out;
}

using Triple = std::tuple<Word, Word, Word>;

inline std::map<Triple, long long> coproduct_left(const HopfElement& e)
{
    std::map<Triple, long long> out;
    for (const auto& [t, c] : coproduct(e).terms)
        for (const auto& [u, d] : coproduct(hopf_element(e.algebra, e.basis, t.first, e.m)).terms)
            out[{u.first, u.second, t.second}] += c * d;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline std::map<Triple, long long> coproduct_right(const HopfElement& e)
{
    std::map<Triple, long long> out;
    for (const auto& [t, c] : coproduct(e).terms)
        for (const auto& [u, d] : coproduct(hopf_element(e.algebra, e.basis, t.second, e.m)).terms)
            out[{t.first, u.first, u.second}] += c * d;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline StatPoly enumerated_phi(int max_n)
{
    StatPoly phi;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& p : composed_interval_posets(n))
            phi += stat(p);
    return phi;
}

inline StatPoly enumerated_m_phi(int max_n, int m)
{
    StatPoly phi;
    for (int n = 0; n <= max_n; ++n)
        for (const auto& p : all_m_interval_posets(n, m))
            phi += m_stat(p, m);
    return phi;
}

// Down-set sizes per left-branch count for every tree of size n, via rotation covers.
inline std::map<BinaryTree, std::map<int, long>> tamari_down_sets(int n)
{
    const auto& trees = all_trees(n);
    const size_t N = trees.size(), W = (N + 63) / 64;
    std::map<BinaryTree, size_t> index;
    for (size_t i = 0; i < N; ++i)
        index[trees[i]] = i;
    std::vector<std::vector<size_t>> preds(N);
    for (size_t i = 0; i < N; ++i)
        for (const auto& s : rotation_successors(trees[i]))
            preds[index.at(s)].push_back(i);
    // rotation strictly raises the area under the Dyck path
    std::vector<int> area(N);
    for (size_t i = 0; i < N; ++i) {
        int h = 0, a = 0;
        for (char c : to_dyck(trees[i])) {
            h += c == '1' ? 1 : -1;
            a += h;
        }
        area[i] = a;
    }
    std::vector<size_t> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return area[a] < area[b]; });
    std::vector<std::vector<uint64_t>> down(N, std::vector<uint64_t>(W, 0));
    for (size_t i : order) {
        down[i][i / 64] |= uint64_t{1} << (i % 64);
        for (size_t p : preds[i])
            for (size_t w = 0; w < W; ++w)
                down[i][w] |= down[p][w];
    }
    std::vector<int> branch(N);
    for (size_t i = 0; i < N; ++i)
        branch[i] = left_branch(trees[i]);
    std::map<BinaryTree, std::map<int, long>> out;
    for (size_t i = 0; i < N; ++i) {
        auto& row = out[trees[i]];
        for (size_t j = 0; j < N; ++j)
            if (down[i][j / 64] >> (j % 64) & 1)
                ++row[branch[j]];
    }
    return out;
}

inline StatPoly x_polynomial(const std::map<int, long>& row)
{
    StatPoly p;
    for (const auto& [k, c] : row)
        p += stat_monomial(k, 0, 0, c);
    return p;
}

} // namespace detail

// ---- criteria ----

inline void pieri_interval(Recorder& r, const Options& opt)
{
    for (int n = 1; n <= opt.max_size; ++n) {
        const auto perms = all_perms(n);
        for (const auto& s : perms)
            for (int k = 1; k < n; ++k) {
                const auto rep = verify_interval(s, k);
                r.expect(rep.ok, "interval theorem at " + to_string(s) + " k=" + std::to_string(k) + ": " + rep.message);
                const HeckeSum e = pieri_set(s, k);
                HeckeSum want{HeckeBasis::K, {}};
                for (const auto& p : perms)
                    if (oracle::rank_leq(s, p) && oracle::rank_leq(p, rep.top))
                        want.add(p, (length(p) - length(s)) % 2 ? -1 : 1);
                r.expect(e == want, "brute-force interval at " + to_string(s) + " k=" + std::to_string(k));
            }
    }
    const Perm s = parse_perm("136254");
    const HeckeSum e = pieri_set(s, 4);
    r.equal(e.terms.size(), size_t{14}, "136254 k=4 has 14 terms");
    r.equal(eta(s, 4), parse_perm("156432"), "eta(136254, 4) = 156432");

    const Perm big = parse_perm("43218765");
    const HeckeSum eb = pieri_set(big, 4);
    const Perm top = eta(big, 4);
    long brute = 0;
    for (const auto& p : all_perms(8))
        brute += oracle::rank_leq(big, p) && oracle::rank_leq(p, top);
    const PieriWord W = build_W(big, 4);
    long compatible = 0;
    for (unsigned long mask = 0; mask < (1ul << W.letters.size()); ++mask) {
        std::vector<Transposition> w;
        for (size_t j = 0; j < W.letters.size(); ++j)
            if (mask >> j & 1)
                w.push_back(W.letters[j]);
        compatible += is_compatible(w, W);
    }
    r.equal(static_cast<long>(eb.terms.size()), brute, "43218765 k=4: term count equals brute-force interval size");
    r.equal(compatible, brute, "43218765 k=4: compatible subword count equals interval size");
    r.expect(verify_interval(big, 4).ok, "interval theorem at 43218765 k=4");
    r.note("43218765 k=4: " + std::to_string(eb.terms.size()) + " terms, " + std::to_string(compatible) +
        " compatible subwords, brute-force interval " + std::to_string(brute) + " (printed reference value: 6092)");
}

inline void operator_route(Recorder& r, const Options&)
{
    const Perm s = parse_perm("136254");
    HeckeSum h = hecke_element(HeckeBasis::KHat, longest(6));
    h = act_word(h, HeckeOp::pihat, {3, 4, 5, 2, 3, 4});
    h = change_basis(h);
    h = act_word(h, HeckeOp::pi, {3, 2, 1, 2});
    const HeckeSum e = pieri_set(s, 4);
    r.expect(h == e, "explicit operator words reproduce the Pieri set");
    r.expect(pieri_by_operators(s, {4}) == e, "pieri_by_operators reproduces the Pieri set");
    r.equal(h.terms.size(), size_t{14}, "14 signed terms");
    const Perm zeta = coset_top(s, {4});
    r.equal(zeta, parse_perm("632154"), "coset top 632154");
    r.equal(evaluate({3, 4, 5, 2, 3, 4}, 6), compose(longest(6), zeta), "word 345234 evaluates to omega zeta");
    r.equal(evaluate({3, 2, 1, 2}, 6), compose(inverse(zeta), s), "word 3212 evaluates to zeta^-1 sigma");
}

inline void grothendieck_product(Recorder& r, const Options&)
{
    const Perm s = parse_perm("136254");
    const int n = 6;
    QPoly f = expand(Basis::GPos, lehmer_code(s));
    for (int i = 1; i <= 4; ++i)
        f = f * (QPoly(Rational(1)) - QPoly::var(i));
    const BasisPolynomial g = to_basis(f, Basis::GPos);
    std::set<Exponent> got;
    for (const auto& [v, c] : g.terms) {
        const Exponent w = padded(v, n);
        bool keep = w.size() == static_cast<size_t>(n);
        for (int i = 0; keep && i < n; ++i)
            keep = w[i] <= n - 1 - i;
        if (keep)
            got.insert(w);
    }
    std::set<Exponent> want;
    for (const auto& [p, c] : pieri_set(s, 4).terms)
        want.insert(lehmer_code(p));
    r.equal(got.size(), size_t{14}, "14 codes survive the filter");
    r.expect(got == want, "codes equal the Pieri set codes");
    r.expect(expand(g) == f, "conversion round trip");
}

inline void polynomial_expansions(Recorder& r, const Options&)
{
    using detail::poly_of;
    r.equal(expand(Basis::Y, {1, 2, 2, 3}),
        poly_of({{{3, 2, 2, 1}, 1}, {{3, 2, 1, 2}, 1}, {{3, 1, 2, 2}, 1}, {{2, 3, 2, 1}, 1}, {{2, 3, 1, 2}, 1},
            {{2, 2, 3, 1}, 1}, {{2, 2, 2, 2}, 3}, {{2, 2, 1, 3}, 1}, {{2, 1, 3, 2}, 1}, {{2, 1, 2, 3}, 1},
            {{1, 3, 2, 2}, 1}, {{1, 2, 3, 2}, 1}, {{1, 2, 2, 3}, 1}}),
        "Y[1,2,2,3]");
    r.equal(expand(Basis::Y, {1, 0, 1}), poly_of({{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{2, 0, 0}, 1}}), "Y[1,0,1]");
    r.equal(expand(Basis::K, {1, 0, 1}), poly_of({{{1, 1, 0}, 1}, {{1, 0, 1}, 1}}), "K[1,0,1]");
    r.equal(expand(Basis::K, {2, -1, 1}, RootType::B),
        poly_of({{{2, 0, 0}, 1}, {{2, -1, 1}, 1}, {{2, 1, 0}, 1}, {{2, 1, -1}, 1}, {{2, 1, 1}, 1}, {{2, 0, 1}, 1}}),
        "K^B[2,-1,1]");
    r.equal(expand(Basis::K, {2, -1, 1}, RootType::C),
        poly_of({{{2, 0, 0}, 1}, {{2, -1, 1}, 1}, {{2, 1, -1}, 1}, {{2, 1, 1}, 1}}), "K^C[2,-1,1]");
    r.equal(expand(Basis::K, {2, -2, 1}, RootType::D),
        poly_of({{{2, 2, -1}, 1}, {{2, 1, 0}, 1}, {{2, -1, 2}, 1}, {{2, 0, 1}, 1}, {{2, 1, -2}, 1},
            {{2, -1, 0}, 1}, {{2, -2, 1}, 1}, {{2, 0, -1}, 1}}),
        "K^D[2,-2,1]");

    for (int k = 1; k <= 4; ++k) {
        Exponent v(k + 1, 0), ones(k, 1), neg(k + 1, 0);
        v[k - 1] = 1;
        for (int i = 0; i < k; ++i)
            neg[i] = -1;
        DoublePoly want = DoublePoly::monomial(Exponent(k + 1, 0), QPoly(Rational(1)));
        want -= DoublePoly::monomial(neg, QPoly::monomial(ones));
        r.equal(expand_double(Basis::GDouble, v), want, "G_{s_" + std::to_string(k) + "} double expansion");
    }

    const std::vector<std::pair<Exponent, QPoly>> schubert_rows = {
        {{0, 0}, poly_of({{{0, 0}, 1}})},
        {{1, 0}, poly_of({{{1, 0}, 1}})},
        {{0, 1}, poly_of({{{1, 0}, 1}, {{0, 1}, 1}})},
        {{2, 0}, poly_of({{{2, 0}, 1}})},
        {{1, 1}, poly_of({{{1, 1}, 1}})},
        {{0, 2}, poly_of({{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}})},
        {{3, 0}, poly_of({{{3, 0}, 1}})},
        {{2, 1}, poly_of({{{2, 1}, 1}})},
        {{1, 2}, poly_of({{{2, 1}, 1}, {{1, 2}, 1}})},
        {{0, 3}, poly_of({{{3, 0}, 1}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 1}})},
    };
    for (const auto& [v, want] : schubert_rows)
        r.equal(expand(Basis::Y, v), want, "Schubert transition row " + exponent_to_string(v));

    // rows in the variables z_i = 1 - 1/x_i
    const std::vector<std::pair<Exponent, QPoly>> grothendieck_rows = {
        {{0, 0}, poly_of({{{0, 0}, 1}})},
        {{1, 0}, poly_of({{{1, 0}, 1}})},
        {{1, 1}, poly_of({{{1, 1}, 1}})},
        {{0, 1}, poly_of({{{1, 0}, 1}, {{1, 1}, -1}, {{0, 1}, 1}})},
        {{2, 0}, poly_of({{{2, 0}, 1}})},
        {{2, 1}, poly_of({{{2, 1}, 1}})},
        {{2, 2}, poly_of({{{2, 2}, 1}})},
        {{1, 2}, poly_of({{{2, 1}, 1}, {{2, 2}, -1}, {{1, 2}, 1}})},
        {{0, 2}, poly_of({{{1, 1}, 1}, {{2, 0}, 1}, {{2, 1}, -1}, {{1, 2}, -1}, {{0, 2}, 1}})},
    };
    for (const auto& [v, want] : grothendieck_rows) {
        QPoly got;
        const QPoly g = expand(Basis::GNeg, v);
        for (const auto& [e, c] : g.terms()) {
            QPoly term(c);
            const Exponent ee = padded(e, 2);
            for (int i = 0; i < 2; ++i) {
                if (ee[i] > 0)
                    throw std::logic_error("positive exponent in a single-alphabet Grothendieck polynomial");
                term = term * (QPoly(Rational(1)) - QPoly::var(i + 1)).pow(-ee[i]);
            }
            got += term;
        }
        r.equal(got, want, "Grothendieck transition row " + exponent_to_string(v));
    }
}

inline void projective_degrees(Recorder& r, const Options&)
{
    const std::vector<std::pair<const char*, long>> table = {{"2143", 78}, {"1342", 48}, {"3241", 3}, {"3124", 48},
        {"4213", 3}, {"1423", 46}, {"3214", 16}, {"4132", 3}, {"2341", 6}, {"3421", 1}, {"1234", 720},
        {"1324", 280}, {"2431", 3}, {"2314", 46}, {"3412", 2}, {"4231", 1}, {"1432", 16}, {"4123", 6},
        {"2413", 12}, {"4312", 1}, {"4321", 1}, {"3142", 14}, {"2134", 220}, {"1243", 220}};
    r.equal(table.size(), size_t{24}, "table covers S_4");
    for (const auto& [p, d] : table)
        r.equal(projective_degree(parse_perm(p)), Rational(d), std::string("projective degree of ") + p);
}

inline void tamari_counts(Recorder& r, const Options&)
{
    const long small[] = {1, 1, 3, 13, 68, 399};
    for (int n = 0; n <= 8; ++n) {
        const auto& ips = composed_interval_posets(n);
        const mpz_class want = interval_count_formula(n);
        r.equal(mpz_class(static_cast<unsigned long>(ips.size())), want, "interval count formula at n=" + std::to_string(n));
        if (n <= 5)
            r.equal(static_cast<long>(ips.size()), small[n], "interval count at n=" + std::to_string(n));
        r.expect(std::adjacent_find(ips.begin(), ips.end()) == ips.end(), "distinct interval-posets at n=" + std::to_string(n));
        if (n <= 6) {
            long pairs = 0;
            for (const auto& t : all_trees(n))
                pairs += static_cast<long>(oracle::tamari_up(t).size());
            r.equal(static_cast<long>(ips.size()), pairs, "rotation closure pair count at n=" + std::to_string(n));
            for (const auto& p : ips)
                r.expect(p.is_interval_poset(), "composed poset is an interval-poset");
        }
    }
    const StatPoly phi = detail::enumerated_phi(8);
    r.equal(y_coefficient(phi, 3), stat_monomial(1, 0, 0, 3) + stat_monomial(2, 0, 0, 5) + stat_monomial(3, 0, 0, 5),
        "y^3 coefficient 3x + 5x^2 + 5x^3");
    r.equal(truncate_y(stat_monomial(0, 0) + bilinear_B(phi, phi), 8), phi, "Phi = B(Phi, Phi) + 1 up to y^8");
}

inline void tamari_polynomials(Recorder& r, const Options&)
{
    for (int n = 0; n <= 9; ++n) {
        const auto rows = detail::tamari_down_sets(n);
        for (const auto& [t, row] : rows) {
            const StatPoly p = tamari_polynomial(t);
            long total = 0;
            for (const auto& [k, c] : row)
                total += c;
            r.equal(coefficient_sum(p), mpz_class(total), "B_T(1) equals down-set size for " + to_bracket(t));
            r.equal(p, detail::x_polynomial(row), "x-grading equals left-branch counts for " + to_bracket(t));
        }
    }
    const StatPoly got = bilinear_B(stat_monomial(2, 3, 1), stat_monomial(3, 4, 1), true);
    const StatPoly want = stat_monomial(6, 8, 2) + stat_monomial(5, 8, 3) + stat_monomial(4, 8, 3) + stat_monomial(3, 8, 3);
    r.equal(got, want, "bivariate B(y^3 x^2 b, y^4 x^3 b)");
}

inline void m_tamari(Recorder& r, const Options&)
{
    const std::vector<std::pair<int, int>> sizes = {{1, 2}, {2, 2}, {3, 2}, {4, 2}, {1, 3}, {2, 3}, {3, 3}};
    for (const auto& [n, m] : sizes) {
        const std::string at = " at (" + std::to_string(n) + "," + std::to_string(m) + ")";
        const auto& ips = all_m_interval_posets(n, m);
        r.equal(mpz_class(static_cast<unsigned long>(ips.size())), m_interval_count_formula(n, m), "count formula" + at);
        long pairs = 0;
        for (const auto& p : all_ballot_paths(n, m))
            pairs += static_cast<long>(oracle::ballot_up(p, m).size());
        r.equal(static_cast<long>(ips.size()), pairs, "ballot rotation pair count" + at);
    }
    r.equal(all_m_interval_posets(2, 2).size(), size_t{6}, "6 intervals at (2,2)");
    r.equal(all_m_interval_posets(3, 2).size(), size_t{58}, "58 intervals at (3,2)");

    for (const auto& [m, max_n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
        const StatPoly phi = detail::enumerated_m_phi(max_n, m);
        r.equal(truncate_y(stat_monomial(0, 0) + bilinear_B_m(phi, std::vector<StatPoly>(m, phi)), max_n), phi,
            "functional equation for m=" + std::to_string(m));
    }

    const MAryTree l = mary_node({{}, {}, {}});
    r.equal(m_tamari_polynomial(mary_node({l, l, l}), 2),
        stat_monomial(2, 0, 0, 2) + stat_monomial(3, 0, 0, 2) + stat_monomial(4, 0, 0, 1), "ternary tree polynomial");

    for (int m = 2; m <= 8; ++m)
        for (int n = 1; n * m <= 8; ++n) {
            const auto paths = all_ballot_paths(n, m);
            std::map<std::string, std::set<std::string>> up;
            for (const auto& p : paths)
                up[p] = oracle::ballot_up(p, m);
            for (const auto& p : paths) {
                StatPoly want;
                for (const auto& q : paths)
                    if (up[q].count(p))
                        want += stat_monomial(returns_to_zero(ballot_to_dyck(q, m)), 0);
                const StatPoly got = m_tamari_polynomial(from_dyck(ballot_to_dyck(p, m)), m);
                r.equal(got, want, "m-polynomial against down-set for " + p + " m=" + std::to_string(m));
            }
        }

    const IntervalPoset chain = m_chain(2);
    const IntervalPoset mid = IntervalPoset::from_relations(4, {{2, 1}, {4, 3}, {2, 3}});
    const PosetSum s = m_compose(chain, {mid, chain}, 2);
    r.equal(s.size(), size_t{7}, "m-composition has 7 terms");
    r.equal(m_stat(s, 2),
        stat_monomial(2, 5, 0, 2) + stat_monomial(3, 5, 0, 2) + stat_monomial(4, 5, 0, 2) + stat_monomial(5, 5, 0, 1),
        "m-composition statistic");
    r.equal(bilinear_B_m(m_stat(chain, 2), {m_stat(mid, 2), m_stat(chain, 2)}), m_stat(s, 2),
        "statistic of the composition equals B^(2)");
}

inline void hopf_products(Recorder& r, const Options&)
{
    using detail::element;
    using detail::tensor;
    const auto FQ = Algebra::FQSym, PB = Algebra::PBT, FM = Algebra::FQSymM, PM = Algebra::PBTM;
    const auto F = HopfBasis::F, G = HopfBasis::G, P = HopfBasis::P;
    auto one = [](Algebra a, HopfBasis b, const char* w, int m = 1) { return hopf_element(a, b, parse_word(w), m); };

    r.equal(product(one(FQ, F, "21"), one(FQ, F, "1")), element(FQ, F, 1, {"231", "213", "321"}), "F21 F1");
    r.equal(coproduct(one(FQ, F, "231")), tensor(FQ, F, 1, {{"231", ""}, {"12", "1"}, {"1", "21"}, {"", "231"}}), "coproduct F231");
    r.equal(product(one(FQ, G, "21"), one(FQ, G, "1")), element(FQ, G, 1, {"213", "312", "321"}), "G21 G1");
    r.equal(coproduct(one(FQ, G, "312")), tensor(FQ, G, 1, {{"312", ""}, {"12", "1"}, {"1", "21"}, {"", "312"}}), "coproduct G312");
    r.equal(product(one(PB, P, "4213"), one(PB, P, "312")),
        element(PB, P, 1, {"7421356", "7452136", "7456213", "7542136", "7546213", "7564213"}), "P4213 P312");
    r.equal(coproduct(one(PB, P, "4213")),
        tensor(PB, P, 1, {{"4213", ""}, {"321", "1"}, {"231", "1"}, {"213", "1"}, {"21", "12"}, {"12", "12"},
            {"21", "21"}, {"1", "213"}, {"1", "312"}, {"", "4213"}}),
        "coproduct P4213");
    r.equal(product(one(FM, G, "1221", 2), one(FM, G, "11", 2)), element(FM, G, 2, {"122133", "133122", "233211"}), "G2 product");
    HopfTensor d = coproduct(one(FM, G, "121233", 2));
    std::set<Tensor> support;
    for (const auto& [t, c] : d.terms)
        support.insert(t);
    std::set<Tensor> want_support;
    for (const auto& [t, c] : tensor(FM, G, 2, {{"121233", ""}, {"1212", "11"}, {"11", "1122"}, {"", "121233"}}).terms)
        want_support.insert(t);
    r.expect(support == want_support, "coproduct G2[121233] support");
    r.equal(coproduct(one(FM, F, "121233", 2)), tensor(FM, F, 2, {{"121233", ""}, {"1212", "11"}, {"", "121233"}}), "coproduct F2[121233]");
    r.equal(coproduct(one(FM, F, "121323", 2)), tensor(FM, F, 2, {{"121323", ""}, {"", "121323"}}), "coproduct F2[121323]");
    r.equal(product(one(PM, P, "2112", 2), one(PM, P, "11", 2)), element(PM, P, 2, {"211233", "321123", "332112"}), "P2 product");

    // weak interval and shifted shuffle
    HopfElement interval{FQ, F, 1, {}};
    for (const auto& p : all_perms(5))
        if (oracle::weak_up(parse_perm("23145"), Side::right).count(p) && oracle::weak_up(p, Side::right).count(parse_perm("45231")))
            add_to(interval.terms, p, 1);
    r.equal(product(one(FQ, F, "231"), one(FQ, F, "12")), interval, "F231 F12 is a weak interval");
    const auto sh = shifted_shuffle({1, 2}, {2, 1}, 2);
    r.equal(std::set<Word>(sh.begin(), sh.end()),
        std::set<Word>{{1, 2, 4, 3}, {1, 4, 2, 3}, {1, 4, 3, 2}, {4, 1, 2, 3}, {4, 1, 3, 2}, {4, 3, 1, 2}}, "shifted shuffle 12, 21");

    // associativity and coassociativity
    struct Case {
        Algebra alg;
        HopfBasis basis;
        int m, assoc, coassoc;
    };
    const std::vector<Case> cases = {{FQ, F, 1, 6, 5}, {FQ, G, 1, 6, 5}, {PB, P, 1, 6, 5}, {FM, F, 2, 3, 3},
        {FM, G, 2, 3, 3}, {PM, P, 2, 3, 3}};
    for (const auto& c : cases) {
        const std::string tag = std::string(1, basis_char(c.basis)) + "/" + std::to_string(static_cast<int>(c.alg));
        for (int a = 1; a <= c.assoc; ++a)
            for (int b = 1; a + b <= c.assoc; ++b)
                for (int e = 1; a + b + e <= c.assoc; ++e)
                    for (const auto& x : detail::hopf_indices(c.alg, a, c.m))
                        for (const auto& y : detail::hopf_indices(c.alg, b, c.m))
                            for (const auto& z : detail::hopf_indices(c.alg, e, c.m)) {
                                const auto X = hopf_element(c.alg, c.basis, x, c.m), Y = hopf_element(c.alg, c.basis, y, c.m),
                                           Z = hopf_element(c.alg, c.basis, z, c.m);
                                r.expect(product(product(X, Y), Z) == product(X, product(Y, Z)), "associativity " + tag);
                            }
        for (int n = 0; n <= c.coassoc; ++n)
            for (const auto& x : detail::hopf_indices(c.alg, n, c.m)) {
                const auto X = hopf_element(c.alg, c.basis, x, c.m);
                r.expect(detail::coproduct_left(X) == detail::coproduct_right(X), "coassociativity " + tag);
            }
    }

    // G products against concatenation of words over a 6-letter alphabet
    for (const auto& [m, total] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}}) {
        const Algebra alg = m == 1 ? FQ : FM;
        for (int a = 1; a < total; ++a)
            for (int b = 1; a + b <= total; ++b)
                for (const auto& x : detail::hopf_indices(alg, a, m))
                    for (const auto& y : detail::hopf_indices(alg, b, m)) {
                        const auto X = hopf_element(alg, G, x, m), Y = hopf_element(alg, G, y, m);
                        r.expect(oracle::realize(product(X, Y), 6) == oracle::concat_product(oracle::realize(X, 6), oracle::realize(Y, 6)),
                            "word realization of G" + index_to_string(x) + " G" + index_to_string(y));
                    }
    }

    // F and G are dual: products of one basis read off the coproducts of the other
    for (const auto& [m, total] : std::vector<std::pair<int, int>>{{1, 5}, {2, 3}}) {
        const Algebra alg = m == 1 ? FQ : FM;
        for (int n = 0; n <= total; ++n) {
            std::map<Tensor, LinComb<Word>> from_g, from_f;
            for (const auto& nu : detail::hopf_indices(alg, n, m)) {
                for (const auto& [t, c] : coproduct(hopf_element(alg, G, nu, m)).terms)
                    from_g[t][nu] += c;
                for (const auto& [t, c] : coproduct(hopf_element(alg, F, nu, m)).terms)
                    from_f[t][nu] += c;
            }
            for (int a = 0; a <= n; ++a)
                for (const auto& x : detail::hopf_indices(alg, a, m))
                    for (const auto& y : detail::hopf_indices(alg, n - a, m)) {
                        r.equal(product(hopf_element(alg, F, x, m), hopf_element(alg, F, y, m)).terms, from_g[{x, y}],
                            "F product dual to G coproduct");
                        r.equal(product(hopf_element(alg, G, x, m), hopf_element(alg, G, y, m)).terms, from_f[{x, y}],
                            "G product dual to F coproduct");
                    }
        }
    }

    // coproduct is multiplicative
    for (const auto& c : cases)
        for (int a = 1; a <= c.coassoc; ++a)
            for (int b = 1; a + b <= c.coassoc; ++b)
                for (const auto& x : detail::hopf_indices(c.alg, a, c.m))
                    for (const auto& y : detail::hopf_indices(c.alg, b, c.m)) {
                        const auto X = hopf_element(c.alg, c.basis, x, c.m), Y = hopf_element(c.alg, c.basis, y, c.m);
                        r.expect(coproduct(product(X, Y)) == product(coproduct(X), coproduct(Y)), "bialgebra compatibility");
                    }

    // FQSym^(m) at m = 1 is FQSym
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 4; ++b)
            for (const auto& x : all_perms(a))
                for (const auto& y : all_perms(b))
                    for (HopfBasis basis : {F, G}) {
                        const auto one_m = product(hopf_element(FM, basis, x, 1), hopf_element(FM, basis, y, 1));
                        r.equal(one_m.terms, product(hopf_element(FQ, basis, x), hopf_element(FQ, basis, y)).terms, "m = 1 specialization");
                    }

    // the binary tree algebra sits inside FQSym
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const auto& x : detail::hopf_indices(PB, a, 1))
                for (const auto& y : detail::hopf_indices(PB, b, 1)) {
                    const auto X = hopf_element(PB, P, x), Y = hopf_element(PB, P, y);
                    r.expect(to_F(product(X, Y)) == product(to_F(X), to_F(Y)), "embedding of the product");
                }
    for (int n = 0; n <= 5; ++n)
        for (const auto& x : detail::hopf_indices(PB, n, 1)) {
            HopfTensor lifted{FQ, F, 1, {}};
            for (const auto& [t, c] : coproduct(hopf_element(PB, P, x)).terms)
                for (const auto& [l, cl] : to_F(hopf_element(PB, P, t.first)).terms)
                    for (const auto& [rr, cr] : to_F(hopf_element(PB, P, t.second)).terms)
                        add_to(lifted.terms, Tensor{l, rr}, c * cl * cr);
            r.expect(coproduct(to_F(hopf_element(PB, P, x))) == lifted, "embedding of the coproduct");
        }
}

inline void order_suites(Recorder& r, const Options& opt)
{
    const int big = std::max(opt.max_size, 1);
    for (const auto& nu : all_perms(4)) {
        const auto below = oracle::subword_lower_set(nu);
        for (const auto& mu : all_perms(4))
            r.equal(bruhat_leq(mu, nu), below.count(mu) > 0, "key comparison vs subword order " + to_string(mu) + " " + to_string(nu));
    }
    const auto perms = all_perms(big);
    const size_t N = perms.size();
    std::vector<std::vector<char>> leq(N, std::vector<char>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            leq[i][j] = oracle::rank_leq(perms[i], perms[j]);
    std::map<Perm, size_t> index;
    for (size_t i = 0; i < N; ++i)
        index[perms[i]] = i;

    for (size_t i = 0; i < N; ++i) {
        std::set<Perm> covers;
        for (size_t j = 0; j < N; ++j) {
            if (i == j || !leq[i][j])
                continue;
            bool cover = true;
            for (size_t k = 0; k < N && cover; ++k)
                if (k != i && k != j && leq[i][k] && leq[k][j])
                    cover = false;
            if (cover) {
                covers.insert(perms[j]);
                r.equal(length(perms[j]), length(perms[i]) + 1, "covers raise length by one at " + to_string(perms[i]));
            }
        }
        const auto succ = bruhat_successors(perms[i]);
        r.expect(std::set<Perm>(succ.begin(), succ.end()) == covers, "successors are the covers of " + to_string(perms[i]));
    }

    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            bool deodhar = true;
            for (int k = 1; k < big && deodhar; ++k) {
                auto a = project_positions(perms[i], k), b = project_positions(perms[j], k);
                std::vector<int> ha(a.begin(), a.begin() + k), hb(b.begin(), b.begin() + k);
                for (int t = 0; t < k; ++t)
                    deodhar = deodhar && ha[t] <= hb[t];
            }
            r.equal(deodhar, static_cast<bool>(leq[i][j]), "Deodhar criterion " + to_string(perms[i]) + " " + to_string(perms[j]));
            r.equal(bruhat_leq(perms[i], perms[j]), static_cast<bool>(leq[i][j]), "Bruhat comparison " + to_string(perms[i]) + " " + to_string(perms[j]));
        }

    for (Side side : {Side::right, Side::left}) {
        std::vector<std::vector<char>> w(N, std::vector<char>(N));
        for (size_t i = 0; i < N; ++i) {
            const auto up = oracle::weak_up(perms[i], side);
            for (size_t j = 0; j < N; ++j) {
                w[i][j] = up.count(perms[j]) > 0;
                r.equal(weak_leq(perms[i], perms[j], side), static_cast<bool>(w[i][j]), "weak comparison");
            }
        }
        for (size_t i = 0; i < N; ++i)
            for (size_t j = i + 1; j < N; ++j) {
                int joins = 0, meets = 0;
                for (size_t k = 0; k < N; ++k) {
                    if (w[i][k] && w[j][k]) {
                        bool least = true;
                        for (size_t l = 0; l < N && least; ++l)
                            if (w[i][l] && w[j][l] && !w[k][l])
                                least = false;
                        joins += least;
                    }
                    if (w[k][i] && w[k][j]) {
                        bool greatest = true;
                        for (size_t l = 0; l < N && greatest; ++l)
                            if (w[l][i] && w[l][j] && !w[l][k])
                                greatest = false;
                        meets += greatest;
                    }
                }
                r.expect(joins == 1 && meets == 1, "weak order join and meet for " + to_string(perms[i]) + " " + to_string(perms[j]));
            }
    }

    std::vector<std::vector<int>> cut_sets;
    for (unsigned mask = 1; mask < (1u << (big - 1)); ++mask) {
        std::vector<int> cuts;
        for (int k = 1; k < big; ++k)
            if (mask >> (k - 1) & 1)
                cuts.push_back(k);
        cut_sets.push_back(cuts);
    }
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            if (!leq[i][j])
                continue;
            for (const auto& cuts : cut_sets) {
                const auto want = oracle::coset_max(perms[i], perms[j], cuts, perms);
                r.expect(want.has_value(), "coset intersection has a unique maximum");
                if (want)
                    r.equal(coset_interval_max(perms[i], perms[j], cuts), *want,
                        "coset max " + to_string(perms[i]) + " " + to_string(perms[j]));
            }
        }
    r.equal(coset_interval_max(parse_perm("13245"), parse_perm("54123"), 2), parse_perm("31524"), "coset max example");

    const Sup s1 = bruhat_sup({parse_perm("52134"), parse_perm("34251")});
    r.expect(s1.perm && *s1.perm == parse_perm("53241"), "sup 52134, 34251 = 53241");
    const Sup s2 = bruhat_sup({parse_perm("42531"), parse_perm("34251")});
    r.expect(!s2.perm.has_value() && is_monotone_triangle(s2.triangle), "sup 42531, 34251 is not a permutation");
}

struct Criterion {
    int id;
    const char* title;
    void (*run)(Recorder&, const Options&);
};

inline const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> list = {
        {1, "Pieri interval theorem", pieri_interval},
        {2, "operator route", operator_route},
        {3, "Grothendieck product cross-check", grothendieck_product},
        {4, "polynomial expansions", polynomial_expansions},
        {5, "projective degrees", projective_degrees},
        {6, "Tamari interval counts", tamari_counts},
        {7, "Tamari polynomials", tamari_polynomials},
        {8, "m-Tamari", m_tamari},
        {9, "Hopf products", hopf_products},
        {10, "order-theory suites", order_suites},
    };
    return list;
}

inline Outcome run_criterion(int id, const Options& opt = {})
{
    for (const auto& c : criteria())
        if (c.id == id) {
            Outcome o;
            o.id = id;
            o.title = c.title;
            Recorder rec(o);
            const auto start = std::chrono::steady_clock::now();
            try {
                c.run(rec, opt);
            } catch (const std::exception& e) {
                rec.expect(false, std::string("exception: ") + e.what());
            }
            o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return o;
        }
    throw std::invalid_argument("no criterion " + std::to_string(id));
}

inline int worker_count()
{
    if (const char* s = std::getenv("ALGCOMB_WORKERS")) {
        try {
            return std::max(1, std::stoi(s));
        } catch (const std::exception&) {
            throw std::invalid_argument("ALGCOMB_WORKERS must be a positive integer");
        }
    }
    return 1;
}

inline std::vector<Outcome> run_all(const Options& opt = {}, int workers = worker_count())
{
    std::vector<Outcome> out(criteria().size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < out.size();)
            out[i] = run_criterion(criteria()[i].id, opt);
    };
    std::vector<std::future<void>> pool;
    for (int w = 1; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, work));
    work();
    for (auto& f : pool)
        f.get();
    return out;
}

inline std::string summary_line(const Outcome& o)
{
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", o.seconds);
    return std::string(o.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(o.id) + " (" + o.title + "): " +
        std::to_string(o.checks) + " checks, " + time;
}

} // namespace algcomb::verify
