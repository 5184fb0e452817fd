#pragma once

#include "intervalposet.hpp"

namespace algcomb {

inline void check_m(int m)
{
    if (m < 1)
        throw std::invalid_argument("m must be at least 1");
}

// Every prefix has m * #1 >= #0; n ones, n*m zeros.
inline bool is_ballot_path(const std::string& p, int m)
{
    check_m(m);
    long h = 0, ones = 0, zeros = 0;
    for (char c : p) {
        if (c == '1') {
            h += m;
            ++ones;
        } else if (c == '0') {
            --h;
            ++zeros;
        } else {
            return false;
        }
        if (h < 0)
            return false;
    }
    return zeros == ones * m;
}

inline std::string ballot_to_dyck(const std::string& p, int m)
{
    if (!is_ballot_path(p, m))
        throw std::invalid_argument("not an m-ballot path: " + p);
    std::string d;
    for (char c : p)
        d += c == '1' ? std::string(m, '1') : "0";
    return d;
}

inline std::string dyck_to_ballot(const std::string& d, int m)
{
    check_m(m);
    if (!is_dyck(d))
        throw std::invalid_argument("not a Dyck word: " + d);
    std::string p;
    for (size_t i = 0; i < d.size();) {
        if (d[i] == '0') {
            p += '0';
            ++i;
            continue;
        }
        size_t j = i;
        while (j < d.size() && d[j] == '1')
            ++j;
        if ((j - i) % m)
            throw std::invalid_argument("up-run length not divisible by m");
        p += std::string((j - i) / m, '1');
        i = j;
    }
    return p;
}

inline std::vector<std::string> all_ballot_paths(int n, int m)
{
    check_m(m);
    std::vector<std::string> out;
    std::string cur;
    std::function<void(int, int)> go = [&](int ones, int zeros) {
        if (ones == n && zeros == n * m) {
            out.push_back(cur);
            return;
        }
        if (ones < n) {
            cur += '1';
            go(ones + 1, zeros);
            cur.pop_back();
        }
        if (zeros < ones * m) {
            cur += '0';
            go(ones, zeros + 1);
            cur.pop_back();
        }
    };
    go(0, 0);
    return out;
}

// Swap a down step with the primitive path that follows it, heights measured by m * #1 - #0.
inline std::vector<std::string> ballot_rotations(const std::string& p, int m)
{
    std::vector<std::string> out;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] != '0' || p[i + 1] != '1')
            continue;
        long h = 0;
        size_t j = i + 1;
        for (; j < p.size(); ++j) {
            h += p[j] == '1' ? m : -1;
            if (h == 0)
                break;
        }
        out.push_back(p.substr(0, i) + p.substr(i + 1, j - i) + "0" + p.substr(j + 1));
    }
    return out;
}

// n left-branch nodes, each carrying a right chain of m - 1 nodes.
inline BinaryTree comb_tree(int n, int m)
{
    check_m(m);
    BinaryTree t;
    for (int i = 0; i < n; ++i)
        t = BinaryTree::node(t, right_comb(m - 1));
    return t;
}

// km ⊲ km-1 ⊲ ... ⊲ (k-1)m+1 in the binary search tree poset.
inline bool is_m_binary(const BinaryTree& t, int m)
{
    check_m(m);
    if (t.size() % m)
        return false;
    const IntervalPoset f = final_forest(t);
    for (int a = 1; a < t.size(); ++a)
        if (a % m && !f.precedes(a + 1, a))
            return false;
    return true;
}

// Node with exactly m + 1 ordered subtrees; no children means the empty tree.
struct MAryTree {
    std::vector<MAryTree> children;

    bool empty() const { return children.empty(); }

    int size() const
    {
        int s = empty() ? 0 : 1;
        for (const auto& c : children)
            s += c.size();
        return s;
    }

    friend bool operator==(const MAryTree& a, const MAryTree& b) { return a.children == b.children; }
    friend bool operator<(const MAryTree& a, const MAryTree& b) { return a.children < b.children; }
};

inline MAryTree mary_node(std::vector<MAryTree> children) { return MAryTree{std::move(children)}; }

inline std::string to_bracket(const MAryTree& t)
{
    if (t.empty())
        return "";
    std::string s = "[";
    for (size_t i = 0; i < t.children.size(); ++i)
        s += (i ? "," : "") + to_bracket(t.children[i]);
    return s + "]";
}

namespace detail {

inline MAryTree parse_mary(const std::string& s, size_t& pos, int arity)
{
    if (pos >= s.size() || s[pos] != '[')
        return {};
    ++pos;
    std::vector<MAryTree> ch;
    while (true) {
        ch.push_back(parse_mary(s, pos, arity));
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < s.size() && s[pos] == ']') {
            ++pos;
            break;
        }
        throw std::invalid_argument("bad tree syntax at " + std::to_string(pos));
    }
    if (static_cast<int>(ch.size()) != arity)
        throw std::invalid_argument("node arity differs from m + 1");
    return mary_node(std::move(ch));
}

} // namespace detail

inline MAryTree parse_mary_tree(const std::string& text, int m)
{
    check_m(m);
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    size_t pos = 0;
    MAryTree t = detail::parse_mary(s, pos, m + 1);
    if (pos != s.size())
        throw std::invalid_argument("trailing characters in tree: " + text);
    return t;
}

inline std::vector<MAryTree> all_mary_trees(int n, int m)
{
    check_m(m);
    if (n == 0)
        return {MAryTree{}};
    std::vector<MAryTree> out;
    // distribute n - 1 nodes among m + 1 children
    std::vector<MAryTree> cur;
    std::function<void(int, int)> go = [&](int slot, int left) {
        if (slot == m) {
            for (const auto& c : all_mary_trees(left, m)) {
                cur.push_back(c);
                out.push_back(mary_node(cur));
                cur.pop_back();
            }
            return;
        }
        for (int k = 0; k <= left; ++k)
            for (const auto& c : all_mary_trees(k, m)) {
                cur.push_back(c);
                go(slot + 1, left - k);
                cur.pop_back();
            }
    };
    go(0, n - 1);
    return out;
}

namespace detail {

// Splits off the subtree rooted at the leftmost node.
inline std::pair<BinaryTree, BinaryTree> remove_leftmost(const BinaryTree& s)
{
    if (s.left().empty())
        return {BinaryTree{}, s};
    auto [rest, lm] = remove_leftmost(s.left());
    return {BinaryTree::node(rest, s.right()), lm};
}

} // namespace detail

// (T_L, T_R1..T_Rm) -> root chain r1..rm; r_{i+1} grafted at the leftmost position of T_Ri.
inline BinaryTree mary_to_binary(const MAryTree& t, int m)
{
    check_m(m);
    if (t.empty())
        return {};
    if (static_cast<int>(t.children.size()) != m + 1)
        throw std::invalid_argument("node arity differs from m + 1");
    BinaryTree g = mary_to_binary(t.children[m], m);
    for (int i = m - 1; i >= 1; --i)
        g = graft_leftmost(mary_to_binary(t.children[i], m), BinaryTree::node({}, g));
    return BinaryTree::node(mary_to_binary(t.children[0], m), g);
}

inline MAryTree binary_to_mary(const BinaryTree& t, int m)
{
    if (!is_m_binary(t, m))
        throw std::invalid_argument("tree is not m-binary");
    std::function<MAryTree(const BinaryTree&)> go = [&](const BinaryTree& s) -> MAryTree {
        if (s.empty())
            return {};
        std::vector<MAryTree> ch{go(s.left())};
        BinaryTree g = s.right();
        for (int i = 1; i < m; ++i) {
            if (g.empty())
                throw std::invalid_argument("tree is not m-binary");
            auto [ri, next] = detail::remove_leftmost(g);
            ch.push_back(go(ri));
            g = next.right();
        }
        ch.push_back(go(g));
        return mary_node(std::move(ch));
    };
    return go(t);
}

inline std::vector<BinaryTree> all_m_binary_trees(int n, int m)
{
    std::vector<BinaryTree> out;
    for (const auto& t : all_mary_trees(n, m))
        out.push_back(mary_to_binary(t, m));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool m_tamari_leq(const BinaryTree& a, const BinaryTree& b, int m)
{
    if (!is_m_binary(a, m) || !is_m_binary(b, m))
        throw std::invalid_argument("tree is not m-binary");
    return tamari_leq(a, b);
}

inline bool is_m_interval_poset(const IntervalPoset& p, int m)
{
    check_m(m);
    if (p.size() % m || !p.is_interval_poset())
        return false;
    for (int a = 1; a < p.size(); ++a)
        if (a % m && !p.precedes(a + 1, a))
            return false;
    return true;
}

// m ⊲ m-1 ⊲ ... ⊲ 1
inline IntervalPoset m_chain(int m)
{
    IntervalPoset p(m);
    for (int a = 1; a < m; ++a)
        p.add_relation(a + 1, a);
    return p;
}

// I_L • R(I_R1, ..., I_Rm), R(I) = u ←δ I, R(I_1..I_k) = u ←δ/x (R(I_2..I_k) • I_1).
inline PosetSum m_compose(const IntervalPoset& left, const std::vector<IntervalPoset>& rights, int m)
{
    check_m(m);
    if (static_cast<int>(rights.size()) != m)
        throw std::invalid_argument("m-composition needs m right factors");
    if (!is_m_interval_poset(left, m))
        throw std::invalid_argument("left factor is not an m-interval-poset");
    for (const auto& r : rights)
        if (!is_m_interval_poset(r, m))
            throw std::invalid_argument("right factor is not an m-interval-poset");
    PosetSum acc = right_product(single_vertex(), rights[m - 1]);
    for (int j = m - 2; j >= 0; --j) {
        PosetSum next;
        for (const auto& [p, c] : acc)
            for (const auto& [q, d] : right_product(single_vertex(), left_product(p, rights[j]), true))
                add_term(next, q, c * d);
        acc = std::move(next);
    }
    PosetSum out;
    for (const auto& [p, c] : acc)
        add_term(out, left_product(left, p), c);
    return out;
}

// Inverse of m_compose: (I_L, I_R1, ..., I_Rm).
inline std::vector<IntervalPoset> m_decompose(const IntervalPoset& p, int m)
{
    check_m(m);
    if (p.size() == 0)
        throw std::invalid_argument("empty interval-poset has no decomposition");
    if (!is_m_interval_poset(p, m))
        throw std::invalid_argument("not an m-interval-poset");
    const int n = p.size();
    int k = 1;
    for (int c = 2; c <= n; ++c) {
        bool all = true;
        for (int i = 1; i < c && all; ++i)
            all = p.precedes(i, c);
        if (all)
            k = c;
    }
    // start[j]: smallest label of I_Rj, 0 when empty
    std::vector<int> start(m + 1, 0);
    for (int j = 1; j < m; ++j)
        for (int a = k + m; a <= n; ++a)
            if (p.precedes(k + j, a) && !p.precedes(k + j - 1, a)) {
                start[j] = a;
                break;
            }
    if (k + m <= n && !p.precedes(k + m - 1, k + m))
        start[m] = k + m;
    std::vector<IntervalPoset> out{p.restrict(1, k - 1)};
    for (int j = 1; j <= m; ++j) {
        if (!start[j]) {
            out.push_back(IntervalPoset(0));
            continue;
        }
        int end = n;
        for (int i = 1; i < j; ++i)
            if (start[i])
                end = std::min(end, start[i] - 1);
        out.push_back(p.restrict(start[j], end));
    }
    return out;
}

inline StatPoly m_stat(const IntervalPoset& p, int m)
{
    check_m(m);
    if (p.size() % m)
        throw std::invalid_argument("size not divisible by m");
    return stat_monomial(p.trees(), p.size() / m);
}

inline StatPoly m_stat(const PosetSum& s, int m)
{
    StatPoly r;
    for (const auto& [p, c] : s)
        r += Rational(static_cast<long>(c)) * m_stat(p, m);
    return r;
}

// f x y Δ(g_1 Δ(g_2 ... Δ(g_m)))
inline StatPoly bilinear_B_m(const StatPoly& f, const std::vector<StatPoly>& g)
{
    if (g.empty())
        throw std::invalid_argument("B^(m) needs at least one right argument");
    StatPoly inner = g.back();
    for (size_t i = g.size() - 1; i-- > 0;)
        inner = g[i] * delta(inner);
    return f * stat_monomial(1, 1) * delta(inner);
}

// f Δ(g / x): the right product without its zero-relation term.
inline StatPoly right_delta_over_x(const StatPoly& f, const StatPoly& g)
{
    StatPoly h;
    for (const auto& [v, c] : g.terms()) {
        Exponent e = padded(v, 3);
        if (e[0] < 1)
            throw std::invalid_argument("argument not divisible by x");
        --e[0];
        h.add_term(e, c);
    }
    return f * delta(h);
}

inline StatPoly m_tamari_polynomial(const MAryTree& t, int m)
{
    check_m(m);
    if (t.empty())
        return stat_monomial(0, 0);
    std::vector<StatPoly> g;
    for (int i = 1; i <= m; ++i)
        g.push_back(m_tamari_polynomial(t.children[i], m));
    return at_y1(bilinear_B_m(m_tamari_polynomial(t.children[0], m), g));
}

inline StatPoly m_tamari_polynomial(const BinaryTree& t, int m) { return m_tamari_polynomial(binary_to_mary(t, m), m); }

inline StatPoly m_phi_series(int max_n, int m)
{
    check_m(m);
    StatPoly phi = stat_monomial(0, 0);
    for (int i = 0; i < max_n; ++i)
        phi = truncate_y(stat_monomial(0, 0) + bilinear_B_m(phi, std::vector<StatPoly>(m, phi)), max_n);
    return phi;
}

// All m-interval-posets of size n*m, by m-composition; memoized per (n, m).
inline const std::vector<IntervalPoset>& all_m_interval_posets(int n, int m)
{
    check_m(m);
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::vector<IntervalPoset>> cache;
    std::lock_guard lock(mutex);
    std::function<const std::vector<IntervalPoset>&(int)> get = [&](int k) -> const std::vector<IntervalPoset>& {
        auto it = cache.find({k, m});
        if (it != cache.end())
            return it->second;
        std::vector<IntervalPoset> v;
        if (k == 0) {
            v.push_back(IntervalPoset(0));
        } else {
            // sizes of I_L, I_R1..I_Rm summing to k - 1
            std::vector<int> sizes(m + 1, 0);
            std::function<void(int, int)> go = [&](int slot, int left) {
                if (slot == m) {
                    sizes[m] = left;
                    std::vector<std::vector<IntervalPoset>> parts;
                    for (int s : sizes)
                        parts.push_back(get(s));
                    std::vector<size_t> idx(m + 1, 0);
                    while (true) {
                        std::vector<IntervalPoset> rights;
                        for (int i = 1; i <= m; ++i)
                            rights.push_back(parts[i][idx[i]]);
                        for (const auto& [p, c] : m_compose(parts[0][idx[0]], rights, m))
                            v.push_back(p);
                        int i = 0;
                        while (i <= m && ++idx[i] == parts[i].size())
                            idx[i++] = 0;
                        if (i > m)
                            break;
                    }
                    return;
                }
                for (int s = 0; s <= left; ++s) {
                    sizes[slot] = s;
                    go(slot + 1, left - s);
                }
            };
            go(0, k - 1);
        }
        std::sort(v.begin(), v.end());
        return cache.emplace(std::make_pair(k, m), std::move(v)).first->second;
    };
    return get(n);
}

// (m+1) / (n (mn+1)) * C((m+1)^2 n + m, n - 1)
inline mpz_class m_interval_count_formula(unsigned long n, unsigned long m)
{
    if (n == 0)
        return 1;
    mpz_class num = (m + 1) * binomial((m + 1) * (m + 1) * n + m, n - 1);
    return num / (n * (m * n + 1));
}

// 1/(mn+1) C((m+1)n, n)
inline mpz_class m_catalan(unsigned long n, unsigned long m) { return binomial((m + 1) * n, n) / (m * n + 1); }

inline mpz_class count_m_intervals(int n, int m)
{
    return mpz_class(static_cast<unsigned long>(all_m_interval_posets(n, m).size()));
}

// Refined count: sum of x^{trees} y^n over m-interval-posets of size n*m.
inline StatPoly m_interval_polynomial(int n, int m)
{
    StatPoly r;
    for (const auto& p : all_m_interval_posets(n, m))
        r += m_stat(p, m);
    return r;
}

} // namespace algcomb
