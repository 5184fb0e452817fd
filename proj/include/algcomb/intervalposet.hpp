#pragma once

#include "poly.hpp"
#include "tree.hpp"

#include <bit>
#include <cstdint>
#include <optional>

namespace algcomb {

using Relation = std::pair<int, int>;

// Poset on {1..n}, a ⊲ b stored as bit a of below(b); kept transitively closed.
class IntervalPoset {
public:
    IntervalPoset() = default;

    explicit IntervalPoset(int n) : n_(n), below_(n + 1, 0)
    {
        if (n < 0 || n > 63)
            throw std::invalid_argument("interval-poset size must be within 0..63");
    }

    static IntervalPoset from_relations(int n, const std::vector<Relation>& rels)
    {
        IntervalPoset p(n);
        for (const auto& [a, b] : rels)
            p.add_relation(a, b);
        return p;
    }

    int size() const { return n_; }

    bool precedes(int a, int b) const { return below_[b] >> a & 1; }

    uint64_t below(int b) const { return below_[b]; }

    void add_relation(int a, int b)
    {
        check(a);
        check(b);
        if (a == b)
            throw std::invalid_argument("reflexive relation");
        if (precedes(a, b))
            return;
        if (precedes(b, a))
            throw std::invalid_argument("relation creates a cycle");
        const uint64_t add = below_[a] | bit(a);
        for (int y = 1; y <= n_; ++y)
            if (y == b || precedes(b, y))
                below_[y] |= add;
    }

    std::vector<Relation> relations() const
    {
        std::vector<Relation> out;
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b)
                if (precedes(a, b))
                    out.emplace_back(a, b);
        return out;
    }

    // Transitive reduction.
    std::vector<Relation> cover_relations() const
    {
        std::vector<Relation> out;
        for (const auto& [a, b] : relations()) {
            bool cover = true;
            for (int c = 1; c <= n_ && cover; ++c)
                if (precedes(a, c) && precedes(c, b))
                    cover = false;
            if (cover)
                out.emplace_back(a, b);
        }
        return out;
    }

    bool is_interval_poset() const
    {
        for (int a = 1; a <= n_; ++a)
            for (int c = a + 2; c <= n_; ++c) {
                const bool up = precedes(a, c), down = precedes(c, a);
                if (!up && !down)
                    continue;
                for (int b = a + 1; b < c; ++b) {
                    if (up && !precedes(b, c))
                        return false;
                    if (down && !precedes(b, a))
                        return false;
                }
            }
        return true;
    }

    // Relations b ⊲ a with b > a.
    IntervalPoset decreasing_part() const
    {
        IntervalPoset p(n_);
        for (int a = 1; a <= n_; ++a)
            p.below_[a] = below_[a] & ~mask_upto(a);
        return p;
    }

    // Relations a ⊲ b with a < b.
    IntervalPoset increasing_part() const
    {
        IntervalPoset p(n_);
        for (int b = 1; b <= n_; ++b)
            p.below_[b] = below_[b] & mask_upto(b - 1);
        return p;
    }

    // Roots of the final forest: x with no decreasing relation x ⊲ y, y < x.
    std::vector<int> final_roots() const
    {
        std::vector<int> r;
        for (int x = 1; x <= n_; ++x) {
            bool root = true;
            for (int y = 1; y < x && root; ++y)
                if (precedes(x, y))
                    root = false;
            if (root)
                r.push_back(x);
        }
        return r;
    }

    int trees() const { return static_cast<int>(final_roots().size()); }

    // Nodes receiving a decreasing relation.
    int b_stat() const
    {
        int k = 0;
        for (int x = 1; x <= n_; ++x)
            if (below_[x] & ~mask_upto(x))
                ++k;
        return k;
    }

    // Labels lo..hi relabeled to 1..hi-lo+1.
    IntervalPoset restrict(int lo, int hi) const
    {
        if (hi < lo)
            return IntervalPoset(0);
        IntervalPoset p(hi - lo + 1);
        for (int b = lo; b <= hi; ++b)
            for (int a = lo; a <= hi; ++a)
                if (precedes(a, b))
                    p.below_[b - lo + 1] |= bit(a - lo + 1);
        return p;
    }

    // Disjoint union with `o` relabeled after this poset.
    IntervalPoset concat(const IntervalPoset& o) const
    {
        IntervalPoset p(n_ + o.n_);
        for (int b = 1; b <= n_; ++b)
            p.below_[b] = below_[b];
        for (int b = 1; b <= o.n_; ++b)
            p.below_[n_ + b] = o.below_[b] << n_;
        return p;
    }

    friend bool operator==(const IntervalPoset& a, const IntervalPoset& b)
    {
        return a.n_ == b.n_ && a.below_ == b.below_;
    }
    friend bool operator!=(const IntervalPoset& a, const IntervalPoset& b) { return !(a == b); }
    friend bool operator<(const IntervalPoset& a, const IntervalPoset& b)
    {
        return std::tie(a.n_, a.below_) < std::tie(b.n_, b.below_);
    }

    // Relations of `o` all hold here.
    bool extends(const IntervalPoset& o) const
    {
        if (o.n_ != n_)
            return false;
        for (int b = 1; b <= n_; ++b)
            if ((o.below_[b] & ~below_[b]) != 0)
                return false;
        return true;
    }

private:
    static uint64_t bit(int a) { return uint64_t{1} << a; }
    // bits 1..k
    static uint64_t mask_upto(int k) { return k <= 0 ? 0 : ((uint64_t{1} << (k + 1)) - 2); }

    void check(int a) const
    {
        if (a < 1 || a > n_)
            throw std::invalid_argument("label out of range");
    }

    int n_ = 0;
    std::vector<uint64_t> below_{0};
};

inline std::string to_string(const IntervalPoset& p)
{
    std::string s = "{n=" + std::to_string(p.size()) + ":";
    bool first = true;
    for (const auto& [a, b] : p.cover_relations()) {
        s += (first ? " " : ", ") + std::to_string(a) + "<" + std::to_string(b);
        first = false;
    }
    return s + "}";
}

namespace detail {

inline void forest_relations(const BinaryTree& t, int offset, IntervalPoset& p, bool increasing)
{
    if (t.empty())
        return;
    const int root = offset + t.left().size() + 1;
    if (increasing)
        for (int a = offset + 1; a < root; ++a)
            p.add_relation(a, root);
    else
        for (int b = root + 1; b <= root + t.right().size(); ++b)
            p.add_relation(b, root);
    forest_relations(t.left(), offset, p, increasing);
    forest_relations(t.right(), root, p, increasing);
}

inline BinaryTree tree_from_final(const IntervalPoset& p, int lo, int hi)
{
    if (lo > hi)
        return {};
    for (int x = lo; x <= hi; ++x) {
        bool ok = true;
        for (int y = x + 1; y <= hi && ok; ++y)
            ok = p.precedes(y, x);
        for (int y = hi + 1; y <= p.size() && ok; ++y)
            ok = !p.precedes(y, x);
        if (ok)
            return BinaryTree::node(tree_from_final(p, lo, x - 1), tree_from_final(p, x + 1, hi));
    }
    throw std::invalid_argument("decreasing relations do not form a final forest");
}

inline BinaryTree tree_from_initial(const IntervalPoset& p, int lo, int hi)
{
    if (lo > hi)
        return {};
    for (int x = hi; x >= lo; --x) {
        bool ok = true;
        for (int y = lo; y < x && ok; ++y)
            ok = p.precedes(y, x);
        for (int y = 1; y < lo && ok; ++y)
            ok = !p.precedes(y, x);
        if (ok)
            return BinaryTree::node(tree_from_initial(p, lo, x - 1), tree_from_initial(p, x + 1, hi));
    }
    throw std::invalid_argument("increasing relations do not form an initial forest");
}

} // namespace detail

inline IntervalPoset initial_forest(const BinaryTree& t)
{
    IntervalPoset p(t.size());
    detail::forest_relations(t, 0, p, true);
    return p;
}

inline IntervalPoset final_forest(const BinaryTree& t)
{
    IntervalPoset p(t.size());
    detail::forest_relations(t, 0, p, false);
    return p;
}

// Lower tree from the decreasing relations, upper tree from the increasing ones.
inline std::pair<BinaryTree, BinaryTree> decompose(const IntervalPoset& p)
{
    const int n = p.size();
    return {detail::tree_from_final(p.decreasing_part(), 1, n), detail::tree_from_initial(p.increasing_part(), 1, n)};
}

namespace detail {

// Union of F>=(t1) and F<=(t2), or nothing when it is not an interval-poset.
inline std::optional<IntervalPoset> merge_forests(const BinaryTree& t1, const BinaryTree& t2)
{
    if (t1.size() != t2.size())
        throw std::invalid_argument("trees of different sizes");
    IntervalPoset p = final_forest(t1);
    const IntervalPoset up = initial_forest(t2);
    for (const auto& [a, b] : up.relations()) {
        if (p.precedes(b, a))
            return std::nullopt;
        p.add_relation(a, b);
    }
    if (!p.is_interval_poset() || p.decreasing_part() != final_forest(t1) || p.increasing_part() != up)
        return std::nullopt;
    return p;
}

} // namespace detail

inline bool tamari_leq(const BinaryTree& t1, const BinaryTree& t2)
{
    return detail::merge_forests(t1, t2).has_value();
}

inline IntervalPoset interval_poset(const BinaryTree& t1, const BinaryTree& t2)
{
    auto p = detail::merge_forests(t1, t2);
    if (!p)
        throw std::invalid_argument("trees are not comparable in the Tamari order");
    return *p;
}

inline IntervalPoset bst_poset(const BinaryTree& t) { return interval_poset(t, t); }

// Every interval-poset of size n, via all comparable pairs.
inline std::vector<IntervalPoset> all_interval_posets(int n)
{
    std::vector<IntervalPoset> out;
    for (const auto& a : all_trees(n))
        for (const auto& b : all_trees(n))
            if (auto p = detail::merge_forests(a, b))
                out.push_back(*p);
    std::sort(out.begin(), out.end());
    return out;
}

// Formal sum with integer multiplicities.
using PosetSum = std::map<IntervalPoset, long long>;

inline void add_term(PosetSum& s, const IntervalPoset& p, long long c = 1)
{
    if (c == 0)
        return;
    auto& v = s[p];
    v += c;
    if (v == 0)
        s.erase(p);
}

inline IntervalPoset single_vertex() { return IntervalPoset(1); }

// Increasing relations x ⊲ α for every x of `a`, α the smallest label of `b`.
inline IntervalPoset left_product(const IntervalPoset& a, const IntervalPoset& b)
{
    IntervalPoset p = a.concat(b);
    if (b.size() == 0)
        return p;
    const int alpha = a.size() + 1;
    for (int x = 1; x <= a.size(); ++x)
        p.add_relation(x, alpha);
    return p;
}

// Decreasing relations x_1..x_i ⊲ ω over the final-forest roots of `b`, ω the largest label of `a`.
inline PosetSum right_product(const IntervalPoset& a, const IntervalPoset& b, bool skip_empty = false)
{
    if (a.size() == 0)
        throw std::invalid_argument("right product needs a nonempty left factor");
    const IntervalPoset base = a.concat(b);
    const int omega = a.size();
    std::vector<int> roots = b.final_roots();
    PosetSum out;
    IntervalPoset p = base;
    if (!skip_empty)
        add_term(out, p);
    for (int r : roots) {
        p.add_relation(r + omega, omega);
        add_term(out, p);
    }
    return out;
}

inline PosetSum compose(const IntervalPoset& left, const IntervalPoset& right)
{
    PosetSum out = right_product(left_product(left, single_vertex()), right);
    for (const auto& [p, c] : out)
        if (c != 1)
            throw std::logic_error("composition produced a repeated term");
    return out;
}

inline PosetSum compose(const PosetSum& left, const PosetSum& right)
{
    PosetSum out;
    for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right)
            for (const auto& [p, c] : compose(a, b))
                add_term(out, p, ca * cb * c);
    return out;
}

inline std::pair<IntervalPoset, IntervalPoset> unique_decomposition(const IntervalPoset& p)
{
    const int n = p.size();
    if (n == 0)
        throw std::invalid_argument("empty interval-poset has no decomposition");
    int k = 1;
    for (int c = 2; c <= n; ++c) {
        bool all = true;
        for (int i = 1; i < c && all; ++i)
            all = p.precedes(i, c);
        if (all)
            k = c;
    }
    return {p.restrict(1, k - 1), p.restrict(k + 1, n)};
}

// All interval-posets of size n built by composition; memoized.
inline const std::vector<IntervalPoset>& composed_interval_posets(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<IntervalPoset>> cache;
    std::lock_guard lock(mutex);
    std::function<const std::vector<IntervalPoset>&(int)> get = [&](int k) -> const std::vector<IntervalPoset>& {
        auto it = cache.find(k);
        if (it != cache.end())
            return it->second;
        std::vector<IntervalPoset> v;
        if (k == 0)
            v.push_back(IntervalPoset(0));
        for (int l = 0; l < k; ++l) {
            const auto lefts = get(l);
            const auto rights = get(k - 1 - l);
            for (const auto& a : lefts)
                for (const auto& b : rights)
                    for (const auto& [p, c] : compose(a, b))
                        v.push_back(p);
        }
        std::sort(v.begin(), v.end());
        return cache.emplace(k, std::move(v)).first->second;
    };
    return get(n);
}

// Polynomials in x, y, b: exponent vector (x, y, b).
using StatPoly = QPoly;

inline StatPoly stat_monomial(int x, int y, int b = 0, long c = 1)
{
    return StatPoly::monomial({x, y, b}, Rational(c));
}

inline StatPoly stat(const IntervalPoset& p, bool with_b = false)
{
    return stat_monomial(p.trees(), p.size(), with_b ? p.b_stat() : 0);
}

inline StatPoly stat(const PosetSum& s, bool with_b = false)
{
    StatPoly r;
    for (const auto& [p, c] : s)
        r += Rational(static_cast<long>(c)) * stat(p, with_b);
    return r;
}

// (x g - g|x=1)/(x - 1), monomial by monomial: x^a -> 1 + x + ... + x^a.
inline StatPoly delta(const StatPoly& g)
{
    StatPoly r;
    for (const auto& [v, c] : g.terms()) {
        Exponent e = padded(v, 3);
        if (e[0] < 0)
            throw std::invalid_argument("negative power of x in delta");
        const int a = e[0];
        for (int j = 0; j <= a; ++j) {
            e[0] = j;
            r.add_term(e, c);
        }
    }
    return r;
}

inline StatPoly at_x1(const StatPoly& f)
{
    StatPoly r;
    for (const auto& [v, c] : f.terms()) {
        Exponent e = padded(v, 3);
        e[0] = 0;
        r.add_term(e, c);
    }
    return r;
}

inline StatPoly at_y1(const StatPoly& f)
{
    StatPoly r;
    for (const auto& [v, c] : f.terms()) {
        Exponent e = padded(v, 3);
        e[1] = 0;
        r.add_term(e, c);
    }
    return r;
}

// Divided-difference form of delta, kept to cross-check the closed form.
inline StatPoly delta_by_division(const StatPoly& g)
{
    StatPoly num = stat_monomial(1, 0) * g - at_x1(g);
    // synthetic division by (x - 1) per (y, b) slice, highest x first
    std::map<std::pair<int, int>, std::map<int, Rational>> slices;
    for (const auto& [v, c] : num.terms()) {
        Exponent e = padded(v, 3);
        slices[{e[1], e[2]}][e[0]] = c;
    }
    StatPoly q;
    for (auto& [yb, coeffs] : slices) {
        if (coeffs.begin()->first < 0)
            throw std::invalid_argument("negative power of x in delta");
        Rational carry = 0;
        for (int a = coeffs.rbegin()->first; a >= 1; --a) {
            carry += coeffs.count(a) ? coeffs[a] : Rational(0);
            q.add_term({a - 1, yb.first, yb.second}, carry);
        }
        carry += coeffs.count(0) ? coeffs[0] : Rational(0);
        if (carry != 0)
            throw std::logic_error("numerator does not vanish at x = 1");
    }
    return q;
}

inline StatPoly bilinear_B(const StatPoly& f, const StatPoly& g, bool with_b = false)
{
    const StatPoly x = stat_monomial(1, 0), y = stat_monomial(0, 1);
    if (!with_b)
        return x * y * f * delta(g);
    const StatPoly b = stat_monomial(0, 0, 1);
    return y * (x * b * f * delta(g) - b * x * f * g + x * f * g);
}

inline StatPoly tamari_polynomial(const BinaryTree& t, bool with_b = false)
{
    if (t.empty())
        return stat_monomial(0, 0);
    return at_y1(bilinear_B(tamari_polynomial(t.left(), with_b), tamari_polynomial(t.right(), with_b), with_b));
}

// Counts T' >= t by right-branch length.
inline StatPoly tamari_polynomial_upper(const BinaryTree& t, bool with_b = false)
{
    return tamari_polynomial(mirror(t), with_b);
}

inline StatPoly truncate_y(const StatPoly& f, int max_y)
{
    StatPoly r;
    for (const auto& [v, c] : f.terms())
        if (padded(v, 3)[1] <= max_y)
            r.add_term(v, c);
    return r;
}

// Fixed point of Phi = 1 + B(Phi, Phi) modulo y^(max_n+1).
inline StatPoly phi_series(int max_n, bool with_b = false)
{
    StatPoly phi = stat_monomial(0, 0);
    for (int i = 0; i < max_n; ++i)
        phi = truncate_y(stat_monomial(0, 0) + bilinear_B(phi, phi, with_b), max_n);
    return phi;
}

// Coefficient of y^n, as a polynomial in x (and b).
inline StatPoly y_coefficient(const StatPoly& f, int n)
{
    StatPoly r;
    for (const auto& [v, c] : f.terms()) {
        Exponent e = padded(v, 3);
        if (e[1] == n) {
            e[1] = 0;
            r.add_term(e, c);
        }
    }
    return r;
}

inline mpz_class coefficient_sum(const StatPoly& f)
{
    Rational s = 0;
    for (const auto& [v, c] : f.terms())
        s += c;
    if (s.get_den() != 1)
        throw std::logic_error("non-integral coefficient sum");
    return s.get_num();
}

inline mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// 2(4n+1)! / ((n+1)! (3n+2)!)
inline mpz_class interval_count_formula(unsigned long n)
{
    return 2 * factorial(4 * n + 1) / (factorial(n + 1) * factorial(3 * n + 2));
}

inline std::string stat_to_string(const StatPoly& f)
{
    if (f.is_zero())
        return "0";
    std::vector<std::pair<Exponent, Rational>> terms;
    for (const auto& [v, c] : f.terms())
        terms.emplace_back(padded(v, 3), c);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first[1], a.first[0], a.first[2]) < std::tie(b.first[1], b.first[0], b.first[2]);
    });
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms) {
        const bool neg = sgn(c) < 0;
        const Rational a = neg ? Rational(-c) : c;
        s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        const char* names[3] = {"x", "y", "b"};
        for (int i : {0, 1, 2})
            if (e[i]) {
                if (!mono.empty())
                    mono += "*";
                mono += names[i];
                if (e[i] != 1)
                    mono += "^" + std::to_string(e[i]);
            }
        if (mono.empty())
            s += a.get_str();
        else
            s += (a == 1 ? "" : a.get_str() + "*") + mono;
        first = false;
    }
    return s;
}

} // namespace algcomb
