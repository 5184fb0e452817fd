#pragma once

#include "orders.hpp"
#include "tree.hpp"
#include "mtamari.hpp"

#include <map>

namespace algcomb {

enum class Algebra { FQSym, PBT, FQSymM, PBTM };
enum class HopfBasis { F, G, E, H, P };

using Tensor = std::pair<Word, Word>;

template <class K>
using LinComb = std::map<K, long long>;

template <class K>
void add_to(LinComb<K>& s, const K& k, long long c)
{
    if (c == 0)
        return;
    auto [it, fresh] = s.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            s.erase(it);
    }
}

struct HopfElement {
    Algebra algebra = Algebra::FQSym;
    HopfBasis basis = HopfBasis::F;
    int m = 1;
    LinComb<Word> terms;

    friend bool operator==(const HopfElement& a, const HopfElement& b)
    {
        return a.algebra == b.algebra && a.basis == b.basis && a.m == b.m && a.terms == b.terms;
    }
};

struct HopfTensor {
    Algebra algebra = Algebra::FQSym;
    HopfBasis basis = HopfBasis::F;
    int m = 1;
    LinComb<Tensor> terms;

    friend bool operator==(const HopfTensor& a, const HopfTensor& b)
    {
        return a.algebra == b.algebra && a.basis == b.basis && a.m == b.m && a.terms == b.terms;
    }
};

// ---- words ----

inline Word shifted(Word w, int k)
{
    for (int& x : w)
        x += k;
    return w;
}

inline Word concat(Word a, const Word& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline std::vector<Word> shifted_shuffle(const Word& a, const Word& b, int shift)
{
    return shuffle(a, shifted(b, shift));
}

inline bool avoids_132(const Word& w)
{
    const size_t n = w.size();
    for (size_t j = 1; j < n; ++j)
        for (size_t i = 0; i < j; ++i) {
            if (w[i] >= w[j])
                continue;
            for (size_t k = j + 1; k < n; ++k)
                if (w[i] < w[k] && w[k] < w[j])
                    return false;
        }
    return true;
}

inline bool is_stutter_word(const Word& w, int m)
{
    std::map<int, int> count;
    for (int x : w)
        ++count[x];
    for (const auto& [x, c] : count)
        if (c % m)
            return false;
    return true;
}

inline bool is_stutter_perm(const Word& w, int m)
{
    if (m < 1 || w.size() % m)
        return false;
    const int n = static_cast<int>(w.size()) / m;
    std::vector<int> count(n + 1, 0);
    for (int x : w) {
        if (x < 1 || x > n)
            return false;
        ++count[x];
    }
    return std::all_of(count.begin() + 1, count.end(), [m](int c) { return c == m; });
}

// The stutter permutation with the same standardization.
template <class T>
Word m_standardize(const std::vector<T>& u, int m)
{
    if (m < 1)
        throw std::invalid_argument("m must be at least 1");
    std::map<T, int> count;
    for (const auto& x : u)
        ++count[x];
    for (const auto& [x, c] : count)
        if (c % m)
            throw std::invalid_argument("letter multiplicity not divisible by m");
    Word s = standardize(u);
    for (int& x : s)
        x = (x + m - 1) / m;
    return s;
}

inline Word m_standardize(const std::string& u, int m) { return m_standardize(std::vector<char>(u.begin(), u.end()), m); }

inline std::vector<Word> all_stutter_perms(int n, int m)
{
    Word w;
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < m; ++j)
            w.push_back(i);
    std::vector<Word> out;
    do
        out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace detail {

// Letters 1..|pattern| of `pattern` renamed through the sorted value set `values`.
inline Word relabel(const Word& pattern, const std::vector<int>& values)
{
    Word r;
    for (int x : pattern)
        r.push_back(values[x - 1]);
    return r;
}

// u.v over all splits of {1..n+k} into value sets of sizes n and k.
inline std::vector<Word> value_concatenations(const Word& a, int na, const Word& b, int nb)
{
    std::vector<Word> out;
    const int total = na + nb;
    std::vector<bool> pick(total, false);
    std::fill(pick.begin(), pick.begin() + na, true);
    do {
        std::vector<int> va, vb;
        for (int i = 0; i < total; ++i)
            (pick[i] ? va : vb).push_back(i + 1);
        out.push_back(concat(relabel(a, va), relabel(b, vb)));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

inline int degree(const Word& w, int m) { return static_cast<int>(w.size()) / m; }

} // namespace detail

// ---- validation ----

inline void validate_index(Algebra alg, const Word& w, int m)
{
    switch (alg) {
    case Algebra::FQSym:
        require_perm(w);
        return;
    case Algebra::PBT:
        require_perm(w);
        if (!avoids_132(w))
            throw std::invalid_argument("binary tree index must be a canonical (132-avoiding) word");
        return;
    case Algebra::FQSymM:
        if (!is_stutter_perm(w, m))
            throw std::invalid_argument("index is not an m-stutter permutation");
        return;
    case Algebra::PBTM:
        if (!is_stutter_perm(w, m) || !avoids_132(standardize(w)))
            throw std::invalid_argument("index is not a canonical m-stutter permutation");
        return;
    }
}

inline void check_basis(Algebra alg, HopfBasis b)
{
    const bool ok = alg == Algebra::FQSym    ? b != HopfBasis::P
                    : alg == Algebra::PBT    ? (b == HopfBasis::P || b == HopfBasis::H || b == HopfBasis::E)
                    : alg == Algebra::FQSymM ? (b == HopfBasis::F || b == HopfBasis::G)
                                             : b == HopfBasis::P;
    if (!ok)
        throw std::invalid_argument("basis not available in this algebra");
}

inline HopfElement hopf_element(Algebra alg, HopfBasis b, const Word& index, int m = 1)
{
    check_basis(alg, b);
    if (alg == Algebra::FQSym || alg == Algebra::PBT)
        m = 1;
    validate_index(alg, index, m);
    HopfElement e{alg, b, m, {}};
    add_to(e.terms, index, 1);
    return e;
}

// ---- trees as indices ----

inline Word pbt_index(const BinaryTree& t) { return canonical_word(t); }

inline BinaryTree pbt_tree(const Word& canonical) { return bst_shape(canonical); }

// Class of the mirrored m-binary tree, read back as stutter permutations.
inline std::vector<Word> pbtm_class(const BinaryTree& mirrored, int m)
{
    std::vector<Word> out;
    for (const auto& p : sylvester_class(mirrored)) {
        const Perm inv = inverse(p);
        bool ok = true;
        for (size_t v = 0; v + 1 < inv.size() && ok; ++v)
            if ((v + 1) % m && inv[v] > inv[v + 1])
                ok = false;
        if (!ok)
            continue;
        Word w(p.size());
        for (size_t i = 0; i < p.size(); ++i)
            w[i] = (p[i] + m - 1) / m;
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Word pbtm_index(const BinaryTree& m_binary, int m)
{
    if (!is_m_binary(m_binary, m))
        throw std::invalid_argument("tree is not m-binary");
    Word w = canonical_word(mirror(m_binary));
    for (int& x : w)
        x = (x + m - 1) / m;
    return w;
}

inline BinaryTree pbtm_tree(const Word& stutter) { return mirror(bst_shape(stutter)); }

// ---- FQSym ----


namespace detail {

inline LinComb<Word> mul_index(Algebra alg, HopfBasis basis, int m, const Word& s, const Word& t)
{
    LinComb<Word> out;
    const int ns = degree(s, m), nt = degree(t, m);
    switch (alg) {
    case Algebra::FQSym:
        switch (basis) {
        case HopfBasis::F:
            for (auto& w : shifted_shuffle(s, t, ns))
                add_to(out, w, 1);
            break;
        case HopfBasis::G:
            for (auto& w : value_concatenations(s, ns, t, nt))
                add_to(out, w, 1);
            break;
        case HopfBasis::E:
            add_to(out, concat(s, shifted(t, ns)), 1);
            break;
        case HopfBasis::H:
            add_to(out, concat(shifted(t, ns), s), 1);
            break;
        default:
            throw std::invalid_argument("basis not available in this algebra");
        }
        break;
    case Algebra::PBT:
        switch (basis) {
        case HopfBasis::P:
            for (auto& w : shifted_shuffle(s, t, ns))
                if (avoids_132(w))
                    add_to(out, w, 1);
            break;
        case HopfBasis::H:
            add_to(out, pbt_index(graft_rightmost(pbt_tree(s), pbt_tree(t))), 1);
            break;
        case HopfBasis::E:
            add_to(out, pbt_index(graft_leftmost(pbt_tree(t), pbt_tree(s))), 1);
            break;
        default:
            throw std::invalid_argument("basis not available in this algebra");
        }
        break;
    case Algebra::FQSymM:
        if (basis == HopfBasis::F)
            for (auto& w : shifted_shuffle(s, t, ns))
                add_to(out, w, 1);
        else
            for (auto& w : value_concatenations(s, ns, t, nt))
                add_to(out, w, 1);
        break;
    case Algebra::PBTM:
        for (auto& w : shifted_shuffle(s, t, ns))
            if (avoids_132(standardize(w)))
                add_to(out, w, 1);
        break;
    }
    return out;
}

inline Word std_of(const Word& w, int m) { return m == 1 ? standardize(w) : m_standardize(w, m); }

// F-type coproduct: cuts into two factors, each (m-)standardized; stutter cuts only when m > 1.
inline LinComb<Tensor> cut_coproduct(const Word& s, int m)
{
    LinComb<Tensor> out;
    for (size_t k = 0; k <= s.size(); ++k) {
        Word a(s.begin(), s.begin() + k), b(s.begin() + k, s.end());
        if (!is_stutter_word(a, m))
            continue;
        add_to(out, Tensor{std_of(a, m), std_of(b, m)}, 1);
    }
    return out;
}

// G-type coproduct: letters <= k and letters > k.
inline LinComb<Tensor> value_coproduct(const Word& s, int m)
{
    LinComb<Tensor> out;
    const int n = degree(s, m);
    for (int k = 0; k <= n; ++k) {
        Word a, b;
        for (int x : s)
            if (x <= k)
                a.push_back(x);
            else
                b.push_back(x - k);
        add_to(out, Tensor{a, b}, 1);
    }
    return out;
}

} // namespace detail

inline HopfElement product(const HopfElement& a, const HopfElement& b)
{
    if (a.algebra != b.algebra || a.basis != b.basis || a.m != b.m)
        throw std::invalid_argument("factors live in different algebras or bases");
    HopfElement out{a.algebra, a.basis, a.m, {}};
    for (const auto& [s, cs] : a.terms)
        for (const auto& [t, ct] : b.terms)
            for (const auto& [w, c] : detail::mul_index(a.algebra, a.basis, a.m, s, t))
                add_to(out.terms, w, cs * ct * c);
    return out;
}

inline HopfElement fqsym_product(const HopfElement& a, const HopfElement& b) { return product(a, b); }

// ---- expansions ----

inline std::vector<Word> weak_upper_set(const Perm& s)
{
    std::vector<Word> out;
    for (auto& p : all_perms(static_cast<int>(s.size())))
        if (weak_leq(s, p, Side::right))
            out.push_back(p);
    return out;
}

inline std::vector<Word> weak_lower_set(const Perm& s)
{
    std::vector<Word> out;
    for (auto& p : all_perms(static_cast<int>(s.size())))
        if (weak_leq(p, s, Side::right))
            out.push_back(p);
    return out;
}

// H_T over the Tamari down-set, E_T over the up-set.
inline HopfElement pbt_HE_convert(const Word& index, HopfBasis b)
{
    validate_index(Algebra::PBT, index, 1);
    if (b != HopfBasis::H && b != HopfBasis::E)
        throw std::invalid_argument("conversion needs the H or E basis");
    const BinaryTree t = pbt_tree(index);
    HopfElement out{Algebra::PBT, HopfBasis::P, 1, {}};
    for (const auto& s : all_trees(t.size()))
        if (b == HopfBasis::H ? tamari_leq(s, t) : tamari_leq(t, s))
            add_to(out.terms, pbt_index(s), 1);
    return out;
}

// Rewrites an element into the F basis of FQSym (or FQSym^(m) for PBT^(m)).
inline HopfElement to_F(const HopfElement& e)
{
    HopfElement out{e.algebra == Algebra::PBTM ? Algebra::FQSymM
                    : e.algebra == Algebra::PBT ? Algebra::FQSym
                                                : e.algebra,
                    HopfBasis::F, e.m, {}};
    for (const auto& [s, c] : e.terms) {
        switch (e.algebra) {
        case Algebra::FQSym:
            if (e.basis == HopfBasis::F)
                add_to(out.terms, s, c);
            else if (e.basis == HopfBasis::G)
                add_to(out.terms, inverse(s), c);
            else
                for (auto& w : e.basis == HopfBasis::E ? weak_upper_set(s) : weak_lower_set(s))
                    add_to(out.terms, w, c);
            break;
        case Algebra::PBT: {
            HopfElement p = e.basis == HopfBasis::P ? hopf_element(Algebra::PBT, HopfBasis::P, s)
                                                    : pbt_HE_convert(s, e.basis);
            for (const auto& [t, d] : p.terms)
                for (auto& w : sylvester_class(pbt_tree(t)))
                    add_to(out.terms, w, c * d);
            break;
        }
        case Algebra::FQSymM:
            if (e.basis != HopfBasis::F)
                throw std::invalid_argument("no F expansion for this basis");
            add_to(out.terms, s, c);
            break;
        case Algebra::PBTM:
            for (auto& w : pbtm_class(bst_shape(s), e.m))
                add_to(out.terms, w, c);
            break;
        }
    }
    return out;
}

inline HopfTensor coproduct(const HopfElement& e);

namespace detail {

// Keeps the F-pairs indexed by canonical words; they carry the P-coefficients.
inline HopfTensor restrict_to_canonical(const HopfTensor& f, Algebra alg, int m)
{
    HopfTensor out{alg, HopfBasis::P, m, {}};
    auto canonical = [&](const Word& w) { return avoids_132(m == 1 ? w : standardize(w)); };
    for (const auto& [t, c] : f.terms)
        if (canonical(t.first) && canonical(t.second))
            add_to(out.terms, t, c);
    return out;
}

} // namespace detail

inline HopfTensor coproduct(const HopfElement& e)
{
    HopfTensor out{e.algebra, e.basis, e.m, {}};
    switch (e.algebra) {
    case Algebra::FQSym:
    case Algebra::FQSymM:
        if (e.basis != HopfBasis::F && e.basis != HopfBasis::G)
            throw std::invalid_argument("coproduct available in the F and G bases only");
        for (const auto& [s, c] : e.terms)
            for (const auto& [t, d] :
                 e.basis == HopfBasis::F ? detail::cut_coproduct(s, e.m) : detail::value_coproduct(s, e.m))
                add_to(out.terms, t, c * d);
        return out;
    case Algebra::PBT:
    case Algebra::PBTM:
        if (e.basis != HopfBasis::P)
            throw std::invalid_argument("coproduct available in the P basis only");
        return detail::restrict_to_canonical(coproduct(to_F(e)), e.algebra, e.m);
    }
    return out;
}

// (a ⊗ b)(c ⊗ d) = ac ⊗ bd
inline HopfTensor product(const HopfTensor& x, const HopfTensor& y)
{
    if (x.algebra != y.algebra || x.basis != y.basis || x.m != y.m)
        throw std::invalid_argument("factors live in different algebras or bases");
    HopfTensor out{x.algebra, x.basis, x.m, {}};
    for (const auto& [s, cs] : x.terms)
        for (const auto& [t, ct] : y.terms)
            for (const auto& [l, cl] : detail::mul_index(x.algebra, x.basis, x.m, s.first, t.first))
                for (const auto& [r, cr] : detail::mul_index(x.algebra, x.basis, x.m, s.second, t.second))
                    add_to(out.terms, Tensor{l, r}, cs * ct * cl * cr);
    return out;
}

// Reads an F-combination back in the P basis; throws when it is not a PBT element.
inline HopfElement pbt_from_F(const HopfElement& f, Algebra alg)
{
    HopfElement out{alg, HopfBasis::P, f.m, {}};
    for (const auto& [w, c] : f.terms)
        if (avoids_132(f.m == 1 ? w : standardize(w)))
            add_to(out.terms, w, c);
    if (to_F(out) != f)
        throw std::invalid_argument("combination is not in the binary tree subalgebra");
    return out;
}

// ---- printing ----

inline char basis_char(HopfBasis b) { return "FGEHP"[static_cast<int>(b)]; }

inline std::string index_to_string(const Word& w)
{
    const bool wide = std::any_of(w.begin(), w.end(), [](int x) { return x > 9; });
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (wide && i)
            s += ",";
        s += std::to_string(w[i]);
    }
    return s;
}

inline std::string term_to_string(const HopfElement& e, const Word& w)
{
    if (w.empty())
        return "1";
    std::string s(1, basis_char(e.basis));
    if (e.algebra == Algebra::FQSymM || e.algebra == Algebra::PBTM)
        s += std::to_string(e.m);
    return s + "[" + index_to_string(w) + "]";
}

namespace detail {

template <class K>
std::vector<std::pair<K, long long>> graded_order(const LinComb<K>& terms, std::function<size_t(const K&)> deg)
{
    std::vector<std::pair<K, long long>> v(terms.begin(), terms.end());
    std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return deg(a.first) > deg(b.first); });
    return v;
}

inline std::string signed_join(const std::vector<std::pair<std::string, long long>>& items)
{
    if (items.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [body, c] : items) {
        const long long a = c < 0 ? -c : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (a != 1)
            s += std::to_string(a) + "*";
        s += body;
        first = false;
    }
    return s;
}

} // namespace detail

// Terms by decreasing degree, then lexicographically.
inline std::string to_string(const HopfElement& e)
{
    std::vector<std::pair<std::string, long long>> items;
    for (const auto& [w, c] : detail::graded_order<Word>(e.terms, [](const Word& w) { return w.size(); }))
        items.emplace_back(term_to_string(e, w), c);
    return detail::signed_join(items);
}

inline std::string to_string(const HopfTensor& t)
{
    const HopfElement shape{t.algebra, t.basis, t.m, {}};
    std::vector<std::pair<std::string, long long>> items;
    for (const auto& [p, c] :
         detail::graded_order<Tensor>(t.terms, [](const Tensor& x) { return x.first.size(); }))
        items.emplace_back(term_to_string(shape, p.first) + " ⊗ " + term_to_string(shape, p.second), c);
    return detail::signed_join(items);
}

inline Algebra parse_algebra(const std::string& s)
{
    if (s == "fqsym")
        return Algebra::FQSym;
    if (s == "pbt")
        return Algebra::PBT;
    if (s == "fqsym-m" || s == "fqsymm")
        return Algebra::FQSymM;
    if (s == "pbt-m" || s == "pbtm")
        return Algebra::PBTM;
    throw std::invalid_argument("unknown algebra: " + s);
}

inline HopfBasis parse_hopf_basis(const std::string& s)
{
    if (s.size() == 1)
        switch (std::toupper(static_cast<unsigned char>(s[0]))) {
        case 'F': return HopfBasis::F;
        case 'G': return HopfBasis::G;
        case 'E': return HopfBasis::E;
        case 'H': return HopfBasis::H;
        case 'P': return HopfBasis::P;
        }
    throw std::invalid_argument("unknown basis: " + s);
}

} // namespace algcomb
