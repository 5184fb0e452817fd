#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algcomb {

// One-line notation, values 1..n.
using Perm = std::vector<int>;
using Word = std::vector<int>;

inline bool is_perm(const Perm& p)
{
    std::vector<char> seen(p.size() + 1, 0);
    for (int v : p) {
        if (v < 1 || v > static_cast<int>(p.size()) || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

inline void require_perm(const Perm& p)
{
    if (!is_perm(p))
        throw std::invalid_argument("not a permutation");
}

inline Perm identity(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline Perm longest(int n)
{
    Perm p(n);
    for (int i = 0; i < n; ++i)
        p[i] = n - i;
    return p;
}

// (sigma mu)(i) = sigma(mu(i))
inline Perm compose(const Perm& sigma, const Perm& mu)
{
    if (sigma.size() != mu.size())
        throw std::invalid_argument("compose: size mismatch");
    Perm r(mu.size());
    for (size_t i = 0; i < mu.size(); ++i)
        r[i] = sigma[mu[i] - 1];
    return r;
}

inline Perm inverse(const Perm& sigma)
{
    Perm r(sigma.size());
    for (size_t i = 0; i < sigma.size(); ++i)
        r[sigma[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

inline std::vector<int> lehmer_code(const Perm& sigma)
{
    const size_t n = sigma.size();
    std::vector<int> v(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (sigma[j] < sigma[i])
                ++v[i];
    return v;
}

inline Perm from_lehmer_code(const std::vector<int>& v)
{
    const int n = static_cast<int>(v.size());
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    Perm p;
    p.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (v[i] < 0 || v[i] > n - 1 - i)
            throw std::invalid_argument("lehmer code entry out of range");
        p.push_back(avail[v[i]]);
        avail.erase(avail.begin() + v[i]);
    }
    return p;
}

inline bool is_lehmer_code(const std::vector<int>& v)
{
    const int n = static_cast<int>(v.size());
    for (int i = 0; i < n; ++i)
        if (v[i] < 0 || v[i] > n - 1 - i)
            return false;
    return true;
}

inline int length(const Perm& sigma)
{
    int l = 0;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j])
                ++l;
    return l;
}

inline int sign(const Perm& sigma) { return length(sigma) % 2 ? -1 : 1; }

// Position pairs (i, j), i < j, sigma(i) > sigma(j).
inline std::vector<std::pair<int, int>> inversions(const Perm& sigma)
{
    std::vector<std::pair<int, int>> r;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j])
                r.emplace_back(i + 1, j + 1);
    return r;
}

// Value pairs (a, b), a < b, with b written before a.
inline std::vector<std::pair<int, int>> coinversions(const Perm& sigma)
{
    auto r = inversions(inverse(sigma));
    std::sort(r.begin(), r.end());
    return r;
}

inline std::vector<int> descents(const Perm& sigma)
{
    std::vector<int> d;
    for (size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1])
            d.push_back(static_cast<int>(i) + 1);
    return d;
}

// Values i such that i + 1 is written before i.
inline std::vector<int> recoils(const Perm& sigma) { return descents(inverse(sigma)); }

struct LengthStats {
    int length = 0;
    std::vector<std::pair<int, int>> inversions;
    std::vector<std::pair<int, int>> coinversions;
    std::vector<int> descents;
    std::vector<int> recoils;
};

inline LengthStats length_stats(const Perm& sigma)
{
    LengthStats s;
    s.inversions = inversions(sigma);
    s.coinversions = coinversions(sigma);
    s.length = static_cast<int>(s.inversions.size());
    s.descents = descents(sigma);
    s.recoils = recoils(sigma);
    return s;
}

// sigma * s_i swaps positions i, i+1.
inline Perm right_simple(Perm sigma, int i)
{
    std::swap(sigma[i - 1], sigma[i]);
    return sigma;
}

// s_i * sigma swaps values i, i+1.
inline Perm left_simple(Perm sigma, int i)
{
    for (int& v : sigma) {
        if (v == i)
            v = i + 1;
        else if (v == i + 1)
            v = i;
    }
    return sigma;
}

// s_{w1} s_{w2} ... s_{wk}
inline Perm evaluate(const Word& w, int n)
{
    Perm p = identity(n);
    for (int i : w) {
        if (i < 1 || i >= n)
            throw std::invalid_argument("generator index out of range");
        p = right_simple(std::move(p), i);
    }
    return p;
}

// Lexicographically smallest reduced word: peel off the smallest left descent.
inline Word reduced_word(const Perm& sigma)
{
    Word w;
    Perm p = sigma;
    const int n = static_cast<int>(p.size());
    std::vector<int> pos(n + 1);
    while (true) {
        for (int i = 0; i < n; ++i)
            pos[p[i]] = i;
        int found = 0;
        for (int v = 1; v < n; ++v)
            if (pos[v + 1] < pos[v]) {
                found = v;
                break;
            }
        if (!found)
            break;
        w.push_back(found);
        p = left_simple(std::move(p), found);
    }
    return w;
}

// Ties broken left to right.
template <class T>
Perm standardize(const std::vector<T>& u)
{
    std::vector<int> idx(u.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return u[a] < u[b]; });
    Perm r(u.size());
    for (size_t k = 0; k < idx.size(); ++k)
        r[idx[k]] = static_cast<int>(k) + 1;
    return r;
}

inline bool contains_pattern(const Perm& sigma, const Perm& mu)
{
    const int n = static_cast<int>(sigma.size()), k = static_cast<int>(mu.size());
    if (k > n)
        return false;
    if (k == 0)
        return true;
    std::vector<int> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    std::vector<int> sub(k);
    while (true) {
        for (int j = 0; j < k; ++j)
            sub[j] = sigma[sel[j]];
        if (standardize(sub) == mu)
            return true;
        int j = k - 1;
        while (j >= 0 && sel[j] == n - k + j)
            --j;
        if (j < 0)
            return false;
        ++sel[j];
        for (int t = j + 1; t < k; ++t)
            sel[t] = sel[t - 1] + 1;
    }
}

enum class Side { right, left };

inline Perm apply_transposition(Perm sigma, int a, int b, Side side)
{
    const int n = static_cast<int>(sigma.size());
    if (a < 1 || b > n || a >= b)
        throw std::invalid_argument("transposition out of range");
    if (side == Side::right) {
        std::swap(sigma[a - 1], sigma[b - 1]);
    } else {
        for (int& v : sigma) {
            if (v == a)
                v = b;
            else if (v == b)
                v = a;
        }
    }
    return sigma;
}

using Cycle = std::vector<int>;

// Each cycle starts at its smallest element; fixed points included.
inline std::vector<Cycle> cycle_decomposition(const Perm& sigma)
{
    std::vector<Cycle> cycles;
    std::vector<char> seen(sigma.size() + 1, 0);
    for (int s = 1; s <= static_cast<int>(sigma.size()); ++s) {
        if (seen[s])
            continue;
        Cycle c;
        for (int x = s; !seen[x]; x = sigma[x - 1]) {
            seen[x] = 1;
            c.push_back(x);
        }
        cycles.push_back(std::move(c));
    }
    return cycles;
}

inline Perm from_cycles(const std::vector<Cycle>& cycles, int n)
{
    Perm p = identity(n);
    for (const auto& c : cycles)
        for (size_t j = 0; j < c.size(); ++j)
            p[c[j] - 1] = c[(j + 1) % c.size()];
    return p;
}

inline std::string to_string(const Perm& p)
{
    std::string s;
    if (p.size() <= 9) {
        for (int v : p)
            s += static_cast<char>('0' + v);
        return s;
    }
    s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

inline std::string cycles_to_string(const std::vector<Cycle>& cs)
{
    std::string s;
    for (const auto& c : cs) {
        s += "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(c[i]);
        }
        s += ")";
    }
    return s;
}

// Accepts "523461" or "[10,2,...]"; digit strings give words, not necessarily permutations.
inline Word parse_word(const std::string& text)
{
    Word w;
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    if (!t.empty() && t.front() == '[') {
        if (t.back() != ']')
            throw std::invalid_argument("unterminated list: " + text);
        std::stringstream ss(t.substr(1, t.size() - 2));
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                w.push_back(std::stoi(item));
        return w;
    }
    for (char c : t) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad permutation text: " + text);
        w.push_back(c - '0');
    }
    return w;
}

inline Perm parse_perm(const std::string& text)
{
    Perm p = parse_word(text);
    require_perm(p);
    return p;
}

inline std::vector<Perm> all_perms(int n)
{
    std::vector<Perm> r;
    Perm p = identity(n);
    do
        r.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return r;
}

} // namespace algcomb
