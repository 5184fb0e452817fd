#pragma once

#include "perm.hpp"

#include <deque>
#include <optional>
#include <set>

namespace algcomb {

inline void require_same_size(const Perm& a, const Perm& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("size mismatch");
}

// Right order: inclusion of value-pair inversions; left order: position-pair inversions.
inline bool weak_leq(const Perm& sigma, const Perm& mu, Side side)
{
    require_same_size(sigma, mu);
    const size_t n = sigma.size();
    const Perm s = side == Side::right ? inverse(sigma) : sigma;
    const Perm m = side == Side::right ? inverse(mu) : mu;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (s[i] > s[j] && m[i] < m[j])
                return false;
    return true;
}

using Key = std::vector<std::vector<int>>;

inline Key key(const Perm& sigma)
{
    Key k;
    std::vector<int> col;
    for (int v : sigma) {
        col.insert(std::upper_bound(col.begin(), col.end(), v, std::greater<int>()), v);
        k.push_back(col);
    }
    return k;
}

inline std::string key_to_string(const Key& k)
{
    std::string s;
    for (size_t j = 0; j < k.size(); ++j) {
        if (j)
            s += " | ";
        for (size_t i = 0; i < k[j].size(); ++i) {
            if (k[j][i] > 9 && i)
                s += ",";
            s += std::to_string(k[j][i]);
        }
    }
    return s;
}

inline bool key_leq(const Key& a, const Key& b)
{
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t i = 0; i < a[j].size(); ++i)
            if (a[j][i] > b[j][i])
                return false;
    return true;
}

inline bool bruhat_leq(const Perm& sigma, const Perm& mu)
{
    require_same_size(sigma, mu);
    return key_leq(key(sigma), key(mu));
}

// (a,b) with sigma(a) < sigma(b) and no value of sigma strictly between at positions in (a,b).
inline bool is_bruhat_transposition(const Perm& sigma, int a, int b)
{
    const int lo = sigma[a - 1], hi = sigma[b - 1];
    if (lo > hi)
        return false;
    for (int c = a + 1; c < b; ++c)
        if (sigma[c - 1] > lo && sigma[c - 1] < hi)
            return false;
    return true;
}

inline std::vector<Perm> bruhat_successors(const Perm& sigma)
{
    std::vector<Perm> r;
    const int n = static_cast<int>(sigma.size());
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (is_bruhat_transposition(sigma, a, b))
                r.push_back(apply_transposition(sigma, a, b, Side::right));
    return r;
}

inline std::vector<Perm> bruhat_predecessors(const Perm& sigma)
{
    std::vector<Perm> r;
    const int n = static_cast<int>(sigma.size());
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Perm p = apply_transposition(sigma, a, b, Side::right);
            if (is_bruhat_transposition(p, a, b))
                r.push_back(std::move(p));
        }
    return r;
}

namespace detail {

inline void sort_block(Perm& p, int from, int to, bool decreasing)
{
    if (decreasing)
        std::sort(p.begin() + from, p.begin() + to, std::greater<int>());
    else
        std::sort(p.begin() + from, p.begin() + to);
}

} // namespace detail

// rho^k (min) or rho-tilde^k (max): sort positions 1..k and k+1..n.
inline Perm project_positions(Perm sigma, int k, bool max = false)
{
    const int n = static_cast<int>(sigma.size());
    if (k < 1 || k >= n)
        throw std::invalid_argument("cut out of range");
    detail::sort_block(sigma, 0, k, max);
    detail::sort_block(sigma, k, n, max);
    return sigma;
}

// ^r rho: values <= r and values > r are each sorted within their own positions.
inline Perm project_values(const Perm& sigma, int r, bool max = false)
{
    const int n = static_cast<int>(sigma.size());
    if (r < 1 || r >= n)
        throw std::invalid_argument("cut out of range");
    return inverse(project_positions(inverse(sigma), r, max));
}

inline Perm project_both(const Perm& sigma, int r, int k, bool max = false)
{
    return project_values(project_positions(sigma, k, max), r, max);
}

struct Sup {
    Key triangle;
    std::optional<Perm> perm;
};

inline bool is_monotone_triangle(const Key& t)
{
    for (size_t j = 0; j < t.size(); ++j) {
        if (t[j].size() != j + 1)
            return false;
        for (size_t i = 0; i + 1 < t[j].size(); ++i)
            if (t[j][i] <= t[j][i + 1])
                return false;
        if (j + 1 < t.size())
            for (size_t i = 0; i < t[j].size(); ++i)
                if (t[j][i] > t[j + 1][i] || t[j][i] < t[j + 1][i + 1])
                    return false;
    }
    return true;
}

inline std::optional<Perm> key_to_perm(const Key& t)
{
    Perm p;
    std::vector<int> prev;
    for (const auto& col : t) {
        std::vector<int> added;
        std::set_difference(col.begin(), col.end(), prev.begin(), prev.end(), std::back_inserter(added),
            std::greater<int>());
        if (added.size() != 1 || col.size() != prev.size() + 1)
            return std::nullopt;
        std::vector<int> check;
        std::set_difference(prev.begin(), prev.end(), col.begin(), col.end(), std::back_inserter(check),
            std::greater<int>());
        if (!check.empty())
            return std::nullopt;
        p.push_back(added[0]);
        prev = col;
    }
    return p;
}

inline Sup bruhat_sup(const std::vector<Perm>& s)
{
    if (s.empty())
        throw std::invalid_argument("sup of an empty set");
    Key t = key(s[0]);
    for (size_t i = 1; i < s.size(); ++i) {
        require_same_size(s[0], s[i]);
        Key k = key(s[i]);
        for (size_t j = 0; j < t.size(); ++j)
            for (size_t r = 0; r < t[j].size(); ++r)
                t[j][r] = std::max(t[j][r], k[j][r]);
    }
    return {t, key_to_perm(t)};
}

// Graded BFS from sigma, bounded above by nu.
inline std::set<Perm> bruhat_interval(const Perm& sigma, const Perm& nu)
{
    std::set<Perm> seen;
    if (!bruhat_leq(sigma, nu))
        return seen;
    const Key top = key(nu);
    std::deque<Perm> queue{sigma};
    seen.insert(sigma);
    while (!queue.empty()) {
        Perm p = std::move(queue.front());
        queue.pop_front();
        for (auto& q : bruhat_successors(p))
            if (!seen.count(q) && key_leq(key(q), top)) {
                seen.insert(q);
                queue.push_back(std::move(q));
            }
    }
    return seen;
}

namespace detail {

// Max of [sigma, nu] within sigma(S_k x S_{n-k}).
inline Perm coset_max_single(const Perm& sigma, const Perm& nu, int k)
{
    const int n = static_cast<int>(sigma.size());
    std::set<int> left(sigma.begin(), sigma.begin() + k), right(sigma.begin() + k, sigma.end());
    Perm r(n);
    for (int i = 0; i < k; ++i) {
        auto it = left.upper_bound(nu[i]);
        if (it == left.begin())
            throw std::invalid_argument("coset construction failed");
        --it;
        r[i] = *it;
        left.erase(it);
    }
    for (int j = n - 1; j >= k; --j) {
        auto it = right.lower_bound(nu[j]);
        if (it == right.end())
            throw std::invalid_argument("coset construction failed");
        r[j] = *it;
        right.erase(it);
    }
    return r;
}

} // namespace detail

// Unique maximal element of [sigma, nu] intersected with the parabolic coset of sigma cut at `cuts`.
inline Perm coset_interval_max(const Perm& sigma, const Perm& nu, const std::vector<int>& cuts)
{
    require_same_size(sigma, nu);
    if (!bruhat_leq(sigma, nu))
        throw std::invalid_argument("coset_interval_max: sigma is not below nu");
    const int n = static_cast<int>(sigma.size());
    for (int k : cuts)
        if (k < 1 || k >= n)
            throw std::invalid_argument("cut out of range");
    Perm cur = nu;
    while (true) {
        Perm next = cur;
        for (int k : cuts)
            next = detail::coset_max_single(sigma, next, k);
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

inline Perm coset_interval_max(const Perm& sigma, const Perm& nu, int k)
{
    return coset_interval_max(sigma, nu, std::vector<int>{k});
}

} // namespace algcomb
