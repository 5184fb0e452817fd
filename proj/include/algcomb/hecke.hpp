#pragma once

#include "orders.hpp"

#include <map>

namespace algcomb {

enum class HeckeBasis { K, KHat };
enum class HeckeOp { pi, pihat };

struct HeckeSum {
    HeckeBasis basis = HeckeBasis::K;
    std::map<Perm, long long> terms;

    void add(const Perm& p, long long c)
    {
        if (c == 0)
            return;
        auto [it, fresh] = terms.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0)
                terms.erase(it);
        }
    }

    HeckeSum& operator+=(const HeckeSum& o)
    {
        if (o.basis != basis)
            throw std::invalid_argument("basis mismatch");
        for (const auto& [p, c] : o.terms)
            add(p, c);
        return *this;
    }

    std::set<Perm> support() const
    {
        std::set<Perm> s;
        for (const auto& [p, c] : terms)
            s.insert(p);
        return s;
    }

    friend bool operator==(const HeckeSum& a, const HeckeSum& b) { return a.basis == b.basis && a.terms == b.terms; }
};

inline HeckeSum hecke_element(HeckeBasis b, const Perm& p)
{
    HeckeSum h{b, {}};
    h.add(p, 1);
    return h;
}

inline std::string to_string(const HeckeSum& h)
{
    if (h.terms.empty())
        return "0";
    const std::string letter = h.basis == HeckeBasis::K ? "K" : "Kh";
    std::string s;
    bool first = true;
    for (const auto& [p, c] : h.terms) {
        const long long a = c < 0 ? -c : c;
        if (first)
            s += c < 0 ? "-" : "+";
        else
            s += c < 0 ? " - " : " + ";
        if (a != 1)
            s += std::to_string(a) + "*";
        s += letter + "(" + to_string(p) + ")";
        first = false;
    }
    return s;
}

inline std::set<Perm> bruhat_upper_set(const Perm& sigma)
{
    return bruhat_interval(sigma, longest(static_cast<int>(sigma.size())));
}

// Khat_s = sum_{m >= s} (-1)^{l(m)-l(s)} K_m ; K_s = sum_{m >= s} Khat_m
inline HeckeSum change_basis(const HeckeSum& h)
{
    HeckeSum out{h.basis == HeckeBasis::K ? HeckeBasis::KHat : HeckeBasis::K, {}};
    for (const auto& [s, c] : h.terms) {
        const int ls = length(s);
        for (const auto& m : bruhat_upper_set(s)) {
            if (h.basis == HeckeBasis::K)
                out.add(m, c);
            else
                out.add(m, (length(m) - ls) % 2 ? -c : c);
        }
    }
    return out;
}

inline HeckeSum act(const HeckeSum& h, HeckeOp op, int i)
{
    if ((op == HeckeOp::pi) != (h.basis == HeckeBasis::K))
        throw std::invalid_argument("operator kind does not match the basis");
    HeckeSum out{h.basis, {}};
    for (const auto& [s, c] : h.terms) {
        if (i < 1 || i >= static_cast<int>(s.size()))
            throw std::invalid_argument("operator index out of range");
        if (s[i - 1] > s[i])
            out.add(right_simple(s, i), c);
        else
            out.add(s, op == HeckeOp::pi ? c : -c);
    }
    return out;
}

inline HeckeSum act_word(HeckeSum h, HeckeOp op, const Word& w)
{
    for (int i : w)
        h = act(h, op, i);
    return h;
}

using Transposition = std::pair<int, int>;

struct PieriWord {
    Perm sigma;
    int k = 0;
    std::vector<Transposition> letters;
};

enum class PieriOrder { standard, alternative };

// Bruhat k-transpositions (a <= k < b) of sigma.
inline PieriWord build_W(const Perm& sigma, int k, PieriOrder order = PieriOrder::standard)
{
    const int n = static_cast<int>(sigma.size());
    if (k < 1 || k >= n)
        throw std::invalid_argument("cut out of range");
    PieriWord W{sigma, k, {}};
    for (int a = 1; a <= k; ++a)
        for (int b = k + 1; b <= n; ++b)
            if (is_bruhat_transposition(sigma, a, b))
                W.letters.emplace_back(a, b);
    if (order == PieriOrder::standard)
        std::sort(W.letters.begin(), W.letters.end(), [&](const Transposition& x, const Transposition& y) {
            if (sigma[x.first - 1] != sigma[y.first - 1])
                return sigma[x.first - 1] > sigma[y.first - 1];
            return sigma[x.second - 1] < sigma[y.second - 1];
        });
    else
        std::sort(W.letters.begin(), W.letters.end(), [](const Transposition& x, const Transposition& y) {
            if (x.second != y.second)
                return x.second > y.second;
            return x.first < y.first;
        });
    return W;
}

// Incompatible iff w holds (a,c) before (b,d), a < b < c < d, with (a,d) in W but not in w.
inline bool is_compatible(const std::vector<Transposition>& w, const PieriWord& W)
{
    auto in = [](const std::vector<Transposition>& list, const Transposition& t) {
        return std::find(list.begin(), list.end(), t) != list.end();
    };
    for (size_t p = 0; p < w.size(); ++p)
        for (size_t q = p + 1; q < w.size(); ++q) {
            const auto [a, c] = w[p];
            const auto [b, d] = w[q];
            if (a < b && b < c && c < d) {
                const Transposition ad{a, d};
                if (in(W.letters, ad) && !in(w, ad))
                    return false;
            }
        }
    return true;
}

inline Perm apply_transpositions(Perm p, const std::vector<Transposition>& w)
{
    for (const auto& [a, b] : w)
        std::swap(p[a - 1], p[b - 1]);
    return p;
}

inline HeckeSum pieri_set(const Perm& sigma, int k)
{
    const PieriWord W = build_W(sigma, k);
    const size_t m = W.letters.size();
    if (m > 30)
        throw std::invalid_argument("pieri word too long");
    HeckeSum out{HeckeBasis::K, {}};
    std::vector<Transposition> w;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        w.clear();
        for (size_t j = 0; j < m; ++j)
            if (mask >> j & 1)
                w.push_back(W.letters[j]);
        if (is_compatible(w, W))
            out.add(apply_transpositions(sigma, w), w.size() % 2 ? -1 : 1);
    }
    return out;
}

// Signed sum over the subwords of `list` that are saturated Bruhat chains from sigma.
inline HeckeSum chain_sum(const Perm& sigma, const std::vector<Transposition>& list)
{
    HeckeSum out{HeckeBasis::K, {}};
    struct Frame {
        size_t next;
        Perm p;
        int len;
    };
    std::vector<Frame> stack{{0, sigma, 0}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        out.add(f.p, f.len % 2 ? -1 : 1);
        for (size_t j = f.next; j < list.size(); ++j) {
            const auto [a, b] = list[j];
            if (is_bruhat_transposition(f.p, a, b))
                stack.push_back({j + 1, apply_transpositions(f.p, {list[j]}), f.len + 1});
        }
    }
    return out;
}

inline Perm eta(const Perm& sigma, int k)
{
    const int n = static_cast<int>(sigma.size());
    if (k < 0 || k > n)
        throw std::invalid_argument("cut out of range");
    if (k == 0 || k == n)
        return sigma;
    return apply_transpositions(sigma, build_W(sigma, k).letters);
}

struct IntervalReport {
    bool ok = false;
    Perm top;
    size_t terms = 0;
    std::string message;
};

inline IntervalReport verify_interval(const Perm& sigma, int k)
{
    IntervalReport r;
    r.top = eta(sigma, k);
    const HeckeSum e = pieri_set(sigma, k);
    r.terms = e.terms.size();
    const auto interval = bruhat_interval(sigma, r.top);
    if (interval != e.support()) {
        r.message = "support differs from the Bruhat interval";
        return r;
    }
    const int ls = length(sigma);
    for (const auto& [m, c] : e.terms)
        if (c != ((length(m) - ls) % 2 ? -1 : 1)) {
            r.message = "wrong sign at " + to_string(m);
            return r;
        }
    r.ok = true;
    r.message = "OK";
    return r;
}

// c_k carries eta(sigma, k-1) to eta(sigma, k) by right multiplication.
inline std::vector<Cycle> eta_cycles(const Perm& sigma)
{
    const int n = static_cast<int>(sigma.size());
    std::vector<Cycle> out;
    for (int k = 1; k <= n; ++k) {
        const Perm rho = compose(inverse(eta(sigma, k - 1)), eta(sigma, k));
        Cycle found;
        int nontrivial = 0;
        for (auto& c : cycle_decomposition(rho)) {
            if (c.size() > 1)
                ++nontrivial;
            if (std::find(c.begin(), c.end(), k) != c.end())
                found = c;
        }
        if (nontrivial > 1 || (nontrivial == 1 && found.size() == 1))
            throw std::logic_error("step between consecutive eta is not a single cycle through k");
        out.push_back(found);
    }
    return out;
}

// Concatenation W_m ... W_1 of the full parabolic transposition lists.
inline std::vector<Transposition> parabolic_list(int n, const std::vector<int>& cuts)
{
    for (size_t j = 0; j < cuts.size(); ++j)
        if (cuts[j] < 1 || cuts[j] >= n || (j && cuts[j] <= cuts[j - 1]))
            throw std::invalid_argument("cuts must be increasing within 1..n-1");
    std::vector<Transposition> list;
    for (size_t i = cuts.size(); i-- > 0;) {
        const int lo = i ? cuts[i - 1] + 1 : 1;
        for (int a = lo; a <= cuts[i]; ++a)
            for (int b = n; b > cuts[i]; --b)
                list.emplace_back(a, b);
    }
    return list;
}

inline HeckeSum parabolic_pieri(const Perm& sigma, const std::vector<int>& cuts)
{
    return chain_sum(sigma, parabolic_list(static_cast<int>(sigma.size()), cuts));
}

// Maximal element of the parabolic coset of sigma: each block sorted decreasingly.
inline Perm coset_top(Perm sigma, const std::vector<int>& cuts)
{
    int from = 0;
    for (size_t j = 0; j <= cuts.size(); ++j) {
        const int to = j < cuts.size() ? cuts[j] : static_cast<int>(sigma.size());
        std::sort(sigma.begin() + from, sigma.begin() + to, std::greater<int>());
        from = to;
    }
    return sigma;
}

// K_omega pihat_{omega zeta} pi_{zeta^{-1} sigma} in the formal module.
inline HeckeSum pieri_by_operators(const Perm& sigma, const std::vector<int>& cuts)
{
    const int n = static_cast<int>(sigma.size());
    const Perm omega = longest(n);
    const Perm zeta = coset_top(sigma, cuts);
    HeckeSum h = hecke_element(HeckeBasis::KHat, omega);
    h = act_word(h, HeckeOp::pihat, reduced_word(compose(omega, zeta)));
    h = change_basis(h);
    return act_word(h, HeckeOp::pi, reduced_word(compose(inverse(zeta), sigma)));
}

} // namespace algcomb
