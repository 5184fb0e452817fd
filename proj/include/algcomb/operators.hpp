#pragma once

#include "poly.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>

namespace algcomb {

enum class RootType { A, B, C, D };
enum class OpKind { s, d, pi, pihat, custom };

struct OperatorSpec {
    OpKind kind = OpKind::d;
    int index = 1;
    RootType type = RootType::A;
    std::string name;
};

using MonomialImage = std::vector<std::pair<Exponent, Rational>>;

namespace detail {

struct RootString {
    Exponent r;
    int m = 0;
    Exponent d;
};

inline size_t needed_vars(int i, RootType t) { return t == RootType::A ? i + 1 : i; }

inline void check_index(int i, RootType t)
{
    if (i < 1 || (t == RootType::D && i < 2))
        throw std::invalid_argument("operator index out of range for its type");
}

// Root r, pairing m = <v, r^vee>, degree shift d for the operator at index i.
inline RootString root_string(const Exponent& v, int i, RootType t)
{
    RootString s;
    const size_t n = v.size();
    s.r.assign(n, 0);
    s.d.assign(n, 0);
    const int a = i - 1;
    switch (t) {
    case RootType::A:
        s.r[a] = 1;
        s.r[a + 1] = -1;
        s.m = v[a] - v[a + 1];
        s.d[a] = 1;
        break;
    case RootType::B:
        s.r[a] = 1;
        s.m = 2 * v[a];
        s.d[a] = 1;
        break;
    case RootType::C:
        s.r[a] = 2;
        s.m = v[a];
        s.d[a] = 1;
        break;
    case RootType::D:
        s.r[a - 1] = 1;
        s.r[a] = 1;
        s.m = v[a - 1] + v[a];
        s.d[a] = 1;
        break;
    }
    return s;
}

inline Exponent root_shift(const Exponent& v, const Exponent& d, int dsign, const Exponent& r, int k)
{
    Exponent w = v;
    for (size_t j = 0; j < w.size(); ++j)
        w[j] += dsign * d[j] + k * r[j];
    return w;
}

inline MonomialImage reflect(const Exponent& v, int i, RootType t)
{
    auto s = root_string(v, i, t);
    return {{root_shift(v, s.d, 0, s.r, -s.m), Rational(1)}};
}

inline MonomialImage divided(const Exponent& v, int i, RootType t)
{
    auto s = root_string(v, i, t);
    MonomialImage out;
    if (s.m > 0)
        for (int k = 0; k < s.m; ++k)
            out.emplace_back(root_shift(v, s.d, -1, s.r, -k), Rational(1));
    else if (s.m < 0)
        for (int k = 1; k <= -s.m; ++k)
            out.emplace_back(root_shift(v, s.d, -1, s.r, k), Rational(-1));
    return out;
}

inline MonomialImage isobaric(const Exponent& v, int i, RootType t, bool hat)
{
    auto s = root_string(v, i, t);
    MonomialImage out;
    if (s.m >= 0)
        for (int k = hat ? 1 : 0; k <= s.m; ++k)
            out.emplace_back(root_shift(v, s.d, 0, s.r, -k), Rational(1));
    else {
        for (int k = 1; k <= -s.m - 1; ++k)
            out.emplace_back(root_shift(v, s.d, 0, s.r, k), Rational(-1));
        if (hat)
            out.emplace_back(v, Rational(-1));
    }
    return out;
}

} // namespace detail

using OperatorRule = std::function<MonomialImage(const Exponent&, int)>;

// Named per-monomial linear rules usable in operator words.
class OperatorRegistry {
public:
    static OperatorRegistry& instance()
    {
        static OperatorRegistry r;
        return r;
    }

    void add(const std::string& name, OperatorRule rule, size_t vars_offset = 1)
    {
        std::unique_lock lock(mutex_);
        if (rules_.count(name))
            throw std::invalid_argument("operator already registered: " + name);
        rules_.emplace(name, Entry{std::move(rule), vars_offset});
    }

    bool contains(const std::string& name) const
    {
        std::shared_lock lock(mutex_);
        return rules_.count(name) > 0;
    }

    std::pair<OperatorRule, size_t> get(const std::string& name) const
    {
        std::shared_lock lock(mutex_);
        auto it = rules_.find(name);
        if (it == rules_.end())
            throw std::invalid_argument("unknown operator: " + name);
        return {it->second.rule, it->second.vars_offset};
    }

private:
    struct Entry {
        OperatorRule rule;
        size_t vars_offset;
    };
    mutable std::shared_mutex mutex_;
    std::map<std::string, Entry> rules_;
};

inline void register_operator(const std::string& name, OperatorRule rule, size_t vars_offset = 1)
{
    OperatorRegistry::instance().add(name, std::move(rule), vars_offset);
}

inline MonomialImage monomial_image(const OperatorSpec& op, const Exponent& v)
{
    switch (op.kind) {
    case OpKind::s:
        return detail::reflect(v, op.index, op.type);
    case OpKind::d:
        return detail::divided(v, op.index, op.type);
    case OpKind::pi:
        return detail::isobaric(v, op.index, op.type, false);
    case OpKind::pihat:
        return detail::isobaric(v, op.index, op.type, true);
    case OpKind::custom:
        return OperatorRegistry::instance().get(op.name).first(v, op.index);
    }
    return {};
}

template <class C>
Polynomial<C> apply(const Polynomial<C>& f, const OperatorSpec& op)
{
    size_t need = 0;
    if (op.kind == OpKind::custom) {
        need = op.index + OperatorRegistry::instance().get(op.name).second;
    } else {
        detail::check_index(op.index, op.type);
        need = detail::needed_vars(op.index, op.type);
    }
    Polynomial<C> g = f;
    g.pad(need);
    Polynomial<C> r;
    r.pad(g.nvars());
    for (const auto& [v, c] : g.terms())
        for (const auto& [w, q] : monomial_image(op, v))
            r.add_term(w, q == 1 ? c : C(q) * c);
    return r;
}

template <class C>
Polynomial<C> apply_word(Polynomial<C> f, const std::vector<OperatorSpec>& word)
{
    for (const auto& op : word)
        f = apply(f, op);
    return f;
}

inline OperatorSpec op_s(int i, RootType t = RootType::A) { return {OpKind::s, i, t, {}}; }
inline OperatorSpec op_d(int i, RootType t = RootType::A) { return {OpKind::d, i, t, {}}; }
inline OperatorSpec op_pi(int i, RootType t = RootType::A) { return {OpKind::pi, i, t, {}}; }
inline OperatorSpec op_pihat(int i, RootType t = RootType::A) { return {OpKind::pihat, i, t, {}}; }
inline OperatorSpec op_custom(const std::string& name, int i) { return {OpKind::custom, i, RootType::A, name}; }

inline std::vector<OperatorSpec> word_of(OpKind kind, const std::vector<int>& idx, RootType t = RootType::A)
{
    std::vector<OperatorSpec> w;
    for (int i : idx)
        w.push_back({kind, i, t, {}});
    return w;
}

inline char type_char(RootType t) { return "ABCD"[static_cast<int>(t)]; }

inline RootType parse_type(char c)
{
    switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return RootType::A;
    case 'B': return RootType::B;
    case 'C': return RootType::C;
    case 'D': return RootType::D;
    }
    throw std::invalid_argument(std::string("unknown root type ") + c);
}

// Tokens: s1, d2, pi3, pihat1, optional type suffix (d3B); custom rules as name:index.
inline OperatorSpec parse_operator(const std::string& tok)
{
    auto colon = tok.find(':');
    if (colon != std::string::npos)
        return op_custom(tok.substr(0, colon), std::stoi(tok.substr(colon + 1)));
    size_t p = 0;
    while (p < tok.size() && std::isalpha(static_cast<unsigned char>(tok[p])))
        ++p;
    std::string head = tok.substr(0, p);
    size_t q = p;
    while (q < tok.size() && std::isdigit(static_cast<unsigned char>(tok[q])))
        ++q;
    if (q == p)
        throw std::invalid_argument("missing operator index: " + tok);
    OperatorSpec op;
    op.index = std::stoi(tok.substr(p, q - p));
    if (q < tok.size()) {
        if (q + 1 != tok.size())
            throw std::invalid_argument("bad operator token: " + tok);
        op.type = parse_type(tok[q]);
    }
    if (head == "s")
        op.kind = OpKind::s;
    else if (head == "d")
        op.kind = OpKind::d;
    else if (head == "pi")
        op.kind = OpKind::pi;
    else if (head == "pihat")
        op.kind = OpKind::pihat;
    else
        throw std::invalid_argument("unknown operator: " + tok);
    return op;
}

inline std::vector<OperatorSpec> parse_operator_word(const std::string& text)
{
    std::vector<OperatorSpec> w;
    std::string tok;
    for (char c : text + ",") {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!tok.empty())
                w.push_back(parse_operator(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    return w;
}

} // namespace algcomb
