#pragma once

#include "operators.hpp"
#include "perm.hpp"

#include <mutex>
#include <optional>
#include <tuple>

namespace algcomb {

enum class Basis { Y, YDouble, GPos, GNeg, GDouble, K, KHat };

inline std::string basis_letter(Basis b)
{
    switch (b) {
    case Basis::Y:
    case Basis::YDouble:
        return "Y";
    case Basis::GPos:
    case Basis::GNeg:
    case Basis::GDouble:
        return "G";
    case Basis::K:
        return "K";
    case Basis::KHat:
        return "Kh";
    }
    return "?";
}

inline std::string basis_name(Basis b)
{
    switch (b) {
    case Basis::Y: return "Y";
    case Basis::YDouble: return "Y-double";
    case Basis::GPos: return "G-pos";
    case Basis::GNeg: return "G-neg";
    case Basis::GDouble: return "G-double";
    case Basis::K: return "K";
    case Basis::KHat: return "Khat";
    }
    return "?";
}

inline Basis parse_basis(const std::string& s)
{
    if (s == "Y") return Basis::Y;
    if (s == "Y-double" || s == "Ydouble") return Basis::YDouble;
    if (s == "G" || s == "G-pos" || s == "Gpos") return Basis::GPos;
    if (s == "G-neg" || s == "Gneg") return Basis::GNeg;
    if (s == "G-double" || s == "Gdouble") return Basis::GDouble;
    if (s == "K") return Basis::K;
    if (s == "Khat" || s == "K-hat") return Basis::KHat;
    throw std::invalid_argument("unknown basis: " + s);
}

inline bool is_double(Basis b) { return b == Basis::YDouble || b == Basis::GDouble; }

// Formal sum of basis elements.
struct BasisPolynomial {
    Basis basis = Basis::Y;
    RootType type = RootType::A;
    std::map<Exponent, Rational> terms;

    void add(const Exponent& v, const Rational& c)
    {
        if (sgn(c) == 0)
            return;
        auto [it, fresh] = terms.emplace(v, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms.erase(it);
        }
    }

    friend bool operator==(const BasisPolynomial& a, const BasisPolynomial& b)
    {
        return a.basis == b.basis && a.type == b.type && a.terms == b.terms;
    }
};

inline BasisPolynomial basis_element(Basis b, const Exponent& v, RootType t = RootType::A)
{
    BasisPolynomial p{b, t, {}};
    p.add(v, Rational(1));
    return p;
}

inline std::string to_string(const BasisPolynomial& p)
{
    if (p.terms.empty())
        return "0";
    std::string s;
    bool first = true;
    const std::string letter = basis_letter(p.basis);
    for (const auto& [v, c] : p.terms) {
        auto [neg, body] = detail::signed_coeff(c);
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        s += body;
        s += letter;
        s += "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i)
                s += ", ";
            s += std::to_string(v[i]);
        }
        s += ")";
        first = false;
    }
    return s;
}

namespace detail {

inline bool weakly_decreasing(const Exponent& v)
{
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1])
            return false;
    return true;
}

inline int leftmost_ascent(const Exponent& v)
{
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1])
            return static_cast<int>(i) + 1;
    return 0;
}

// Code step towards dominance: (.., v_{i+1} + 1, v_i, ..).
inline Exponent code_step(Exponent v, int i)
{
    const int a = v[i - 1], b = v[i];
    v[i - 1] = b + 1;
    v[i] = a;
    return v;
}

// ((1 - x_{i+1}) f) d_i
template <class C>
Polynomial<C> grothendieck_step(const Polynomial<C>& f, int i)
{
    Polynomial<C> g = f;
    g.pad(i + 1);
    Polynomial<C> shift;
    for (const auto& [v, c] : g.terms()) {
        Exponent w = v;
        w[i] += 1;
        shift.add_term(w, c);
    }
    return apply(g - shift, op_d(i));
}

template <class V>
class MemoCache {
public:
    std::optional<V> find(const std::tuple<int, int, Exponent>& k)
    {
        std::lock_guard lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }
    void store(const std::tuple<int, int, Exponent>& k, const V& v)
    {
        std::lock_guard lock(mutex_);
        map_.emplace(k, v);
    }
    void clear()
    {
        std::lock_guard lock(mutex_);
        map_.clear();
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, Exponent>, V> map_;
};

inline MemoCache<QPoly>& single_cache()
{
    static MemoCache<QPoly> c;
    return c;
}

inline MemoCache<DoublePoly>& double_cache()
{
    static MemoCache<DoublePoly> c;
    return c;
}

inline QPoly one_minus_inverse(int i, size_t n)
{
    Exponent v(n, 0);
    v[i - 1] = -1;
    return QPoly(Rational(1), n) - QPoly::monomial(v);
}

inline QPoly dominant_single(Basis b, const Exponent& v)
{
    const size_t n = v.size();
    if (b == Basis::GNeg) {
        QPoly r(Rational(1), n);
        for (size_t i = 0; i < n; ++i)
            r *= one_minus_inverse(static_cast<int>(i) + 1, n).pow(static_cast<unsigned>(v[i]));
        return r;
    }
    return QPoly::monomial(v);
}

inline DoublePoly dominant_double(Basis b, const Exponent& v)
{
    const size_t n = v.size();
    DoublePoly r(QPoly(Rational(1)), n);
    for (size_t i = 0; i < n; ++i)
        for (int j = 1; j <= v[i]; ++j) {
            const QPoly yj = QPoly::var(j);
            Exponent xi(n, 0);
            if (b == Basis::YDouble) {
                xi[i] = 1;
                r *= DoublePoly::monomial(xi, QPoly(Rational(1))) - DoublePoly(yj, n);
            } else {
                xi[i] = -1;
                r *= DoublePoly(QPoly(Rational(1)), n) - DoublePoly::monomial(xi, yj);
            }
        }
    return r;
}

inline void validate_index(Basis b, RootType t, const Exponent& v)
{
    if (b != Basis::K && b != Basis::KHat && t != RootType::A)
        throw std::invalid_argument(basis_name(b) + " is only defined in type A");
    if (t == RootType::A || b == Basis::Y || b == Basis::GPos || b == Basis::GNeg || is_double(b))
        for (int e : v)
            if (e < 0)
                throw std::invalid_argument("negative index entry for " + basis_name(b));
    if (t == RootType::D && v.size() < 2)
        throw std::invalid_argument("type D needs at least two variables");
}

} // namespace detail

// Expansion of a single (non-double) basis element on monomials.
inline QPoly expand(Basis b, const Exponent& v, RootType t = RootType::A)
{
    if (is_double(b))
        throw std::invalid_argument("use expand_double for double bases");
    detail::validate_index(b, t, v);
    const auto k = std::make_tuple(static_cast<int>(b), static_cast<int>(t), v);
    auto& cache = detail::single_cache();
    if (auto hit = cache.find(k))
        return *hit;

    QPoly r;
    const int n = static_cast<int>(v.size());
    const int i = detail::leftmost_ascent(v);
    const bool keys = b == Basis::K || b == Basis::KHat;
    const OpKind iso = b == Basis::KHat ? OpKind::pihat : OpKind::pi;
    if (i) {
        if (keys) {
            Exponent w = v;
            std::swap(w[i - 1], w[i]);
            r = apply(expand(b, w, t), OperatorSpec{iso, i, RootType::A, {}});
        } else {
            QPoly up = expand(b, detail::code_step(v, i), t);
            if (b == Basis::Y)
                r = apply(up, op_d(i));
            else if (b == Basis::GNeg)
                r = apply(up, op_pi(i));
            else
                r = detail::grothendieck_step(up, i);
        }
    } else if (keys && (t == RootType::B || t == RootType::C) && n > 0 && v[n - 1] < 0) {
        Exponent w = v;
        w[n - 1] = -w[n - 1];
        r = apply(expand(b, w, t), OperatorSpec{iso, n, t, {}});
    } else if (keys && t == RootType::D && v[n - 2] + v[n - 1] < 0) {
        Exponent w = v;
        w[n - 2] = -v[n - 1];
        w[n - 1] = -v[n - 2];
        r = apply(expand(b, w, t), OperatorSpec{iso, n, t, {}});
    } else {
        r = detail::dominant_single(b, v);
    }
    r.pad(v.size());
    cache.store(k, r);
    return r;
}

inline DoublePoly expand_double(Basis b, const Exponent& v)
{
    if (!is_double(b))
        throw std::invalid_argument("expand_double needs a double basis");
    detail::validate_index(b, RootType::A, v);
    const auto k = std::make_tuple(static_cast<int>(b), 0, v);
    auto& cache = detail::double_cache();
    if (auto hit = cache.find(k))
        return *hit;
    DoublePoly r;
    if (const int i = detail::leftmost_ascent(v)) {
        DoublePoly up = expand_double(b, detail::code_step(v, i));
        r = apply(up, b == Basis::YDouble ? op_d(i) : op_pi(i));
    } else {
        r = detail::dominant_double(b, v);
    }
    r.pad(v.size());
    cache.store(k, r);
    return r;
}

inline QPoly expand(const BasisPolynomial& p)
{
    QPoly r;
    for (const auto& [v, c] : p.terms)
        r += c * expand(p.basis, v, p.type);
    return r;
}

inline bool is_convertible(Basis b) { return b == Basis::Y || b == Basis::GPos || b == Basis::K || b == Basis::KHat; }

// Greedy elimination on the lexicographically smallest monomial.
inline BasisPolynomial to_basis(const QPoly& f, Basis b, size_t max_steps = 2000000)
{
    if (!is_convertible(b))
        throw std::invalid_argument("no conversion into " + basis_name(b));
    if (f.has_negative_exponent())
        throw std::invalid_argument("conversion needs nonnegative exponents");
    BasisPolynomial out{b, RootType::A, {}};
    QPoly rest = f;
    const size_t n = f.nvars();
    for (size_t step = 0; !rest.is_zero(); ++step) {
        if (step >= max_steps)
            throw std::runtime_error("basis conversion did not terminate");
        const auto [u, c] = *rest.terms().begin();
        out.add(u, c);
        QPoly e = expand(b, u);
        e.pad(n);
        rest -= c * e;
    }
    return out;
}

inline BasisPolynomial convert(const BasisPolynomial& p, Basis target)
{
    if (p.basis == target)
        return p;
    return to_basis(expand(p), target);
}

inline BasisPolynomial basis_product(const BasisPolynomial& a, const BasisPolynomial& b)
{
    if (a.basis != b.basis || a.type != b.type)
        throw std::invalid_argument("basis mismatch in product");
    return to_basis(expand(a) * expand(b), a.basis);
}

// Index-level rules where the operator acts by reordering; otherwise expand, apply, convert.
inline BasisPolynomial operator_on_basis(const BasisPolynomial& p, const OperatorSpec& op)
{
    BasisPolynomial out{p.basis, p.type, {}};
    const bool typeA = p.type == RootType::A && op.type == RootType::A && op.kind != OpKind::custom;
    const int i = op.index;
    auto direct = [&]() -> bool {
        if (!typeA)
            return false;
        if (p.basis == Basis::Y && op.kind == OpKind::d)
            return true;
        if (p.basis == Basis::GNeg && op.kind == OpKind::pi)
            return true;
        if ((p.basis == Basis::K || p.basis == Basis::KHat) && (op.kind == OpKind::pi || op.kind == OpKind::pihat))
            return true;
        return false;
    };
    if (!direct()) {
        if (!is_convertible(p.basis))
            throw std::invalid_argument("operator has no index rule on " + basis_name(p.basis));
        return to_basis(apply(expand(p), op), p.basis);
    }
    for (const auto& [key, c] : p.terms) {
        Exponent v = key;
        if (static_cast<int>(v.size()) < i + 1)
            v.resize(i + 1, 0);
        const int a = v[i - 1], b = v[i];
        Exponent sw = v;
        std::swap(sw[i - 1], sw[i]);
        switch (p.basis) {
        case Basis::Y:
            if (a > b) {
                Exponent w = v;
                w[i - 1] = b;
                w[i] = a - 1;
                out.add(w, c);
            }
            break;
        case Basis::GNeg:
            if (a > b) {
                Exponent w = v;
                w[i - 1] = b;
                w[i] = a - 1;
                out.add(w, c);
            } else {
                out.add(v, c);
            }
            break;
        case Basis::K: {
            // K_v pi_i: reorder on a descent, fixed otherwise; pihat = pi - 1.
            if (a > b)
                out.add(sw, c);
            else
                out.add(v, c);
            if (op.kind == OpKind::pihat)
                out.add(v, -c);
            break;
        }
        case Basis::KHat: {
            // Khat_v pihat_i: reorder on a descent, -Khat_v on an ascent, 0 on equality; pi = pihat + 1.
            if (a > b)
                out.add(sw, c);
            else if (a < b)
                out.add(v, -c);
            if (op.kind == OpKind::pi)
                out.add(v, c);
            break;
        }
        default:
            break;
        }
    }
    return out;
}

// s_lambda = x^{lambda + delta} d_omega on n variables.
inline QPoly schur(const std::vector<int>& lambda, int n)
{
    if (static_cast<int>(lambda.size()) > n)
        throw std::invalid_argument("partition longer than the variable count");
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("not a partition");
    for (int p : lambda)
        if (p < 0)
            throw std::invalid_argument("not a partition");
    Exponent v(n, 0);
    for (int i = 0; i < n; ++i)
        v[i] = (i < static_cast<int>(lambda.size()) ? lambda[i] : 0) + n - 1 - i;
    return apply_word(QPoly::monomial(v), word_of(OpKind::d, reduced_word(longest(n))));
}

// Coefficient of Y_{(n-1,...,0)} in Y_code(sigma) * h^{N - l(sigma)}, h = sum (n - i) x_i.
inline Rational projective_degree(const Perm& sigma)
{
    require_perm(sigma);
    const int n = static_cast<int>(sigma.size());
    const int N = n * (n - 1) / 2;
    QPoly h;
    for (int i = 1; i <= n; ++i) {
        Exponent e(n, 0);
        e[i - 1] = 1;
        h.add_term(e, Rational(n - i));
    }
    h.pad(n);
    QPoly f = expand(Basis::Y, lehmer_code(sigma)) * h.pow(static_cast<unsigned>(N - length(sigma)));
    f.pad(n);
    BasisPolynomial y = to_basis(f, Basis::Y);
    Exponent top(n);
    for (int i = 0; i < n; ++i)
        top[i] = n - 1 - i;
    auto it = y.terms.find(top);
    return it == y.terms.end() ? Rational(0) : it->second;
}

inline Exponent parse_index(const std::string& text)
{
    Exponent v;
    std::string t;
    for (char c : text)
        if (c != '[' && c != ']' && c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c)))
            t += c;
    std::string item;
    for (char c : t + ",") {
        if (c == ',') {
            if (!item.empty())
                v.push_back(std::stoi(item));
            item.clear();
        } else {
            item += c;
        }
    }
    return v;
}

} // namespace algcomb
