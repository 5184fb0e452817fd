#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algcomb {

using Exponent = std::vector<int>;
using Rational = mpq_class;

template <class C>
class Polynomial;

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(long long c) { return c == 0; }

template <class C>
bool is_zero(const Polynomial<C>& p)
{
    return p.is_zero();
}

inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }

inline Exponent padded(Exponent v, size_t n)
{
    if (v.size() < n)
        v.resize(n, 0);
    return v;
}

// Sparse Laurent polynomial: exponent vector -> coefficient. All keys share one length.
template <class C>
class Polynomial {
public:
    using Coefficient = C;
    using Terms = std::map<Exponent, C>;

    Polynomial() = default;

    explicit Polynomial(const C& c, size_t nvars = 0)
    {
        if (!algcomb::is_zero(c))
            terms_.emplace(Exponent(nvars, 0), c);
        nvars_ = nvars;
    }

    static Polynomial monomial(const Exponent& v, const C& c = C(1))
    {
        Polynomial p;
        p.add_term(v, c);
        return p;
    }

    // x_i, 1-based
    static Polynomial var(int i, const C& c = C(1))
    {
        Exponent v(i, 0);
        v[i - 1] = 1;
        return monomial(v, c);
    }

    size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void pad(size_t n)
    {
        if (n <= nvars_)
            return;
        Terms t;
        for (auto& [v, c] : terms_)
            t.emplace(padded(v, n), std::move(c));
        terms_ = std::move(t);
        nvars_ = n;
    }

    void add_term(const Exponent& v, const C& c)
    {
        if (algcomb::is_zero(c))
            return;
        if (v.size() > nvars_)
            pad(v.size());
        Exponent key = padded(v, nvars_);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), c);
            return;
        }
        it->second += c;
        if (algcomb::is_zero(it->second))
            terms_.erase(it);
    }

    C coefficient(const Exponent& v) const
    {
        if (v.size() > nvars_) {
            for (size_t i = nvars_; i < v.size(); ++i)
                if (v[i] != 0)
                    return C(0);
        }
        auto it = terms_.find(padded(Exponent(v.begin(), v.begin() + std::min(v.size(), nvars_)), nvars_));
        return it == terms_.end() ? C(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        pad(o.nvars_);
        for (const auto& [v, c] : o.terms_)
            add_term(v, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        pad(o.nvars_);
        for (const auto& [v, c] : o.terms_)
            add_term(v, -c);
        return *this;
    }

    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& [v, c] : r.terms_)
            c = -c;
        return r;
    }

    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r;
        const size_t n = std::max(a.nvars_, b.nvars_);
        r.nvars_ = n;
        for (const auto& [va, ca] : a.terms_)
            for (const auto& [vb, cb] : b.terms_) {
                Exponent v(n, 0);
                for (size_t i = 0; i < va.size(); ++i)
                    v[i] += va[i];
                for (size_t i = 0; i < vb.size(); ++i)
                    v[i] += vb[i];
                r.add_term(v, ca * cb);
            }
        return r;
    }

    friend Polynomial operator*(const C& c, const Polynomial& p)
    {
        Polynomial r;
        r.nvars_ = p.nvars_;
        for (const auto& [v, pc] : p.terms_)
            r.add_term(v, c * pc);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.nvars_ == b.nvars_)
            return a.terms_ == b.terms_;
        Polynomial x = a, y = b;
        const size_t n = std::max(a.nvars_, b.nvars_);
        x.pad(n);
        y.pad(n);
        return x.terms_ == y.terms_;
    }

    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

    Polynomial pow(unsigned k) const
    {
        Polynomial r(C(1), nvars_), base = *this;
        while (k) {
            if (k & 1)
                r *= base;
            k >>= 1;
            if (k)
                base *= base;
        }
        return r;
    }

    int max_degree() const
    {
        int d = 0;
        for (const auto& [v, c] : terms_) {
            int s = 0;
            for (int e : v)
                s += e;
            d = std::max(d, s);
        }
        return d;
    }

    bool has_negative_exponent() const
    {
        for (const auto& [v, c] : terms_)
            for (int e : v)
                if (e < 0)
                    return true;
        return false;
    }

private:
    Terms terms_;
    size_t nvars_ = 0;
};

using QPoly = Polynomial<Rational>;
// x-polynomial with coefficients in the y alphabet.
using DoublePoly = Polynomial<QPoly>;

inline std::string exponent_to_string(const Exponent& v)
{
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

template <class C>
std::string to_string(const Polynomial<C>& p, const std::string& var = "x");

namespace detail {

inline std::pair<bool, std::string> signed_coeff(const Rational& c)
{
    if (c == 1)
        return {false, ""};
    if (c == -1)
        return {true, ""};
    if (sgn(c) < 0)
        return {true, Rational(-c).get_str() + "*"};
    return {false, c.get_str() + "*"};
}

template <class C>
std::pair<bool, std::string> signed_coeff(const Polynomial<C>& c)
{
    if (c.size() == 1) {
        const auto& [v, k] = *c.terms().begin();
        if (std::all_of(v.begin(), v.end(), [](int e) { return e == 0; }))
            return signed_coeff(k);
    }
    return {false, "(" + algcomb::to_string(c, "y") + ")*"};
}

} // namespace detail

// "c*x[v1, v2]" terms in lexicographic order, unit coefficient elided.
template <class C>
std::string to_string(const Polynomial<C>& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [v, c] : p.terms()) {
        auto [neg, body] = detail::signed_coeff(c);
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        s += body + var + exponent_to_string(v);
        first = false;
    }
    return s;
}

namespace detail {

class PolyParser {
public:
    explicit PolyParser(const std::string& t) : s_(t) {}

    QPoly parse()
    {
        QPoly r;
        skip();
        if (peek() == '0' && s_.size() == pos_ + 1)
            return r;
        bool first = true;
        while (pos_ < s_.size()) {
            int sgn_ = 1;
            skip();
            if (peek() == '+' || peek() == '-') {
                sgn_ = get() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            Rational c(1);
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                c = number();
                skip();
                if (peek() == '*') {
                    ++pos_;
                    skip();
                } else {
                    r.add_term({}, sgn_ * c);
                    skip();
                    continue;
                }
            }
            if (get() != 'x')
                fail("expected x[");
            skip();
            if (get() != '[')
                fail("expected [");
            Exponent v;
            skip();
            while (peek() != ']') {
                skip();
                int sg = 1;
                if (peek() == '-') {
                    sg = -1;
                    ++pos_;
                }
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected integer");
                long e = 0;
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    e = e * 10 + (get() - '0');
                v.push_back(static_cast<int>(sg * e));
                skip();
                if (peek() == ',')
                    ++pos_;
                else if (peek() != ']')
                    fail("expected , or ]");
            }
            ++pos_;
            r.add_term(v, sgn_ * c);
            skip();
        }
        return r;
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
    }
    Rational number()
    {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')
            d += get();
        Rational q(d);
        q.canonicalize();
        return q;
    }

    std::string s_;
    size_t pos_ = 0;
};

} // namespace detail

inline QPoly parse_polynomial(const std::string& text) { return detail::PolyParser(text).parse(); }

// x_i -> images[i-1] simultaneously; negative powers need a monomial image.
template <class C>
Polynomial<C> substitute(const Polynomial<C>& f, const std::vector<Polynomial<C>>& images)
{
    Polynomial<C> r;
    std::vector<std::map<int, Polynomial<C>>> cache(images.size());
    auto power = [&](size_t i, int e) -> Polynomial<C> {
        auto it = cache[i].find(e);
        if (it != cache[i].end())
            return it->second;
        Polynomial<C> g;
        if (e >= 0) {
            g = images[i].pow(static_cast<unsigned>(e));
        } else {
            const auto& img = images[i];
            if (img.size() != 1 || !(img.terms().begin()->second == C(1) || img.terms().begin()->second == C(-1)))
                throw std::invalid_argument("negative power of a non-monomial substitution");
            Exponent v = img.terms().begin()->first;
            for (int& x : v)
                x = -x;
            g = Polynomial<C>::monomial(v, img.terms().begin()->second).pow(static_cast<unsigned>(-e));
        }
        cache[i].emplace(e, g);
        return g;
    };
    for (const auto& [v, c] : f.terms()) {
        Polynomial<C> t(c);
        Exponent rest(v.size(), 0);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0)
                continue;
            if (i < images.size())
                t = t * power(i, v[i]);
            else
                rest[i] = v[i];
        }
        r += t * Polynomial<C>::monomial(rest);
    }
    return r;
}

} // namespace algcomb
