#include "algcomb/mtamari.hpp"
#include "algcomb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using namespace algcomb;
using nlohmann::json;

namespace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
auto parsed(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

Perm perm_arg(const std::string& s) { return parsed([&] { return parse_perm(s); }); }
Word word_arg(const std::string& s) { return parsed([&] { return parse_word(s); }); }
QPoly poly_arg(const std::string& s) { return parsed([&] { return parse_polynomial(s); }); }
Exponent index_arg(const std::string& s) { return parsed([&] { return parse_index(s); }); }
BinaryTree tree_arg(const std::string& s) { return parsed([&] { return parse_tree(s); }); }
Basis basis_arg(const std::string& s) { return parsed([&] { return parse_basis(s); }); }
RootType type_arg(const std::string& s)
{
    return parsed([&] {
        if (s.size() != 1)
            throw std::invalid_argument("root type is one letter A-D");
        return parse_type(s[0]);
    });
}
Side side_arg(const std::string& s)
{
    if (s == "right")
        return Side::right;
    if (s == "left")
        return Side::left;
    throw ParseError("side must be right or left");
}

// ---- json encoders ----

json rational_json(const Rational& c) { return c.get_str(); }

json poly_json(const QPoly& p)
{
    json terms = json::array();
    for (const auto& [v, c] : p.terms())
        terms.push_back({{"exponent", v}, {"coefficient", rational_json(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

json double_poly_json(const DoublePoly& p)
{
    json terms = json::array();
    for (const auto& [v, c] : p.terms())
        terms.push_back({{"exponent", v}, {"coefficient", poly_json(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}};
}

json basis_json(const BasisPolynomial& b)
{
    json terms = json::array();
    for (const auto& [v, c] : b.terms)
        terms.push_back({{"index", v}, {"coefficient", rational_json(c)}});
    return {{"basis", basis_name(b.basis)}, {"type", std::string(1, type_char(b.type))}, {"terms", terms}};
}

json hecke_json(const HeckeSum& h)
{
    json terms = json::array();
    for (const auto& [p, c] : h.terms)
        terms.push_back({{"perm", p}, {"coefficient", c}});
    return {{"basis", h.basis == HeckeBasis::K ? "K" : "Khat"}, {"terms", terms}};
}

json stat_json(const StatPoly& f)
{
    json terms = json::array();
    for (const auto& [v, c] : f.terms()) {
        const Exponent e = padded(v, 3);
        terms.push_back({{"x", e[0]}, {"y", e[1]}, {"b", e[2]}, {"coefficient", rational_json(c)}});
    }
    return {{"terms", terms}};
}

json poset_json(const IntervalPoset& p)
{
    json rels = json::array();
    for (const auto& [a, b] : p.cover_relations())
        rels.push_back({a, b});
    return {{"n", p.size()}, {"relations", rels}};
}

json tree_json(const BinaryTree& t) { return {{"bracket", to_bracket(t)}, {"dyck", to_dyck(t)}}; }

const char* algebra_name(Algebra a)
{
    switch (a) {
    case Algebra::FQSym: return "fqsym";
    case Algebra::PBT: return "pbt";
    case Algebra::FQSymM: return "fqsym-m";
    case Algebra::PBTM: return "pbt-m";
    }
    return "?";
}

json hopf_json(const HopfElement& e)
{
    json terms = json::array();
    for (const auto& [w, c] : e.terms)
        terms.push_back({{"index", w}, {"coefficient", c}});
    return {{"algebra", algebra_name(e.algebra)}, {"basis", std::string(1, basis_char(e.basis))}, {"m", e.m},
        {"terms", terms}};
}

json tensor_json(const HopfTensor& t)
{
    json terms = json::array();
    for (const auto& [lr, c] : t.terms)
        terms.push_back({{"left", lr.first}, {"right", lr.second}, {"coefficient", c}});
    return {{"algebra", algebra_name(t.algebra)}, {"basis", std::string(1, basis_char(t.basis))}, {"m", t.m},
        {"terms", terms}};
}

json outcome_json(const verify::Outcome& o)
{
    return {{"criterion", o.id}, {"title", o.title}, {"pass", o.pass}, {"checks", o.checks}, {"failures", o.failures},
        {"notes", o.notes}};
}

std::string join(const std::vector<int>& v, const char* sep = ", ")
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string perm_list(const std::vector<Perm>& ps)
{
    std::string s;
    for (const auto& p : ps)
        s += to_string(p) + "\n";
    return s;
}

// Collects the handler for the chosen subcommand; run after parsing.
struct Cli {
    CLI::App app{"Algebraic combinatorics toolkit: permutations, polynomial bases, Pieri sets, Tamari intervals, "
                 "Hopf algebras"};
    bool as_json = false;
    std::function<void()> action;

    void print(const std::string& text, const json& j) const
    {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    }

    template <class F>
    void on(CLI::App* sub, F f)
    {
        sub->callback([this, f] { action = f; });
    }
};

void add_perm(Cli& cli)
{
    auto* perm = cli.app.add_subcommand("perm", "permutation operations")->require_subcommand(1);
    static std::string a, b, side = "right";
    static int x = 0, y = 0;

    auto* info = perm->add_subcommand("info", "code, length, descents, recoils, reduced word, cycles");
    info->add_option("sigma", a)->required();
    cli.on(info, [&cli] {
        const Perm s = perm_arg(a);
        const auto st = length_stats(s);
        const auto w = reduced_word(s);
        const auto cs = cycle_decomposition(s);
        std::string t = "perm " + to_string(s) + "\ncode [" + join(lehmer_code(s)) + "]\nlength " +
            std::to_string(st.length) + "\ndescents {" + join(st.descents) + "}\nrecoils {" + join(st.recoils) +
            "}\nreduced word [" + join(w) + "]\ncycles " + cycles_to_string(cs);
        json cj = json::array();
        for (const auto& c : cs)
            cj.push_back(c);
        cli.print(t, {{"perm", s}, {"code", lehmer_code(s)}, {"length", st.length}, {"descents", st.descents},
                         {"recoils", st.recoils}, {"reduced_word", w}, {"cycles", cj}});
    });

    auto* comp = perm->add_subcommand("compose", "product sigma mu, (sigma mu)(i) = sigma(mu(i))");
    comp->add_option("sigma", a)->required();
    comp->add_option("mu", b)->required();
    cli.on(comp, [&cli] {
        const Perm r = compose(perm_arg(a), perm_arg(b));
        cli.print(to_string(r), r);
    });

    auto* inv = perm->add_subcommand("inverse", "inverse permutation");
    inv->add_option("sigma", a)->required();
    cli.on(inv, [&cli] {
        const Perm r = inverse(perm_arg(a));
        cli.print(to_string(r), r);
    });

    auto* code = perm->add_subcommand("from-code", "permutation with the given Lehmer code");
    code->add_option("code", a)->required();
    cli.on(code, [&cli] {
        const auto v = index_arg(a);
        if (!is_lehmer_code(v))
            throw DomainError("not a Lehmer code");
        const Perm r = from_lehmer_code(v);
        cli.print(to_string(r), r);
    });

    auto* st = perm->add_subcommand("std", "standardization of a word, ties broken left to right");
    st->add_option("word", a)->required();
    cli.on(st, [&cli] {
        const Perm r = standardize(std::vector<char>(a.begin(), a.end()));
        cli.print(to_string(r), r);
    });

    auto* pat = perm->add_subcommand("pattern", "does sigma contain the pattern mu");
    pat->add_option("sigma", a)->required();
    pat->add_option("mu", b)->required();
    cli.on(pat, [&cli] {
        const bool r = contains_pattern(perm_arg(a), perm_arg(b));
        cli.print(bool_text(r), r);
    });

    auto* tr = perm->add_subcommand("transpose", "multiply by the transposition (a,b)");
    tr->add_option("sigma", a)->required();
    tr->add_option("a", x)->required();
    tr->add_option("b", y)->required();
    tr->add_option("--side", side, "right (positions) or left (values)");
    cli.on(tr, [&cli] {
        const Perm r = apply_transposition(perm_arg(a), x, y, side_arg(side));
        cli.print(to_string(r), r);
    });
}

void add_order(Cli& cli)
{
    auto* order = cli.app.add_subcommand("order", "weak and Bruhat orders")->require_subcommand(1);
    static std::string a, b, side = "right", cuts;
    static std::vector<std::string> many;
    static int k = 0, r = 0;
    static bool max = false;

    auto* weak = order->add_subcommand("weak", "sigma <= mu in the weak order");
    weak->add_option("sigma", a)->required();
    weak->add_option("mu", b)->required();
    weak->add_option("--side", side);
    cli.on(weak, [&cli] {
        const bool v = weak_leq(perm_arg(a), perm_arg(b), side_arg(side));
        cli.print(bool_text(v), v);
    });

    auto* br = order->add_subcommand("bruhat", "sigma <= mu in the Bruhat order");
    br->add_option("sigma", a)->required();
    br->add_option("mu", b)->required();
    cli.on(br, [&cli] {
        const bool v = bruhat_leq(perm_arg(a), perm_arg(b));
        cli.print(bool_text(v), v);
    });

    auto* ky = order->add_subcommand("key", "key (column sets) of a permutation");
    ky->add_option("sigma", a)->required();
    cli.on(ky, [&cli] {
        const Key kk = key(perm_arg(a));
        cli.print(key_to_string(kk), kk);
    });

    auto* succ = order->add_subcommand("successors", "Bruhat covers of sigma");
    succ->add_option("sigma", a)->required();
    cli.on(succ, [&cli] {
        const auto s = bruhat_successors(perm_arg(a));
        cli.print(perm_list(s), s);
    });

    auto* iv = order->add_subcommand("interval", "Bruhat interval [sigma, nu]");
    iv->add_option("sigma", a)->required();
    iv->add_option("nu", b)->required();
    cli.on(iv, [&cli] {
        const auto s = bruhat_interval(perm_arg(a), perm_arg(b));
        const std::vector<Perm> v(s.begin(), s.end());
        cli.print(perm_list(v), v);
    });

    auto* sup = order->add_subcommand("sup", "supremum of a set of permutations as a monotone triangle");
    sup->add_option("perms", many)->required();
    cli.on(sup, [&cli] {
        std::vector<Perm> ps;
        for (const auto& s : many)
            ps.push_back(perm_arg(s));
        const Sup s = bruhat_sup(ps);
        std::string t = key_to_string(s.triangle) + "\n" + (s.perm ? "key of " + to_string(*s.perm) : "not a key");
        cli.print(t, {{"triangle", s.triangle}, {"perm", s.perm ? json(*s.perm) : json(nullptr)}});
    });

    auto* proj = order->add_subcommand("project", "sort positions after k and/or values above r");
    proj->add_option("sigma", a)->required();
    proj->add_option("--positions", k, "cut position k");
    proj->add_option("--values", r, "cut value r");
    proj->add_flag("--max", max, "sort decreasingly");
    cli.on(proj, [&cli] {
        const Perm s = perm_arg(a);
        Perm out = s;
        if (k && r)
            out = project_both(s, r, k, max);
        else if (k)
            out = project_positions(s, k, max);
        else if (r)
            out = project_values(s, r, max);
        cli.print(to_string(out), out);
    });

    auto* coset = order->add_subcommand("coset-max", "largest element of the coset of sigma below nu");
    coset->add_option("sigma", a)->required();
    coset->add_option("nu", b)->required();
    coset->add_option("--cuts", cuts, "comma-separated cut positions")->required();
    cli.on(coset, [&cli] {
        const Perm out = coset_interval_max(perm_arg(a), perm_arg(b), index_arg(cuts));
        cli.print(to_string(out), out);
    });
}

void add_poly(Cli& cli)
{
    auto* poly = cli.app.add_subcommand("poly", "Laurent polynomials and operators")->require_subcommand(1);
    static std::string f, g;

    auto* ap = poly->add_subcommand("apply", "apply an operator word, e.g. \"d1,pi2,s3B\"");
    ap->add_option("poly", f)->required();
    ap->add_option("word", g)->required();
    cli.on(ap, [&cli] {
        const QPoly p = poly_arg(f);
        const auto w = parsed([&] { return parse_operator_word(g); });
        const QPoly r = apply_word(p, w);
        cli.print(to_string(r), poly_json(r));
    });

    for (const char* name : {"add", "mul"}) {
        auto* sub = poly->add_subcommand(name, std::string(name) == "add" ? "sum of two polynomials" : "product of two polynomials");
        sub->add_option("f", f)->required();
        sub->add_option("g", g)->required();
        const bool add = std::string(name) == "add";
        cli.on(sub, [&cli, add] {
            const QPoly r = add ? poly_arg(f) + poly_arg(g) : poly_arg(f) * poly_arg(g);
            cli.print(to_string(r), poly_json(r));
        });
    }
}

void add_basis(Cli& cli)
{
    auto* basis = cli.app.add_subcommand("basis", "Schubert, Grothendieck and key polynomial bases")->require_subcommand(1);
    static std::string b = "Y", to, type = "A", idx, idx2, f, op;

    auto* ex = basis->add_subcommand("expand", "monomial expansion of a basis element");
    ex->add_option("--basis", b, "Y, Y-double, G-pos, G-neg, G-double, K, Khat");
    ex->add_option("--type", type, "root type A-D (key bases)");
    ex->add_option("index", idx)->required();
    cli.on(ex, [&cli] {
        const Basis bs = basis_arg(b);
        const Exponent v = index_arg(idx);
        if (is_double(bs)) {
            const DoublePoly r = expand_double(bs, v);
            cli.print(to_string(r), double_poly_json(r));
        } else {
            const QPoly r = expand(bs, v, type_arg(type));
            cli.print(to_string(r), poly_json(r));
        }
    });

    auto* dec = basis->add_subcommand("decompose", "write a polynomial in a basis");
    dec->add_option("--basis", b);
    dec->add_option("poly", f)->required();
    cli.on(dec, [&cli] {
        const auto r = to_basis(poly_arg(f), basis_arg(b));
        cli.print(to_string(r), basis_json(r));
    });

    auto* conv = basis->add_subcommand("convert", "change of basis of one element");
    conv->add_option("--from", b)->required();
    conv->add_option("--to", to)->required();
    conv->add_option("index", idx)->required();
    cli.on(conv, [&cli] {
        const auto r = convert(basis_element(basis_arg(b), index_arg(idx)), basis_arg(to));
        cli.print(to_string(r), basis_json(r));
    });

    auto* prod = basis->add_subcommand("product", "product of two basis elements, in the same basis");
    prod->add_option("--basis", b);
    prod->add_option("left", idx)->required();
    prod->add_option("right", idx2)->required();
    cli.on(prod, [&cli] {
        const Basis bs = basis_arg(b);
        const auto r = basis_product(basis_element(bs, index_arg(idx)), basis_element(bs, index_arg(idx2)));
        cli.print(to_string(r), basis_json(r));
    });

    auto* opr = basis->add_subcommand("operator", "apply one operator to a basis element");
    opr->add_option("--basis", b);
    opr->add_option("index", idx)->required();
    opr->add_option("op", op)->required();
    cli.on(opr, [&cli] {
        const auto o = parsed([&] { return parse_operator(op); });
        const auto r = operator_on_basis(basis_element(basis_arg(b), index_arg(idx)), o);
        cli.print(to_string(r), basis_json(r));
    });

    auto* deg = basis->add_subcommand("degree", "projective degree of the Schubert variety of sigma");
    deg->add_option("sigma", idx)->required();
    cli.on(deg, [&cli] {
        const Rational d = projective_degree(perm_arg(idx));
        cli.print(d.get_str(), rational_json(d));
    });
}

void add_degrees(Cli& cli)
{
    auto* deg = cli.app.add_subcommand("degrees", "projective degrees of all permutations of size n");
    static int n = 4;
    deg->add_option("--n", n)->check(CLI::Range(1, 5));
    cli.on(deg, [&cli] {
        std::string t;
        json j = json::object();
        for (const auto& s : all_perms(n)) {
            const Rational d = projective_degree(s);
            t += to_string(s) + " -> " + d.get_str() + "\n";
            j[to_string(s)] = rational_json(d);
        }
        cli.print(t, j);
    });
}

void add_pieri(Cli& cli)
{
    auto* pieri = cli.app.add_subcommand("pieri", "signed Pieri sets in the Hecke module");
    static std::string sigma, cuts;
    static int k = 0;
    static bool check = false, operators = false;
    pieri->add_option("--perm", sigma)->required();
    auto* ko = pieri->add_option("--k", k, "single cut");
    pieri->add_option("--cuts", cuts, "several comma-separated cuts")->excludes(ko);
    pieri->add_flag("--verify", check, "compare with the signed Bruhat interval");
    pieri->add_flag("--operators", operators, "compute through isobaric operators");
    cli.on(pieri, [&cli] {
        const Perm s = perm_arg(sigma);
        std::vector<int> cs = cuts.empty() ? std::vector<int>{k} : index_arg(cuts);
        if (check) {
            if (cs.size() != 1)
                throw DomainError("--verify needs a single cut");
            const auto r = verify_interval(s, cs[0]);
            const std::string t = "interval [" + to_string(s) + ", " + to_string(r.top) + "], " +
                std::to_string(r.terms) + " terms, " + (r.ok ? "OK" : "FAILED: " + r.message);
            cli.print(t, {{"perm", s}, {"top", r.top}, {"terms", r.terms}, {"ok", r.ok}, {"message", r.message}});
            if (!r.ok)
                throw DomainError("interval check failed");
            return;
        }
        const HeckeSum h = operators ? pieri_by_operators(s, cs) : cs.size() == 1 ? pieri_set(s, cs[0]) : parabolic_pieri(s, cs);
        cli.print(to_string(h), hecke_json(h));
    });
}

void add_tamari(Cli& cli)
{
    auto* tam = cli.app.add_subcommand("tamari", "Tamari lattice, intervals and interval-posets")->require_subcommand(1);
    static int n = 0;
    static bool enumerate = false, with_b = false;
    static std::string a, b;

    auto* count = tam->add_subcommand("count", "number of Tamari intervals of size n");
    count->add_option("--n", n)->required()->check(CLI::Range(0, 200));
    count->add_flag("--enumerate", enumerate, "count interval-posets instead of using the closed form (n <= 8)");
    cli.on(count, [&cli] {
        mpz_class c;
        if (enumerate) {
            if (n > 8)
                throw DomainError("enumeration is limited to n <= 8");
            c = static_cast<unsigned long>(composed_interval_posets(n).size());
        } else {
            c = interval_count_formula(n);
        }
        cli.print(c.get_str(), c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
    });

    auto* series = tam->add_subcommand("series", "coefficient of y^n in the interval generating series");
    series->add_option("--n", n)->required()->check(CLI::Range(0, 9));
    series->add_flag("--b", with_b, "keep the b statistic");
    cli.on(series, [&cli] {
        const StatPoly c = y_coefficient(phi_series(n, with_b), n);
        cli.print(stat_to_string(c), stat_json(c));
    });

    auto* poly = tam->add_subcommand("poly", "Tamari polynomial of a tree (bracket [L,R] or Dyck word)");
    poly->add_option("tree", a)->required();
    poly->add_flag("--b", with_b);
    cli.on(poly, [&cli] {
        const StatPoly p = tamari_polynomial(tree_arg(a), with_b);
        cli.print(stat_to_string(p), stat_json(p));
    });

    auto* leq = tam->add_subcommand("leq", "T1 <= T2 in the Tamari order");
    leq->add_option("t1", a)->required();
    leq->add_option("t2", b)->required();
    cli.on(leq, [&cli] {
        const BinaryTree x = tree_arg(a), y = tree_arg(b);
        if (x.size() != y.size())
            throw DomainError("trees of different sizes");
        const bool v = tamari_leq(x, y);
        cli.print(bool_text(v), v);
    });

    auto* succ = tam->add_subcommand("successors", "rotation covers of a tree");
    succ->add_option("tree", a)->required();
    cli.on(succ, [&cli] {
        std::string t;
        json j = json::array();
        for (const auto& s : rotation_successors(tree_arg(a))) {
            t += to_bracket(s) + "\n";
            j.push_back(tree_json(s));
        }
        cli.print(t, j);
    });

    auto* iv = tam->add_subcommand("interval", "interval-poset of [T1, T2]");
    iv->add_option("t1", a)->required();
    iv->add_option("t2", b)->required();
    cli.on(iv, [&cli] {
        const BinaryTree x = tree_arg(a), y = tree_arg(b);
        if (x.size() != y.size() || !tamari_leq(x, y))
            throw DomainError("T1 <= T2 does not hold");
        const auto p = interval_poset(x, y);
        cli.print(to_string(p), poset_json(p));
    });

    auto* sylv = tam->add_subcommand("class", "sylvester class of a tree");
    sylv->add_option("tree", a)->required();
    cli.on(sylv, [&cli] {
        const auto c = sylvester_class(tree_arg(a));
        cli.print(perm_list(c), c);
    });
}

void add_mtamari(Cli& cli)
{
    auto* mt = cli.app.add_subcommand("mtamari", "m-Tamari lattices")->require_subcommand(1);
    static int n = 1, m = 2;
    static bool enumerate = false;
    static std::string a, b;

    auto* count = mt->add_subcommand("count", "number of m-Tamari intervals of size n");
    count->add_option("--n", n)->required()->check(CLI::Range(0, 100));
    count->add_option("--m", m)->check(CLI::Range(1, 20));
    count->add_flag("--enumerate", enumerate, "enumerate m-interval-posets (n m <= 8)");
    cli.on(count, [&cli] {
        mpz_class c;
        if (enumerate) {
            if (n * m > 8)
                throw DomainError("enumeration is limited to n m <= 8");
            c = count_m_intervals(n, m);
        } else {
            c = m_interval_count_formula(n, m);
        }
        cli.print(c.get_str(), c.fits_slong_p() ? json(c.get_si()) : json(c.get_str()));
    });

    auto* poly = mt->add_subcommand("poly", "m-Tamari polynomial of an (m+1)-ary tree or an m-binary Dyck word");
    poly->add_option("tree", a)->required();
    poly->add_option("--m", m)->check(CLI::Range(1, 20));
    cli.on(poly, [&cli] {
        StatPoly p;
        if (!a.empty() && a.find_first_not_of("01") == std::string::npos) {
            const BinaryTree t = tree_arg(a);
            if (!is_m_binary(t, m))
                throw DomainError("tree is not m-binary");
            p = m_tamari_polynomial(t, m);
        } else {
            p = m_tamari_polynomial(parsed([&] { return parse_mary_tree(a, m); }), m);
        }
        cli.print(stat_to_string(p), stat_json(p));
    });

    auto* leq = mt->add_subcommand("leq", "comparison of two m-binary trees");
    leq->add_option("t1", a)->required();
    leq->add_option("t2", b)->required();
    leq->add_option("--m", m)->check(CLI::Range(1, 20));
    cli.on(leq, [&cli] {
        const BinaryTree x = tree_arg(a), y = tree_arg(b);
        if (!is_m_binary(x, m) || !is_m_binary(y, m) || x.size() != y.size())
            throw DomainError("need two m-binary trees of the same size");
        const bool v = m_tamari_leq(x, y, m);
        cli.print(bool_text(v), v);
    });
}

void add_hopf(Cli& cli)
{
    auto* hopf = cli.app.add_subcommand("hopf", "FQSym, PBT and their m-analogues")->require_subcommand(1);
    static std::string alg = "fqsym", basis = "F", a, b;
    static int m = 1;

    auto element = [](const std::string& w) {
        const Algebra al = parsed([&] { return parse_algebra(alg); });
        const HopfBasis bs = parsed([&] { return parse_hopf_basis(basis); });
        return parsed([&] { return hopf_element(al, bs, parse_word(w), m); });
    };
    auto common = [](CLI::App* sub) {
        sub->add_option("--algebra", alg, "fqsym, pbt, fqsym-m, pbt-m");
        sub->add_option("--basis", basis, "F, G, E, H or P");
        sub->add_option("--m", m)->check(CLI::Range(1, 9));
    };

    auto* prod = hopf->add_subcommand("product", "product of two basis elements");
    common(prod);
    prod->add_option("left", a)->required();
    prod->add_option("right", b)->required();
    cli.on(prod, [&cli, element] {
        const auto r = product(element(a), element(b));
        cli.print(to_string(r), hopf_json(r));
    });

    auto* cop = hopf->add_subcommand("coproduct", "coproduct of a basis element");
    common(cop);
    cop->add_option("index", a)->required();
    cli.on(cop, [&cli, element] {
        const auto r = coproduct(element(a));
        cli.print(to_string(r), tensor_json(r));
    });

    auto* tof = hopf->add_subcommand("to-f", "expand a tree basis element over permutations");
    common(tof);
    tof->add_option("index", a)->required();
    cli.on(tof, [&cli, element] {
        const auto r = to_F(element(a));
        cli.print(to_string(r), hopf_json(r));
    });
}

void add_verify(Cli& cli)
{
    auto* ver = cli.app.add_subcommand("verify", "acceptance suites")->require_subcommand(1);
    static verify::Options opt;
    static int id = 1;

    auto report = [&cli](const std::vector<verify::Outcome>& results) {
        std::string t;
        json j = json::array();
        int passed = 0;
        for (const auto& o : results) {
            t += verify::summary_line(o) + "\n";
            for (const auto& f : o.failures)
                t += "  failed: " + f + "\n";
            for (const auto& nt : o.notes)
                t += "  note: " + nt + "\n";
            passed += o.pass;
            j.push_back(outcome_json(o));
        }
        t += std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed\n";
        cli.print(t, j);
        if (passed != static_cast<int>(results.size()))
            throw DomainError("acceptance failures");
    };

    auto* all = ver->add_subcommand("all", "run every criterion (workers from ALGCOMB_WORKERS)");
    all->add_option("--max-size", opt.max_size)->check(CLI::Range(1, 6));
    cli.on(all, [report] { report(verify::run_all(opt)); });

    auto* one = ver->add_subcommand("criterion", "run one criterion");
    one->add_option("id", id)->required()->check(CLI::Range(1, 10));
    one->add_option("--max-size", opt.max_size)->check(CLI::Range(1, 6));
    cli.on(one, [report] { report({verify::run_criterion(id, opt)}); });
}

}

int main(int argc, char** argv)
{
    Cli cli;
    cli.app.require_subcommand(1);
    cli.app.fallthrough();
    cli.app.add_flag("--json", cli.as_json, "machine-readable output");
    add_perm(cli);
    add_order(cli);
    add_poly(cli);
    add_basis(cli);
    add_degrees(cli);
    add_pieri(cli);
    add_tamari(cli);
    add_mtamari(cli);
    add_hopf(cli);
    add_verify(cli);

    try {
        cli.app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return cli.app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return cli.app.exit(e);
    } catch (const CLI::ParseError& e) {
        cli.app.exit(e);
        return 2;
    }

    try {
        if (cli.action)
            cli.action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout.flush();
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
