#pragma once

#include "perm.hpp"

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace algcomb {

// Immutable unlabeled binary tree with shared subtrees; the default value is the empty tree.
class BinaryTree {
public:
    BinaryTree() = default;

    static BinaryTree node(BinaryTree left, BinaryTree right);

    bool empty() const { return !node_; }
    int size() const;
    const BinaryTree& left() const;
    const BinaryTree& right() const;

    friend bool operator==(const BinaryTree& a, const BinaryTree& b) { return compare(a, b) == 0; }
    friend bool operator!=(const BinaryTree& a, const BinaryTree& b) { return compare(a, b) != 0; }
    friend bool operator<(const BinaryTree& a, const BinaryTree& b) { return compare(a, b) < 0; }

    static int compare(const BinaryTree& a, const BinaryTree& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct BinaryTree::Node {
    BinaryTree left, right;
    int size = 1;
};

inline BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right)
{
    BinaryTree t;
    const int s = 1 + left.size() + right.size();
    t.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), s});
    return t;
}

inline int BinaryTree::size() const { return node_ ? node_->size : 0; }

inline const BinaryTree& BinaryTree::left() const
{
    if (!node_)
        throw std::logic_error("left subtree of the empty tree");
    return node_->left;
}

inline const BinaryTree& BinaryTree::right() const
{
    if (!node_)
        throw std::logic_error("right subtree of the empty tree");
    return node_->right;
}

inline int BinaryTree::compare(const BinaryTree& a, const BinaryTree& b)
{
    if (a.node_ == b.node_)
        return 0;
    if (!a.node_ || !b.node_)
        return a.node_ ? 1 : -1;
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    if (int c = compare(a.left(), b.left()))
        return c;
    return compare(a.right(), b.right());
}

inline BinaryTree leaf() { return BinaryTree::node({}, {}); }

// "[L,R]" per node, empty subtree as the empty string.
inline std::string to_bracket(const BinaryTree& t)
{
    if (t.empty())
        return "";
    return "[" + to_bracket(t.left()) + "," + to_bracket(t.right()) + "]";
}

inline std::string to_dyck(const BinaryTree& t)
{
    if (t.empty())
        return "";
    return to_dyck(t.left()) + "1" + to_dyck(t.right()) + "0";
}

inline bool is_dyck(const std::string& d)
{
    int h = 0;
    for (char c : d) {
        if (c == '1')
            ++h;
        else if (c == '0')
            --h;
        else
            return false;
        if (h < 0)
            return false;
    }
    return h == 0;
}

inline BinaryTree from_dyck(const std::string& d)
{
    if (!is_dyck(d))
        throw std::invalid_argument("not a Dyck word: " + d);
    if (d.empty())
        return {};
    // D = D1 1 D2 0 with D1 the prefix up to the last return to zero
    int h = 0;
    size_t split = 0;
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        h += d[i] == '1' ? 1 : -1;
        if (h == 0)
            split = i + 1;
    }
    return BinaryTree::node(from_dyck(d.substr(0, split)), from_dyck(d.substr(split + 1, d.size() - split - 2)));
}

namespace detail {

inline BinaryTree parse_bracket(const std::string& s, size_t& pos)
{
    if (pos >= s.size() || s[pos] != '[')
        return {};
    ++pos;
    BinaryTree l = parse_bracket(s, pos);
    if (pos >= s.size() || s[pos] != ',')
        throw std::invalid_argument("bad tree syntax at " + std::to_string(pos));
    ++pos;
    BinaryTree r = parse_bracket(s, pos);
    if (pos >= s.size() || s[pos] != ']')
        throw std::invalid_argument("bad tree syntax at " + std::to_string(pos));
    ++pos;
    return BinaryTree::node(std::move(l), std::move(r));
}

} // namespace detail

// Accepts the bracket form or a Dyck word.
inline BinaryTree parse_tree(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (!s.empty() && s.find_first_not_of("01") == std::string::npos)
        return from_dyck(s);
    size_t pos = 0;
    BinaryTree t = detail::parse_bracket(s, pos);
    if (pos != s.size())
        throw std::invalid_argument("trailing characters in tree: " + text);
    return t;
}

inline const std::vector<BinaryTree>& all_trees(int n)
{
    static std::mutex mutex;
    static std::map<int, std::vector<BinaryTree>> cache;
    if (n < 0)
        throw std::invalid_argument("negative size");
    std::lock_guard lock(mutex);
    for (int k = 0; k <= n; ++k) {
        auto it = cache.find(k);
        if (it == cache.end()) {
            std::vector<BinaryTree> v;
            if (k == 0)
                v.push_back({});
            for (int l = 0; l < k; ++l)
                for (const auto& a : cache[l])
                    for (const auto& b : cache[k - 1 - l])
                        v.push_back(BinaryTree::node(a, b));
            cache.emplace(k, std::move(v));
        }
    }
    return cache[n];
}

inline BinaryTree left_comb(int n)
{
    BinaryTree t;
    for (int i = 0; i < n; ++i)
        t = BinaryTree::node(t, {});
    return t;
}

inline BinaryTree right_comb(int n)
{
    BinaryTree t;
    for (int i = 0; i < n; ++i)
        t = BinaryTree::node({}, t);
    return t;
}

inline BinaryTree mirror(const BinaryTree& t)
{
    if (t.empty())
        return t;
    return BinaryTree::node(mirror(t.right()), mirror(t.left()));
}

inline int left_branch(const BinaryTree& t)
{
    int k = 0;
    for (const BinaryTree* p = &t; !p->empty(); p = &p->left())
        ++k;
    return k;
}

inline int right_branch(const BinaryTree& t) { return left_branch(mirror(t)); }

inline int returns_to_zero(const std::string& d)
{
    int h = 0, r = 0;
    for (char c : d) {
        h += c == '1' ? 1 : -1;
        if (h == 0)
            ++r;
    }
    return r;
}

// Right rotations y(x(A,B),C) -> x(A,y(B,C)), listed by the infix rank of y.
inline std::vector<BinaryTree> rotation_successors(const BinaryTree& t)
{
    std::vector<BinaryTree> out;
    if (t.empty())
        return out;
    const BinaryTree& l = t.left();
    const BinaryTree& r = t.right();
    for (auto& s : rotation_successors(l))
        out.push_back(BinaryTree::node(s, r));
    if (!l.empty())
        out.push_back(BinaryTree::node(l.left(), BinaryTree::node(l.right(), r)));
    for (auto& s : rotation_successors(r))
        out.push_back(BinaryTree::node(l, s));
    return out;
}

// Swap a down step with the primitive path that follows it.
inline std::vector<std::string> dyck_rotations(const std::string& d)
{
    std::vector<std::string> out;
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] != '0' || d[i + 1] != '1')
            continue;
        int h = 0;
        size_t j = i + 1;
        for (; j < d.size(); ++j) {
            h += d[j] == '1' ? 1 : -1;
            if (h == 0)
                break;
        }
        out.push_back(d.substr(0, i) + d.substr(i + 1, j - i) + "0" + d.substr(j + 1));
    }
    return out;
}

struct PlanarTree {
    std::vector<PlanarTree> children;

    int size() const
    {
        int s = 1;
        for (const auto& c : children)
            s += c.size();
        return s;
    }

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.children == b.children; }
};

namespace detail {

inline void planar_insert_left(const BinaryTree& t, std::vector<PlanarTree>& list)
{
    if (t.empty())
        return;
    planar_insert_left(t.left(), list);
    PlanarTree x;
    planar_insert_left(t.right(), x.children);
    list.push_back(std::move(x));
}

inline void planar_insert_right(const BinaryTree& t, std::vector<PlanarTree>& list)
{
    if (t.empty())
        return;
    PlanarTree x;
    planar_insert_right(t.left(), x.children);
    list.push_back(std::move(x));
    planar_insert_right(t.right(), list);
}

inline BinaryTree planar_list_left(const std::vector<PlanarTree>& list)
{
    BinaryTree t;
    for (const auto& c : list)
        t = BinaryTree::node(t, planar_list_left(c.children));
    return t;
}

inline BinaryTree planar_list_right(const std::vector<PlanarTree>& list, size_t from = 0)
{
    if (from >= list.size())
        return {};
    return BinaryTree::node(planar_list_right(list[from].children), planar_list_right(list, from + 1));
}

} // namespace detail

// Left variant: left children become left siblings, right children become children.
inline PlanarTree to_planar(const BinaryTree& t, Side side = Side::left)
{
    PlanarTree root;
    if (side == Side::left)
        detail::planar_insert_left(t, root.children);
    else
        detail::planar_insert_right(t, root.children);
    return root;
}

inline BinaryTree from_planar(const PlanarTree& p, Side side = Side::left)
{
    return side == Side::left ? detail::planar_list_left(p.children) : detail::planar_list_right(p.children);
}

inline std::string planar_to_dyck(const PlanarTree& p)
{
    std::string s;
    for (const auto& c : p.children)
        s += "1" + planar_to_dyck(c) + "0";
    return s;
}

inline std::string to_string(const PlanarTree& p)
{
    std::string s = "(";
    for (const auto& c : p.children)
        s += to_string(c);
    return s + ")";
}

// A labeled binary tree is its shape together with its labels in infix order.
struct LabeledTree {
    BinaryTree shape;
    std::vector<int> infix;
};

// Insertion from right to left into a binary search tree (ties go left).
inline BinaryTree bst_shape(const std::vector<int>& word)
{
    if (word.empty())
        return {};
    const int r = word.back();
    std::vector<int> lo, hi;
    for (size_t i = 0; i + 1 < word.size(); ++i)
        (word[i] <= r ? lo : hi).push_back(word[i]);
    return BinaryTree::node(bst_shape(lo), bst_shape(hi));
}

inline LabeledTree bst_insert(const std::vector<int>& word)
{
    LabeledTree t{bst_shape(word), word};
    std::sort(t.infix.begin(), t.infix.end());
    return t;
}

inline LabeledTree decreasing_tree(const Perm& sigma)
{
    std::function<BinaryTree(size_t, size_t)> build = [&](size_t from, size_t to) -> BinaryTree {
        if (from >= to)
            return {};
        const size_t p = std::max_element(sigma.begin() + from, sigma.begin() + to) - sigma.begin();
        return BinaryTree::node(build(from, p), build(p + 1, to));
    };
    return {build(0, sigma.size()), sigma};
}

namespace detail {

inline void read_postorder(const BinaryTree& t, int offset, bool right_first, Perm& out)
{
    if (t.empty())
        return;
    const int root = offset + t.left().size() + 1;
    if (right_first) {
        read_postorder(t.right(), root, true, out);
        read_postorder(t.left(), offset, true, out);
    } else {
        read_postorder(t.left(), offset, false, out);
        read_postorder(t.right(), root, false, out);
    }
    out.push_back(root);
}

inline void shuffles(const Perm& a, const Perm& b, size_t i, size_t j, Perm& cur, std::vector<Perm>& out)
{
    if (i == a.size() && j == b.size()) {
        out.push_back(cur);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        shuffles(a, b, i + 1, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        shuffles(a, b, i, j + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

// All interleavings of two words, with multiplicity.
inline std::vector<Word> shuffle(const Word& a, const Word& b)
{
    std::vector<Word> out;
    Word cur;
    detail::shuffles(a, b, 0, 0, cur, out);
    return out;
}

// Right child, left child, root on the standard binary search labeling: maximum of the class.
inline Perm canonical_word(const BinaryTree& t)
{
    Perm p;
    detail::read_postorder(t, 0, true, p);
    return p;
}

// Left child, right child, root: minimum of the class.
inline Perm min_word(const BinaryTree& t)
{
    Perm p;
    detail::read_postorder(t, 0, false, p);
    return p;
}

inline std::vector<Perm> sylvester_class(const BinaryTree& t)
{
    if (t.empty())
        return {Perm{}};
    const int k = t.left().size() + 1;
    auto left = sylvester_class(t.left());
    auto right = sylvester_class(t.right());
    std::vector<Perm> out;
    for (const auto& a : left)
        for (auto b : right) {
            for (int& v : b)
                v += k;
            for (auto& w : shuffle(a, b)) {
                w.push_back(k);
                out.push_back(std::move(w));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Permutations whose decreasing tree has shape t.
inline std::vector<Perm> decreasing_labelings(const BinaryTree& t)
{
    std::vector<Perm> out;
    for (const auto& s : sylvester_class(t))
        out.push_back(inverse(s));
    std::sort(out.begin(), out.end());
    return out;
}

inline unsigned long long hook_count(const BinaryTree& t)
{
    const int n = t.size();
    if (n > 20)
        throw std::invalid_argument("tree too large for hook count");
    std::vector<int> hooks;
    std::function<void(const BinaryTree&)> collect = [&](const BinaryTree& s) {
        if (s.empty())
            return;
        hooks.push_back(s.size());
        collect(s.left());
        collect(s.right());
    };
    collect(t);
    mpz_class num = 1, den = 1;
    for (int i = 2; i <= n; ++i)
        num *= i;
    for (int h : hooks)
        den *= h;
    return mpz_class(num / den).get_ui();
}

inline BinaryTree graft_leftmost(const BinaryTree& host, const BinaryTree& t)
{
    if (host.empty())
        return t;
    return BinaryTree::node(graft_leftmost(host.left(), t), host.right());
}

inline BinaryTree graft_rightmost(const BinaryTree& host, const BinaryTree& t)
{
    if (host.empty())
        return t;
    return BinaryTree::node(host.left(), graft_rightmost(host.right(), t));
}

} // namespace algcomb
