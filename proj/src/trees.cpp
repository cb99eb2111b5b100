#include "qthooks/trees.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qth {

struct BinaryTree::Node {
    BinaryTree left, right;
    int size = 0;
};

struct PlaneTree::Node {
    std::vector<PlaneTree> children;
    int regions = 0;
};

BinaryTree::BinaryTree(BinaryTree left, BinaryTree right) {
    auto n = std::make_shared<Node>();
    n->size = 1 + left.size() + right.size();
    n->left = std::move(left);
    n->right = std::move(right);
    node_ = std::move(n);
}

int BinaryTree::size() const { return node_ ? node_->size : 0; }

const BinaryTree& BinaryTree::left() const {
    static const BinaryTree empty;
    return node_ ? node_->left : empty;
}

const BinaryTree& BinaryTree::right() const {
    static const BinaryTree empty;
    return node_ ? node_->right : empty;
}

int BinaryTree::compare(const BinaryTree& a, const BinaryTree& b) {
    if (a.node_ == b.node_) return 0;
    if (!a.node_) return -1;
    if (!b.node_) return 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    if (int c = compare(a.left(), b.left()); c != 0) return c;
    return compare(a.right(), b.right());
}

namespace {

BinaryTree parse_bt(const std::string& s, size_t& pos) {
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        return BinaryTree();
    }
    if (pos >= s.size() || s[pos] != '(')
        throw std::invalid_argument("binary tree: expected '(' or '.'");
    ++pos;
    BinaryTree l = parse_bt(s, pos);
    if (pos >= s.size() || s[pos] != ',')
        throw std::invalid_argument("binary tree: expected ','");
    ++pos;
    BinaryTree r = parse_bt(s, pos);
    if (pos >= s.size() || s[pos] != ')')
        throw std::invalid_argument("binary tree: expected ')'");
    ++pos;
    return BinaryTree(std::move(l), std::move(r));
}

}  // namespace

BinaryTree BinaryTree::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    size_t pos = 0;
    BinaryTree t = parse_bt(s, pos);
    if (pos != s.size()) throw std::invalid_argument("binary tree: trailing input");
    return t;
}

std::string BinaryTree::str() const {
    if (empty()) return ".";
    return "(" + left().str() + "," + right().str() + ")";
}

PlaneTree::PlaneTree(std::vector<PlaneTree> children) {
    if (children.size() < 2)
        throw std::invalid_argument("plane tree nodes need arity >= 2");
    auto n = std::make_shared<Node>();
    n->regions = int(children.size()) - 1;
    for (const auto& c : children) n->regions += c.regions();
    n->children = std::move(children);
    node_ = std::move(n);
}

int PlaneTree::arity() const { return node_ ? int(node_->children.size()) : 0; }

int PlaneTree::regions() const { return node_ ? node_->regions : 0; }

const std::vector<PlaneTree>& PlaneTree::children() const {
    static const std::vector<PlaneTree> none;
    return node_ ? node_->children : none;
}

int PlaneTree::compare(const PlaneTree& a, const PlaneTree& b) {
    if (a.node_ == b.node_) return 0;
    if (!a.node_) return -1;
    if (!b.node_) return 1;
    if (a.regions() != b.regions()) return a.regions() < b.regions() ? -1 : 1;
    if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
    for (int i = 0; i < a.arity(); ++i)
        if (int c = compare(a.children()[i], b.children()[i]); c != 0) return c;
    return 0;
}

namespace {

PlaneTree parse_pt(const std::string& s, size_t& pos) {
    if (pos >= s.size() || s[pos] != '(')
        throw std::invalid_argument("plane tree: expected '('");
    ++pos;
    std::vector<PlaneTree> children;
    for (;;) {
        if (pos < s.size() && (s[pos] == ',' || s[pos] == ')')) {
            children.push_back(PlaneTree());  // empty slot = leaf
        } else {
            children.push_back(parse_pt(s, pos));
        }
        if (pos >= s.size()) throw std::invalid_argument("plane tree: unterminated");
        if (s[pos] == ',') { ++pos; continue; }
        if (s[pos] == ')') { ++pos; break; }
        throw std::invalid_argument("plane tree: expected ',' or ')'");
    }
    return PlaneTree(std::move(children));
}

}  // namespace

PlaneTree PlaneTree::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    size_t pos = 0;
    PlaneTree t = parse_pt(s, pos);
    if (pos != s.size()) throw std::invalid_argument("plane tree: trailing input");
    return t;
}

std::string PlaneTree::str() const {
    if (leaf()) return "";
    std::string r = "(";
    for (int i = 0; i < arity(); ++i) {
        if (i) r += ",";
        r += children()[i].str();
    }
    return r + ")";
}

// ---------------------------------------------------------------------------

namespace {

BinaryTree bst_from(const Word& order) {
    // label-based insertion, then drop labels
    struct N { int v; int l = -1, r = -1; };
    std::vector<N> pool;
    int root = -1;
    for (int x : order) {
        pool.push_back({x});
        int idx = int(pool.size()) - 1;
        if (root < 0) { root = idx; continue; }
        int cur = root;
        for (;;) {
            if (x < pool[cur].v) {
                if (pool[cur].l < 0) { pool[cur].l = idx; break; }
                cur = pool[cur].l;
            } else {
                if (pool[cur].r < 0) { pool[cur].r = idx; break; }
                cur = pool[cur].r;
            }
        }
    }
    std::function<BinaryTree(int)> shape = [&](int i) -> BinaryTree {
        if (i < 0) return BinaryTree();
        return BinaryTree(shape(pool[i].l), shape(pool[i].r));
    };
    return shape(root);
}

}  // namespace

BinaryTree bst_insert(const Permutation& sigma) {
    Word order(sigma.word().rbegin(), sigma.word().rend());
    return bst_from(order);
}

std::vector<Permutation> sylvester_class(const BinaryTree& t) {
    std::vector<Permutation> res;
    for (const Permutation& p : all_permutations(t.size()))
        if (bst_insert(p) == t) res.push_back(p);
    return res;
}

PlaneTree decreasing_plane_tree(const PackedWord& u) {
    std::function<PlaneTree(const Word&)> rec = [&](const Word& w) -> PlaneTree {
        if (w.empty()) return PlaneTree();
        int mx = *std::max_element(w.begin(), w.end());
        std::vector<PlaneTree> children;
        Word seg;
        for (int x : w) {
            if (x == mx) {
                children.push_back(rec(seg));
                seg.clear();
            } else {
                seg.push_back(x);
            }
        }
        children.push_back(rec(seg));
        return PlaneTree(std::move(children));
    };
    return rec(u.word());
}

std::vector<PackedWord> plane_class(const PlaneTree& t) {
    std::vector<PackedWord> res;
    for (const PackedWord& u : all_packed_words(t.regions()))
        if (decreasing_plane_tree(u) == t) res.push_back(u);
    return res;
}

std::vector<RegionStat> region_stats(const PlaneTree& t) {
    std::vector<RegionStat> out;
    std::function<void(const PlaneTree&)> rec = [&](const PlaneTree& s) {
        if (s.leaf()) return;
        out.push_back({s.arity(), s.regions()});
        for (const auto& c : s.children()) rec(c);
    };
    rec(t);
    return out;
}

std::vector<BinaryTree> all_binary_trees(int n) {
    static std::map<int, std::vector<BinaryTree>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BinaryTree> res;
    if (n == 0) {
        res.push_back(BinaryTree());
    } else {
        for (int k = 0; k < n; ++k)
            for (const auto& l : all_binary_trees(k))
                for (const auto& r : all_binary_trees(n - 1 - k))
                    res.push_back(BinaryTree(l, r));
    }
    cache[n] = res;
    return res;
}

std::vector<PlaneTree> all_plane_trees(int regions) {
    static std::map<int, std::vector<PlaneTree>> cache;
    auto it = cache.find(regions);
    if (it != cache.end()) return it->second;
    std::vector<PlaneTree> res;
    if (regions == 0) {
        res.push_back(PlaneTree());
    } else {
        // root of arity a >= 2 contributes a-1 regions; distribute the rest
        for (int a = 2; a - 1 <= regions; ++a) {
            int rest = regions - (a - 1);
            std::vector<std::vector<PlaneTree>> slots(a);
            std::function<void(int, int, std::vector<PlaneTree>&)> rec =
                [&](int slot, int budget, std::vector<PlaneTree>& acc) {
                    if (slot == a) {
                        if (budget == 0) res.push_back(PlaneTree(acc));
                        return;
                    }
                    for (int r = 0; r <= budget; ++r)
                        for (const auto& c : all_plane_trees(r)) {
                            acc.push_back(c);
                            rec(slot + 1, budget - r, acc);
                            acc.pop_back();
                        }
                };
            std::vector<PlaneTree> acc;
            rec(0, rest, acc);
        }
    }
    cache[regions] = res;
    return res;
}

}  // namespace qth
