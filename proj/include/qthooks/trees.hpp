#pragma once

#include "qthooks/words.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace qth {

// Immutable binary tree value; the empty tree is a leaf.
// Text form: "(L,R)" with "." for the empty tree, e.g. "((.,.),.)".
class BinaryTree {
public:
    BinaryTree() = default;  // empty
    BinaryTree(BinaryTree left, BinaryTree right);

    bool empty() const { return node_ == nullptr; }
    int size() const;
    const BinaryTree& left() const;
    const BinaryTree& right() const;

    static BinaryTree parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const BinaryTree& a, const BinaryTree& b) {
        return compare(a, b) == 0;
    }
    friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    struct Node;
    static int compare(const BinaryTree& a, const BinaryTree& b);
    std::shared_ptr<const Node> node_;
};

// Plane tree with explicit leaf slots; internal nodes have arity >= 2.
// The empty tree stands for a leaf slot. Regions(T) = sum over internal
// nodes of (arity - 1). Text form: "(c1,...,ck)" with empty slots left
// blank, e.g. "((,),(,),(,,))".
class PlaneTree {
public:
    PlaneTree() = default;  // leaf
    explicit PlaneTree(std::vector<PlaneTree> children);

    bool leaf() const { return node_ == nullptr; }
    int arity() const;
    int regions() const;
    const std::vector<PlaneTree>& children() const;

    static PlaneTree parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
        return compare(a, b) == 0;
    }
    friend std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b) {
        int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    struct Node;
    static int compare(const PlaneTree& a, const PlaneTree& b);
    std::shared_ptr<const Node> node_;
};

// P(sigma): shape of the binary search tree built by inserting the letters
// of sigma from right to left.
BinaryTree bst_insert(const Permutation& sigma);
std::vector<Permutation> sylvester_class(const BinaryTree& t);

// T(u): decreasing plane tree of a packed word (recursive split at the
// maximal letter).
PlaneTree decreasing_plane_tree(const PackedWord& u);
std::vector<PackedWord> plane_class(const PlaneTree& t);

struct RegionStat {
    int arity;
    int regions;  // regions of the subtree rooted here
};
// Per-internal-node (arity, region count), root first, children in order.
std::vector<RegionStat> region_stats(const PlaneTree& t);

std::vector<BinaryTree> all_binary_trees(int n);
std::vector<PlaneTree> all_plane_trees(int regions);

}  // namespace qth
