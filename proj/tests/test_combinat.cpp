#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qthooks/trees.hpp"
#include "qthooks/words.hpp"

#include <map>

using namespace qth;

TEST_CASE("standardization") {
    // std(bbacab) = 341625 with a<b<c
    Word w = {2, 2, 1, 3, 1, 2};
    CHECK(std_word(w) == Permutation({3, 4, 1, 6, 2, 5}));
    CHECK(std_word({1, 2, 3}) == Permutation({1, 2, 3}));
    CHECK(std_word({2, 2, 1}) == Permutation({2, 3, 1}));
    // std is idempotent on its output
    CHECK(std_word(std_word(w).word()) == std_word(w));
}

TEST_CASE("signed standardization") {
    CHECK(signed_std(parse_signed_word("3,-4,2,1")) == Permutation({4, 1, 3, 2}));
    CHECK(signed_std(parse_signed_word("1,-4,-2,-3")) == Permutation({4, 1, 3, 2}));
    // right-to-left tie break on equal barred letters
    CHECK(signed_std(parse_signed_word("-1,-1")) == Permutation({2, 1}));
    // left-to-right on equal unbarred letters
    CHECK(signed_std(parse_signed_word("1,1")) == Permutation({1, 2}));
    // agrees with std on all-positive input
    for (int v1 = 1; v1 <= 3; ++v1)
        for (int v2 = 1; v2 <= 3; ++v2) {
            Word w{v1, v2, 2};
            CHECK(signed_std({w, SignVector::all_plus(3)}) == std_word(w));
        }
}

TEST_CASE("signed Std keeps the signs") {
    SignedWord w = parse_signed_word("2,-2,1,-3");
    SignedPermutation sp = signed_Std(w);
    CHECK(sp.perm == Permutation({2, 3, 1, 4}));
    CHECK(sp.signs == w.signs);
    CHECK(signed_Std(parse_signed_word("-1,-1")).perm == Permutation({1, 2}));
}

TEST_CASE("pack") {
    CHECK(pack({8, 7, 1, 8, 8, 3, 3, 1, 9}) ==
          PackedWord({4, 3, 1, 4, 4, 2, 2, 1, 5}));
    CHECK(pack({5, 9, 5}) == PackedWord({1, 2, 1}));
    PackedWord u({3, 1, 2, 1});
    CHECK(pack(u.word()) == u);
}

TEST_CASE("biword pack") {
    Word u = {4, 2, 4, 1, 2, 2, 5, 3};
    Word v = {5, 3, 1, 5, 4, 3, 2, 3};
    CHECK(biword_pack(u, v) == PackedWord({6, 2, 5, 1, 3, 2, 7, 4}));
    // constant second row reduces to pack
    CHECK(biword_pack({3, 1, 3}, {7, 7, 7}) == pack({3, 1, 3}));
    CHECK(biword_pack({1, 1}, {2, 1}) == PackedWord({2, 1}));
    CHECK_THROWS(biword_pack({1, 2}, {1}));
}

TEST_CASE("spack") {
    CHECK(spack(parse_signed_word("5,-1,-2,-1,3,5,-4,-4,6,-1")) ==
          PackedWord({2, 1, 1, 1, 1, 2, 2, 2, 3, 1}));
    // identity on all-positive packed words
    PackedWord u({2, 1, 3, 1});
    CHECK(spack({u.word(), SignVector::all_plus(4)}) == u);
    CHECK(spack(parse_signed_word("-1,2")) == PackedWord({1, 1}));
    CHECK_THROWS(spack(parse_signed_word("1,-1")));  // not regular
}

TEST_CASE("statistics") {
    Permutation s({4, 1, 3, 2});
    CHECK(maj(s.word()) == 4);
    CHECK(descent_composition(s) == Composition({1, 2, 1}));
    CHECK(mirror_shape(Permutation({5, 6, 7, 4, 3, 2, 8, 9, 10, 1, 11})) ==
          Composition({2, 4, 1, 1, 3}));
    CHECK(packed_evaluation({3, 1, 3, 3}) == Composition({1, 3}));
    SignedWord r = parse_signed_word("1,1,-2,-2,3,1");
    CHECK(signed_evaluation(r).str() == "3,-2,1");
    CHECK(parse_signed_word("-3,1,-3").signs.num_minus() == 2);
}

TEST_CASE("peaks, valleys and the signing exponent") {
    Composition c({2, 4, 1, 1, 3});
    CHECK(c.descent_set() == std::set<int>{2, 6, 7, 8});
    CHECK(c.maj() == 23);
    CHECK(peaks(Composition({2})) == std::set<int>{2});
    CHECK(valleys(Composition({2})) == std::set<int>{1});
    CHECK(peaks(Composition({1, 1})) == std::set<int>{1});
    CHECK(valleys(Composition({1, 1})) == std::set<int>{2});
    // single cell is both a peak and a valley
    CHECK(peaks(Composition({1})) == std::set<int>{1});
    CHECK(valleys(Composition({1})) == std::set<int>{1});
    CHECK(b_statistic(Composition({1, 1}), Composition({2})) == 1);
    CHECK(b_statistic(Composition({2}), Composition({1, 1})) == 1);
    CHECK(b_statistic(Composition({2, 1}), Composition({1, 2})) == 2);
}

TEST_CASE("refinement order") {
    PackedWord u({1, 2, 1});
    auto finer_words = words_finer_than(u);
    CHECK(finer_words == std::vector<PackedWord>{PackedWord({1, 2, 1}),
                                                 PackedWord({1, 3, 2}),
                                                 PackedWord({2, 3, 1})});
    CHECK(finer(u, u));
    auto interval = refinement_interval(PackedWord({2, 3, 1}), PackedWord({1, 2, 1}));
    CHECK(interval == std::vector<PackedWord>{PackedWord({1, 2, 1}),
                                              PackedWord({2, 3, 1})});
    // partial order on words of length <= 4
    for (int n = 1; n <= 4; ++n) {
        auto words = all_packed_words(n);
        for (const auto& a : words)
            for (const auto& b : words) {
                if (finer(a, b) && finer(b, a)) CHECK(a == b);
                for (const auto& c : words)
                    if (finer(a, b) && finer(b, c)) CHECK(finer(a, c));
            }
    }
}

TEST_CASE("packed word counts are the ordered Bell numbers") {
    int expected[] = {1, 1, 3, 13, 75, 541};
    for (int n = 0; n <= 5; ++n)
        CHECK(int(all_packed_words(n).size()) == expected[n]);
}

TEST_CASE("regular signed packed word counts match A004123") {
    long long expected[] = {1, 2, 10, 74, 730};
    for (int n = 0; n <= 4; ++n) {
        long long count = 0;
        for (const auto& u : all_packed_words(n))
            count += 1LL << u.max_letter();
        CHECK(count == expected[n]);
    }
}

TEST_CASE("binary search tree insertion and sylvester classes") {
    CHECK(bst_insert(Permutation({1})) == BinaryTree::parse("(.,.)"));
    // sigma_n is inserted first and becomes the root
    CHECK(bst_insert(Permutation({1, 2})) == BinaryTree::parse("((.,.),.)"));
    CHECK(bst_insert(Permutation({2, 1})) == BinaryTree::parse("(.,(.,.))"));
    int total = 0;
    for (const auto& t : all_binary_trees(3)) {
        auto cls = sylvester_class(t);
        CHECK(!cls.empty());
        total += int(cls.size());
    }
    CHECK(total == 6);
    CHECK(all_binary_trees(3).size() == 5);
    for (const auto& p : all_permutations(4)) {
        auto cls = sylvester_class(bst_insert(p));
        CHECK(std::find(cls.begin(), cls.end(), p) != cls.end());
    }
}

TEST_CASE("paper's 11-node binary search tree has root 3") {
    // shape from Fig. fig-PBT2: the standard BST labelling puts 3 at the root
    BinaryTree t = BinaryTree::parse(
        "((.,(.,.)),(((.,((.,(.,.)),.)),.),((.,.),.)))");
    // left subtree holds {1,2}, so the root label is 3
    CHECK(t.size() == 11);
    CHECK(t.left().size() == 2);
    CHECK(t.right().size() == 8);
    CHECK(t.right().left().size() == 5);
}

TEST_CASE("decreasing plane trees") {
    PackedWord u({2, 4, 3, 4, 1, 1});
    PlaneTree t = decreasing_plane_tree(u);
    CHECK(t.arity() == 3);
    CHECK(t.regions() == 6);
    std::vector<int> child_arities;
    for (const auto& c : t.children()) child_arities.push_back(c.arity());
    CHECK(child_arities == std::vector<int>{2, 2, 3});
    auto stats = region_stats(t);
    CHECK(stats[0].regions == 6);
    CHECK(decreasing_plane_tree(PackedWord({1})) == PlaneTree::parse("(,)"));
    // fiber sizes sum to the ordered Bell numbers
    int expected[] = {0, 1, 3, 13, 75};
    for (int n = 1; n <= 4; ++n) {
        int total = 0;
        for (const auto& pt : all_plane_trees(n)) total += int(plane_class(pt).size());
        CHECK(total == expected[n]);
    }
    // u = 243411 belongs to the fiber of its own tree
    auto fib = plane_class(t);
    CHECK(std::find(fib.begin(), fib.end(), u) != fib.end());
}

TEST_CASE("tree text forms round-trip") {
    for (const auto& t : all_binary_trees(4))
        CHECK(BinaryTree::parse(t.str()) == t);
    for (const auto& t : all_plane_trees(4))
        CHECK(PlaneTree::parse(t.str()) == t);
    CHECK(all_plane_trees(4).size() == 45);
}

TEST_CASE("word parsing") {
    CHECK(parse_word("4132") == Word{4, 1, 3, 2});
    CHECK(parse_word("10,1,11") == Word{10, 1, 11});
    CHECK(parse_signed_word("3,-4,2,1").str() == "3,-4,2,1");
    CHECK(parse_composition("1,2,1") == Composition({1, 2, 1}));
}
