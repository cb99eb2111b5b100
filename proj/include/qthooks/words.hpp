#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace qth {

using Word = std::vector<int>;

// +1 / -1 per position; -1 is the "barred" sign.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<int8_t> s) : s_(std::move(s)) {}
    static SignVector all_plus(size_t n) { return SignVector(std::vector<int8_t>(n, 1)); }

    size_t size() const { return s_.size(); }
    int operator[](size_t i) const { return s_[i]; }
    bool all_positive() const;
    int num_minus() const;  // m(eps)
    void set(size_t i, int v) { s_[i] = static_cast<int8_t>(v); }

    friend auto operator<=>(const SignVector&, const SignVector&) = default;
    std::string str() const;  // e.g. "+-+"

private:
    std::vector<int8_t> s_;
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(Word w);  // validates 1..n rearrangement

    size_t size() const { return w_.size(); }
    int operator[](size_t i) const { return w_[i]; }  // 0-based access
    const Word& word() const { return w_; }

    Permutation inverse() const;
    // (a compose b)(i) = a(b(i))
    Permutation compose(const Permutation& b) const;
    Permutation shifted(int k) const;  // values + k (no longer a permutation of 1..n)

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    std::string str() const;

private:
    Word w_;
};

struct SignedWord {
    Word word;
    SignVector signs;

    size_t size() const { return word.size(); }
    friend auto operator<=>(const SignedWord&, const SignedWord&) = default;
    std::string str() const;  // comma list with leading minus on barred letters
};

struct SignedPermutation {
    Permutation perm;
    SignVector signs;

    SignedPermutation() = default;
    SignedPermutation(Permutation p, SignVector s);
    explicit SignedPermutation(Permutation p);  // all plus

    size_t size() const { return perm.size(); }
    bool unsigned_key() const { return signs.all_positive(); }
    SignedWord as_word() const { return {perm.word(), signs}; }
    // inverse in the wreath product {+-1} wr S_n
    SignedPermutation inverse() const;

    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
    std::string str() const;
};

class PackedWord {
public:
    PackedWord() = default;
    explicit PackedWord(Word w);  // validates packedness

    size_t size() const { return w_.size(); }
    int operator[](size_t i) const { return w_[i]; }
    const Word& word() const { return w_; }
    int max_letter() const { return w_.empty() ? 0 : *std::max_element(w_.begin(), w_.end()); }
    int num_max_letters() const;  // Nmax

    friend auto operator<=>(const PackedWord&, const PackedWord&) = default;
    std::string str() const;

private:
    Word w_;
};

class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);  // validates positivity

    size_t num_parts() const { return parts_.size(); }
    int operator[](size_t i) const { return parts_[i]; }
    const std::vector<int>& parts() const { return parts_; }
    int weight() const;  // n

    std::set<int> descent_set() const;
    static Composition from_descents(const std::set<int>& des, int n);
    int maj() const;  // sum of descents
    Composition reversed() const;  // mirror image
    Composition conjugate() const;

    // J finer than I  <=>  Des(I) subset of Des(J)
    bool finer_than(const Composition& coarser) const;

    friend auto operator<=>(const Composition&, const Composition&) = default;
    std::string str() const;

private:
    std::vector<int> parts_;
};

struct SignedComposition {
    Composition comp;
    SignVector signs;  // one per part

    friend auto operator<=>(const SignedComposition&, const SignedComposition&) = default;
    std::string str() const;  // parts with leading minus on signed parts
};

// --- standardization and packing maps ---

Permutation std_word(const Word& w);

// Standardization of signed words for the order
// ... < bar(a2) < bar(a1) < a1 < a2 < ...  (key = sign * letter).
// Ties among equal barred letters are labelled right to left, among equal
// unbarred letters left to right.
Permutation signed_std(const SignedWord& w);

// Std: standardize the underlying word, keep the signs.
SignedPermutation signed_Std(const SignedWord& w);

PackedWord pack(const Word& w);
PackedWord biword_pack(const Word& u, const Word& v);  // lexicographic on columns

bool is_regular(const SignedWord& w);
// Super-packing f_eps applied letterwise; requires a regular word.
PackedWord spack(const SignedWord& w);

// --- statistics ---

std::set<int> descent_set(const Word& w);
std::set<int> descent_set(const SignedWord& w);  // on keys sign*letter
int maj(const Word& w);
int maj(const SignedWord& w);
Composition descent_composition(const Permutation& p);
Composition descent_composition(const SignedWord& w);

std::vector<int> evaluation(const Word& w);           // ev, padded over 1..max
Composition packed_evaluation(const Word& w);         // Ipack: zeros removed
SignedComposition signed_evaluation(const SignedWord& w);  // sev, regular only

std::set<int> peaks(const Composition& I);
std::set<int> valleys(const Composition& I);
// Number of forced-minus cells when signing a ribbon of shape J to obtain
// shape I; the exponent of t in the closed form of R_I(A|tA).
int b_statistic(const Composition& I, const Composition& J);
Composition mirror_shape(const Permutation& p);

// --- refinement order on packed words ---

// v >= u : u is the image of v under a nondecreasing map on values
bool finer(const PackedWord& v, const PackedWord& u);
// all w with fine >= w >= coarse
std::vector<PackedWord> refinement_interval(const PackedWord& fine,
                                            const PackedWord& coarse);
std::vector<PackedWord> words_finer_than(const PackedWord& u);

// --- enumeration ---

std::vector<Permutation> all_permutations(int n);
std::vector<PackedWord> all_packed_words(int n);
std::vector<SignVector> all_sign_vectors(int n);
std::vector<Composition> all_compositions(int n);

// all sign assignments on letter values 1..max(u), as per-letter signs
std::vector<SignVector> all_letter_signs(const PackedWord& u);
// position signs of u for a given per-letter sign assignment
SignVector letter_signs_to_positions(const PackedWord& u, const SignVector& per_letter);

// --- parsing ---

Word parse_word(const std::string& text);        // "4132" or "10,1,11"
SignedWord parse_signed_word(const std::string& text);  // "3,-4,2,1"
Composition parse_composition(const std::string& text);

}  // namespace qth
