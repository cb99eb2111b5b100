#include "qthooks/words.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qth {

bool SignVector::all_positive() const {
    return std::all_of(s_.begin(), s_.end(), [](int8_t v) { return v > 0; });
}

int SignVector::num_minus() const {
    return int(std::count_if(s_.begin(), s_.end(), [](int8_t v) { return v < 0; }));
}

std::string SignVector::str() const {
    std::string r;
    for (int8_t v : s_) r += (v > 0 ? '+' : '-');
    return r;
}

Permutation::Permutation(Word w) : w_(std::move(w)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
        if (v < 1 || v > int(w_.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::inverse() const {
    Word r(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) r[w_[i] - 1] = int(i) + 1;
    return Permutation(r);
}

Permutation Permutation::compose(const Permutation& b) const {
    if (size() != b.size()) throw std::invalid_argument("size mismatch in compose");
    Word r(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) r[i] = w_[b.w_[i] - 1];
    return Permutation(r);
}

Permutation Permutation::shifted(int k) const {
    Permutation p;
    p.w_ = w_;
    for (int& v : p.w_) v += k;
    return p;
}

std::string Permutation::str() const {
    bool digits = size() <= 9;
    std::ostringstream os;
    for (size_t i = 0; i < w_.size(); ++i) {
        if (!digits && i) os << ",";
        os << w_[i];
    }
    return os.str();
}

std::string SignedWord::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) os << ",";
        os << (signs[i] < 0 ? -word[i] : word[i]);
    }
    return os.str();
}

SignedPermutation::SignedPermutation(Permutation p, SignVector s)
    : perm(std::move(p)), signs(std::move(s)) {
    if (perm.size() != signs.size())
        throw std::invalid_argument("sign vector length mismatch");
}

SignedPermutation::SignedPermutation(Permutation p)
    : perm(std::move(p)), signs(SignVector::all_plus(perm.size())) {}

SignedPermutation SignedPermutation::inverse() const {
    Permutation pi = perm.inverse();
    std::vector<int8_t> s(size());
    for (size_t i = 0; i < size(); ++i) s[i] = int8_t(signs[pi[i] - 1]);
    return SignedPermutation(pi, SignVector(std::move(s)));
}

std::string SignedPermutation::str() const {
    if (signs.all_positive()) return perm.str();
    return as_word().str();
}

PackedWord::PackedWord(Word w) : w_(std::move(w)) {
    int mx = 0;
    for (int v : w_) {
        if (v < 1) throw std::invalid_argument("packed word letters must be positive");
        mx = std::max(mx, v);
    }
    std::vector<bool> seen(mx, false);
    for (int v : w_) seen[v - 1] = true;
    for (bool b : seen)
        if (!b) throw std::invalid_argument("word is not packed");
}

int PackedWord::num_max_letters() const {
    int m = max_letter();
    return int(std::count(w_.begin(), w_.end(), m));
}

std::string PackedWord::str() const {
    bool digits = max_letter() <= 9;
    std::ostringstream os;
    for (size_t i = 0; i < w_.size(); ++i) {
        if (!digits && i) os << ",";
        os << w_[i];
    }
    return os.str();
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::set<int> Composition::descent_set() const {
    std::set<int> d;
    int c = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        c += parts_[i];
        d.insert(c);
    }
    return d;
}

Composition Composition::from_descents(const std::set<int>& des, int n) {
    std::vector<int> parts;
    int prev = 0;
    for (int d : des) {
        parts.push_back(d - prev);
        prev = d;
    }
    parts.push_back(n - prev);
    return Composition(parts);
}

int Composition::maj() const {
    int s = 0, c = 0;
    for (size_t i = 0; i + 1 < parts_.size(); ++i) {
        c += parts_[i];
        s += c;
    }
    return s;
}

Composition Composition::reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Composition(p);
}

Composition Composition::conjugate() const {
    // descents of the conjugate are the complement of the reversed descents
    int n = weight();
    std::set<int> des = descent_set(), comp;
    for (int i = 1; i < n; ++i)
        if (!des.count(n - i)) comp.insert(i);
    return Composition::from_descents(comp, n);
}

bool Composition::finer_than(const Composition& coarser) const {
    if (weight() != coarser.weight()) return false;
    auto mine = descent_set();
    for (int d : coarser.descent_set())
        if (!mine.count(d)) return false;
    return true;
}

std::string Composition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

std::string SignedComposition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < comp.num_parts(); ++i) {
        if (i) os << ",";
        os << (signs[i] < 0 ? -comp[i] : comp[i]);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Permutation std_word(const Word& w) {
    size_t n = w.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](size_t a, size_t b) { return w[a] < w[b]; });
    Word out(n);
    for (size_t r = 0; r < n; ++r) out[idx[r]] = int(r) + 1;
    return Permutation(out);
}

Permutation signed_std(const SignedWord& w) {
    size_t n = w.size();
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto key = [&](size_t i) { return w.signs[i] < 0 ? -w.word[i] : w.word[i]; };
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int ka = key(a), kb = key(b);
        if (ka != kb) return ka < kb;
        // equal keys share a sign; barred ties break right to left
        return ka < 0 ? a > b : a < b;
    });
    Word out(n);
    for (size_t r = 0; r < n; ++r) out[idx[r]] = int(r) + 1;
    return Permutation(out);
}

SignedPermutation signed_Std(const SignedWord& w) {
    return SignedPermutation(std_word(w.word), w.signs);
}

PackedWord pack(const Word& w) {
    std::map<int, int> rank;
    for (int v : w) rank[v] = 0;
    int r = 0;
    for (auto& [v, rk] : rank) rk = ++r;
    Word out;
    out.reserve(w.size());
    for (int v : w) out.push_back(rank[v]);
    return PackedWord(out);
}

PackedWord biword_pack(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("biword rows must have equal length");
    std::map<std::pair<int, int>, int> rank;
    for (size_t i = 0; i < u.size(); ++i) rank[{u[i], v[i]}] = 0;
    int r = 0;
    for (auto& [p, rk] : rank) rk = ++r;
    Word out;
    out.reserve(u.size());
    for (size_t i = 0; i < u.size(); ++i) out.push_back(rank[{u[i], v[i]}]);
    return PackedWord(out);
}

bool is_regular(const SignedWord& w) {
    std::map<int, int> sign_of;
    for (size_t i = 0; i < w.size(); ++i) {
        auto [it, inserted] = sign_of.emplace(w.word[i], w.signs[i]);
        if (!inserted && it->second != w.signs[i]) return false;
    }
    return true;
}

PackedWord spack(const SignedWord& w) {
    if (!is_regular(w)) throw std::invalid_argument("spack requires a regular word");
    PackedWord u = pack(w.word);
    int m = u.max_letter();
    // sign per packed letter value
    std::vector<int> sign_of(m + 1, 1);
    for (size_t i = 0; i < w.size(); ++i) sign_of[u[i]] = w.signs[i];
    std::vector<int> f(m + 1);
    f[1] = 1;
    for (int v = 2; v <= m; ++v) f[v] = sign_of[v - 1] < 0 ? f[v - 1] : f[v - 1] + 1;
    Word out;
    out.reserve(w.size());
    for (size_t i = 0; i < w.size(); ++i) out.push_back(f[u[i]]);
    return PackedWord(out);
}

// ---------------------------------------------------------------------------

std::set<int> descent_set(const Word& w) {
    std::set<int> d;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.insert(int(i) + 1);
    return d;
}

std::set<int> descent_set(const SignedWord& w) {
    std::set<int> d;
    auto key = [&](size_t i) { return w.signs[i] < 0 ? -w.word[i] : w.word[i]; };
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (key(i) > key(i + 1)) d.insert(int(i) + 1);
    return d;
}

int maj(const Word& w) {
    int s = 0;
    for (int d : descent_set(w)) s += d;
    return s;
}

int maj(const SignedWord& w) {
    int s = 0;
    for (int d : descent_set(w)) s += d;
    return s;
}

Composition descent_composition(const Permutation& p) {
    return Composition::from_descents(descent_set(p.word()), int(p.size()));
}

Composition descent_composition(const SignedWord& w) {
    return Composition::from_descents(descent_set(w), int(w.size()));
}

std::vector<int> evaluation(const Word& w) {
    int mx = 0;
    for (int v : w) mx = std::max(mx, v);
    std::vector<int> ev(mx, 0);
    for (int v : w) ++ev[v - 1];
    return ev;
}

Composition packed_evaluation(const Word& w) {
    std::vector<int> parts;
    for (int c : evaluation(w))
        if (c > 0) parts.push_back(c);
    return Composition(parts);
}

SignedComposition signed_evaluation(const SignedWord& w) {
    if (!is_regular(w))
        throw std::invalid_argument("sev requires a regular word");
    PackedWord u = pack(w.word);
    int m = u.max_letter();
    std::vector<int> counts(m, 0);
    std::vector<int8_t> signs(m, 1);
    for (size_t i = 0; i < w.size(); ++i) {
        ++counts[u[i] - 1];
        signs[u[i] - 1] = int8_t(w.signs[i]);
    }
    return {Composition(counts), SignVector(std::move(signs))};
}

std::set<int> peaks(const Composition& I) {
    int n = I.weight();
    auto des = I.descent_set();
    std::set<int> p;
    for (int i = 1; i <= n; ++i) {
        bool no_top = (i == 1) || !des.count(i - 1);
        bool no_right = (i == n) || des.count(i);
        if (no_top && no_right) p.insert(i);
    }
    return p;
}

std::set<int> valleys(const Composition& I) {
    int n = I.weight();
    auto des = I.descent_set();
    std::set<int> v;
    for (int i = 1; i <= n; ++i) {
        bool no_left = (i == 1) || des.count(i - 1);
        bool no_bottom = (i == n) || !des.count(i);
        if (no_left && no_bottom) v.insert(i);
    }
    return v;
}

int b_statistic(const Composition& I, const Composition& J) {
    auto di = I.descent_set(), dj = J.descent_set();
    std::set<int> cells;
    for (int d : dj)
        if (!di.count(d)) cells.insert(d);
    for (int d : di)
        if (!dj.count(d)) cells.insert(d + 1);
    return int(cells.size());
}

Composition mirror_shape(const Permutation& p) {
    return descent_composition(p).reversed();
}

// ---------------------------------------------------------------------------

bool finer(const PackedWord& v, const PackedWord& u) {
    if (v.size() != u.size()) return false;
    int mv = v.max_letter();
    std::vector<int> g(mv + 1, 0);
    for (size_t i = 0; i < v.size(); ++i) {
        int a = v[i], b = u[i];
        if (g[a] && g[a] != b) return false;
        g[a] = b;
    }
    for (int a = 1; a + 1 <= mv; ++a)
        if (g[a] > g[a + 1]) return false;
    return true;
}

std::vector<PackedWord> words_finer_than(const PackedWord& u) {
    std::vector<PackedWord> res;
    for (const PackedWord& v : all_packed_words(int(u.size())))
        if (finer(v, u)) res.push_back(v);
    return res;
}

std::vector<PackedWord> refinement_interval(const PackedWord& fine,
                                            const PackedWord& coarse) {
    std::vector<PackedWord> res;
    for (const PackedWord& w : all_packed_words(int(fine.size())))
        if (finer(fine, w) && finer(w, coarse)) res.push_back(w);
    return res;
}

// ---------------------------------------------------------------------------

std::vector<Permutation> all_permutations(int n) {
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> res;
    do res.push_back(Permutation(w));
    while (std::next_permutation(w.begin(), w.end()));
    return res;
}

std::vector<PackedWord> all_packed_words(int n) {
    std::vector<PackedWord> res;
    if (n == 0) {
        res.push_back(PackedWord(Word{}));
        return res;
    }
    // surjections onto {1..m} for each m; prune when too few positions remain
    Word w(n, 1);
    std::function<void(int, int, unsigned)> rec = [&](int pos, int m, unsigned used) {
        int missing = m - int(std::popcount(used));
        if (n - pos < missing) return;
        if (pos == n) {
            res.push_back(PackedWord(w));
            return;
        }
        for (int v = 1; v <= m; ++v) {
            w[pos] = v;
            rec(pos + 1, m, used | (1u << (v - 1)));
        }
    };
    for (int m = 1; m <= n; ++m) rec(0, m, 0);
    std::sort(res.begin(), res.end());
    return res;
}

std::vector<SignVector> all_sign_vectors(int n) {
    std::vector<SignVector> res;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int8_t> s(n);
        for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
        res.push_back(SignVector(std::move(s)));
    }
    return res;
}

std::vector<Composition> all_compositions(int n) {
    std::vector<Composition> res;
    if (n == 0) return res;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> des;
        for (int i = 1; i < n; ++i)
            if ((mask >> (i - 1)) & 1) des.insert(i);
        res.push_back(Composition::from_descents(des, n));
    }
    return res;
}

std::vector<SignVector> all_letter_signs(const PackedWord& u) {
    return all_sign_vectors(u.max_letter());
}

SignVector letter_signs_to_positions(const PackedWord& u, const SignVector& per_letter) {
    std::vector<int8_t> s(u.size());
    for (size_t i = 0; i < u.size(); ++i) s[i] = int8_t(per_letter[u[i] - 1]);
    return SignVector(std::move(s));
}

// ---------------------------------------------------------------------------

Word parse_word(const std::string& text) {
    Word w;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c == ' ') continue;
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad word: " + text);
            w.push_back(c - '0');
        }
        return w;
    }
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
    return w;
}

SignedWord parse_signed_word(const std::string& text) {
    Word raw;
    if (text.find(',') == std::string::npos && text.find('-') == std::string::npos) {
        raw = parse_word(text);
    } else {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) raw.push_back(std::stoi(tok));
    }
    Word w;
    std::vector<int8_t> s;
    for (int v : raw) {
        w.push_back(std::abs(v));
        s.push_back(v < 0 ? -1 : 1);
    }
    return {w, SignVector(std::move(s))};
}

Composition parse_composition(const std::string& text) {
    return Composition(parse_word(text));
}

}  // namespace qth
