#include "qthooks/fqsym.hpp"

#include <stdexcept>

namespace qth {
namespace fqsym {

namespace {

// All gamma = u.v with std(u)=alpha, std(v)=beta, as picks of the value set
// of the u part. keep(gamma_has_max_in_u) filters the dendriform halves.
void convolve_keys(const GKey& a, const GKey& b, int keep_max_side,
                   GExpansion& out, const QTRational& coeff) {
    int n = int(a.size()), m = int(b.size());
    int total = n + m;
    std::vector<int> pick(n);  // increasing value choice for the u part
    std::vector<int8_t> signs(total);
    for (int i = 0; i < n; ++i) signs[i] = int8_t(a.signs[i]);
    for (int j = 0; j < m; ++j) signs[n + j] = int8_t(b.signs[j]);
    SignVector sv{std::vector<int8_t>(signs)};

    std::vector<int> comb(n);
    std::function<void(int, int)> rec = [&](int idx, int next) {
        if (idx == n) {
            if (keep_max_side != 0) {
                bool max_in_u = n > 0 && std::find(comb.begin(), comb.end(), total) != comb.end();
                if (keep_max_side > 0 && !max_in_u) return;
                if (keep_max_side < 0 && max_in_u) return;
            }
            std::vector<int> rest;
            rest.reserve(m);
            {
                std::vector<bool> used(total + 1, false);
                for (int v : comb) used[v] = true;
                for (int v = 1; v <= total; ++v)
                    if (!used[v]) rest.push_back(v);
            }
            Word g(total);
            for (int i = 0; i < n; ++i) g[i] = comb[a.perm[i] - 1];
            for (int j = 0; j < m; ++j) g[n + j] = rest[b.perm[j] - 1];
            out.add(GKey(Permutation(g), sv), coeff);
            return;
        }
        for (int v = next; v <= total - (n - idx - 1); ++v) {
            comb[idx] = v;
            rec(idx + 1, v + 1);
        }
    };
    if (n == 0) {
        if (keep_max_side > 0) return;
        Word g(b.perm.word());
        out.add(GKey(Permutation(g), b.signs), coeff);
        return;
    }
    rec(0, 1);
}

}  // namespace

GExpansion product_G(const GExpansion& a, const GExpansion& b) {
    GExpansion out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            convolve_keys(ka, kb, 0, out, ca * cb);
    return out;
}

GKey internal_product_signed(const GKey& a, const GKey& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("internal product needs equal sizes");
    size_t n = a.size();
    Permutation comp = b.perm.compose(a.perm);
    std::vector<int8_t> s(n);
    for (size_t i = 0; i < n; ++i)
        s[i] = int8_t(b.signs[a.perm[i] - 1] * a.signs[i]);
    return GKey(comp, SignVector(std::move(s)));
}

GExpansion internal_product_signed(const GExpansion& a, const GExpansion& b) {
    GExpansion out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add(internal_product_signed(ka, kb), ca * cb);
    return out;
}

GExpansion dendriform_half(const GExpansion& a, const GExpansion& b, Side side) {
    GExpansion out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.size() == 0 || kb.size() == 0)
                throw std::invalid_argument("dendriform halves exclude the unit");
            convolve_keys(ka, kb, side == Side::left ? +1 : -1, out, ca * cb);
        }
    return out;
}

GExpansion superize_G(const Permutation& sigma) {
    int n = int(sigma.size());
    GExpansion out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // mask = set of barred values
        std::vector<int> barred, unbarred;
        for (int v = 1; v <= n; ++v)
            ((mask >> (v - 1)) & 1 ? barred : unbarred).push_back(v);
        int m = int(barred.size());
        // barred values in decreasing order have key ranks 1..m
        Word tau(n);
        std::vector<int8_t> signs(n);
        for (int i = 0; i < n; ++i) {
            int r = sigma[i];
            if (r <= m) {
                tau[i] = barred[m - r];
                signs[i] = -1;
            } else {
                tau[i] = unbarred[r - m - 1];
                signs[i] = 1;
            }
        }
        out.add(GKey(Permutation(tau), SignVector(std::move(signs))),
                QTRational::one());
    }
    return out;
}

namespace {

GExpansion specialize_bar(const Permutation& sigma, bool minus_t) {
    GExpansion out;
    for (const auto& [k, c] : superize_G(sigma).terms()) {
        int m = k.signs.num_minus();
        QTPoly coeff = QTPoly::t(m);
        if (minus_t && m % 2 != 0) coeff = -coeff;
        out.add(GKey(k.perm), c * QTRational(coeff));
    }
    return out;
}

}  // namespace

GExpansion specialize_bar_tA(const Permutation& sigma) {
    return specialize_bar(sigma, false);
}

GExpansion specialize_bar_minus_tA(const Permutation& sigma) {
    return specialize_bar(sigma, true);
}

FExpansion F_times_1mt(const Permutation& sigma) {
    int n = int(sigma.size());
    FExpansion out;
    for (const SignVector& eps : all_sign_vectors(n)) {
        int m = eps.num_minus();
        QTPoly c = QTPoly::t(m);
        if (m % 2 != 0) c = -c;
        out.add(signed_std({sigma.word(), eps}), QTRational(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// hook-content formulas

std::vector<FactorParts> hook_factor_parts(const Permutation& sigma, HookMode mode) {
    int n = int(sigma.size());
    std::vector<FactorParts> fs;
    fs.reserve(n);
    for (int i = 1; i <= n; ++i) {
        int prev2 = (i >= 3) ? sigma[i - 3] : 0;  // sigma_{i-2} with sigma_0 = 0
        int prev = (i >= 2) ? sigma[i - 2] : 0;   // sigma_{i-1}
        int cur = sigma[i - 1];
        QTPoly one_m_qi = QTPoly::one() - QTPoly::q(i);
        FactorParts f;
        switch (mode) {
            case HookMode::signed_sum:
            case HookMode::hook_direct: {
                // x_i = 0 if sigma_{i-1} > sigma_i else 1, with sigma_0 = +inf
                int x = (i == 1) ? 0 : (prev > cur ? 0 : 1);
                // y_i = 0 if sigma_i < sigma_{i+1} else 1, with sigma_{n+1} = +inf
                int y = (i == n) ? 0 : (cur < sigma[i] ? 0 : 1);
                f.num = {QTPoly::monomial(1, i * y, 0) -
                         QTPoly::monomial(1, (i - 1) * x, 1)};
                f.den = {one_m_qi};
                break;
            }
            case HookMode::hook_recursive: {
                // three cases of Eq. (FSigrecc) on the prefix of length i
                if (prev < cur) {
                    f.num = {QTPoly::one() - QTPoly::monomial(1, i - 1, 1)};
                    f.den = {one_m_qi};
                } else if (prev2 > prev) {
                    f.num = {QTPoly::q(i - 1) - QTPoly::t()};
                    f.den = {one_m_qi};
                } else {
                    f.num = {QTPoly::q(i - 1) - QTPoly::monomial(1, i - 2, 1),
                             QTPoly::one() - QTPoly::t()};
                    f.den = {QTPoly::one() - QTPoly::monomial(1, i - 2, 1),
                             one_m_qi};
                }
                break;
            }
            case HookMode::hook_simplified: {
                // Eq. (FSigcorr), sigma_0 = 0 and sigma_{n+1} = +inf
                bool next_up = (i == n) || (cur < sigma[i]);
                QTPoly num;
                if (prev < cur && next_up)
                    num = QTPoly::one() - QTPoly::monomial(1, i - 1, 1);
                else if (prev < cur)
                    num = QTPoly::one() - QTPoly::t();
                else if (prev2 > prev)
                    num = QTPoly::q(i - 1) - QTPoly::t();
                else
                    num = QTPoly::q(i - 1) - QTPoly::monomial(1, i - 2, 1);
                f.num = {num};
                f.den = {one_m_qi};
                break;
            }
        }
        fs.push_back(std::move(f));
    }
    return fs;
}

QTRational F_at_X_recursive_threecase(const Permutation& sigma) {
    QTRational r = QTRational::one();
    for (const auto& f : hook_factor_parts(sigma, HookMode::hook_recursive))
        r *= f.value();
    return r;
}

QTRational F_at_X(const Permutation& sigma, HookMode mode) {
    int n = int(sigma.size());
    switch (mode) {
        case HookMode::signed_sum: {
            QTPoly num;
            for (const SignVector& eps : all_sign_vectors(n)) {
                int m = eps.num_minus();
                int mj = maj(SignedWord{sigma.word(), eps});
                Int c = (m % 2 != 0) ? Int(-1) : Int(1);
                num.add_term({mj, m}, c);
            }
            return QTRational(num, q_pochhammer(n));
        }
        case HookMode::hook_direct: {
            QTRational r = QTRational::one();
            for (const auto& f : hook_factor_parts(sigma, mode)) r *= f.value();
            return r;
        }
        case HookMode::hook_recursive: {
            // unified two-factor form (FSigreccb)
            QTRational r = QTRational::one();
            for (int k = 1; k <= n; ++k) {
                int prev2 = (k >= 3) ? sigma[k - 3] : 0;
                int prev = (k >= 2) ? sigma[k - 2] : 0;
                int cur = sigma[k - 1];
                int a = prev > cur ? 1 : 0;
                int b = (prev2 < prev && prev > cur) ? 1 : 0;
                QTPoly qa = QTPoly::monomial(1, (k - 1) * a, 0);
                QTPoly qbt = QTPoly::monomial(1, (k - 2) * b, 1);
                QTPoly f1n = qa - qbt;
                QTPoly f1d = QTPoly::one() - qbt;
                QTPoly f2n = QTPoly::one() - QTPoly::monomial(1, (k - 1) * (1 - a), 1);
                QTPoly f2d = QTPoly::one() - QTPoly::q(k);
                r *= QTRational(f1n * f2n, f1d * f2d);
            }
            return r;
        }
        case HookMode::hook_simplified: {
            QTRational r = QTRational::one();
            for (const auto& f : hook_factor_parts(sigma, mode)) r *= f.value();
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

QTRational half_product_at_X(const Permutation& sigma, const Permutation& tau,
                             Side side) {
    int n = int(sigma.size()), m = int(tau.size());
    int d = (m == 1) ? 1 : (tau[m - 2] < tau[m - 1] ? 1 : 0);
    QTPoly qmd = QTPoly::monomial(1, (m - 1) * d, 1);  // q^{(m-1)d} t
    QTRational base = F_at_X(sigma, HookMode::hook_direct) *
                      F_at_X(tau, HookMode::hook_direct);
    if (side == Side::left) {
        QTRational f1((QTPoly::one() - QTPoly::q(n)),
                      (QTPoly::one() - QTPoly::q(n + m)));
        QTRational f2(QTPoly::q(m) - qmd, QTPoly::one() - qmd);
        return f1 * f2 * base;
    }
    QTRational f1((QTPoly::one() - QTPoly::q(m)),
                  (QTPoly::one() - QTPoly::q(n + m)));
    QTRational f2(QTPoly::one() - QTPoly::monomial(1, n + (m - 1) * d, 1),
                  QTPoly::one() - qmd);
    return f1 * f2 * base;
}

FExpansion to_F_basis(const GExpansion& g) {
    FExpansion out;
    for (const auto& [k, c] : g.terms()) {
        if (!k.unsigned_key())
            throw std::invalid_argument("to_F_basis expects unsigned keys");
        out.add(k.perm.inverse(), c);
    }
    return out;
}

GExpansion from_F_basis(const FExpansion& f) {
    GExpansion out;
    for (const auto& [k, c] : f.terms()) out.add(GKey(k.inverse()), c);
    return out;
}

namespace {

void shifted_shuffle(const Word& a, const Word& b, int filter_last,
                     FExpansion& out) {
    // filter_last: 0 none, +1 keep shuffles ending with last letter of a,
    // -1 keep those ending with last letter of b
    Word cur;
    std::function<void(size_t, size_t)> rec = [&](size_t i, size_t j) {
        if (i == a.size() && j == b.size()) {
            if (filter_last > 0 && (cur.empty() || cur.back() != a.back())) return;
            if (filter_last < 0 && (cur.empty() || cur.back() != b.back())) return;
            out.add(Permutation(cur), QTRational::one());
            return;
        }
        if (i < a.size()) {
            cur.push_back(a[i]);
            rec(i + 1, j);
            cur.pop_back();
        }
        if (j < b.size()) {
            cur.push_back(b[j]);
            rec(i, j + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

FExpansion product_F(const Permutation& sigma, const Permutation& tau) {
    FExpansion out;
    shifted_shuffle(sigma.word(), tau.shifted(int(sigma.size())).word(), 0, out);
    return out;
}

FExpansion half_product_F(const Permutation& sigma, const Permutation& tau,
                          Side side) {
    if (sigma.size() == 0 || tau.size() == 0)
        throw std::invalid_argument("dendriform halves exclude the unit");
    FExpansion out;
    shifted_shuffle(sigma.word(), tau.shifted(int(sigma.size())).word(),
                    side == Side::left ? +1 : -1, out);
    return out;
}

}  // namespace fqsym
}  // namespace qth
