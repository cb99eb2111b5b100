#include "qthooks/qt_poly.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qth {

QTPoly QTPoly::monomial(Int c, int dq, int dt) {
    QTPoly p;
    if (c != 0) p.terms_[{dq, dt}] = std::move(c);
    return p;
}

bool QTPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0} &&
           terms_.begin()->second == 1;
}

int QTPoly::deg_q() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dq);
    return d;
}

int QTPoly::deg_t() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dt);
    return d;
}

Int QTPoly::coeff(int dq, int dt) const {
    auto it = terms_.find({dq, dt});
    return it == terms_.end() ? Int(0) : it->second;
}

void QTPoly::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTPoly QTPoly::operator-() const {
    QTPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.dq + mb.dq, ma.dt + mb.dt}, ca * cb);
    return r;
}

QTPoly QTPoly::pow(int e) const {
    QTPoly r = one(), base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        if (e > 1) base *= base;
    }
    return r;
}

QTPoly QTPoly::negate_t() const {
    QTPoly r;
    for (const auto& [m, c] : terms_)
        r.terms_[m] = (m.dt % 2 != 0) ? Int(-c) : c;
    return r;
}

Rat QTPoly::evaluate(const Rat& q0, const Rat& t0) const {
    Rat acc = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = Rat(c);
        for (int i = 0; i < m.dq; ++i) term *= q0;
        for (int i = 0; i < m.dt; ++i) term *= t0;
        acc += term;
    }
    return acc;
}

std::strong_ordering operator<=>(const QTPoly& a, const QTPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    MonomialLess less;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return std::strong_ordering::less;
        if (less(ib->first, ia->first)) return std::strong_ordering::greater;
        if (ia->second != ib->second)
            return ia->second < ib->second ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    if (ia != a.terms_.end()) return std::strong_ordering::greater;
    if (ib != b.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

int QTPoly::lead_sign() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->second > 0 ? 1 : -1;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = (m.dq > 0 || m.dt > 0);
        if (a != 1 || !has_var) {
            os << a;
            if (has_var) os << "*";
        }
        if (m.dq > 0) {
            os << "q";
            if (m.dq > 1) os << "^" << m.dq;
            if (m.dt > 0) os << "*";
        }
        if (m.dt > 0) {
            os << "t";
            if (m.dt > 1) os << "^" << m.dt;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd over Z[q,t], via primitive PRS in q with coefficients in Z[t].

namespace {

// dense univariate polynomial in t
using TPoly = std::vector<Int>;

void tp_trim(TPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool tp_zero(const TPoly& p) { return p.empty(); }

TPoly tp_mul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    tp_trim(r);
    return r;
}

TPoly tp_sub(TPoly a, const TPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    tp_trim(a);
    return a;
}

TPoly tp_scale(const TPoly& a, const Int& c) {
    if (c == 0) return {};
    TPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { Int r = a % b; a = b; b = r; }
    return a;
}

Int tp_content(const TPoly& p) {
    Int g = 0;
    for (const auto& c : p) { g = int_gcd(g, c); if (g == 1) break; }
    return g;
}

TPoly tp_div_int(const TPoly& p, const Int& d) {
    TPoly r = p;
    for (auto& c : r) {
        assert(c % d == 0);
        c /= d;
    }
    return r;
}

// quotient of exact division a / b in Z[t]; asserts exactness
TPoly tp_div_exact(TPoly a, const TPoly& b) {
    assert(!b.empty());
    TPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        size_t sh = a.size() - b.size();
        Int c = a.back() / b.back();
        assert(c * b.back() == a.back());
        quot[sh] = c;
        TPoly sb(sh, 0);
        sb.insert(sb.end(), b.begin(), b.end());
        a = tp_sub(std::move(a), tp_scale(sb, c));
    }
    assert(a.empty());
    tp_trim(quot);
    return quot;
}

// primitive part with positive leading coefficient
TPoly tp_primitive(TPoly p) {
    if (p.empty()) return p;
    Int c = tp_content(p);
    if (p.back() < 0) c = -c;
    return tp_div_int(p, c);
}

// pseudo-remainder: repeat r <- lead(b)*r - lead(r)*t^sh*b until deg r < deg b
TPoly tp_prem(TPoly r, const TPoly& b) {
    const Int& lb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        size_t sh = r.size() - b.size();
        Int lr = r.back();
        TPoly sb(sh, 0);
        sb.insert(sb.end(), b.begin(), b.end());
        r = tp_sub(tp_scale(r, lb), tp_scale(sb, lr));
    }
    return r;
}

TPoly tp_gcd(TPoly a, TPoly b) {
    if (tp_zero(a)) return tp_primitive(std::move(b));
    if (tp_zero(b)) return tp_primitive(std::move(a));
    Int cg = int_gcd(tp_content(a), tp_content(b));
    a = tp_primitive(std::move(a));
    b = tp_primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!tp_zero(b)) {
        TPoly r = tp_prem(a, b);
        a = std::move(b);
        b = tp_primitive(std::move(r));
    }
    a = tp_primitive(std::move(a));
    return tp_scale(a, cg);
}

// view of a QTPoly as a dense vector in q with TPoly coefficients
std::vector<TPoly> to_qt(const QTPoly& p) {
    std::vector<TPoly> v(p.deg_q() + 1);
    for (const auto& [m, c] : p.terms()) {
        auto& tp = v[m.dq];
        if (int(tp.size()) <= m.dt) tp.resize(m.dt + 1);
        tp[m.dt] = c;
    }
    for (auto& tp : v) tp_trim(tp);
    while (v.size() > 1 && tp_zero(v.back())) v.pop_back();
    return v;
}

QTPoly from_qt(const std::vector<TPoly>& v) {
    QTPoly p;
    for (size_t dq = 0; dq < v.size(); ++dq)
        for (size_t dt = 0; dt < v[dq].size(); ++dt)
            if (v[dq][dt] != 0) p.add_term({int(dq), int(dt)}, v[dq][dt]);
    return p;
}

bool qt_zero(const std::vector<TPoly>& v) {
    for (const auto& tp : v)
        if (!tp_zero(tp)) return false;
    return true;
}

void qt_trim(std::vector<TPoly>& v) {
    while (!v.empty() && tp_zero(v.back())) v.pop_back();
}

TPoly qt_content(const std::vector<TPoly>& v) {
    TPoly g;
    for (const auto& tp : v) g = tp_gcd(g, tp);
    return g;
}

std::vector<TPoly> qt_div_tp(const std::vector<TPoly>& v, const TPoly& d) {
    std::vector<TPoly> r = v;
    for (auto& tp : r)
        if (!tp_zero(tp)) tp = tp_div_exact(tp, d);
    return r;
}

std::vector<TPoly> qt_primitive(std::vector<TPoly> v) {
    qt_trim(v);
    if (v.empty()) return v;
    TPoly c = qt_content(v);
    return qt_div_tp(v, c);
}

// r <- lead(b)*r - lead(r)*q^sh*b  until deg r < deg b
std::vector<TPoly> qt_prem(std::vector<TPoly> r, const std::vector<TPoly>& b) {
    const TPoly& lb = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        TPoly lr = r.back();
        size_t sh = r.size() - b.size();
        std::vector<TPoly> nr(std::max(r.size(), b.size() + sh));
        for (size_t i = 0; i < r.size(); ++i) nr[i] = tp_mul(r[i], lb);
        for (size_t i = 0; i < b.size(); ++i)
            nr[i + sh] = tp_sub(std::move(nr[i + sh]), tp_mul(b[i], lr));
        qt_trim(nr);
        r = std::move(nr);
    }
    return r;
}

}  // namespace

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() && b.is_zero()) return QTPoly::zero();
    if (a.is_zero()) return b.lead_sign() < 0 ? QTPoly(-b) : b;
    if (b.is_zero()) return a.lead_sign() < 0 ? QTPoly(-a) : a;
    auto va = to_qt(a), vb = to_qt(b);
    TPoly ca = qt_content(va), cb = qt_content(vb);
    TPoly cg = tp_gcd(ca, cb);
    va = qt_div_tp(va, ca);
    vb = qt_div_tp(vb, cb);
    if (va.size() < vb.size()) std::swap(va, vb);
    while (!qt_zero(vb)) {
        auto r = qt_prem(va, vb);
        va = std::move(vb);
        vb = qt_primitive(std::move(r));
    }
    va = qt_primitive(std::move(va));
    // multiply back the content gcd
    std::vector<TPoly> g(va.size());
    for (size_t i = 0; i < va.size(); ++i) g[i] = tp_mul(va[i], cg);
    QTPoly res = from_qt(g);
    if (res.lead_sign() < 0) res = -res;
    return res;
}

QTPoly div_exact(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero()) return QTPoly::zero();
    if (b.is_zero()) throw std::invalid_argument("div_exact by zero polynomial");
    auto va = to_qt(a), vb = to_qt(b);
    if (va.size() < vb.size())
        throw std::invalid_argument("div_exact: not divisible");
    std::vector<TPoly> quot(va.size() - vb.size() + 1);
    while (!qt_zero(va)) {
        if (va.size() < vb.size())
            throw std::invalid_argument("div_exact: not divisible");
        size_t sh = va.size() - vb.size();
        TPoly c = tp_div_exact(va.back(), vb.back());
        quot[sh] = c;
        for (size_t i = 0; i < vb.size(); ++i)
            va[i + sh] = tp_sub(std::move(va[i + sh]), tp_mul(vb[i], c));
        qt_trim(va);
    }
    return from_qt(quot);
}

QTPoly q_pochhammer(int n) {
    QTPoly r = QTPoly::one();
    for (int k = 1; k <= n; ++k) r *= (QTPoly::one() - QTPoly::q(k));
    return r;
}

QTPoly q_int(int n) {
    QTPoly r;
    for (int k = 0; k < n; ++k) r += QTPoly::q(k);
    return r;
}

}  // namespace qth
