#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qth {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Monomial q^dq * t^dt. Canonical order: graded, then q-degree descending,
// so within each total degree q comes before t (1 < q < t < q^2 < q*t < t^2 ...).
struct Monomial {
    int dq = 0;
    int dt = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.dq + a.dt, db = b.dq + b.dt;
        if (da != db) return da < db;
        return a.dq > b.dq;
    }
};

// Sparse polynomial in Z[q,t] with arbitrary-precision coefficients.
// Invariant: no zero coefficients are stored.
class QTPoly {
public:
    using TermMap = std::map<Monomial, Int, MonomialLess>;

    QTPoly() = default;
    explicit QTPoly(Int c) { if (c != 0) terms_[{0, 0}] = std::move(c); }
    explicit QTPoly(long long c) : QTPoly(Int(c)) {}

    static QTPoly zero() { return QTPoly(); }
    static QTPoly one() { return QTPoly(Int(1)); }
    static QTPoly monomial(Int c, int dq, int dt);
    static QTPoly q(int d = 1) { return monomial(1, d, 0); }
    static QTPoly t(int d = 1) { return monomial(1, 0, d); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const TermMap& terms() const { return terms_; }
    int deg_q() const;
    int deg_t() const;

    // Coefficient of q^dq t^dt (zero if absent).
    Int coeff(int dq, int dt) const;

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { a += b; return a; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { a -= b; return a; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    QTPoly& operator*=(const QTPoly& o) { *this = *this * o; return *this; }

    QTPoly pow(int e) const;

    // t -> -t
    QTPoly negate_t() const;
    // Exchange of alphabet roles is never needed; substitution of numeric
    // values is. Exact evaluation; no poles possible for polynomials.
    Rat evaluate(const Rat& q0, const Rat& t0) const;

    friend bool operator==(const QTPoly&, const QTPoly&) = default;
    // Canonical order on polynomials (term-by-term in monomial order);
    // used only to make containers and printouts deterministic.
    friend std::strong_ordering operator<=>(const QTPoly& a, const QTPoly& b);

    // Sign of the canonically-first term (0 for the zero polynomial).
    int lead_sign() const;

    std::string str() const;

    void add_term(const Monomial& m, const Int& c);

private:
    TermMap terms_;
};

// Exact gcd over Z[q,t], normalized so its canonically-first coefficient is
// positive. gcd(0,0) = 0.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

// Exact division; aborts if b does not divide a.
QTPoly div_exact(const QTPoly& a, const QTPoly& b);

// (q)_n = prod_{k=1..n} (1 - q^k)
QTPoly q_pochhammer(int n);

// [n]_q = (1 - q^n)/(1 - q)
QTPoly q_int(int n);

}  // namespace qth
