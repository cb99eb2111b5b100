#pragma once

#include "qthooks/qt_poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace qth {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of the fraction field of Z[q,t], kept fully reduced with the
// denominator's canonically-first coefficient positive, so that equal values
// have identical representations.
class QTRational {
public:
    QTRational() : num_(), den_(QTPoly::one()) {}
    QTRational(QTPoly num, QTPoly den);                // reduces
    /*implicit*/ QTRational(QTPoly p) : num_(std::move(p)), den_(QTPoly::one()) {}
    explicit QTRational(long long c) : QTRational(QTPoly(c)) {}

    static QTRational zero() { return QTRational(); }
    static QTRational one() { return QTRational(QTPoly::one()); }

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    QTRational operator-() const;
    friend QTRational operator+(const QTRational& a, const QTRational& b);
    friend QTRational operator-(const QTRational& a, const QTRational& b);
    friend QTRational operator*(const QTRational& a, const QTRational& b);
    friend QTRational operator/(const QTRational& a, const QTRational& b);
    QTRational& operator+=(const QTRational& o) { *this = *this + o; return *this; }
    QTRational& operator-=(const QTRational& o) { *this = *this - o; return *this; }
    QTRational& operator*=(const QTRational& o) { *this = *this * o; return *this; }
    QTRational& operator/=(const QTRational& o) { *this = *this / o; return *this; }

    QTRational pow(int e) const;  // e may be negative for nonzero values
    QTRational negate_t() const { return QTRational(num_.negate_t(), den_.negate_t()); }

    // Exact evaluation at a rational point; throws PoleError if the
    // denominator vanishes there.
    Rat evaluate(const Rat& q0, const Rat& t0) const;

    // Cross-multiplication equality, exact regardless of reduction quality.
    friend bool operator==(const QTRational& a, const QTRational& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend std::strong_ordering operator<=>(const QTRational& a, const QTRational& b);

    std::string str() const;

private:
    void canonicalize();

    QTPoly num_, den_;
};

// (q)_I = (1 - q^n) * prod_{d in Des(I)} (1 - q^d), with I given by its parts.
QTPoly q_comp_pochhammer(const std::vector<int>& parts);

// Parses the textual form produced by QTPoly::str()/QTRational::str(),
// plus parenthesized products/powers, e.g. "(1+t)*(q^3-t)^2 / (1-q)".
QTRational parse_qt(const std::string& text);
QTPoly parse_qt_poly(const std::string& text);  // throws if not a polynomial

}  // namespace qth
