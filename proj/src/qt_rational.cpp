#include "qthooks/qt_rational.hpp"

#include <cctype>
#include <sstream>

namespace qth {

QTRational::QTRational(QTPoly num, QTPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    canonicalize();
}

void QTRational::canonicalize() {
    if (num_.is_zero()) {
        den_ = QTPoly::one();
        return;
    }
    QTPoly g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    if (den_.lead_sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QTRational QTRational::operator-() const {
    QTRational r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRational operator+(const QTRational& a, const QTRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // reduce by the common denominator factor first
    QTPoly g = gcd(a.den_, b.den_);
    QTPoly da = g.is_one() ? a.den_ : div_exact(a.den_, g);
    QTPoly db = g.is_one() ? b.den_ : div_exact(b.den_, g);
    return QTRational(a.num_ * db + b.num_ * da, da * b.den_);
}

QTRational operator-(const QTRational& a, const QTRational& b) {
    return a + (-b);
}

QTRational operator*(const QTRational& a, const QTRational& b) {
    if (a.is_zero() || b.is_zero()) return QTRational::zero();
    QTPoly g1 = gcd(a.num_, b.den_);
    QTPoly g2 = gcd(b.num_, a.den_);
    QTPoly n1 = g1.is_one() ? a.num_ : div_exact(a.num_, g1);
    QTPoly d2 = g1.is_one() ? b.den_ : div_exact(b.den_, g1);
    QTPoly n2 = g2.is_one() ? b.num_ : div_exact(b.num_, g2);
    QTPoly d1 = g2.is_one() ? a.den_ : div_exact(a.den_, g2);
    return QTRational(n1 * n2, d1 * d2);
}

QTRational operator/(const QTRational& a, const QTRational& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    return a * QTRational(b.den_, b.num_);
}

QTRational QTRational::pow(int e) const {
    if (e < 0) return QTRational::one() / pow(-e);
    return QTRational(num_.pow(e), den_.pow(e));
}

Rat QTRational::evaluate(const Rat& q0, const Rat& t0) const {
    Rat d = den_.evaluate(q0, t0);
    if (d == 0) throw PoleError("pole at the evaluation point");
    return num_.evaluate(q0, t0) / d;
}

std::strong_ordering operator<=>(const QTRational& a, const QTRational& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
}

std::string QTRational::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    bool pn = num_.terms().size() > 1;
    bool pd = den_.terms().size() > 1;
    os << (pn ? "(" : "") << num_.str() << (pn ? ")" : "") << " / "
       << (pd ? "(" : "") << den_.str() << (pd ? ")" : "");
    return os.str();
}

QTPoly q_comp_pochhammer(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    QTPoly r = QTPoly::one() - QTPoly::q(n);
    int d = 0;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
        d += parts[i];
        r *= (QTPoly::one() - QTPoly::q(d));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the text form.

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    QTRational parse() {
        QTRational r = expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return r;
    }

    // expr := term (('+'|'-') term)* ('/' term)? -- '/' binds loosest, once
    QTRational expr() {
        QTRational r = sum();
        skip();
        if (eat('/')) {
            QTRational d = sum();
            r = r / d;
        }
        return r;
    }

    QTRational sum() {
        bool neg = false;
        skip();
        if (eat('-')) neg = true;
        else eat('+');
        QTRational r = product();
        if (neg) r = -r;
        for (;;) {
            skip();
            if (eat('+')) r += product();
            else if (pos < s.size() && s[pos] == '-') { ++pos; r -= product(); }
            else break;
        }
        return r;
    }

    QTRational product() {
        QTRational r = factor();
        for (;;) {
            skip();
            if (eat('*')) { r *= factor(); continue; }
            // implicit product before '(' or a variable, as in "2q" or "(1+t)(1-q)"
            if (pos < s.size() && (s[pos] == '(' || s[pos] == 'q' || s[pos] == 't'))
                { r *= factor(); continue; }
            break;
        }
        return r;
    }

    QTRational factor() {
        QTRational base = atom();
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            int e = integer();
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    QTRational atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            QTRational r = sum();
            skip();
            if (eat('/')) r = r / sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'q') { ++pos; return QTRational(QTPoly::q()); }
        if (c == 't') { ++pos; return QTRational(QTPoly::t()); }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return QTRational(QTPoly(Int(big_integer())));
        fail("unexpected character");
    }

    int integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    Int big_integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }
};

}  // namespace

QTRational parse_qt(const std::string& text) {
    return Parser(text).parse();
}

QTPoly parse_qt_poly(const std::string& text) {
    QTRational r = parse_qt(text);
    if (!r.is_polynomial())
        throw std::invalid_argument("not a polynomial: " + text);
    return r.num();
}

}  // namespace qth
