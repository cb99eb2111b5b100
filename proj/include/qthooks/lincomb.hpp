#pragma once

#include "qthooks/qt_rational.hpp"

#include <map>
#include <sstream>

namespace qth {

// Finite formal linear combination of basis keys with QTRational
// coefficients; zero coefficients are never stored and keys iterate in
// their canonical (operator<) order.
template <class Key>
class LinComb {
public:
    using Map = std::map<Key, QTRational>;

    LinComb() = default;
    static LinComb unit(Key k, QTRational c = QTRational::one()) {
        LinComb r;
        r.add(std::move(k), std::move(c));
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    QTRational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? QTRational::zero() : it->second;
    }

    void add(Key k, QTRational c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }

    LinComb scaled(const QTRational& c) const {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    template <class F>
    auto map_keys(F&& f) const {  // f: Key -> NewKey
        LinComb<std::decay_t<decltype(f(std::declval<Key>()))>> r;
        for (const auto& [k, c] : terms_) r.add(f(k), c);
        return r;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }

    // "coeff * K[key] + ..." with a printable key
    template <class KeyPrinter>
    std::string str(const std::string& basis, KeyPrinter&& print_key) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (!c.is_one()) {
                bool paren = !c.is_polynomial() || c.num().terms().size() > 1;
                os << (paren ? "(" : "") << c.str() << (paren ? ")" : "") << "*";
            }
            os << basis << "[" << print_key(k) << "]";
        }
        return os.str();
    }

private:
    Map terms_;
};

}  // namespace qth
