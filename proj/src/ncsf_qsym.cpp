#include "qthooks/ncsf_qsym.hpp"

#include <map>
#include <stdexcept>

namespace qth {
namespace ncsf {

std::string SignedRibbonKey::str() const {
    return comp.str() + ";" + signs.str();
}

fqsym::GExpansion ribbon_to_G(const Composition& I) {
    fqsym::GExpansion out;
    auto des = I.descent_set();
    for (const Permutation& p : all_permutations(I.weight()))
        if (descent_set(p.word()) == des)
            out.add(fqsym::GKey(p), QTRational::one());
    return out;
}

SExpansion S_sharp(int n) {
    // sigma_1^# = lambdabar_1 sigma_1;
    // Lambda_k(Abar) = sum_{J |= k} (-1)^{k - l(J)} S^{Jbar}
    SExpansion out;
    for (int k = 0; k <= n; ++k) {
        std::vector<std::pair<Composition, int>> lam;  // (J, sign)
        if (k == 0) {
            lam.emplace_back(Composition(), 1);
        } else {
            for (const Composition& J : all_compositions(k))
                lam.emplace_back(J, (k - int(J.num_parts())) % 2 == 0 ? 1 : -1);
        }
        for (auto& [J, sgn] : lam) {
            std::vector<int> parts(J.parts());
            std::vector<int8_t> signs(parts.size(), -1);
            if (n - k > 0) {
                parts.push_back(n - k);
                signs.push_back(1);
            }
            if (parts.empty()) continue;
            out.add(SKey{Composition(parts), SignVector(std::move(signs))},
                    QTRational(QTPoly(Int(sgn))));
        }
    }
    return out;
}

Composition signed_shape(const Composition& J, const SignVector& eps) {
    int n = J.weight();
    if (int(eps.size()) != n)
        throw std::invalid_argument("sign vector must have one entry per cell");
    auto desJ = J.descent_set();
    std::set<int> des;
    for (int i = 1; i < n; ++i) {
        bool d;
        if (eps[i - 1] > 0 && eps[i] > 0) d = desJ.count(i) > 0;
        else if (eps[i - 1] < 0 && eps[i] < 0) d = !desJ.count(i);
        else d = eps[i - 1] > 0;  // (+,-) is a descent, (-,+) is not
        if (d) des.insert(i);
    }
    return Composition::from_descents(des, n);
}

SignedRibbonExpansion ribbon_superize(const Composition& I) {
    int n = I.weight();
    SignedRibbonExpansion out;
    for (const Composition& J : all_compositions(n))
        for (const SignVector& eps : all_sign_vectors(n))
            if (signed_shape(J, eps) == I)
                out.add(SignedRibbonKey{J, eps}, QTRational::one());
    return out;
}

RibbonExpansion ribbon_at_bar_tA_enumerative(const Composition& I) {
    RibbonExpansion out;
    for (const auto& [key, c] : ribbon_superize(I).terms())
        out.add(key.comp, c * QTRational(QTPoly::t(key.signs.num_minus())));
    return out;
}

RibbonExpansion ribbon_at_bar_tA_closed(const Composition& I) {
    // support: I has a peak or a valley at each peak of J; the exponent of t
    // counts the cells whose sign is forced to be minus
    int n = I.weight();
    RibbonExpansion out;
    auto pv = peaks(I);
    for (int v : valleys(I)) pv.insert(v);
    for (const Composition& J : all_compositions(n)) {
        bool ok = true;
        for (int p : peaks(J))
            if (!pv.count(p)) { ok = false; break; }
        if (!ok) continue;
        QTPoly coeff = (QTPoly::one() + QTPoly::t()).pow(int(valleys(J).size())) *
                       QTPoly::t(b_statistic(I, J));
        out.add(J, QTRational(coeff));
    }
    return out;
}

QTRational M_at_geometric(const Composition& J) {
    int n = J.weight();
    QTRational r(QTPoly::one(), QTPoly::one() - QTPoly::q(n));
    for (int d : J.descent_set())
        r *= QTRational(QTPoly::q(d), QTPoly::one() - QTPoly::q(d));
    return r;
}

QTRational interval_sum_M(const Composition& I, const Composition& K) {
    if (!K.finer_than(I))
        throw std::invalid_argument("interval_sum_M requires K finer than I");
    int n = I.weight();
    QTPoly den = QTPoly::one() - QTPoly::q(n);
    for (int d : K.descent_set()) den *= QTPoly::one() - QTPoly::q(d);
    return QTRational(QTPoly::q(I.maj()), den);
}

}  // namespace ncsf
}  // namespace qth
