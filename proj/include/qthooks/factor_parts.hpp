#pragma once

#include "qthooks/qt_rational.hpp"

#include <vector>

namespace qth {

// A hook-content factor kept in product form for faithful display;
// value() canonicalizes.
struct FactorParts {
    std::vector<QTPoly> num;
    std::vector<QTPoly> den;

    QTRational value() const {
        QTRational r = QTRational::one();
        for (const auto& p : num) r *= QTRational(p);
        for (const auto& p : den) r /= QTRational(p);
        return r;
    }
};

}  // namespace qth
