#pragma once

#include "qthooks/fqsym.hpp"

namespace qth {
namespace ncsf {

// Ribbon with one sign per cell.
struct SignedRibbonKey {
    Composition comp;
    SignVector signs;  // size = weight of comp

    friend auto operator<=>(const SignedRibbonKey&, const SignedRibbonKey&) = default;
    std::string str() const;
};

// S^{(I,eps)}: one sign per part.
using SKey = SignedComposition;

using RibbonExpansion = LinComb<Composition>;
using SignedRibbonExpansion = LinComb<SignedRibbonKey>;
using SExpansion = LinComb<SKey>;

// R_I = sum of G_sigma over the descent class of I.
fqsym::GExpansion ribbon_to_G(const Composition& I);

// Degree-n part of sigma_1^# = lambdabar_1 sigma_1 in the S^{(I,eps)} basis.
SExpansion S_sharp(int n);

// Descent composition C(J,eps) of any signed permutation whose unsigned part
// has shape J; well-defined because signed descents depend only on Des(J)
// and eps.
Composition signed_shape(const Composition& J, const SignVector& eps);

// R_I(A|Abar) = sum over signed ribbons with C(J,eps) = I.
SignedRibbonExpansion ribbon_superize(const Composition& I);

// R_I(A|tA), computed enumeratively (substitute Abar = tA) or by the
// peak/valley closed form; the two agree (checked by tests).
RibbonExpansion ribbon_at_bar_tA_enumerative(const Composition& I);
RibbonExpansion ribbon_at_bar_tA_closed(const Composition& I);

// M_J(1/(1-q)) and the refinement-interval sum of Lemma lem-1mq.
QTRational M_at_geometric(const Composition& J);
// requires K finer than I
QTRational interval_sum_M(const Composition& I, const Composition& K);

}  // namespace ncsf
}  // namespace qth
