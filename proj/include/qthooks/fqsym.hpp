#pragma once

#include "qthooks/factor_parts.hpp"
#include "qthooks/lincomb.hpp"
#include "qthooks/words.hpp"

namespace qth {
namespace fqsym {

// Everything is stored on the G basis over (possibly signed) permutations;
// F-basis operations convert by inversion at the boundary, F_s = G_{s^-1}.
using GKey = SignedPermutation;
using GExpansion = LinComb<GKey>;

enum class Side { left, right };

// Convolution product of Eq. (multG); signs travel with their letters.
GExpansion product_G(const GExpansion& a, const GExpansion& b);

// G_{alpha,eps} * G_{beta,eta} = G_{beta o alpha, (eta alpha).eps}
GKey internal_product_signed(const GKey& a, const GKey& b);
GExpansion internal_product_signed(const GExpansion& a, const GExpansion& b);

// Half products splitting product_G by the position of the maximal letter.
// Arguments must be nonempty (no dendriform unit).
GExpansion dendriform_half(const GExpansion& a, const GExpansion& b, Side side);

// G_sigma(A|Abar) = sum over the 2^n signed permutations standardizing
// to sigma; enumerated by the subset of barred values.
GExpansion superize_G(const Permutation& sigma);

// G_sigma(A|tA): unsigned keys with coefficients t^{m(eps)}.
GExpansion specialize_bar_tA(const Permutation& sigma);
// G_sigma((1-t)A): same with -t in place of t.
GExpansion specialize_bar_minus_tA(const Permutation& sigma);

// F_sigma(A(1-t)) = sum_eps (-t)^{m(eps)} F_{std(sigma,eps)}, on the F basis
// over unsigned permutations.
using FExpansion = LinComb<Permutation>;
FExpansion F_times_1mt(const Permutation& sigma);

enum class HookMode { signed_sum, hook_direct, hook_recursive, hook_simplified };

QTRational F_at_X(const Permutation& sigma, HookMode mode);

// Per-node factors of the three hook-content formulas, bottom-up
// (factor i belongs to position i of sigma), in unreduced product form for
// faithful diagram rendering. hook_recursive uses the three cases of
// Eq. (FSigrecc).
std::vector<FactorParts> hook_factor_parts(const Permutation& sigma, HookMode mode);

// Product of the three-case factors of Eq. (FSigrecc); cross-checked in the
// tests against the unified two-factor form used by F_at_X(hook_recursive).
QTRational F_at_X_recursive_threecase(const Permutation& sigma);

// Corollary cordend: factorized specialization of a half product.
QTRational half_product_at_X(const Permutation& sigma, const Permutation& tau, Side side);

// F-basis view of a G expansion on unsigned keys (inverts every key).
FExpansion to_F_basis(const GExpansion& g);
GExpansion from_F_basis(const FExpansion& f);

// Shifted shuffle product on the F basis (F_sigma * F_tau).
FExpansion product_F(const Permutation& sigma, const Permutation& tau);
FExpansion half_product_F(const Permutation& sigma, const Permutation& tau, Side side);

}  // namespace fqsym
}  // namespace qth
