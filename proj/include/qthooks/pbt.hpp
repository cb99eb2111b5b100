#pragma once

#include "qthooks/fqsym.hpp"
#include "qthooks/trees.hpp"

namespace qth {
namespace pbt {

using fqsym::FExpansion;

// P_T = sum of F_sigma over the sylvester class of T.
FExpansion P_T_expand(const BinaryTree& t);

// P_T = P_{T1} > P_1 < P_{T2} through the FQSym half products.
FExpansion P_T_dendriform(const BinaryTree& t);

enum class Mode { signed_sum, hook_PT1, hook_recursive, hook_simplified };

QTRational P_at_X(const BinaryTree& t, Mode mode);

// (1/(q)_n) sum over the class of sum_eps (-t)^{m} q^{maj}; exposed so
// sweeps can reuse precomputed sylvester classes.
QTRational signed_sum_value(const std::vector<Permutation>& sylvester_cls);

// Per-node factor in BST-label order (node with label i at index i-1):
// hook_PT1 is Eq. (EqArb1), hook_simplified Eq. (EqArb), hook_recursive the
// combined two-numerator factor of the tree induction.
std::vector<FactorParts> hook_factor_parts(const BinaryTree& t, Mode mode);

// (q)_n P_T(X)|_{t -> -t}; always a polynomial.
QTPoly signed_maj_gf(const BinaryTree& t);

}  // namespace pbt
}  // namespace qth
