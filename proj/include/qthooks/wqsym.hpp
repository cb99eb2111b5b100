#pragma once

#include "qthooks/lincomb.hpp"
#include "qthooks/words.hpp"

namespace qth {
namespace wqsym {

// Signed packed word; the shared key type of the M and N bases.
struct WQKey {
    PackedWord word;
    SignVector signs;  // one per position

    WQKey() = default;
    explicit WQKey(PackedWord w);
    WQKey(PackedWord w, SignVector s);

    size_t size() const { return word.size(); }
    bool unsigned_key() const { return signs.all_positive(); }

    friend auto operator<=>(const WQKey&, const WQKey&) = default;
    std::string str() const;
};

using Expansion = LinComb<WQKey>;

enum class TriPart { left, middle, right };

// NW_{u,eps} * NW_{v,rho} = NW_{pack(u,v), eps.rho}
WQKey N_internal(const WQKey& a, const WQKey& b);
Expansion N_internal(const Expansion& a, const Expansion& b);

// Degree-n part of sigma_1^# on the NW basis (Lemma sigmaOnN).
Expansion sigma_sharp_N(int n);

// NW_u^# both ways; they agree (asserted in tests).
Expansion N_superize(const PackedWord& u);          // combinatorial description
Expansion N_superize_internal(const PackedWord& u); // NW_u * sigma_1^#

// NW_u((1-t)A) on the NW basis.
Expansion N_1mt(const PackedWord& u);

// M_u(A(1-t)) on the M basis (transpose of N_1mt).
Expansion M_dual_1mt(const PackedWord& u);

enum class XMode { closed, signed_sum };
QTRational M_at_X(const PackedWord& u, XMode mode);

// Signed generating function of Corollary cor-M1mq:
// sum over regular (u,eps) of t^{m(eps)} q^{maj(ev(spack(u,eps)))}.
QTPoly signed_spack_gf(const PackedWord& u);

// Tridendriform partial products on the M basis; the three parts sum to the
// convolution product. Empty keys are rejected.
Expansion M_tridendriform(const WQKey& a, const WQKey& b, TriPart part);
Expansion M_product(const WQKey& a, const WQKey& b);  // full convolution

// Factorized X-specializations of the partial products.
QTRational tridendriform_at_X(const PackedWord& u1, const PackedWord& u2,
                              TriPart part);

// Internal helpers shared with the free tridendriform algebra: the split
// convolution with empty words allowed (unit conventions max(empty)=0).
Expansion M_tridendriform_unit(const Expansion& a, const Expansion& b, TriPart part);

}  // namespace wqsym
}  // namespace qth
