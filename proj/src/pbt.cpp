#include "qthooks/pbt.hpp"

#include <stdexcept>

namespace qth {
namespace pbt {

FExpansion P_T_expand(const BinaryTree& t) {
    FExpansion out;
    for (const Permutation& p : sylvester_class(t))
        out.add(p, QTRational::one());
    return out;
}

FExpansion P_T_dendriform(const BinaryTree& t) {
    if (t.empty()) {
        // empty product: the unit, represented as the empty permutation
        return FExpansion::unit(Permutation(Word{}));
    }
    FExpansion p1 = FExpansion::unit(Permutation(Word{1}));
    FExpansion left = P_T_dendriform(t.left());
    FExpansion right = P_T_dendriform(t.right());
    // P_T = P_{T1} > P_1 < P_{T2}, with unit cases handled explicitly
    fqsym::GExpansion mid;
    if (t.left().empty())
        mid = fqsym::from_F_basis(p1);
    else
        mid = fqsym::dendriform_half(fqsym::from_F_basis(left),
                                     fqsym::from_F_basis(p1),
                                     fqsym::Side::right);
    fqsym::GExpansion whole;
    if (t.right().empty())
        whole = mid;
    else
        whole = fqsym::dendriform_half(mid, fqsym::from_F_basis(right),
                                       fqsym::Side::left);
    return fqsym::to_F_basis(whole);
}

QTRational signed_sum_value(const std::vector<Permutation>& cls) {
    if (cls.empty()) throw std::invalid_argument("empty sylvester class");
    int n = int(cls[0].size());
    QTPoly num;
    for (const Permutation& sigma : cls)
        for (const SignVector& eps : all_sign_vectors(n)) {
            int m = eps.num_minus();
            int mj = maj(SignedWord{sigma.word(), eps});
            num.add_term({mj, m}, m % 2 != 0 ? Int(-1) : Int(1));
        }
    return QTRational(num, q_pochhammer(n));
}

namespace {

// inorder collection of (subtree, is_right_son, stack of ancestors info)
struct NodeCtx {
    const BinaryTree* sub;
    bool is_right_son;
    int d;  // size of the left subtree of the topmost ancestor reached from
            // here by right branches only
};

void collect(const BinaryTree& t, bool is_right_son, int d_if_right,
             std::vector<NodeCtx>& out) {
    if (t.empty()) return;
    // d for this node: if it is not a right son, the chain stops here and
    // d = size of its own left subtree; otherwise inherited.
    int d = is_right_son ? d_if_right : t.left().size();
    collect(t.left(), false, 0, out);
    out.push_back({&t, is_right_son, d});
    collect(t.right(), true, d, out);
}

}  // namespace

std::vector<FactorParts> hook_factor_parts(const BinaryTree& t, Mode mode) {
    std::vector<NodeCtx> nodes;
    collect(t, false, 0, nodes);
    std::vector<FactorParts> fs;
    fs.reserve(nodes.size());
    for (const NodeCtx& ctx : nodes) {
        const BinaryTree& s = *ctx.sub;
        int n = s.size();
        QTPoly one_m_qn = QTPoly::one() - QTPoly::q(n);
        FactorParts f;
        switch (mode) {
            case Mode::signed_sum:
            case Mode::hook_PT1: {
                int np = s.left().size();
                QTPoly qnp_t = QTPoly::monomial(1, np, 1);
                f.num = {ctx.is_right_son ? QTPoly::q(n) - qnp_t
                                          : QTPoly::one() - qnp_t};
                f.den = {one_m_qn};
                break;
            }
            case Mode::hook_recursive: {
                // (q^{#T2} - q^{#T2'} t)(1 - q^{#T1} t) /
                // ((1 - q^{#T2'} t)(1 - q^n)); #T2' = left subtree of T2
                int n1 = s.left().size();
                int n2 = s.right().size();
                int n2p = s.right().empty() ? 0 : s.right().left().size();
                f.num = {QTPoly::q(n2) - QTPoly::monomial(1, n2p, 1),
                         QTPoly::one() - QTPoly::monomial(1, n1, 1)};
                f.den = {QTPoly::one() - QTPoly::monomial(1, n2p, 1), one_m_qn};
                break;
            }
            case Mode::hook_simplified: {
                QTPoly num;
                if (!s.right().empty()) {
                    int np = s.right().size();
                    int npp = s.right().left().size();
                    num = QTPoly::q(np) - QTPoly::monomial(1, npp, 1);
                } else if (!ctx.is_right_son) {
                    num = QTPoly::one() - QTPoly::monomial(1, n - 1, 1);
                } else {
                    num = QTPoly::one() - QTPoly::monomial(1, ctx.d, 1);
                }
                f.num = {num};
                f.den = {one_m_qn};
                break;
            }
        }
        fs.push_back(std::move(f));
    }
    return fs;
}

QTRational P_at_X(const BinaryTree& t, Mode mode) {
    if (mode == Mode::signed_sum) return signed_sum_value(sylvester_class(t));
    QTRational r = QTRational::one();
    for (const auto& f : hook_factor_parts(t, mode)) r *= f.value();
    return r;
}

QTPoly signed_maj_gf(const BinaryTree& t) {
    QTRational v = P_at_X(t, Mode::hook_PT1).negate_t() *
                   QTRational(q_pochhammer(t.size()));
    if (!v.is_polynomial())
        throw std::logic_error("signed maj generating function must be a polynomial");
    return v.num();
}

}  // namespace pbt
}  // namespace qth
