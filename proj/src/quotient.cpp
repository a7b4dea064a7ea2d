#include "fredpair/quotient.hpp"

#include "fredpair/errors.hpp"

namespace fredpair {

QuotientPair quotient_pair(const OperatorPair& pr) {
    Subspace r_ts = Subspace::span(matmul(pr.t, pr.s)); // inside X
    Subspace r_st = Subspace::span(matmul(pr.s, pr.t)); // inside Y
    if (!is_subset(image(pr.s, r_ts), r_st) || !is_subset(image(pr.t, r_st), r_ts))
        throw theorem_violation("quotient: R(ts), R(st) are not exchanged "
                                "by the operators");

    QuotientMap qx = quotient_map(r_ts);
    QuotientMap qy = quotient_map(r_st);
    QuotientPair qp;
    qp.x_complement = Subspace::span(qx.section);
    qp.y_complement = Subspace::span(qy.section);
    qp.s_bar = matmul(qy.projection, matmul(pr.s, qx.section));
    qp.t_bar = matmul(qx.projection, matmul(pr.t, qy.section));
    qp.x_projection = qx.projection;
    qp.y_projection = qy.projection;

    if (!matmul(qp.s_bar, qp.t_bar).is_zero() ||
        !matmul(qp.t_bar, qp.s_bar).is_zero())
        throw theorem_violation("quotient pair does not compose to zero");
    if (matmul(qp.y_projection, pr.s) != matmul(qp.s_bar, qp.x_projection) ||
        matmul(qp.x_projection, pr.t) != matmul(qp.t_bar, qp.y_projection))
        throw theorem_violation("quotient squares do not commute");
    return qp;
}

OperatorPair as_pair(const QuotientPair& qp) {
    return OperatorPair(qp.x_complement.dim(), qp.y_complement.dim(), qp.s_bar,
                        qp.t_bar);
}

TransferReport verify_transfer(const OperatorPair& pr) {
    QuotientPair qp = quotient_pair(pr);
    OperatorPair folded = as_pair(qp);
    DefectProfile original = defects(pr);
    DefectProfile reduced = defects(folded);

    TransferReport rep;
    rep.a = original.a;
    rep.c = original.c;
    rep.quotient_a = reduced.a;
    rep.quotient_c = reduced.c;
    rep.quotient_index = reduced.index;
    rep.symmetrical = is_symmetrical(folded);

    if (!rep.symmetrical)
        throw theorem_violation("quotient pair is not symmetrical");
    if (reduced.a != original.a || reduced.c != original.c)
        throw theorem_violation("outer defects changed under symmetrization");
    if (reduced.b != 0 || reduced.d != 0)
        throw theorem_violation("inner defects of the quotient pair are nonzero");
    long long expected = static_cast<long long>(original.a) -
                         static_cast<long long>(original.c);
    if (reduced.index != expected)
        throw theorem_violation("quotient index is not a - c");
    return rep;
}

} // namespace fredpair
