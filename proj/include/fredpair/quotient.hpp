#pragma once

#include "fredpair/pair.hpp"

namespace fredpair {

/// The pair induced on X / R(t*s) and Y / R(s*t), represented in the
/// coordinates of deterministic complements.  s maps R(t*s) into R(s*t)
/// and t maps back, so the induced maps are well defined; the induced
/// pair composes to zero in both orders, which makes it symmetrical even
/// when the original pair is not.
struct QuotientPair {
    Subspace x_complement; // complement of R(t*s) in X
    Subspace y_complement; // complement of R(s*t) in Y
    Matrix s_bar;          // y_complement coords <- x_complement coords
    Matrix t_bar;
    Matrix x_projection;   // X -> x_complement coords, kernel R(t*s)
    Matrix y_projection;
};

/// Builds the induced pair and verifies, exactly, the well-definedness
/// inclusions, both zero compositions, and the commuting squares
///   y_projection * s = s_bar * x_projection,
///   x_projection * t = t_bar * y_projection.
/// Any failure throws theorem_violation.
QuotientPair quotient_pair(const OperatorPair& pr);

/// Defect transfer between a pair and its quotient pair: the a and c
/// defects survive symmetrization unchanged, the b and d defects drop to
/// zero, and the quotient index is a - c.  All of it verified, then
/// returned.
struct TransferReport {
    std::size_t a = 0, c = 0;                   // original outer defects
    std::size_t quotient_a = 0, quotient_c = 0; // the same after quotienting
    long long quotient_index = 0;               // = a - c
    bool symmetrical = false;                   // quotient pair composes to 0
};

TransferReport verify_transfer(const OperatorPair& pr);

/// The quotient pair repackaged as an OperatorPair between the
/// complement coordinate spaces.
OperatorPair as_pair(const QuotientPair& qp);

} // namespace fredpair
