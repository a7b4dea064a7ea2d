#pragma once

#include "fredpair/pair.hpp"

#include <string>
#include <vector>

namespace fredpair {

/// A finite sequence of spaces K_0, ..., K_n with boundary maps
/// delta_p: K_p -> K_{p-1}.  `boundaries[i]` holds delta_{i+1}, so the
/// list is one shorter than `dims`.  When `is_complex` is set the
/// boundaries must compose to zero; otherwise the object is a general
/// chain and delta*delta may be anything.  The edge conventions are
/// delta_0 = 0 (out of K_0) and delta_{n+1} = 0 (into K_n).
struct ChainComplex {
    std::vector<std::size_t> dims;
    std::vector<Matrix> boundaries;
    bool is_complex = false;
};

/// Shape check plus, when `is_complex`, the exact composition law
/// delta_p * delta_{p+1} = 0.  Throws dimension_error / validation_error.
void validate(const ChainComplex& c);

/// Per-degree defect data.  With N_p = N(delta_p), R_p = R(delta_{p+1})
/// and I_p = N_p ∩ R_p inside K_p:
///   kernel_defect[p] = dim N_p - dim I_p,
///   range_defect[p]  = dim R_p - dim I_p,
///   index = sum over p of (-1)^p (kernel_defect[p] - range_defect[p]).
/// For a true complex every range defect vanishes and
/// homology_dims[p] = kernel_defect[p] = dim N_p / R_p; for a general
/// chain `homology_dims` stays empty.
struct ChainReport {
    std::vector<std::size_t> kernel_defect;
    std::vector<std::size_t> range_defect;
    std::vector<std::size_t> homology_dims;
    long long index = 0;
};

ChainReport chain_report(const ChainComplex& c);

/// Even/odd fold: X is the direct sum of the even-degree spaces in
/// ascending order, Y of the odd-degree ones, s collects the boundaries
/// out of even degrees and t the ones out of odd degrees.  The fold of a
/// true complex satisfies s*t = 0 and t*s = 0, and for every chain
/// pair_index(fold(c)) equals chain_report(c).index.
OperatorPair fold(const ChainComplex& c);

/// Degreewise homotopy h_p: K_p -> K_{p+1} with correction projections
/// k_p: K_p -> K_p satisfying, exactly,
///   delta_{p+1} h_p + h_{p-1} delta_p = I - k_p,
/// where k_p projects onto a space of homology representatives, so
/// rank k_p = dim H_p and k_p is zero exactly where the complex is exact.
struct SplittingHomotopy {
    std::vector<Matrix> h; // h[n] maps into the zero space past the top
    std::vector<Matrix> k;
};

/// Requires a true complex (validation_error otherwise).  Splits each
/// K_p = R(delta_{p+1}) ⊕ H_p-representatives ⊕ C_p with C_p a complement
/// of the kernel, inverts delta_{p+1} from its range back into C_{p+1},
/// and verifies the homotopy identity entrywise before returning.
SplittingHomotopy splitting_homotopy(const ChainComplex& c);

/// Whether every kernel N(delta_p) admits a complement.  At finite
/// dimension this is unconditionally true; the note says why the check
/// carries no information here.
struct SplitCheck {
    bool split = true;
    std::string note;
};

SplitCheck is_split_chain(const ChainComplex& c);

namespace fixtures {
/// Exact complex 0 -> Q -> Q^2 -> Q -> 0 with delta_2 = (1,0)^T and
/// delta_1 = (0,1); every homology group vanishes and the index is 0.
ChainComplex c1();
/// Complex 0 -> Q^2 -> Q -> 0 with delta_1 = (1,0); H_1 has dimension 1,
/// H_0 = 0, index -1.
ChainComplex c2();
} // namespace fixtures

} // namespace fredpair
