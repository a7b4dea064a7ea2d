#pragma once

#include "fredpair/matrix.hpp"
#include "fredpair/subspace.hpp"

#include <cstddef>
#include <optional>

namespace fredpair {

/// A pair of operators s: X -> Y and t: Y -> X between Q^x_dim and
/// Q^y_dim.  s is y_dim x x_dim, t is x_dim x y_dim.  At finite
/// dimension every such pair is Fredholm and regular, so construction
/// only checks shapes; the interesting structure lives in the defect
/// and classification computations.
struct OperatorPair {
    std::size_t x_dim = 0;
    std::size_t y_dim = 0;
    Matrix s;
    Matrix t;

    OperatorPair() = default;
    OperatorPair(std::size_t x, std::size_t y, Matrix s_op, Matrix t_op);

    friend bool operator==(const OperatorPair& a, const OperatorPair& b) {
        return a.x_dim == b.x_dim && a.y_dim == b.y_dim && a.s == b.s && a.t == b.t;
    }
    friend bool operator!=(const OperatorPair& a, const OperatorPair& b) { return !(a == b); }
};

/// The four defect dimensions and the index a - b + d - c.
///   a = dim N(s) / (N(s) ∩ R(t))      b = dim R(t) / (N(s) ∩ R(t))
///   c = dim N(t) / (N(t) ∩ R(s))      d = dim R(s) / (N(t) ∩ R(s))
struct DefectProfile {
    std::size_t a = 0, b = 0, c = 0, d = 0;
    long long index = 0;

    friend bool operator==(const DefectProfile&, const DefectProfile&) = default;
};

DefectProfile defects(const OperatorPair& pr);
long long pair_index(const OperatorPair& pr);

/// (t, s): swaps the roles of the two operators.  Index negates.
OperatorPair swapped(const OperatorPair& pr);

/// Embeds a single operator as the pair (s, 0).
OperatorPair pair_from_operator(const Matrix& s);

/// The level-one splittings
///   N(s) = ns_rt ⊕ x1      R(t) = ns_rt ⊕ x2      X = (N(s)+R(t)) ⊕ x_tilde
///   N(t) = nt_rs ⊕ y1      R(s) = nt_rs ⊕ y2      Y = (N(t)+R(s)) ⊕ y_tilde
/// where ns_rt = N(s) ∩ R(t) and nt_rs = N(t) ∩ R(s).  Complements are
/// the deterministic greedy ones.  s restricted to x2 ⊕ x_tilde is an
/// isomorphism onto R(s), and mirror statements hold for t.
struct PairDecomposition {
    Subspace ns_rt, x1, x2, x_tilde;
    Subspace nt_rs, y1, y2, y_tilde;
};

PairDecomposition decompose(const OperatorPair& pr);

/// A normalized generalized inverse g of op: op g op = op and
/// g op g = g.  g inverts op from the deterministic complement of the
/// range back into the deterministic complement of the kernel and kills
/// the rest.
Matrix generalized_inverse(const Matrix& op);

/// g op g for a given generalized inverse g; the result g'' satisfies
/// both identities.  Throws validation_error when op g op != op.
Matrix normalize_ginv(const Matrix& op, const Matrix& g);

/// Generalized inverses (s', t') of (s, t) produced jointly from one
/// decomposition, so that N(s') ∩ R(t') = y_tilde and
/// N(t') ∩ R(s') = x_tilde.  As a pair in the opposite direction,
/// (s', t') has index -index(s, t).
struct GinvWitness {
    Matrix s_prime; // x_dim x y_dim
    Matrix t_prime; // y_dim x x_dim
    bool normalized = false;
};

struct AdjointPair {
    OperatorPair pair; // (s', t') between Q^y_dim and Q^x_dim
    GinvWitness witness;
};

AdjointPair adjoint_pair(const OperatorPair& pr);

/// True when s t = 0 and t s = 0; equivalent to b = d = 0.
bool is_symmetrical(const OperatorPair& pr);

/// An invertible generalized inverse exists exactly for square
/// operators at finite dimension; returns the witness.
std::optional<Matrix> invertible_ginv(const Matrix& op);
bool is_decomposably_regular(const Matrix& op);

namespace fixtures {

/// Identity pair on Q^2: defects (0,2,0,2), index 0.
OperatorPair id2();
/// Zero pair Q^m -> Q^n: defects (m,0,n,0), index m - n.
OperatorPair zero_pair(std::size_t m, std::size_t n);
/// Rank-one pair Q^3 <-> Q^2 with defects (2,1,0,0) and index 1.
OperatorPair p1();
/// Symmetrical pair on Q^2 with index 0.
OperatorPair sym1();

} // namespace fixtures

} // namespace fredpair
