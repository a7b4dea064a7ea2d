#pragma once

#include "fredpair/pair.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fredpair {

enum class PairCase { I, II, III };

std::string to_string(PairCase c);
PairCase pair_case_from_string(const std::string& s);

/// The two interleaved range sequences
///   r_s[0] = Y,  r_t[0] = X,  r_s[n+1] = s(r_t[n]),  r_t[n+1] = t(r_s[n])
/// together with the tilde sequences
///   r_s_tilde[1] = s(x_tilde),  r_s_tilde[n+1] = s(r_t_tilde[n]),
/// mirrored for t, where x_tilde and y_tilde are complements of
/// N(s)+R(t) in X and N(t)+R(s) in Y.  Those complements are not
/// arbitrary: they are chosen so that every level satisfies
///   r_s[n] = r_s[n+1] ⊕ r_s_tilde[n],  r_t[n] = r_t[n+1] ⊕ r_t_tilde[n],
/// which an arbitrary complement can violate.  Entry [0] of a tilde
/// sequence is an unused placeholder.  Both plain sequences decrease and become jointly
/// constant; p and q are the first indices >= 1 from which r_s
/// (respectively r_t) equals its limit.  Always |p - q| <= 1.
struct RangeSequences {
    std::vector<Subspace> r_s, r_t;
    std::vector<Subspace> r_s_tilde, r_t_tilde;
    std::size_t p = 1, q = 1;
};

RangeSequences range_sequences(const OperatorPair& pr);

struct Classification {
    std::size_t p = 1, q = 1;
    std::size_t number = 1; // min(p, q)
    PairCase kind = PairCase::I;

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// p = q -> case I, p < q -> case II, q < p -> case III.
Classification classify(const OperatorPair& pr);

/// Nested towers of subspaces refining the level-one splittings, all
/// indexed by level (entry [0] is a placeholder):
///   m[k]   = r_s[k] ∩ N(t)        y2[k]:   r_s[k] = m[k] ⊕ y2[k]
///   mm[k]  = r_s_tilde[k] ∩ N(t)  yy2[k]:  r_s_tilde[k] = mm[k] ⊕ yy2[k]
/// with y2[k+1] ⊆ y2[k], yy2[k] ⊆ y2[k], and the mirrored n / x2 / nn /
/// xx2 towers inside X.  The tilde splits refine the complements:
///   x_tilde = x_tilde_n ⊕ x_tilde_2, s(x_tilde_n) = mm[1],
///   s(x_tilde_2) = yy2[1], and mirrored through t on the Y side.
///
/// Each tower is built from the deepest level downward so the nesting
/// constraints are satisfiable; the splitting identities, the exchange
/// identities r_s[k] = r_s[k+1] ⊕ r_s_tilde[k], m[k] = m[k+1] ⊕ mm[k],
/// y2[k] = y2[k+1] ⊕ yy2[k] and their mirrors are then verified on the
/// result, and any failure throws theorem_violation.
struct SubspaceFamilies {
    std::size_t levels = 0; // towers valid for 1..levels
    std::vector<Subspace> m, n, x2, y2;
    std::vector<Subspace> mm, nn, xx2, yy2;
    Subspace x_tilde_n, x_tilde_2, y_tilde_n, y_tilde_2;
    RangeSequences seq; // extended to levels + 1
    PairDecomposition dec; // x_tilde, y_tilde are the adapted complements
};

/// Families through at least `level` (>= 1); deeper levels are included
/// up to one step past joint stabilization.
SubspaceFamilies subspace_families(const OperatorPair& pr, std::size_t level);

struct NamedBlock {
    std::string name;
    Subspace space;
};

struct BlockIso {
    std::string op;   // "s" or "t"
    std::string from; // block name
    std::string to;   // description of the image
    std::size_t dim = 0;
};

/// The level-n presentation
///   X = [x1 ⊕ n[n] ⊕ nn[1..n-1]] ⊕ [x2[n] ⊕ xx2[1..n-1]] ⊕ [xtn ⊕ xt2]
/// (mirrored in Y), with every direct-sum and action claim verified:
/// s kills the first bracket, maps x2[n] isomorphically onto
/// m[n+1] ⊕ y2[n+1], maps xx2[i] onto mm[i+1] ⊕ yy2[i+1], and maps the
/// tilde blocks onto mm[1] and yy2[1].
struct FullDecomposition {
    std::size_t level = 1;
    std::vector<NamedBlock> x_blocks, y_blocks;
    std::vector<BlockIso> actions;
};

/// level = 0 means "use the pair's number".
FullDecomposition full_decomposition(const OperatorPair& pr, std::size_t level = 0);

/// Block names of the canonical presentation for a case and number,
/// X side and Y side.  Shared by the canonical-form verifier and the
/// block-table synthesizer.
std::pair<std::vector<std::string>, std::vector<std::string>>
case_block_names(PairCase kind, std::size_t number);

/// Verifies every structural claim of the canonical presentation for
/// the pair's case: the required blocks vanish, the towers stabilize,
/// and s and t act as the prescribed isomorphisms between the listed
/// blocks.  Throws theorem_violation on any failed claim.
struct CanonicalReport {
    Classification cls;
    std::map<std::string, std::size_t> block_dims; // keyed by block name
    std::vector<std::string> checks;               // verified claims, in order
};

CanonicalReport canonical_form(const OperatorPair& pr);

/// The index computed three ways: from the defect profile, and from the
/// two block-dimension formulas
///   dim(x1 ⊕ n[2]) - dim(y1 ⊕ y_tilde_2)
///   dim(x1 ⊕ x_tilde_2) - dim(y1 ⊕ m[2]).
/// For pairs with number 1 both block formulas collapse to
/// dim x1 - dim y1.  All three always agree.
struct IndexFormulas {
    long long via_defects = 0;
    long long via_n_blocks = 0;
    long long via_m_blocks = 0;
};

IndexFormulas index_formulas(const OperatorPair& pr);

/// Index zero.  At finite dimension every pair is regular and Fredholm,
/// so the two predicates coincide; both are kept for the two notions
/// they name.
bool is_weyl(const OperatorPair& pr);
bool is_regular_weyl(const OperatorPair& pr);

} // namespace fredpair
