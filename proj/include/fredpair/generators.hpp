#pragma once

#include "fredpair/chains.hpp"
#include "fredpair/classification.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace fredpair {

/// Request for a pair with prescribed classification and block sizes.
/// `blocks` maps names from case_block_names(kind, number) to dimensions.
/// Missing names default to zero.  The derived blocks (XX2/YY2 towers and
/// the four tilde blocks) may be omitted: the exchange isomorphisms
/// determine them from the MM/NN towers, and supplying a value that
/// contradicts the determined one is rejected.
struct SynthSpec {
    PairCase kind = PairCase::I;
    std::size_t number = 1;
    std::map<std::string, std::size_t> blocks;
};

/// The complete block signature the request resolves to: every name of
/// case_block_names(kind, number), with the derived levels filled in by
///   XX2^i = MM^{i+1} + YY2^{i+1},  YY2^j = NN^{j+1} + XX2^{j+1},
///   XtN = MM^1,  Xt2 = YY2^1,  YtN = NN^1,  Yt2 = XX2^1.
/// Throws validation_error for an unknown block name, a violated pairing
/// (including unequal stabilized cores), or a request whose towers cannot
/// reach the case: II-n needs NN^n >= 1, III-n needs MM^n >= 1, and I-n
/// with n >= 2 needs both MM^{n-1} >= 1 and NN^{n-1} >= 1.
std::map<std::string, std::size_t> resolved_blocks(const SynthSpec& spec);

/// Materializes the request as a pair of 0/1 block matrices: an invertible
/// core for the stabilized X2/Y2 blocks, loose kernel coordinates for X1
/// and Y1, and one alternating shift strand per MM^j / NN^j unit ending
/// in the respective kernel cut.  classify() returns exactly
/// (kind, number) on the result and canonical_form() recovers
/// resolved_blocks(spec) as the block dimensions.
OperatorPair synth_from_case(const SynthSpec& spec);

/// Pair whose pseudo inverses misbehave as the dimensions grow.  Built
/// from blocks X = X1 ⊕ N1 ⊕ X2 ⊕ Xt and Y = Y1 ⊕ N2 ⊕ Y2 ⊕ Yt with
/// dim Y2 = dim X2, Xt identified with N2 and Yt with N1; s maps X2 to
/// Y2 and Xt to N2, t maps Y2 to X2 and Yt to N1, identities throughout.
/// The returned t_prime is a normalized generalized inverse for t, and
/// s_prime satisfies s * s_prime * s = s; `growth` is the computed
/// dimension of R(s') / (N(t') ∩ R(s')), which equals x2 + n1 and grows
/// without bound in n1 while the pair's own defects stay put.
struct PseudoInverseGrowth {
    OperatorPair pr;
    Matrix s_prime;
    Matrix t_prime;
    std::size_t growth = 0;
};

PseudoInverseGrowth pseudo_inverse_growth_pair(std::size_t x1, std::size_t y1,
                                               std::size_t x2, std::size_t n1,
                                               std::size_t n2);

/// Symmetrical pair with index x1 >= 1 (validation_error otherwise):
/// X = X1 ⊕ N ⊕ M, Y = M ⊕ N, s kills X1 ⊕ N and carries M across,
/// t kills M and carries N back.  Compositions vanish in both orders, so
/// the pair is symmetrical yet has nonzero index.
OperatorPair symmetrical_nonzero_index_pair(std::size_t x1, std::size_t n,
                                            std::size_t m);

/// splitmix64: state advances by 0x9e3779b97f4a7c15 and the output is
/// the mixed state.  Fixed here so generated corpora are reproducible
/// across implementations.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    long span(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

/// Random pair with the exact requested ranks, built as
/// invertible * rank skeleton * invertible.  Deterministic in the seed.
/// Throws validation_error when a rank exceeds what the dimensions allow.
OperatorPair random_pair(std::size_t x_dim, std::size_t y_dim,
                         std::size_t rank_s, std::size_t rank_t,
                         std::uint64_t seed);

/// Random chain with `spaces` spaces of dimension at most max_dim.
/// With complex_flag each boundary is drawn through the kernel of the
/// previous one, so the boundaries compose to zero exactly.
ChainComplex random_chain(std::size_t spaces, std::size_t max_dim,
                          std::uint64_t seed, bool complex_flag);

} // namespace fredpair
