#include "fredpair/generators.hpp"

#include "fredpair/errors.hpp"
#include "fredpair/subspace.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <map>
#include <string>
#include <vector>

using namespace fredpair;

TEST_CASE("block requests resolve with derived levels filled in") {
    SynthSpec spec{PairCase::III, 2, {{"X1", 2}, {"MM^2", 1}}};
    std::map<std::string, std::size_t> expected{
        {"X1", 2},   {"NN^1", 0}, {"X2^2", 0}, {"XX2^1", 1},
        {"XtN", 0},  {"Xt2", 0},  {"Y1", 0},   {"MM^1", 0},
        {"MM^2", 1}, {"Y2^1", 0}, {"YtN", 0},  {"Yt2", 1}};
    CHECK(resolved_blocks(spec) == expected);

    // Supplying a derived value is fine as long as it agrees.
    spec.blocks["Yt2"] = 1;
    CHECK(resolved_blocks(spec) == expected);

    SynthSpec one{PairCase::II, 1, {{"NN^1", 2}, {"YtN", 2}}};
    CHECK(resolved_blocks(one).at("YtN") == 2);
}

TEST_CASE("block requests with contradictions are rejected") {
    CHECK_THROWS_AS(
        resolved_blocks(SynthSpec{PairCase::I, 1, {{"M^1", 1}}}),
        validation_error);
    CHECK_THROWS_AS(
        resolved_blocks(SynthSpec{PairCase::I, 1, {{"MM^1", 1}}}),
        validation_error); // MM^1 only exists in cases II/III at number 1
    CHECK_THROWS_AS(
        resolved_blocks(SynthSpec{PairCase::I, 1, {{"X2^2", 1}, {"Y2^2", 2}}}),
        validation_error);
    CHECK_THROWS_AS(resolved_blocks(SynthSpec{
                        PairCase::III, 2, {{"X1", 2}, {"MM^2", 1}, {"Yt2", 2}}}),
                    validation_error);
    CHECK_THROWS_AS(
        resolved_blocks(SynthSpec{PairCase::II, 1, {{"NN^1", 2}, {"YtN", 1}}}),
        validation_error);
}

TEST_CASE("unreachable case requests are rejected") {
    // The towers must actually survive to the requested level.
    CHECK_THROWS_AS(resolved_blocks(SynthSpec{PairCase::I, 2, {{"X1", 1}}}),
                    validation_error);
    CHECK_THROWS_AS(resolved_blocks(SynthSpec{PairCase::II, 2, {{"NN^1", 1}}}),
                    validation_error);
    CHECK_THROWS_AS(resolved_blocks(SynthSpec{PairCase::III, 1, {}}),
                    validation_error);
    CHECK_THROWS_AS(resolved_blocks(SynthSpec{PairCase::I, 0, {}}),
                    validation_error);
    CHECK_NOTHROW(resolved_blocks(SynthSpec{PairCase::I, 1, {}}));
}

TEST_CASE("synthesized pairs land in their case") {
    SynthSpec e1{PairCase::I, 1,
                 {{"X1", 1}, {"Y1", 2}, {"X2^2", 1}, {"Y2^2", 1}}};
    OperatorPair p1 = synth_from_case(e1);
    CHECK(p1.x_dim == 2);
    CHECK(p1.y_dim == 3);
    CHECK(pair_index(p1) == -1);
    Classification c1 = classify(p1);
    CHECK(c1.kind == PairCase::I);
    CHECK(c1.number == 1);
    CHECK(canonical_form(p1).block_dims == resolved_blocks(e1));

    SynthSpec e2{PairCase::III, 2, {{"X1", 2}, {"MM^2", 1}}};
    OperatorPair p2 = synth_from_case(e2);
    Classification c2 = classify(p2);
    CHECK(c2.kind == PairCase::III);
    CHECK(c2.number == 2);
    CHECK(canonical_form(p2).block_dims == resolved_blocks(e2));

    // Matching kernel cuts on both sides give a symmetrical I-2 pair.
    SynthSpec e3{PairCase::I, 2, {{"MM^1", 1}, {"NN^1", 1}}};
    OperatorPair p3 = synth_from_case(e3);
    CHECK(is_symmetrical(p3));
    CHECK(classify(p3) == Classification{2, 2, 2, PairCase::I});

    // The empty request is the zero pair on zero spaces.
    OperatorPair p0 = synth_from_case(SynthSpec{PairCase::I, 1, {}});
    CHECK(p0.x_dim == 0);
    CHECK(p0.y_dim == 0);
    CHECK(classify(p0) == Classification{1, 1, 1, PairCase::I});

    // Deep tower with mixed blocks.
    SynthSpec e4{PairCase::I, 4, {{"MM^3", 2}, {"NN^3", 1}, {"X2^3", 1}}};
    OperatorPair p4 = synth_from_case(e4);
    Classification c4 = classify(p4);
    CHECK(c4.kind == PairCase::I);
    CHECK(c4.number == 4);
    CHECK(canonical_form(p4).block_dims == resolved_blocks(e4));
}

TEST_CASE("synthesis round trip over a block sweep") {
    std::size_t built = 0, rejected = 0;
    for (PairCase kind : {PairCase::I, PairCase::II, PairCase::III}) {
        for (std::size_t n = 1; n <= 2; ++n) {
            auto [xn, yn] = case_block_names(kind, n);
            std::vector<std::string> free_names{"X1", "Y1"};
            for (const auto& nm : xn)
                if (nm.rfind("X2^", 0) == 0 || nm.rfind("NN^", 0) == 0)
                    free_names.push_back(nm);
            for (const auto& nm : yn)
                if (nm.rfind("MM^", 0) == 0) free_names.push_back(nm);
            std::vector<std::size_t> pick(free_names.size(), 0);
            for (;;) {
                SynthSpec spec{kind, n, {}};
                for (std::size_t i = 0; i < pick.size(); ++i)
                    if (pick[i]) spec.blocks[free_names[i]] = pick[i];
                bool feasible = true;
                std::map<std::string, std::size_t> sig;
                try {
                    sig = resolved_blocks(spec);
                } catch (const validation_error&) {
                    feasible = false;
                    ++rejected;
                }
                if (feasible) {
                    OperatorPair pr = synth_from_case(spec);
                    Classification cls = classify(pr);
                    CHECK(cls.kind == kind);
                    CHECK(cls.number == n);
                    CHECK(canonical_form(pr).block_dims == sig);
                    ++built;
                }
                std::size_t i = 0;
                while (i < pick.size() && pick[i] == 2) pick[i++] = 0;
                if (i == pick.size()) break;
                ++pick[i];
            }
        }
    }
    CHECK(built > 200);
    CHECK(rejected > 0);
}

TEST_CASE("pseudo inverse growth pair") {
    PseudoInverseGrowth g = pseudo_inverse_growth_pair(1, 1, 1, 3, 2);
    CHECK(g.pr.x_dim == 7);
    CHECK(g.pr.y_dim == 7);
    CHECK(pair_index(g.pr) == 0);
    CHECK(g.growth == 4);

    // t' is a normalized generalized inverse of t.
    CHECK(matmul(g.pr.t, matmul(g.t_prime, g.pr.t)) == g.pr.t);
    CHECK(matmul(g.t_prime, matmul(g.pr.t, g.t_prime)) == g.t_prime);
    // s' inverts s from the outside but is not normalized: the extra leg
    // through Yt inflates its range.
    CHECK(matmul(g.pr.s, matmul(g.s_prime, g.pr.s)) == g.pr.s);
    CHECK(matmul(g.s_prime, matmul(g.pr.s, g.s_prime)) != g.s_prime);

    // The range excess grows linearly in n1 while the pair itself keeps
    // index x1 - y1 and bounded defects.
    std::size_t prev = 0;
    for (std::size_t n1 = 0; n1 <= 3; ++n1) {
        PseudoInverseGrowth gk = pseudo_inverse_growth_pair(1, 1, 1, n1, 2);
        CHECK(gk.growth == 1 + n1);
        CHECK(pair_index(gk.pr) == 0);
        if (n1 > 0) CHECK(gk.growth > prev);
        prev = gk.growth;
    }
    // Without the extra leg s' is normalized and the excess is just x2.
    PseudoInverseGrowth g0 = pseudo_inverse_growth_pair(1, 1, 2, 0, 1);
    CHECK(g0.growth == 2);
    CHECK(matmul(g0.s_prime, matmul(g0.pr.s, g0.s_prime)) == g0.s_prime);

    PseudoInverseGrowth g31 = pseudo_inverse_growth_pair(3, 1, 1, 0, 0);
    CHECK(pair_index(g31.pr) == 2);
}

TEST_CASE("symmetrical pair with nonzero index") {
    OperatorPair sy = symmetrical_nonzero_index_pair(1, 2, 2);
    CHECK(is_symmetrical(sy));
    CHECK(pair_index(sy) == 1);
    CHECK(matmul(sy.t, sy.s).is_zero());
    CHECK(matmul(sy.s, sy.t).is_zero());

    OperatorPair degenerate = symmetrical_nonzero_index_pair(2, 0, 0);
    CHECK(degenerate.x_dim == 2);
    CHECK(degenerate.y_dim == 0);
    CHECK(pair_index(degenerate) == 2);
    CHECK(is_symmetrical(degenerate));

    // Symmetrical pairs are never Weyl unless the index vanishes, and
    // this family always has index x1 >= 1.
    OperatorPair sy2 = symmetrical_nonzero_index_pair(1, 3, 1);
    CHECK(pair_index(sy2) == 1);
    CHECK_FALSE(is_weyl(sy2));
    CHECK(classify(sy2).kind == PairCase::I);

    CHECK_THROWS_AS(symmetrical_nonzero_index_pair(0, 1, 1), validation_error);
}

TEST_CASE("seeded pair generator hits the requested ranks") {
    OperatorPair r1 = random_pair(4, 3, 2, 1, 7);
    OperatorPair r2 = random_pair(4, 3, 2, 1, 7);
    CHECK(r1.s == r2.s);
    CHECK(r1.t == r2.t);
    CHECK(Subspace::span(r1.s).dim() == 2);
    CHECK(Subspace::span(r1.t).dim() == 1);

    OperatorPair r3 = random_pair(4, 3, 2, 1, 8);
    CHECK(r3.s != r1.s);

    OperatorPair z = random_pair(3, 3, 0, 2, 11);
    CHECK(z.s.is_zero());
    CHECK(Subspace::span(z.t).dim() == 2);

    CHECK_THROWS_AS(random_pair(3, 5, 4, 0, 1), validation_error);
    CHECK_THROWS_AS(random_pair(3, 5, 0, 4, 1), validation_error);
}

TEST_CASE("seeded chain generator") {
    ChainComplex c1 = random_chain(5, 4, 99, true);
    ChainComplex c2 = random_chain(5, 4, 99, true);
    CHECK(c1.dims == c2.dims);
    REQUIRE(c1.boundaries.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(c1.boundaries[i] == c2.boundaries[i]);
    CHECK(c1.is_complex);
    CHECK_NOTHROW(validate(c1));
    for (std::size_t d : c1.dims) CHECK(d <= 4);

    // The flag is what forces the boundaries to compose to zero.
    ChainComplex plain = random_chain(4, 3, 5, false);
    CHECK_FALSE(plain.is_complex);
    CHECK_NOTHROW(validate(plain));

    // Any seeded complex really is one.
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        ChainComplex c = random_chain(4, 4, seed, true);
        for (std::size_t p = 0; p + 1 < c.boundaries.size(); ++p)
            CHECK(matmul(c.boundaries[p], c.boundaries[p + 1]).is_zero());
    }
}
