#include "fredpair/classification.hpp"

#include "fredpair/errors.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fredpair;

namespace {

Subspace line(std::size_t ambient, std::size_t axis) {
    Matrix v(ambient, 1);
    v.at(axis, 0) = Rational(1);
    return Subspace::span(v);
}

// One operator each way on Q: s = 0, t = 1.
OperatorPair drop_raise() {
    Matrix s(1, 1), t(1, 1);
    t.at(0, 0) = Rational(1);
    return OperatorPair(1, 1, s, t);
}

} // namespace

TEST_CASE("range sequences of the rank-one fixture") {
    RangeSequences seq = range_sequences(fixtures::p1());
    // r_s: Q^2, f1, f1, 0, 0   r_t: Q^3, e1, 0, 0, 0
    REQUIRE(seq.r_s.size() == 5);
    REQUIRE(seq.r_t.size() == 5);
    CHECK(seq.r_s[0].is_full());
    CHECK(seq.r_s[1] == line(2, 0));
    CHECK(seq.r_s[2] == line(2, 0));
    CHECK(seq.r_s[3].is_zero());
    CHECK(seq.r_s[4].is_zero());
    CHECK(seq.r_t[0].is_full());
    CHECK(seq.r_t[1] == line(3, 0));
    CHECK(seq.r_t[2].is_zero());
    CHECK(seq.p == 3);
    CHECK(seq.q == 2);
    // tilde layers split each step down: r~_s = [., 0, f1, 0, 0]
    CHECK(seq.r_s_tilde[1].is_zero());
    CHECK(seq.r_s_tilde[2] == line(2, 0));
    CHECK(seq.r_t_tilde[1] == line(3, 0));
    CHECK(seq.r_t_tilde[2].is_zero());
}

TEST_CASE("classification of the fixture pairs") {
    Classification c = classify(fixtures::p1());
    CHECK(c.p == 3);
    CHECK(c.q == 2);
    CHECK(c.kind == PairCase::III);
    CHECK(c.number == 2);

    c = classify(fixtures::id2());
    CHECK(c == Classification{1, 1, 1, PairCase::I});

    c = classify(fixtures::sym1());
    CHECK(c == Classification{2, 2, 2, PairCase::I});

    c = classify(fixtures::zero_pair(3, 2));
    CHECK(c == Classification{1, 1, 1, PairCase::I});

    c = classify(drop_raise());
    CHECK(c == Classification{1, 2, 1, PairCase::II});

    c = classify(swapped(drop_raise()));
    CHECK(c == Classification{2, 1, 1, PairCase::III});
}

TEST_CASE("case labels round trip") {
    for (PairCase k : {PairCase::I, PairCase::II, PairCase::III})
        CHECK(pair_case_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(pair_case_from_string("IV"), parse_error);
}

TEST_CASE("subspace families of the rank-one fixture") {
    SubspaceFamilies fam = subspace_families(fixtures::p1(), 2);
    REQUIRE(fam.levels >= 3);
    CHECK(fam.m[1] == line(2, 0));
    CHECK(fam.m[2] == line(2, 0));
    CHECK(fam.m[3].is_zero());
    CHECK(fam.mm[1].is_zero());
    CHECK(fam.mm[2] == line(2, 0));
    CHECK(fam.n[1].is_zero());
    CHECK(fam.nn[1].is_zero());
    CHECK(fam.x2[1] == line(3, 0));
    CHECK(fam.x2[2].is_zero());
    CHECK(fam.xx2[1] == line(3, 0));
    for (std::size_t k = 1; k <= fam.levels; ++k) {
        CHECK(fam.y2[k].is_zero());
        CHECK(fam.yy2[k].is_zero());
    }
    CHECK(fam.x_tilde_n.is_zero());
    CHECK(fam.x_tilde_2.is_zero());
    CHECK(fam.y_tilde_n.is_zero());
    CHECK(fam.y_tilde_2 == line(2, 1));
}

TEST_CASE("subspace families of the symmetrical fixture") {
    SubspaceFamilies fam = subspace_families(fixtures::sym1(), 2);
    CHECK(fam.m[1] == line(2, 0));
    CHECK(fam.mm[1] == line(2, 0));
    CHECK(fam.m[2].is_zero());
    CHECK(fam.n[1] == line(2, 1));
    CHECK(fam.nn[1] == line(2, 1));
    CHECK(fam.n[2].is_zero());
    CHECK(fam.x_tilde_n == line(2, 0));
    CHECK(fam.x_tilde_2.is_zero());
    CHECK(fam.y_tilde_n == line(2, 1));
    CHECK(fam.y_tilde_2.is_zero());
}

TEST_CASE("families level validation") {
    CHECK_THROWS_AS(subspace_families(fixtures::id2(), 0), validation_error);
}

namespace {

// The splitting identities the family construction promises, restated
// independently of the construction order.
void check_family_laws(const OperatorPair& pr, const SubspaceFamilies& fam) {
    Subspace ker_s = Subspace::kernel(pr.s);
    Subspace ker_t = Subspace::kernel(pr.t);
    for (std::size_t k = 1; k <= fam.levels; ++k) {
        CHECK(fam.m[k] == intersect(fam.seq.r_s[k], ker_t));
        CHECK(fam.n[k] == intersect(fam.seq.r_t[k], ker_s));
        CHECK(sum(fam.m[k], fam.y2[k]) == fam.seq.r_s[k]);
        CHECK(fam.m[k].dim() + fam.y2[k].dim() == fam.seq.r_s[k].dim());
        CHECK(sum(fam.n[k], fam.x2[k]) == fam.seq.r_t[k]);
        CHECK(sum(fam.mm[k], fam.yy2[k]) == fam.seq.r_s_tilde[k]);
        CHECK(sum(fam.nn[k], fam.xx2[k]) == fam.seq.r_t_tilde[k]);
        // each level splits off its tilde layer
        CHECK(sum(fam.seq.r_s[k + 1], fam.seq.r_s_tilde[k]) == fam.seq.r_s[k]);
        CHECK(fam.seq.r_s[k + 1].dim() + fam.seq.r_s_tilde[k].dim() ==
              fam.seq.r_s[k].dim());
        if (k < fam.levels) {
            CHECK(is_subset(fam.y2[k + 1], fam.y2[k]));
            CHECK(is_subset(fam.x2[k + 1], fam.x2[k]));
            CHECK(sum(fam.m[k + 1], fam.mm[k]) == fam.m[k]);
            CHECK(sum(fam.y2[k + 1], fam.yy2[k]) == fam.y2[k]);
        }
    }
    CHECK(sum(fam.x_tilde_n, fam.x_tilde_2) == fam.dec.x_tilde);
    CHECK(image(pr.s, fam.x_tilde_n) == fam.mm[1]);
    CHECK(image(pr.s, fam.x_tilde_2) == fam.yy2[1]);
    CHECK(sum(fam.y_tilde_n, fam.y_tilde_2) == fam.dec.y_tilde);
    CHECK(image(pr.t, fam.y_tilde_n) == fam.nn[1]);
    CHECK(image(pr.t, fam.y_tilde_2) == fam.xx2[1]);
}

} // namespace

TEST_CASE("family laws on random pairs") {
    testutil::Mix64 g(0x5eedf00d);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t x = 1 + g.below(5), y = 1 + g.below(5);
        OperatorPair pr(x, y, testutil::random_matrix(g, y, x),
                        testutil::random_matrix(g, x, y));
        SubspaceFamilies fam = subspace_families(pr, 3);
        check_family_laws(pr, fam);
    }
}

TEST_CASE("stabilization indices stay adjacent") {
    testutil::Mix64 g(0xadce50);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t x = 1 + g.below(6), y = 1 + g.below(6);
        OperatorPair pr(x, y, testutil::random_matrix(g, y, x),
                        testutil::random_matrix(g, x, y));
        Classification c = classify(pr);
        CHECK(std::max(c.p, c.q) - std::min(c.p, c.q) <= 1);
        CHECK(c.number == std::min(c.p, c.q));
        // swapping the operators swaps p and q, mirroring the case
        Classification cs = classify(swapped(pr));
        CHECK(cs.p == c.q);
        CHECK(cs.q == c.p);
    }
}

TEST_CASE("full decomposition of the rank-one fixture") {
    FullDecomposition fd = full_decomposition(fixtures::p1());
    CHECK(fd.level == 2);
    auto dim_of = [](const std::vector<NamedBlock>& blocks, const char* name) {
        auto it = std::find_if(blocks.begin(), blocks.end(),
                               [&](const NamedBlock& b) { return b.name == name; });
        REQUIRE(it != blocks.end());
        return it->space.dim();
    };
    CHECK(dim_of(fd.x_blocks, "X1") == 2);
    CHECK(dim_of(fd.x_blocks, "XX2^1") == 1);
    CHECK(dim_of(fd.x_blocks, "X2^2") == 0);
    CHECK(dim_of(fd.y_blocks, "M^2") == 1);
    CHECK(dim_of(fd.y_blocks, "Yt2") == 1);
    // the only nonzero actions: s carries XX2^1 onto MM^2, t carries
    // Yt2 onto XX2^1
    std::size_t moved = 0;
    for (const auto& act : fd.actions)
        if (act.dim > 0 && act.to != "0") ++moved;
    CHECK(moved == 2);
}

TEST_CASE("full decomposition verifies at any level") {
    testutil::Mix64 g(0x1e7e1);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t x = 1 + g.below(5), y = 1 + g.below(5);
        OperatorPair pr(x, y, testutil::random_matrix(g, y, x),
                        testutil::random_matrix(g, x, y));
        for (std::size_t level = 1; level <= 3; ++level) {
            FullDecomposition fd = full_decomposition(pr, level);
            std::size_t x_total = 0, y_total = 0;
            for (const auto& b : fd.x_blocks) x_total += b.space.dim();
            for (const auto& b : fd.y_blocks) y_total += b.space.dim();
            CHECK(x_total == x);
            CHECK(y_total == y);
        }
    }
}

TEST_CASE("canonical form of the fixtures") {
    CanonicalReport rep = canonical_form(fixtures::p1());
    CHECK(rep.cls.kind == PairCase::III);
    CHECK(rep.cls.number == 2);
    std::map<std::string, std::size_t> expected{
        {"X1", 2},   {"NN^1", 0}, {"X2^2", 0}, {"XX2^1", 1},
        {"XtN", 0},  {"Xt2", 0},  {"Y1", 0},   {"MM^1", 0},
        {"MM^2", 1}, {"Y2^1", 0}, {"YtN", 0},  {"Yt2", 1}};
    CHECK(rep.block_dims == expected);

    rep = canonical_form(fixtures::id2());
    CHECK(rep.cls.kind == PairCase::I);
    CHECK(rep.block_dims ==
          std::map<std::string, std::size_t>{
              {"X1", 0}, {"X2^2", 2}, {"Y1", 0}, {"Y2^2", 2}});

    rep = canonical_form(fixtures::sym1());
    CHECK(rep.cls == Classification{2, 2, 2, PairCase::I});
    CHECK(rep.block_dims ==
          std::map<std::string, std::size_t>{{"X1", 0},
                                             {"NN^1", 1},
                                             {"X2^1", 0},
                                             {"XtN", 1},
                                             {"Xt2", 0},
                                             {"Y1", 0},
                                             {"MM^1", 1},
                                             {"Y2^1", 0},
                                             {"YtN", 1},
                                             {"Yt2", 0}});

    rep = canonical_form(drop_raise());
    CHECK(rep.cls.kind == PairCase::II);
    CHECK(rep.block_dims ==
          std::map<std::string, std::size_t>{
              {"X1", 0}, {"NN^1", 1}, {"X2^2", 0},
              {"Y1", 0}, {"Y2^2", 0}, {"YtN", 1}});
}

TEST_CASE("canonical form never fails on random pairs") {
    testutil::Mix64 g(0xcafe);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t x = 1 + g.below(6), y = 1 + g.below(6);
        OperatorPair pr(x, y, testutil::random_matrix(g, y, x),
                        testutil::random_matrix(g, x, y));
        CanonicalReport rep = canonical_form(pr);
        std::size_t x_total = 0, y_total = 0;
        auto [x_names, y_names] = case_block_names(rep.cls.kind, rep.cls.number);
        for (const auto& nm : x_names) x_total += rep.block_dims.at(nm);
        for (const auto& nm : y_names) y_total += rep.block_dims.at(nm);
        CHECK(x_total == x);
        CHECK(y_total == y);
        CHECK(rep.block_dims.size() == x_names.size() + y_names.size());
    }
}

TEST_CASE("block name tables") {
    auto [x1, y1] = case_block_names(PairCase::I, 1);
    CHECK(x1 == std::vector<std::string>{"X1", "X2^2"});
    CHECK(y1 == std::vector<std::string>{"Y1", "Y2^2"});
    auto [x2, y2] = case_block_names(PairCase::II, 2);
    CHECK(x2 == std::vector<std::string>{"X1", "NN^1", "NN^2", "X2^1", "XtN",
                                         "Xt2"});
    CHECK(y2 == std::vector<std::string>{"Y1", "MM^1", "Y2^2", "YY2^1", "YtN",
                                         "Yt2"});
    auto [x3, y3] = case_block_names(PairCase::III, 3);
    CHECK(x3 == std::vector<std::string>{"X1", "NN^1", "NN^2", "X2^3", "XX2^1",
                                         "XX2^2", "XtN", "Xt2"});
    CHECK(y3 == std::vector<std::string>{"Y1", "MM^1", "MM^2", "MM^3", "Y2^2",
                                         "YY2^1", "YtN", "Yt2"});
    CHECK_THROWS_AS(case_block_names(PairCase::I, 0), validation_error);
}

TEST_CASE("three index formulas agree") {
    IndexFormulas f = index_formulas(fixtures::p1());
    CHECK(f.via_defects == 1);
    CHECK(f.via_n_blocks == 1);
    CHECK(f.via_m_blocks == 1);

    testutil::Mix64 g(0x1dc5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t x = 1 + g.below(6), y = 1 + g.below(6);
        OperatorPair pr(x, y, testutil::random_matrix(g, y, x),
                        testutil::random_matrix(g, x, y));
        f = index_formulas(pr);
        CHECK(f.via_defects == static_cast<long long>(x) - static_cast<long long>(y));
        CHECK(f.via_n_blocks == f.via_defects);
        CHECK(f.via_m_blocks == f.via_defects);
    }
}

TEST_CASE("weyl predicates") {
    CHECK(is_weyl(fixtures::id2()));
    CHECK(is_regular_weyl(fixtures::sym1()));
    CHECK_FALSE(is_weyl(fixtures::p1()));
    CHECK_FALSE(is_regular_weyl(fixtures::zero_pair(3, 2)));
}
