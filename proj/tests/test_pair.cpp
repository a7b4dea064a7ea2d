#include "fredpair/pair.hpp"

#include "fredpair/errors.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace fredpair;
using testutil::Mix64;
using testutil::random_matrix;

namespace {

OperatorPair arbitrary_pair(Mix64& g, std::size_t max_dim = 5) {
    std::size_t x = g.below(max_dim + 1), y = g.below(max_dim + 1);
    return OperatorPair(x, y, random_matrix(g, y, x, -2, 2), random_matrix(g, x, y, -2, 2));
}

} // namespace

TEST_SUITE("pair") {

TEST_CASE("defect profiles of the named fixtures") {
    DefectProfile d = defects(fixtures::id2());
    CHECK(d == DefectProfile{0, 2, 0, 2, 0});

    CHECK(defects(fixtures::zero_pair(3, 1)) == DefectProfile{3, 0, 1, 0, 2});
    CHECK(defects(fixtures::zero_pair(0, 4)) == DefectProfile{0, 0, 4, 0, -4});
    CHECK(defects(fixtures::zero_pair(0, 0)) == DefectProfile{0, 0, 0, 0, 0});

    CHECK(defects(fixtures::p1()) == DefectProfile{2, 1, 0, 0, 1});
    // The kernels coincide with the opposite ranges, so every defect vanishes.
    CHECK(defects(fixtures::sym1()) == DefectProfile{0, 0, 0, 0, 0});
}

TEST_CASE("pair construction validates shapes") {
    CHECK_THROWS_AS(OperatorPair(2, 2, Matrix(2, 3), Matrix(2, 2)), dimension_error);
    CHECK_THROWS_AS(OperatorPair(2, 2, Matrix(2, 2), Matrix(3, 2)), dimension_error);
}

TEST_CASE("index equals dim X - dim Y and swap negates it") {
    Mix64 g(0xA0A1A2A3A4A5A6A7ULL);
    for (int it = 0; it < 60; ++it) {
        OperatorPair pr = arbitrary_pair(g);
        DefectProfile d = defects(pr);
        CHECK(d.index == static_cast<long long>(pr.x_dim) - static_cast<long long>(pr.y_dim));
        DefectProfile ds = defects(swapped(pr));
        CHECK(ds.a == d.c);
        CHECK(ds.b == d.d);
        CHECK(ds.c == d.a);
        CHECK(ds.d == d.b);
        CHECK(ds.index == -d.index);
    }
}

TEST_CASE("pair_from_operator pads with the zero operator") {
    OperatorPair pr = pair_from_operator(Matrix::from_rows({{1, 0}, {0, 0}}));
    CHECK(pr.x_dim == 2);
    CHECK(pr.y_dim == 2);
    CHECK(pr.t.is_zero());
    CHECK(defects(pr) == DefectProfile{1, 0, 1, 0, 0});
}

TEST_CASE("decomposition of the rank-one fixture") {
    PairDecomposition d = decompose(fixtures::p1());
    CHECK(d.ns_rt.is_zero());
    CHECK(d.x1.basis() == Matrix::from_rows({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(d.x2.basis() == Matrix::from_rows({{1}, {0}, {0}}));
    CHECK(d.x_tilde.is_zero());
    CHECK(d.nt_rs.basis() == Matrix::from_rows({{1}, {0}}));
    CHECK(d.y1.is_zero());
    CHECK(d.y2.is_zero());
    CHECK(d.y_tilde.basis() == Matrix::from_rows({{0}, {1}}));
}

TEST_CASE("decomposition splittings hold on random pairs") {
    Mix64 g(0xB00B00B00B00B00BULL);
    for (int it = 0; it < 40; ++it) {
        OperatorPair pr = arbitrary_pair(g);
        PairDecomposition d = decompose(pr);
        const Subspace ns = Subspace::kernel(pr.s);
        const Subspace rt = Subspace::span(pr.t);
        const Subspace nt = Subspace::kernel(pr.t);
        const Subspace rs = Subspace::span(pr.s);

        CHECK(sum(d.ns_rt, d.x1) == ns);
        CHECK(intersect(d.ns_rt, d.x1).is_zero());
        CHECK(sum(d.ns_rt, d.x2) == rt);
        CHECK(intersect(d.ns_rt, d.x2).is_zero());
        CHECK(sum(sum(ns, rt), d.x_tilde) == Subspace::full(pr.x_dim));
        CHECK(intersect(sum(ns, rt), d.x_tilde).is_zero());

        CHECK(sum(d.nt_rs, d.y1) == nt);
        CHECK(sum(d.nt_rs, d.y2) == rs);
        CHECK(sum(sum(nt, rs), d.y_tilde) == Subspace::full(pr.y_dim));

        // s restricted to x2 ⊕ x_tilde is an isomorphism onto R(s), and
        // the two image pieces stay independent.
        const Subspace sx2 = image(pr.s, d.x2);
        const Subspace sxt = image(pr.s, d.x_tilde);
        CHECK(sx2.dim() == d.x2.dim());
        CHECK(sxt.dim() == d.x_tilde.dim());
        CHECK(intersect(sx2, sxt).is_zero());
        CHECK(sum(sx2, sxt) == rs);
        // The x2 part lands exactly on R(s t).
        CHECK(sx2 == Subspace::span(matmul(pr.s, pr.t)));
    }
}

TEST_CASE("generalized inverse on fixed operators") {
    // The s operator of the rank-one fixture.
    Matrix op = fixtures::p1().s;
    Matrix g = generalized_inverse(op);
    CHECK(g == Matrix::from_rows({{1, 0}, {0, 0}, {0, 0}}));

    CHECK(generalized_inverse(Matrix::zero(2, 3)) == Matrix::zero(3, 2));
    Matrix u = Matrix::from_rows({{2, 1}, {1, 1}});
    CHECK(generalized_inverse(u) == inverse(u));
    CHECK(generalized_inverse(Matrix(0, 0)) == Matrix(0, 0));
    CHECK(generalized_inverse(Matrix(0, 3)) == Matrix(3, 0));
}

TEST_CASE("generalized inverse identities on random operators") {
    Mix64 g(0xCAFED00DCAFED00DULL);
    for (int it = 0; it < 60; ++it) {
        Matrix op = random_matrix(g, g.below(6), g.below(6), -2, 2);
        Matrix gi = generalized_inverse(op);
        CHECK(matmul(matmul(op, gi), op) == op);
        CHECK(matmul(matmul(gi, op), gi) == gi);
    }
}

TEST_CASE("normalization of a one-sided inverse") {
    Matrix op = Matrix::from_rows({{1, 0}, {0, 0}});

    // Already normalized: fixed by normalization.
    Matrix g1 = Matrix::from_rows({{1, 0}, {7, 0}});
    CHECK(normalize_ginv(op, g1) == g1);

    // A generalized inverse that fails the second identity.
    Matrix g2 = Matrix::from_rows({{1, 0}, {0, 5}});
    Matrix n2 = normalize_ginv(op, g2);
    CHECK(n2 == Matrix::from_rows({{1, 0}, {0, 0}}));
    CHECK(matmul(matmul(op, n2), op) == op);
    CHECK(matmul(matmul(n2, op), n2) == n2);

    // Not a generalized inverse at all.
    CHECK_THROWS_AS(normalize_ginv(op, Matrix::zero(2, 2)), validation_error);
    CHECK_THROWS_AS(normalize_ginv(op, Matrix(3, 2)), dimension_error);
}

TEST_CASE("normalization output always satisfies both identities") {
    Mix64 g(0xFEEDFACEFEEDFACEULL);
    int tested = 0;
    for (int it = 0; it < 100 && tested < 25; ++it) {
        Matrix op = random_matrix(g, 1 + g.below(4), 1 + g.below(4), -2, 2);
        Matrix cand = random_matrix(g, op.cols(), op.rows(), -2, 2);
        if (matmul(matmul(op, cand), op) != op) continue; // only true g-inverses
        ++tested;
        Matrix n = normalize_ginv(op, cand);
        CHECK(matmul(matmul(op, n), op) == op);
        CHECK(matmul(matmul(n, op), n) == n);
    }
    CHECK(tested > 0);
}

TEST_CASE("adjoint pair of the rank-one fixture") {
    AdjointPair adj = adjoint_pair(fixtures::p1());
    CHECK(adj.pair.s == Matrix::from_rows({{1, 0}, {0, 0}, {0, 0}}));
    CHECK(adj.pair.t == Matrix::from_rows({{0, 0, 0}, {1, 0, 0}}));
    CHECK(adj.pair.x_dim == 2);
    CHECK(adj.pair.y_dim == 3);
    CHECK(pair_index(adj.pair) == -1);
    CHECK(adj.witness.normalized);
}

TEST_CASE("adjoint pair identities on random pairs") {
    Mix64 g(0x1357246813572468ULL);
    for (int it = 0; it < 40; ++it) {
        OperatorPair pr = arbitrary_pair(g);
        PairDecomposition d = decompose(pr);
        AdjointPair adj = adjoint_pair(pr);
        const Matrix& sp = adj.pair.s;
        const Matrix& tp = adj.pair.t;

        // Both directions of both generalized-inverse identities.
        CHECK(matmul(matmul(pr.s, sp), pr.s) == pr.s);
        CHECK(matmul(matmul(sp, pr.s), sp) == sp);
        CHECK(matmul(matmul(pr.t, tp), pr.t) == pr.t);
        CHECK(matmul(matmul(tp, pr.t), tp) == tp);

        // The crossing kernels of the new pair are the tilde spaces.
        CHECK(intersect(Subspace::kernel(sp), Subspace::span(tp)) == d.y_tilde);
        CHECK(intersect(Subspace::kernel(tp), Subspace::span(sp)) == d.x_tilde);

        CHECK(pair_index(adj.pair) == -pair_index(pr));
    }
}

TEST_CASE("symmetry test agrees with vanishing cross defects") {
    CHECK(is_symmetrical(fixtures::sym1()));
    CHECK_FALSE(is_symmetrical(fixtures::id2()));
    CHECK(is_symmetrical(fixtures::zero_pair(2, 3)));

    Mix64 g(0x2468135724681357ULL);
    for (int it = 0; it < 60; ++it) {
        OperatorPair pr = arbitrary_pair(g, 4);
        DefectProfile d = defects(pr);
        CHECK(is_symmetrical(pr) == (d.b == 0 && d.d == 0));
    }
}

TEST_CASE("invertible generalized inverses exist exactly for square operators") {
    CHECK_FALSE(invertible_ginv(Matrix(2, 3)).has_value());
    CHECK_FALSE(is_decomposably_regular(Matrix(3, 2)));

    Mix64 g(0x0BADBEEF0BADBEEFULL);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = g.below(5);
        Matrix op = random_matrix(g, n, n, -2, 2);
        CHECK(is_decomposably_regular(op));
        Matrix gi = *invertible_ginv(op);
        CHECK(matmul(matmul(op, gi), op) == op);
        CHECK(rank(gi) == n); // invertible witness
    }
}

}
