#include "fredpair/pair.hpp"

#include "fredpair/errors.hpp"

#include <string>

namespace fredpair {

OperatorPair::OperatorPair(std::size_t x, std::size_t y, Matrix s_op, Matrix t_op)
    : x_dim(x), y_dim(y), s(std::move(s_op)), t(std::move(t_op)) {
    if (s.rows() != y_dim || s.cols() != x_dim)
        throw dimension_error("pair: s must be " + std::to_string(y_dim) + "x" +
                              std::to_string(x_dim) + ", got " + std::to_string(s.rows()) +
                              "x" + std::to_string(s.cols()));
    if (t.rows() != x_dim || t.cols() != y_dim)
        throw dimension_error("pair: t must be " + std::to_string(x_dim) + "x" +
                              std::to_string(y_dim) + ", got " + std::to_string(t.rows()) +
                              "x" + std::to_string(t.cols()));
}

DefectProfile defects(const OperatorPair& pr) {
    const Subspace ns = Subspace::kernel(pr.s);
    const Subspace rt = Subspace::span(pr.t);
    const Subspace nt = Subspace::kernel(pr.t);
    const Subspace rs = Subspace::span(pr.s);
    DefectProfile d;
    d.a = rel_codim(ns, rt);
    d.b = rel_codim(rt, ns);
    d.c = rel_codim(nt, rs);
    d.d = rel_codim(rs, nt);
    d.index = static_cast<long long>(d.a) - static_cast<long long>(d.b) -
              static_cast<long long>(d.c) + static_cast<long long>(d.d);
    return d;
}

long long pair_index(const OperatorPair& pr) { return defects(pr).index; }

OperatorPair swapped(const OperatorPair& pr) {
    return OperatorPair(pr.y_dim, pr.x_dim, pr.t, pr.s);
}

OperatorPair pair_from_operator(const Matrix& s) {
    return OperatorPair(s.cols(), s.rows(), s, Matrix::zero(s.cols(), s.rows()));
}

PairDecomposition decompose(const OperatorPair& pr) {
    const Subspace ns = Subspace::kernel(pr.s);
    const Subspace rt = Subspace::span(pr.t);
    const Subspace nt = Subspace::kernel(pr.t);
    const Subspace rs = Subspace::span(pr.s);
    PairDecomposition d;
    d.ns_rt = intersect(ns, rt);
    d.x1 = complement_in(d.ns_rt, ns);
    d.x2 = complement_in(d.ns_rt, rt);
    d.x_tilde = complement_in(sum(ns, rt), Subspace::full(pr.x_dim));
    d.nt_rs = intersect(nt, rs);
    d.y1 = complement_in(d.nt_rs, nt);
    d.y2 = complement_in(d.nt_rs, rs);
    d.y_tilde = complement_in(sum(nt, rs), Subspace::full(pr.y_dim));
    return d;
}

namespace {

// G agreeing with `values` on the columns of the invertible `basis`.
Matrix map_on_basis(const Matrix& basis, const Matrix& values) {
    return matmul(values, inverse(basis));
}

} // namespace

Matrix generalized_inverse(const Matrix& op) {
    const Subspace coker = complement_in(Subspace::span(op), Subspace::full(op.rows()));
    const Subspace ker_comp = complement_in(Subspace::kernel(op), Subspace::full(op.cols()));
    const Matrix range_basis = Subspace::span(op).basis();
    // op restricted to ker_comp is injective onto the range; invert it
    // column by column.
    const Matrix w = solve(matmul(op, ker_comp.basis()), range_basis);
    const Matrix back = matmul(ker_comp.basis(), w);
    const Matrix basis = hstack(range_basis, coker.basis());
    const Matrix values = hstack(back, Matrix::zero(op.cols(), coker.dim()));
    return map_on_basis(basis, values);
}

Matrix normalize_ginv(const Matrix& op, const Matrix& g) {
    if (g.rows() != op.cols() || g.cols() != op.rows())
        throw dimension_error("normalize: inverse candidate has the wrong shape");
    if (matmul(matmul(op, g), op) != op)
        throw validation_error("normalize: operand is not a generalized inverse");
    return matmul(matmul(g, op), g);
}

AdjointPair adjoint_pair(const OperatorPair& pr) {
    const PairDecomposition d = decompose(pr);

    // s' kills y1 ⊕ y_tilde and inverts s through x2 ⊕ x_tilde on R(s).
    const Matrix sdom = hstack(d.x2.basis(), d.x_tilde.basis());
    const Matrix rs = Subspace::span(pr.s).basis();
    const Matrix s_back = matmul(sdom, solve(matmul(pr.s, sdom), rs));
    const Matrix s_basis = hstack(hstack(rs, d.y1.basis()), d.y_tilde.basis());
    const Matrix s_values = hstack(s_back, Matrix::zero(pr.x_dim, d.y1.dim() + d.y_tilde.dim()));
    const Matrix s_prime = map_on_basis(s_basis, s_values);

    // t' kills x1 ⊕ x_tilde and inverts t through y2 ⊕ y_tilde on R(t).
    const Matrix tdom = hstack(d.y2.basis(), d.y_tilde.basis());
    const Matrix rt = Subspace::span(pr.t).basis();
    const Matrix t_back = matmul(tdom, solve(matmul(pr.t, tdom), rt));
    const Matrix t_basis = hstack(hstack(rt, d.x1.basis()), d.x_tilde.basis());
    const Matrix t_values = hstack(t_back, Matrix::zero(pr.y_dim, d.x1.dim() + d.x_tilde.dim()));
    const Matrix t_prime = map_on_basis(t_basis, t_values);

    AdjointPair out;
    out.pair = OperatorPair(pr.y_dim, pr.x_dim, s_prime, t_prime);
    out.witness = GinvWitness{s_prime, t_prime, true};
    return out;
}

bool is_symmetrical(const OperatorPair& pr) {
    return matmul(pr.s, pr.t).is_zero() && matmul(pr.t, pr.s).is_zero();
}

std::optional<Matrix> invertible_ginv(const Matrix& op) {
    if (!op.is_square()) return std::nullopt;
    const Subspace coker = complement_in(Subspace::span(op), Subspace::full(op.rows()));
    const Subspace ker = Subspace::kernel(op);
    const Subspace ker_comp = complement_in(ker, Subspace::full(op.cols()));
    const Matrix range_basis = Subspace::span(op).basis();
    const Matrix w = solve(matmul(op, ker_comp.basis()), range_basis);
    const Matrix back = matmul(ker_comp.basis(), w);
    // Send the cokernel complement isomorphically onto the kernel; the
    // extra summand is annihilated by op on both sides, so the
    // generalized inverse identity op g op = op survives and g becomes
    // a bijection (range and kernel complements pair up squarely).
    const Matrix basis = hstack(range_basis, coker.basis());
    const Matrix values = hstack(back, ker.basis());
    return map_on_basis(basis, values);
}

bool is_decomposably_regular(const Matrix& op) { return invertible_ginv(op).has_value(); }

namespace fixtures {

OperatorPair id2() {
    return OperatorPair(2, 2, Matrix::identity(2), Matrix::identity(2));
}

OperatorPair zero_pair(std::size_t m, std::size_t n) {
    return OperatorPair(m, n, Matrix::zero(n, m), Matrix::zero(m, n));
}

OperatorPair p1() {
    return OperatorPair(3, 2, Matrix::from_rows({{1, 0, 0}, {0, 0, 0}}),
                        Matrix::from_rows({{0, 1}, {0, 0}, {0, 0}}));
}

OperatorPair sym1() {
    return OperatorPair(2, 2, Matrix::from_rows({{1, 0}, {0, 0}}),
                        Matrix::from_rows({{0, 0}, {0, 1}}));
}

} // namespace fixtures

} // namespace fredpair
