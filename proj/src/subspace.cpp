#include "fredpair/subspace.hpp"

#include "fredpair/errors.hpp"

#include <string>

namespace fredpair {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient() != b.ambient())
        throw dimension_error(std::string(what) + ": ambient dimensions " +
                              std::to_string(a.ambient()) + " and " +
                              std::to_string(b.ambient()) + " differ");
}

} // namespace

Subspace Subspace::span(const Matrix& vectors) {
    // Reduced column echelon form is the transpose of the reduced row
    // echelon form of the transpose.
    const Echelon e = rref(vectors.transpose());
    Subspace s;
    s.ambient_ = vectors.rows();
    s.basis_ = e.reduced.row_slice(0, e.rank).transpose();
    s.pivot_rows_ = e.pivots;
    return s;
}

Subspace Subspace::kernel(const Matrix& op) { return span(kernel_basis(op)); }

bool Subspace::contains(const Matrix& v) const {
    if (v.rows() != ambient_ || v.cols() != 1)
        throw dimension_error("membership test: expected a single column of height " +
                              std::to_string(ambient_));
    return rank(hstack(basis_, v)) == dim();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum");
    return Subspace::span(hstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersection");
    // Kernel vectors (u, v) of [A | -B] give the coincidences A u = B v.
    const Matrix k = kernel_basis(hstack(a.basis(), scale(Rational(-1), b.basis())));
    return Subspace::span(matmul(a.basis(), k.row_slice(0, a.dim())));
}

bool is_subset(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "inclusion");
    return rank(hstack(b.basis(), a.basis())) == b.dim();
}

std::size_t rel_codim(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "relative codimension");
    return a.dim() - intersect(a, b).dim();
}

namespace {

// Greedily extends `start` by columns of `candidates` that raise the
// rank, in index order.  Returns the chosen columns.
Matrix greedy_extension(const Matrix& start, const Matrix& candidates) {
    Matrix acc = start;
    Matrix chosen(candidates.rows(), 0);
    std::size_t r = rank(acc);
    for (std::size_t j = 0; j < candidates.cols(); ++j) {
        const Matrix c = candidates.col(j);
        const Matrix widened = hstack(acc, c);
        if (rank(widened) > r) {
            acc = widened;
            chosen = hstack(chosen, c);
            ++r;
        }
    }
    return chosen;
}

} // namespace

Subspace complement_in(const Subspace& inner, const Subspace& outer) {
    require_same_ambient(inner, outer, "complement");
    if (!is_subset(inner, outer))
        throw validation_error("complement: inner space is not contained in outer space");
    return Subspace::span(greedy_extension(inner.basis(), outer.basis()));
}

Subspace constrained_complement(const Subspace& inner, const Subspace& outer,
                                const Subspace& pool) {
    require_same_ambient(inner, outer, "constrained complement");
    require_same_ambient(inner, pool, "constrained complement");
    if (!is_subset(inner, outer))
        throw validation_error("constrained complement: inner space is not contained in outer space");
    const Subspace reservoir = intersect(outer, pool);
    const Matrix chosen = greedy_extension(inner.basis(), reservoir.basis());
    if (inner.dim() + chosen.cols() != outer.dim())
        throw theorem_violation("no complement inside the pool: reached dimension " +
                                std::to_string(inner.dim() + chosen.cols()) + " of " +
                                std::to_string(outer.dim()));
    return Subspace::span(chosen);
}

Subspace image(const Matrix& op, const Subspace& u) {
    if (op.cols() != u.ambient())
        throw dimension_error("image: operator domain " + std::to_string(op.cols()) +
                              " differs from ambient " + std::to_string(u.ambient()));
    return Subspace::span(matmul(op, u.basis()));
}

Subspace preimage(const Matrix& op, const Subspace& w) {
    if (op.rows() != w.ambient())
        throw dimension_error("preimage: operator codomain " + std::to_string(op.rows()) +
                              " differs from ambient " + std::to_string(w.ambient()));
    // x maps into w exactly when x is killed by the quotient coordinates.
    return Subspace::kernel(matmul(quotient_map(w).projection, op));
}

QuotientMap quotient_map(const Subspace& w) {
    const Subspace c = complement_in(w, Subspace::full(w.ambient()));
    const Matrix b = hstack(w.basis(), c.basis());
    const Matrix binv = inverse(b);
    QuotientMap q;
    q.projection = binv.row_slice(w.dim(), w.ambient());
    q.section = c.basis();
    return q;
}

} // namespace fredpair
