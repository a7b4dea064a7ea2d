#pragma once

#include "fredpair/matrix.hpp"

#include <cstddef>
#include <vector>

namespace fredpair {

/// Subspace of Q^ambient held by a canonical basis.
///
/// The basis matrix (ambient rows, dim columns) is in reduced column
/// echelon form: pivot rows strictly increase left to right, each pivot
/// entry is 1, and a pivot row is zero in every other column.  That form
/// is unique per subspace, so equality of subspaces is plain structural
/// equality.  The zero subspace has a basis with zero columns.
class Subspace {
public:
    Subspace() = default;

    /// Span of the columns of `vectors` inside Q^rows.
    static Subspace span(const Matrix& vectors);
    /// Right nullspace of `op` inside Q^cols.
    static Subspace kernel(const Matrix& op);
    static Subspace zero(std::size_t ambient) { return span(Matrix(ambient, 0)); }
    static Subspace full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_rows() const { return pivot_rows_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Membership of a single column vector.
    bool contains(const Matrix& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivot_rows_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool is_subset(const Subspace& a, const Subspace& b);

/// dim a - dim(a ∩ b): the dimension of a / (a ∩ b).
std::size_t rel_codim(const Subspace& a, const Subspace& b);

/// Deterministic complement: extends `inner` to `outer` by greedily
/// taking canonical basis vectors of `outer` in index order.  Requires
/// inner ⊆ outer; the result c satisfies inner ⊕ c = outer.
Subspace complement_in(const Subspace& inner, const Subspace& outer);

/// Complement of `inner` in `outer` chosen inside `pool`, assembled
/// greedily from the canonical basis of outer ∩ pool.  Throws
/// theorem_violation when no complement exists inside the pool, since
/// every caller is a construction whose feasibility is guaranteed.
Subspace constrained_complement(const Subspace& inner, const Subspace& outer,
                                const Subspace& pool);

/// op(u) as a subspace of Q^{op.rows()}.
Subspace image(const Matrix& op, const Subspace& u);

/// { x : op(x) ∈ w } as a subspace of Q^{op.cols()}.
Subspace preimage(const Matrix& op, const Subspace& w);

/// Coordinates for Q^n / w: `projection` (codim x n) has kernel exactly
/// w, `section` embeds the deterministic complement of w back into Q^n,
/// and projection * section is the identity.
struct QuotientMap {
    Matrix projection;
    Matrix section;
};
QuotientMap quotient_map(const Subspace& w);

} // namespace fredpair
