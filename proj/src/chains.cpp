#include "fredpair/chains.hpp"

#include "fredpair/errors.hpp"
#include "fredpair/subspace.hpp"

#include <sstream>
#include <utility>

namespace fredpair {

namespace {

// delta_p lives at boundaries[p-1] and maps K_p into K_{p-1}.
void check_shapes(const ChainComplex& c) {
    if (c.dims.empty()) {
        if (!c.boundaries.empty())
            throw dimension_error("chain has boundaries but no spaces");
        return;
    }
    if (c.boundaries.size() + 1 != c.dims.size())
        throw dimension_error("chain needs exactly one boundary per adjacent "
                              "pair of spaces");
    for (std::size_t i = 0; i < c.boundaries.size(); ++i) {
        const Matrix& d = c.boundaries[i];
        if (d.rows() != c.dims[i] || d.cols() != c.dims[i + 1]) {
            std::ostringstream os;
            os << "boundary " << i + 1 << " must be " << c.dims[i] << " x "
               << c.dims[i + 1] << ", got " << d.rows() << " x " << d.cols();
            throw dimension_error(os.str());
        }
    }
}

// N(delta_p) inside K_p, with the edge convention delta_0 = 0.
Subspace degree_kernel(const ChainComplex& c, std::size_t p) {
    return p == 0 ? Subspace::full(c.dims[0])
                  : Subspace::kernel(c.boundaries[p - 1]);
}

// R(delta_{p+1}) inside K_p, with the edge convention delta_{n+1} = 0.
Subspace degree_range(const ChainComplex& c, std::size_t p) {
    return p + 1 < c.dims.size() ? Subspace::span(c.boundaries[p])
                                 : Subspace::zero(c.dims[p]);
}

} // namespace

void validate(const ChainComplex& c) {
    check_shapes(c);
    if (!c.is_complex) return;
    for (std::size_t i = 1; i < c.boundaries.size(); ++i)
        if (!matmul(c.boundaries[i - 1], c.boundaries[i]).is_zero()) {
            std::ostringstream os;
            os << "complex flag set but delta_" << i << " * delta_" << i + 1
               << " is nonzero";
            throw validation_error(os.str());
        }
}

ChainReport chain_report(const ChainComplex& c) {
    validate(c);
    ChainReport rep;
    for (std::size_t p = 0; p < c.dims.size(); ++p) {
        Subspace ker = degree_kernel(c, p);
        Subspace ran = degree_range(c, p);
        std::size_t both = intersect(ker, ran).dim();
        rep.kernel_defect.push_back(ker.dim() - both);
        rep.range_defect.push_back(ran.dim() - both);
        long long term = static_cast<long long>(rep.kernel_defect[p]) -
                         static_cast<long long>(rep.range_defect[p]);
        rep.index += p % 2 == 0 ? term : -term;
    }
    // For a complex R(delta_{p+1}) ⊆ N(delta_p), so the range defects are
    // zero and the kernel defects are the homology dimensions.
    if (c.is_complex) rep.homology_dims = rep.kernel_defect;
    return rep;
}

OperatorPair fold(const ChainComplex& c) {
    validate(c);
    std::vector<std::size_t> off(c.dims.size(), 0);
    std::size_t x_total = 0, y_total = 0;
    for (std::size_t p = 0; p < c.dims.size(); ++p) {
        std::size_t& side = p % 2 == 0 ? x_total : y_total;
        off[p] = side;
        side += c.dims[p];
    }
    Matrix s(y_total, x_total);
    Matrix t(x_total, y_total);
    for (std::size_t p = 1; p < c.dims.size(); ++p) {
        const Matrix& d = c.boundaries[p - 1];
        Matrix& into = p % 2 == 0 ? s : t;
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t col = 0; col < d.cols(); ++col)
                into.at(off[p - 1] + r, off[p] + col) = d.at(r, col);
    }
    return OperatorPair(x_total, y_total, std::move(s), std::move(t));
}

SplittingHomotopy splitting_homotopy(const ChainComplex& c) {
    validate(c);
    if (!c.is_complex)
        throw validation_error("splitting homotopy requires a true complex");
    SplittingHomotopy out;
    const std::size_t count = c.dims.size();
    if (count == 0) return out;

    // K_p = ran[p] ⊕ reps[p] ⊕ co[p]; reps completes the range inside the
    // kernel, co completes the kernel inside the space.
    std::vector<Subspace> ran(count), reps(count), co(count);
    for (std::size_t p = 0; p < count; ++p) {
        Subspace ker = degree_kernel(c, p);
        ran[p] = degree_range(c, p);
        reps[p] = complement_in(ran[p], ker);
        co[p] = complement_in(ker, Subspace::full(c.dims[p]));
    }

    for (std::size_t p = 0; p < count; ++p) {
        Matrix basis = hstack(hstack(ran[p].basis(), reps[p].basis()), co[p].basis());
        Matrix unmix = inverse(basis);
        std::size_t rest = reps[p].dim() + co[p].dim();
        Matrix sec(p + 1 < count ? c.dims[p + 1] : 0, ran[p].dim());
        if (p + 1 < count) {
            // Invert delta_{p+1} from its range back into co[p+1].
            Matrix restricted = matmul(c.boundaries[p], co[p + 1].basis());
            sec = matmul(co[p + 1].basis(), solve(restricted, ran[p].basis()));
        }
        out.h.push_back(matmul(hstack(sec, Matrix(sec.rows(), rest)), unmix));
        Matrix mid = hstack(Matrix(c.dims[p], ran[p].dim()),
                            hstack(reps[p].basis(), Matrix(c.dims[p], co[p].dim())));
        out.k.push_back(matmul(mid, unmix));
    }

    for (std::size_t p = 0; p < count; ++p) {
        Matrix lhs = p + 1 < count ? matmul(c.boundaries[p], out.h[p])
                                   : Matrix(c.dims[p], c.dims[p]);
        if (p > 0) lhs = lhs + matmul(out.h[p - 1], c.boundaries[p - 1]);
        std::ostringstream tag;
        tag << " at degree " << p;
        if (lhs != Matrix::identity(c.dims[p]) - out.k[p])
            throw theorem_violation("splitting homotopy identity failed" + tag.str());
        if (matmul(out.k[p], out.k[p]) != out.k[p])
            throw theorem_violation("homotopy correction is not a projection" +
                                    tag.str());
    }
    return out;
}

SplitCheck is_split_chain(const ChainComplex& c) {
    validate(c);
    SplitCheck out;
    out.split = true;
    out.note = "every subspace of a finite-dimensional space is complemented, "
               "so each kernel N(delta_p) splits off; the predicate is kept "
               "for interface completeness";
    return out;
}

namespace fixtures {

ChainComplex c1() {
    ChainComplex c;
    c.dims = {1, 2, 1};
    c.boundaries = {Matrix::from_rows({{0, 1}}), Matrix::from_rows({{1}, {0}})};
    c.is_complex = true;
    return c;
}

ChainComplex c2() {
    ChainComplex c;
    c.dims = {1, 2};
    c.boundaries = {Matrix::from_rows({{1, 0}})};
    c.is_complex = true;
    return c;
}

} // namespace fixtures

} // namespace fredpair
