#include "fredpair/matrix.hpp"

#include "fredpair/errors.hpp"

#include <string>
#include <utility>

namespace fredpair {

namespace {

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw dimension_error("matrix entry count " + std::to_string(e_.size()) +
                              " does not fill " + shape(*this));
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw dimension_error("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::col_slice(std::size_t first, std::size_t last) const {
    if (first > last || last > cols_) throw dimension_error("column slice out of range");
    Matrix s(rows_, last - first);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = first; j < last; ++j) s.at(i, j - first) = at(i, j);
    return s;
}

Matrix Matrix::row_slice(std::size_t first, std::size_t last) const {
    if (first > last || last > rows_) throw dimension_error("row slice out of range");
    Matrix s(last - first, cols_);
    for (std::size_t i = first; i < last; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.at(i - first, j) = at(i, j);
    return s;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("add " + shape(a) + " with " + shape(b));
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

Matrix scale(const Rational& c, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
    return r;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("multiply " + shape(a) + " by " + shape(b));
    Matrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }

Matrix operator-(const Matrix& a, const Matrix& b) { return add(a, scale(Rational(-1), b)); }

Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw dimension_error("hstack " + shape(a) + " with " + shape(b));
    Matrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw dimension_error("vstack " + shape(a) + " with " + shape(b));
    Matrix r(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

Echelon rref(const Matrix& m) {
    Echelon e;
    e.reduced = m;
    Matrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(row, j));
        const Rational inv = Rational(1) / a.at(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            const Rational f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rank = e.pivots.size();
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    Matrix basis(m.cols(), m.cols() - e.rank);
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.at(free, out) = Rational(1);
        for (std::size_t r = 0; r < e.rank; ++r)
            basis.at(e.pivots[r], out) = -e.reduced.at(r, free);
        ++out;
    }
    return basis;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw dimension_error("solve " + shape(a) + " x = " + shape(b));
    const Echelon e = rref(hstack(a, b));
    // A pivot in the b-part means that column is outside the span of a.
    for (std::size_t p : e.pivots)
        if (p >= a.cols()) throw validation_error("linear system has no solution");
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivots[r], j) = e.reduced.at(r, a.cols() + j);
    return x;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw validation_error("inverse of a non-square matrix");
    const Echelon e = rref(hstack(m, Matrix::identity(m.rows())));
    // [m | I] always has full row rank; m is invertible exactly when all
    // pivots land in the left block.
    if (!e.pivots.empty() && e.pivots.back() >= m.cols())
        throw validation_error("inverse of a singular matrix");
    return e.reduced.col_slice(m.cols(), 2 * m.cols());
}

} // namespace fredpair
