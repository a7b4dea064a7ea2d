#pragma once

#include "fredpair/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fredpair {

/// Dense matrix over Rational with value semantics.
///
/// Row and column counts may independently be zero; empty matrices take
/// part in every operation with the usual conventions (a product over an
/// empty inner dimension is the zero matrix, stacking with an empty
/// operand is allowed whenever the shared extent matches).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    /// Zero-filled rows x cols matrix.
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    /// Row-major literal, mainly for fixtures and tests.
    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const;

    /// Columns [first, last) as a new matrix.
    Matrix col_slice(std::size_t first, std::size_t last) const;
    /// Rows [first, last) as a new matrix.
    Matrix row_slice(std::size_t first, std::size_t last) const;
    Matrix col(std::size_t c) const { return col_slice(c, c + 1); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Rational& c, const Matrix& m);

/// [a | b]; the row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]; the column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Row reduction result.  `reduced` is the unique reduced row echelon
/// form; `pivots` lists the pivot column of each nonzero row in order.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination with first-nonzero pivoting: within each
/// column the topmost unused nonzero row becomes the pivot, pivots are
/// normalized to 1 and cleared above and below.
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the right nullspace { x : m x = 0 }.  One
/// basis vector per free column of rref(m), in ascending column order,
/// with a 1 in its free coordinate.
Matrix kernel_basis(const Matrix& m);

/// Inverse of a square invertible matrix; throws validation_error
/// otherwise.
Matrix inverse(const Matrix& m);

/// A particular solution X of a X = b with free variables set to zero.
/// Throws validation_error if some column of b is outside the column
/// span of a.
Matrix solve(const Matrix& a, const Matrix& b);

} // namespace fredpair
