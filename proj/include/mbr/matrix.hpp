#ifndef MBR_MATRIX_HPP
#define MBR_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbr/field.hpp"

namespace mbr {

/// Thrown by solve/inverse when the coefficient matrix is singular.
class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over a finite field. All arithmetic is exact;
/// there are no tolerances anywhere in this module.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    symbol_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    symbol_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    std::span<const symbol_t> row(std::size_t r) const {
        return std::span<const symbol_t>(a_).subspan(r * cols_, cols_);
    }
    void set_row(std::size_t r, std::span<const symbol_t> values);

    Matrix transpose() const;
    bool is_zero() const;

    bool operator==(const Matrix& other) const = default;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<symbol_t> a_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

/// Solves a * x = rhs exactly; a must be square and invertible.
Matrix mat_solve(const Matrix& a, const Matrix& rhs);
Matrix mat_inverse(const Matrix& a);
std::size_t mat_rank(Matrix a);

/// Stacks the given rows (each a 1 x cols view) into one matrix.
Matrix stack_rows(const Field& field, const std::vector<std::span<const symbol_t>>& rows);

}  // namespace mbr

#endif
