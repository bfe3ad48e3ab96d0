#include "mbr/matrix.hpp"

#include <algorithm>

namespace mbr {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
}

// In-place row echelon reduction; returns the rank. Pivot selection is
// "first nonzero in column" (exact arithmetic, no scaling concerns).
std::size_t echelonize(Matrix& m, std::size_t pivot_col_limit) {
    const Field& f = m.field();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < pivot_col_limit && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, col) == 0) ++r;
        if (r == m.rows()) continue;
        if (r != pivot_row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(pivot_row, c));
        const symbol_t inv_p = f.inv(m(pivot_row, col));
        for (std::size_t c = col; c < m.cols(); ++c)
            m(pivot_row, c) = f.mul(m(pivot_row, c), inv_p);
        for (std::size_t rr = 0; rr < m.rows(); ++rr) {
            if (rr == pivot_row || m(rr, col) == 0) continue;
            const symbol_t factor = m(rr, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(rr, c) = f.sub(m(rr, c), f.mul(factor, m(pivot_row, c)));
        }
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void Matrix::set_row(std::size_t r, std::span<const symbol_t> values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    std::copy(values.begin(), values.end(), a_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](symbol_t v) { return v == 0; });
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in mat_add");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().add(a(r, c), b(r, c));
    return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch in mat_sub");
    Matrix out(a.field(), a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().sub(a(r, c), b(r, c));
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in mat_mul");
    const Field& f = a.field();
    Matrix out(f, a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t i = 0; i < a.cols(); ++i) {
            const symbol_t av = a(r, i);
            if (av == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c) = f.add(out(r, c), f.mul(av, b(i, c)));
        }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix mat_solve(const Matrix& a, const Matrix& rhs) {
    require_same_field(a, rhs);
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_solve: matrix not square");
    if (a.rows() != rhs.rows()) throw std::invalid_argument("mat_solve: rhs row count mismatch");
    const std::size_t n = a.rows();
    Matrix aug(a.field(), n, n + rhs.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, n + c) = rhs(r, c);
    }
    if (echelonize(aug, n) < n) throw SingularMatrixError("mat_solve: singular matrix");
    Matrix x(a.field(), n, rhs.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c) x(r, c) = aug(r, n + c);
    return x;
}

Matrix mat_inverse(const Matrix& a) {
    return mat_solve(a, Matrix::identity(a.field(), a.rows()));
}

std::size_t mat_rank(Matrix a) { return echelonize(a, a.cols()); }

Matrix stack_rows(const Field& field, const std::vector<std::span<const symbol_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("stack_rows: no rows");
    Matrix m(field, rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

}  // namespace mbr
