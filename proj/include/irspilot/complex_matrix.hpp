#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace irspilot {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major, double precision. The universal carrier
/// for channels, pilots and received blocks.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }

    std::span<cplx> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const cplx> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    ComplexMatrix conj_transpose() const;

    /// Columns [first, first+count) as a new matrix.
    ComplexMatrix col_range(std::size_t first, std::size_t count) const;

    /// Gathered copy of the given columns, in the given order.
    ComplexMatrix gather_cols(std::span<const std::size_t> idx) const;

    ComplexMatrix col(std::size_t c) const { return col_range(c, 1); }

    double frobenius_norm() const;
    double max_abs() const;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

/// c = a * b
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
/// c = a * conj(b)^T
ComplexMatrix matmul_conjT(const ComplexMatrix& a, const ComplexMatrix& b);
/// c += alpha * a * b
void matmul_acc(cplx alpha, const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c);
/// c += alpha * a * conj(b)^T
void matmul_conjT_acc(cplx alpha, const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, const ComplexMatrix& a);

/// max_ij |a_ij - b_ij|; dimension_error on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - b||_F / ||b||_F, falling back to ||a||_F when b is all-zero.
double rel_frobenius_error(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace irspilot
