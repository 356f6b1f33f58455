#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fedecg {

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
    std::span<const double> row(std::size_t r) const { return {row_ptr(r), cols_}; }
    std::span<double> row(std::size_t r) { return {row_ptr(r), cols_}; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    /// Appends one row; the matrix must be empty or have matching width.
    void append_row(std::span<const double> row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    void reserve_rows(std::size_t n) { data_.reserve(n * cols_); }

    /// New matrix made of the given rows, in the given order.
    Matrix gather_rows(std::span<const std::size_t> idx) const;
    /// New matrix made of the given columns, in the given order.
    Matrix gather_cols(std::span<const std::size_t> idx) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

// Deterministic matmul kernels. Accumulation order is fixed by the loop
// structure, so results are bit-identical across runs and thread schedules.

/// C = A * B.  A: m×k, B: k×n, C: m×n (overwritten).
void mm_nn(const Matrix& a, const Matrix& b, Matrix& c);
/// C = A * B^T.  A: m×k, B: n×k, C: m×n.
void mm_nt(const Matrix& a, const Matrix& b, Matrix& c);
/// C += A^T * B.  A: m×k, B: m×n, C: k×n (accumulated).
void mm_tn_acc(const Matrix& a, const Matrix& b, Matrix& c);

}  // namespace fedecg
