#include "fedecg/matrix.hpp"

#include <cassert>

namespace fedecg {

Matrix Matrix::gather_rows(std::span<const std::size_t> idx) const {
    Matrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const double* src = row_ptr(idx[i]);
        double* dst = out.row_ptr(i);
        for (std::size_t c = 0; c < cols_; ++c) dst[c] = src[c];
    }
    return out;
}

Matrix Matrix::gather_cols(std::span<const std::size_t> idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        const double* src = row_ptr(r);
        double* dst = out.row_ptr(r);
        for (std::size_t c = 0; c < idx.size(); ++c) dst[c] = src[idx[c]];
    }
    return out;
}

void mm_nn(const Matrix& a, const Matrix& b, Matrix& c) {
    assert(a.cols() == b.rows());
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    if (c.rows() != m || c.cols() != n) c = Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c.row_ptr(i);
        for (std::size_t j = 0; j < n; ++j) ci[j] = 0.0;
        const double* ai = a.row_ptr(i);
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double* bp = b.row_ptr(p);
            for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
        }
    }
}

void mm_nt(const Matrix& a, const Matrix& b, Matrix& c) {
    assert(a.cols() == b.cols());
    const std::size_t m = a.rows(), k = a.cols(), n = b.rows();
    if (c.rows() != m || c.cols() != n) c = Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        const double* ai = a.row_ptr(i);
        double* ci = c.row_ptr(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double* bj = b.row_ptr(j);
            // four independent accumulators; order fixed by the code
            double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
            std::size_t p = 0;
            for (; p + 4 <= k; p += 4) {
                s0 += ai[p] * bj[p];
                s1 += ai[p + 1] * bj[p + 1];
                s2 += ai[p + 2] * bj[p + 2];
                s3 += ai[p + 3] * bj[p + 3];
            }
            double s = (s0 + s1) + (s2 + s3);
            for (; p < k; ++p) s += ai[p] * bj[p];
            ci[j] = s;
        }
    }
}

void mm_tn_acc(const Matrix& a, const Matrix& b, Matrix& c) {
    assert(a.rows() == b.rows());
    const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
    if (c.rows() != k || c.cols() != n) c = Matrix(k, n);
    for (std::size_t i = 0; i < m; ++i) {
        const double* ai = a.row_ptr(i);
        const double* bi = b.row_ptr(i);
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            double* cp = c.row_ptr(p);
            for (std::size_t j = 0; j < n; ++j) cp[j] += aip * bi[j];
        }
    }
}

}  // namespace fedecg
