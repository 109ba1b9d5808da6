#include "graddae/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace graddae {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("Matrix: entries size " + std::to_string(data_.size()) +
                                    " does not match " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
}

namespace {

[[noreturn]] void dim_error(const char* op, const Matrix& a, const Matrix& b) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) dim_error("matmul", a, b);
    Matrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        double* ci = c.data() + i * m;
        const double* ai = a.data() + i * k;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double* bp = b.data() + p * m;
            for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
        }
    }
    return c;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) dim_error("matmul_at_b", a, b);
    Matrix c(a.cols(), b.cols());
    const std::size_t n = a.rows(), p = a.cols(), q = b.cols();
    for (std::size_t r = 0; r < n; ++r) {
        const double* ar = a.data() + r * p;
        const double* br = b.data() + r * q;
        for (std::size_t i = 0; i < p; ++i) {
            const double ari = ar[i];
            double* ci = c.data() + i * q;
            for (std::size_t j = 0; j < q; ++j) ci[j] += ari * br[j];
        }
    }
    return c;
}

Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) dim_error("matmul_a_bt", a, b);
    Matrix c(a.rows(), b.rows());
    const std::size_t n = a.rows(), p = a.cols(), q = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.data() + i * p;
        for (std::size_t j = 0; j < q; ++j) {
            const double* bj = b.data() + j * p;
            double acc = 0.0;
            for (std::size_t r = 0; r < p; ++r) acc += ai[r] * bj[r];
            c(i, j) = acc;
        }
    }
    return c;
}

void add_row_inplace(Matrix& m, std::span<const double> v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("add_row_inplace: vector length " + std::to_string(v.size()) +
                                    " != cols " + std::to_string(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double* mi = m.data() + i * m.cols();
        for (std::size_t j = 0; j < m.cols(); ++j) mi[j] += v[j];
    }
}

std::vector<double> column_sums(const Matrix& m) {
    std::vector<double> s(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* mi = m.data() + i * m.cols();
        for (std::size_t j = 0; j < m.cols(); ++j) s[j] += mi[j];
    }
    return s;
}

Matrix take_rows(const Matrix& m, std::span<const std::size_t> indices) {
    Matrix out(indices.size(), m.cols());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= m.rows())
            throw std::out_of_range("take_rows: row index " + std::to_string(indices[i]) +
                                    " out of range");
        const double* src = m.data() + indices[i] * m.cols();
        double* dst = out.data() + i * m.cols();
        for (std::size_t j = 0; j < m.cols(); ++j) dst[j] = src[j];
    }
    return out;
}

bool all_finite(const Matrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (!std::isfinite(m.data()[i])) return false;
    return true;
}

bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace graddae
