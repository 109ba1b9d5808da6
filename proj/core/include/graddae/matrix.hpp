#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace graddae {

/// Dense row-major matrix of doubles. Rows index samples throughout the
/// library: a minibatch of N inputs of dimension D is an N x D matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// C = A * B. Every output element accumulates in increasing k order, so the
// result does not depend on scheduling (determinism contract).
Matrix matmul(const Matrix& a, const Matrix& b);

// C = A^T * B
Matrix matmul_at_b(const Matrix& a, const Matrix& b);

// C = A * B^T
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);

// m(r, :) += v for every row r
void add_row_inplace(Matrix& m, std::span<const double> v);

std::vector<double> column_sums(const Matrix& m);

// Gathers the given rows into a new matrix, in index order.
Matrix take_rows(const Matrix& m, std::span<const std::size_t> indices);

bool all_finite(const Matrix& m);
bool all_finite(std::span<const double> v);

}  // namespace graddae
