#pragma once

#include <cstddef>
#include <vector>

namespace hashfactor {

// Row-major dense matrix of doubles. Kernels walk rows through raw pointers,
// so the layout is part of the contract.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t f = 0; f < n; ++f) s += a[f] * b[f];
    return s;
}

inline double squared_frobenius(const DenseMatrix& m) {
    double s = 0.0;
    for (double v : m.data()) s += v * v;
    return s;
}

}  // namespace hashfactor
