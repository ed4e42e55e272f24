#pragma once

#include "hnkit/gaussian.hpp"

#include <cstddef>
#include <vector>

namespace hnkit {

/// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t size);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<GaussianRational> row(std::size_t r) const;
    void append_row(const std::vector<GaussianRational>& values);

    bool is_zero() const noexcept;
    bool is_diagonal() const noexcept;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

struct RowEchelon {
    Matrix reduced;                   // nonzero rows only, leading entries 1
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form. Rows are scaled to Gaussian integers and
/// eliminated with fraction-free (Bareiss-Jordan) steps; the only divisions
/// are exact ones in Z[i] plus the final normalization by each pivot.
RowEchelon rref(const Matrix& a);

/// Rank via fraction-free forward elimination only.
std::size_t rank(const Matrix& a);

/// Basis of { x : a x = 0 } as the rows of the result, one per free column,
/// already in reduced row-echelon form.
Matrix kernel(const Matrix& a);

/// Exact determinant via fraction-free elimination.
GaussianRational determinant(const Matrix& a);

}  // namespace hnkit
