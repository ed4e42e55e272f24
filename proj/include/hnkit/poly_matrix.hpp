#pragma once

#include "hnkit/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace hnkit {

/// Dense rectangular matrix whose entries are polynomials in a shared ring.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

    static PolyMatrix identity(std::size_t size, std::size_t nvars);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nvars() const noexcept { return nvars_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const noexcept;
    bool is_symmetric() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t nvars_;
    std::vector<Polynomial> entries_;
};

/// Determinant by Laplace expansion, memoized over column subsets.
/// Division-free; used for size <= 6.
Polynomial determinant_cofactor(const PolyMatrix& m);

/// Determinant by Bareiss fraction-free elimination with exact polynomial
/// division. Used above size 6.
Polynomial determinant_bareiss(const PolyMatrix& m);

/// Dispatches on size (cofactor up to 6, Bareiss above).
Polynomial determinant(const PolyMatrix& m);

}  // namespace hnkit
