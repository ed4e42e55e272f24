#pragma once

// Independent reference computations used only by tests.

#include "hnkit/exact_matrix.hpp"
#include "hnkit/polynomial.hpp"

#include <vector>

namespace hnkit::testing {

/// Textbook Gauss-Jordan over Q(i) with plain field division.
inline Matrix naive_rref(Matrix a) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) {
            ++p;
        }
        if (p == a.rows()) {
            continue;
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
            std::swap(a(p, c), a(row, c));
        }
        const GaussianRational inv = a(row, col).inverse();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            a(row, c) *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) {
                continue;
            }
            const GaussianRational factor = a(r, col);
            for (std::size_t c = 0; c < a.cols(); ++c) {
                a(r, c) -= factor * a(row, c);
            }
        }
        ++row;
    }
    Matrix out(0, a.cols());
    for (std::size_t r = 0; r < row; ++r) {
        out.append_row(a.row(r));
    }
    return out;
}

/// prod_i e_i! computed by a plain loop.
inline long factorial_weight(const ExponentVector& e) {
    long w = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::uint32_t k = 2; k <= e[i]; ++k) {
            w *= k;
        }
    }
    return w;
}

/// Iterated second partials through the public partial(), independent of
/// the specialised laplacian() kernel.
inline Polynomial laplacian_by_partials(const Polynomial& g) {
    Polynomial sum(g.nvars());
    for (std::size_t i = 1; i <= g.nvars(); ++i) {
        sum += partial(partial(g, i), i);
    }
    return sum;
}

}  // namespace hnkit::testing
