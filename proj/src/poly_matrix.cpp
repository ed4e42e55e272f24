#include "hnkit/poly_matrix.hpp"

#include "hnkit/errors.hpp"

#include <bit>
#include <cstdint>
#include <optional>

namespace hnkit {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, Polynomial(nvars)) {
    if (rows == 0 || cols == 0) {
        throw PreconditionError("PolyMatrix dimensions must be positive");
    }
}

PolyMatrix PolyMatrix::identity(std::size_t size, std::size_t nvars) {
    PolyMatrix m(size, size, nvars);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = Polynomial::constant(nvars, 1);
    }
    return m;
}

bool PolyMatrix::is_zero() const noexcept {
    for (const auto& p : entries_) {
        if (!p.is_zero()) {
            return false;
        }
    }
    return true;
}

bool PolyMatrix::is_symmetric() const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r + 1; c < cols_; ++c) {
            if (!((*this)(r, c) == (*this)(c, r))) {
                return false;
            }
        }
    }
    return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_ || a.nvars_ != b.nvars_) {
        throw DimensionMismatch("PolyMatrix product: incompatible shapes or rings");
    }
    PolyMatrix out(a.rows_, b.cols_, a.nvars_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < b.cols_; ++c) {
            Polynomial sum(a.nvars_);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Polynomial& x = a(r, k);
                const Polynomial& y = b(k, c);
                if (!x.is_zero() && !y.is_zero()) {
                    sum += x * y;
                }
            }
            out(r, c) = std::move(sum);
        }
    }
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.nvars_ != b.nvars_) {
        throw DimensionMismatch("PolyMatrix difference: incompatible shapes or rings");
    }
    PolyMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) {
        out.entries_[k] -= b.entries_[k];
    }
    return out;
}

Polynomial determinant_cofactor(const PolyMatrix& m) {
    if (!m.is_square()) {
        throw PreconditionError("determinant of a non-square PolyMatrix");
    }
    const std::size_t size = m.rows();
    if (size > 20) {
        throw PreconditionError("cofactor determinant limited to size 20");
    }
    // minor[mask] = det of rows size-popcount(mask).. against the columns in mask
    std::vector<std::optional<Polynomial>> minor(std::size_t{1} << size);
    minor[0] = Polynomial::constant(m.nvars(), 1);
    for (std::uint32_t mask = 1; mask < minor.size(); ++mask) {
        const std::size_t row = size - static_cast<std::size_t>(std::popcount(mask));
        Polynomial sum(m.nvars());
        int position = 0;
        for (std::size_t c = 0; c < size; ++c) {
            if (!(mask & (1U << c))) {
                continue;
            }
            const Polynomial& entry = m(row, c);
            const Polynomial& rest = *minor[mask & ~(1U << c)];
            if (!entry.is_zero() && !rest.is_zero()) {
                Polynomial t = entry * rest;
                if (position % 2 == 0) {
                    sum += t;
                } else {
                    sum -= t;
                }
            }
            ++position;
        }
        minor[mask] = std::move(sum);
    }
    return *minor.back();
}

Polynomial determinant_bareiss(const PolyMatrix& m) {
    if (!m.is_square()) {
        throw PreconditionError("determinant of a non-square PolyMatrix");
    }
    const std::size_t size = m.rows();
    PolyMatrix a = m;
    Polynomial prev = Polynomial::constant(m.nvars(), 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        std::size_t p = k;
        while (p < size && a(p, k).is_zero()) {
            ++p;
        }
        if (p == size) {
            return Polynomial(m.nvars());
        }
        if (p != k) {
            for (std::size_t c = 0; c < size; ++c) {
                std::swap(a(p, c), a(k, c));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Polynomial num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = exact_divide(num, prev);
            }
            a(i, k) = Polynomial(m.nvars());
        }
        prev = a(k, k);
    }
    Polynomial det = a(size - 1, size - 1);
    return negate ? -det : det;
}

Polynomial determinant(const PolyMatrix& m) {
    return m.rows() <= 6 ? determinant_cofactor(m) : determinant_bareiss(m);
}

}  // namespace hnkit
