#include "hnkit/exact_matrix.hpp"

#include "hnkit/errors.hpp"

#include <utility>

namespace hnkit {

namespace {

/// Element of Z[i]; the ring in which elimination actually runs.
struct GaussianInteger {
    Integer re;
    Integer im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussianInteger mul(const GaussianInteger& a, const GaussianInteger& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) {
        return {a.re * b.re, 0};
    }
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

/// a*d - b*c
GaussianInteger cross(const GaussianInteger& a, const GaussianInteger& d, const GaussianInteger& b,
                      const GaussianInteger& c) {
    GaussianInteger x = mul(a, d);
    GaussianInteger y = mul(b, c);
    return {x.re - y.re, x.im - y.im};
}

void divexact_checked(Integer& out, const Integer& num, const Integer& den) {
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InternalInconsistency("fraction-free elimination produced an inexact division");
    }
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

/// Exact quotient a / b in Z[i].
GaussianInteger divexact(const GaussianInteger& a, const GaussianInteger& b) {
    GaussianInteger q;
    if (sgn(b.im) == 0) {
        if (b.re == 1) {
            return a;
        }
        divexact_checked(q.re, a.re, b.re);
        divexact_checked(q.im, a.im, b.re);
        return q;
    }
    const Integer norm = b.re * b.re + b.im * b.im;
    const GaussianInteger num = mul(a, {b.re, -b.im});
    divexact_checked(q.re, num.re, norm);
    divexact_checked(q.im, num.im, norm);
    return q;
}

using IntRows = std::vector<std::vector<GaussianInteger>>;

/// Scales each row by the lcm of its denominators.
IntRows to_integer_rows(const Matrix& a) {
    IntRows rows(a.rows(), std::vector<GaussianInteger>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto& z = a(r, c);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), z.im().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto& z = a(r, c);
            rows[r][c].re = z.re().get_num() * (l / z.re().get_den());
            rows[r][c].im = z.im().get_num() * (l / z.im().get_den());
        }
    }
    return rows;
}

struct Elimination {
    std::vector<std::size_t> pivots;
    GaussianInteger last_pivot{1, 0};
    int swaps = 0;
};

/// Fraction-free elimination in place. With `full` set every other row is
/// cleared (Gauss-Jordan); otherwise only rows below the pivot.
Elimination eliminate(IntRows& rows, std::size_t cols, bool full) {
    Elimination e;
    const std::size_t nrows = rows.size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < nrows; ++col) {
        std::size_t p = row;
        while (p < nrows && rows[p][col].is_zero()) {
            ++p;
        }
        if (p == nrows) {
            continue;
        }
        if (p != row) {
            std::swap(rows[p], rows[row]);
            ++e.swaps;
        }
        const GaussianInteger pivot = rows[row][col];
        for (std::size_t i = full ? 0 : row + 1; i < nrows; ++i) {
            if (i == row) {
                continue;
            }
            const GaussianInteger factor = rows[i][col];
            const bool factor_zero = factor.is_zero();
            // Rows below have zeros left of col. Rows above still carry free
            // column entries and their own pivot there; the pivot row is zero
            // left of col, so those entries only rescale by pivot / last_pivot.
            for (std::size_t j = (i < row) ? 0 : col + 1; j < cols; ++j) {
                if (j == col) {
                    continue;
                }
                if (factor_zero || rows[row][j].is_zero()) {
                    if (!rows[i][j].is_zero()) {
                        rows[i][j] = divexact(mul(pivot, rows[i][j]), e.last_pivot);
                    }
                } else {
                    rows[i][j] = divexact(cross(pivot, rows[i][j], factor, rows[row][j]), e.last_pivot);
                }
            }
            rows[i][col] = {0, 0};
        }
        e.pivots.push_back(col);
        e.last_pivot = pivot;
        ++row;
    }
    return e;
}

GaussianRational to_rational(const GaussianInteger& z) { return {Rational(z.re), Rational(z.im)}; }

}  // namespace

Matrix Matrix::identity(std::size_t size) {
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = 1;
    }
    return m;
}

std::vector<GaussianRational> Matrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void Matrix::append_row(const std::vector<GaussianRational>& values) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = values.size();
    }
    if (values.size() != cols_) {
        throw DimensionMismatch("append_row: row length differs from column count");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool Matrix::is_zero() const noexcept {
    for (const auto& z : data_) {
        if (!z.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_diagonal() const noexcept {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r != c && !(*this)(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

RowEchelon rref(const Matrix& a) {
    IntRows rows = to_integer_rows(a);
    Elimination e = eliminate(rows, a.cols(), true);
    RowEchelon out{Matrix(e.pivots.size(), a.cols()), e.pivots};
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const GaussianRational inv = to_rational(rows[r][e.pivots[r]]).inverse();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c == e.pivots[r]) {
                out.reduced(r, c) = 1;
            } else if (!rows[r][c].is_zero()) {
                out.reduced(r, c) = to_rational(rows[r][c]) * inv;
            }
        }
    }
    return out;
}

std::size_t rank(const Matrix& a) {
    IntRows rows = to_integer_rows(a);
    return eliminate(rows, a.cols(), false).pivots.size();
}

Matrix kernel(const Matrix& a) {
    const RowEchelon ech = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : ech.pivots) {
        is_pivot[p] = true;
    }
    Matrix basis(0, a.cols());
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<GaussianRational> v(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
            v[ech.pivots[r]] = -ech.reduced(r, f);
        }
        basis.append_row(v);
    }
    if (basis.rows() == 0) {
        return basis;
    }
    return rref(basis).reduced;
}

GaussianRational determinant(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw PreconditionError("determinant of a non-square matrix");
    }
    if (a.rows() == 0) {
        return 1;
    }
    // Undo the per-row scaling applied by to_integer_rows.
    Rational scale = 1;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).re().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).im().get_den_mpz_t());
        }
        scale *= Rational(l);
    }
    IntRows rows = to_integer_rows(a);
    Elimination e = eliminate(rows, a.cols(), false);
    if (e.pivots.size() < a.rows()) {
        return 0;
    }
    GaussianRational det = to_rational(e.last_pivot);
    det /= GaussianRational(scale);
    return (e.swaps % 2 == 1) ? -det : det;
}

}  // namespace hnkit
