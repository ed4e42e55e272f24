#include "hnkit/exact_matrix.hpp"
#include "hnkit/poly_matrix.hpp"
#include "hnkit/text.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace hnkit;
using hnkit::testing::Gen;

namespace {

Matrix random_matrix(Gen& gen, std::size_t rows, std::size_t cols, int zero_bias) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (gen.uniform(0, 9) >= zero_bias) {
                m(r, c) = gen.small_coefficient();
            }
        }
    }
    // duplicate a row now and then to force rank deficiency
    if (rows > 2 && gen.uniform(0, 2) == 0) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(rows - 1, c) = m(0, c) * GaussianRational::parse("2-i") + m(1, c);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("fraction-free rref matches textbook Gauss-Jordan") {
    Gen gen(101);
    for (int k = 0; k < 150; ++k) {
        const std::size_t rows = static_cast<std::size_t>(gen.uniform(1, 7));
        const std::size_t cols = static_cast<std::size_t>(gen.uniform(1, 7));
        const Matrix a = random_matrix(gen, rows, cols, gen.uniform(0, 7));
        const RowEchelon ech = rref(a);
        const Matrix expected = hnkit::testing::naive_rref(a);
        CHECK(ech.reduced == expected);
        CHECK(rank(a) == expected.rows());
        CHECK(ech.pivots.size() == expected.rows());
    }
}

TEST_CASE("kernel vectors are annihilated and have the right count") {
    Gen gen(202);
    for (int k = 0; k < 80; ++k) {
        const std::size_t rows = static_cast<std::size_t>(gen.uniform(1, 5));
        const std::size_t cols = static_cast<std::size_t>(gen.uniform(1, 6));
        const Matrix a = random_matrix(gen, rows, cols, 4);
        const Matrix ker = kernel(a);
        CHECK(ker.rows() == cols - rank(a));
        for (std::size_t v = 0; v < ker.rows(); ++v) {
            for (std::size_t r = 0; r < rows; ++r) {
                GaussianRational s;
                for (std::size_t c = 0; c < cols; ++c) {
                    s += a(r, c) * ker(v, c);
                }
                CHECK(s.is_zero());
            }
        }
    }
}

TEST_CASE("determinant of small matrices") {
    Matrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = GaussianRational::i();
    a(1, 0) = GaussianRational::parse("1/2");
    a(1, 1) = 3;
    // 1*3 - i*(1/2)
    CHECK(determinant(a) == GaussianRational::parse("3-1/2i"));
    Matrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(determinant(swap) == GaussianRational(-1));
    CHECK(determinant(Matrix(3, 3)).is_zero());
    CHECK(determinant(Matrix::identity(4)) == GaussianRational(1));
}

TEST_CASE("polynomial determinant: cofactor and Bareiss agree") {
    Gen gen(303);
    for (int k = 0; k < 25; ++k) {
        const std::size_t size = static_cast<std::size_t>(gen.uniform(1, 4));
        PolyMatrix m(size, size, 2);
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t c = 0; c < size; ++c) {
                m(r, c) = gen.polynomial(2, 2, 2);
            }
        }
        CHECK(determinant_cofactor(m) == determinant_bareiss(m));
    }
    PolyMatrix m(2, 2, 2);
    m(0, 0) = parse_polynomial("z1", 2);
    m(0, 1) = parse_polynomial("z2", 2);
    m(1, 0) = parse_polynomial("z2", 2);
    m(1, 1) = parse_polynomial("z1", 2);
    CHECK(determinant(m) == parse_polynomial("z1^2 - z2^2"));
}
