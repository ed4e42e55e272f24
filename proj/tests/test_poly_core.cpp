#include "hnkit/errors.hpp"
#include "hnkit/polynomial.hpp"
#include "hnkit/text.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace hnkit;
using hnkit::testing::Gen;

namespace {

Polynomial P(const char* s, std::size_t n = 0) { return parse_polynomial(s, n); }
GaussianRational C(const char* s) { return GaussianRational::parse(s); }

}  // namespace

TEST_CASE("gaussian rational arithmetic is exact") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(C("1/2+3i").re() == Rational(1, 2));
    CHECK(C("1/2+3i").im() == 3);
    CHECK((C("1+i") / C("1-i")) == i);
    CHECK(C("2/4").to_string() == "1/2");
    CHECK(C("-i").to_string() == "-i");
    CHECK(C("1/2-1/3i").to_string() == "1/2-1/3i");
    CHECK_THROWS_AS(GaussianRational(0).inverse(), std::domain_error);
}

TEST_CASE("add") {
    CHECK(P("z1 + z2") + P("-z1", 2) == P("z2", 2));
    CHECK(P("z1^2 + 3*z2") + Polynomial(2) == P("z1^2 + 3*z2"));
    CHECK(P("z1^2") + P("i*z1^2") == P("(1+i)*z1^2"));
    CHECK_THROWS_AS(P("z1") + P("z2"), DimensionMismatch);
}

TEST_CASE("mul") {
    CHECK(P("z1 + i*z2") * P("z1 - i*z2") == P("z1^2 + z2^2"));
    const Polynomial p = P("3*z1*z2 - 1/2");
    CHECK(p * Polynomial::constant(2, 1) == p);
    // hand expansion: z1^2 + 2i z1 z2 + i^2 z2^2
    const Polynomial square = Polynomial::from_terms(
        2, {Term{ExponentVector({2, 0}), 1}, Term{ExponentVector({1, 1}), C("2i")}, Term{ExponentVector({0, 2}), -1}});
    CHECK(P("z1 + i*z2") * P("z1 + i*z2") == square);
    CHECK_THROWS_AS(P("z1") * P("z3"), DimensionMismatch);
}

TEST_CASE("pow") {
    CHECK(pow(P("z1"), 3) == P("z1^3"));
    CHECK(pow(Polynomial(2), 0) == Polynomial::constant(2, 1));
    CHECK(pow(Polynomial(2), 3).is_zero());
    CHECK(pow(P("z1 + i*z2"), 2).to_string() == "z1^2 + 2i*z1*z2 - z2^2");
}

TEST_CASE("partial") {
    CHECK(partial(P("z1^2*z2"), 1) == P("2*z1*z2"));
    CHECK(partial(P("z2^3"), 1).is_zero());
    // d/dz2 (z1 + i z2)^2 = 2i (z1 + i z2) = 2i z1 - 2 z2
    CHECK(partial(P("(z1+i*z2)^2"), 2) == P("2i*z1 - 2*z2"));
    CHECK_THROWS_AS(partial(P("z1"), 2), std::out_of_range);
    CHECK_THROWS_AS(partial(P("z1"), 0), std::out_of_range);
}

TEST_CASE("homogeneous_slice") {
    CHECK(homogeneous_slice(P("z1^2 + z2"), 2) == P("z1^2", 2));
    CHECK(homogeneous_slice(Polynomial(3), 4).is_zero());
    CHECK(homogeneous_slice(P("z1^3 + 2*z1*z2^2 + z2"), 3) == P("z1^3 + 2*z1*z2^2"));
}

TEST_CASE("evaluate") {
    const GaussianRational i = GaussianRational::i();
    const std::vector<GaussianRational> isotropic{1, i};
    CHECK(evaluate(Polynomial::sigma2(2), isotropic).is_zero());
    const std::vector<GaussianRational> two_three{2, 3};
    CHECK(evaluate(P("z1*z2"), two_three) == GaussianRational(6));
    const std::vector<GaussianRational> w{i, -1};
    CHECK(evaluate(P("z1^2 - z2"), w).is_zero());
    const std::vector<GaussianRational> short_point{1};
    CHECK_THROWS_AS(evaluate(P("z1*z2"), short_point), DimensionMismatch);
}

TEST_CASE("degree queries") {
    CHECK_FALSE(Polynomial(2).total_degree());
    CHECK_FALSE(Polynomial(2).homogeneous_degree());
    CHECK(*P("z1^2*z2 + z2^3").homogeneous_degree() == 3);
    CHECK_FALSE(P("z1^2 + z2").homogeneous_degree());
    CHECK(*P("z1^2 + z2").total_degree() == 2);
}

TEST_CASE("monomial basis is graded-lex descending") {
    const auto b = monomial_basis(2, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == ExponentVector({2, 0}));
    CHECK(b[1] == ExponentVector({1, 1}));
    CHECK(b[2] == ExponentVector({0, 2}));
    CHECK(monomial_basis(3, 4).size() == homogeneous_dimension(3, 4));
    CHECK(homogeneous_dimension(3, 4) == 15);
    CHECK(homogeneous_dimension(1, 7) == 1);
}

TEST_CASE("exact division") {
    const Polynomial q = P("z1 + i*z2");
    const Polynomial r = P("3*z1*z2 - z2^2 + 1/2");
    CHECK(exact_divide(q * r, q) == r);
    CHECK_THROWS_AS(exact_divide(P("z1^2 + 1"), P("z1 + 2", 1)), PreconditionError);
}

TEST_CASE("text format") {
    CHECK(P("(1/2+3i)*z1^2*z2 - z3^3 + 5").to_string() == "(1/2+3i)*z1^2*z2 - z3^3 + 5");
    CHECK(P("  z1 ^ 2 *z2+ 2 i *z1").to_string() == "z1^2*z2 + 2i*z1");
    CHECK(P("-z1").to_string() == "-z1");
    CHECK(P("i").to_string() == "i");
    CHECK(P("1/2i*z1").to_string() == "1/2i*z1");
    CHECK(P("z1^2/2").to_string() == "1/2*z1^2");
    CHECK(P("(z1 - z2)/(2i)").to_string() == "-1/2i*z1 + 1/2i*z2");
    CHECK(P("0").to_string() == "0");
    CHECK(P("z1 - z1").is_zero());
    CHECK(P("z2", 4).nvars() == 4);

    try {
        P("z1^2+");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(P("z1 ** 2"), ParseError);
    CHECK_THROWS_AS(P("z0"), ParseError);
    CHECK_THROWS_AS(P("z1^-1"), ParseError);
    CHECK_THROWS_AS(P("z1/z2"), ParseError);
    CHECK_THROWS_AS(P("(z1"), ParseError);
    CHECK_THROWS_AS(P("y1"), ParseError);
    CHECK_THROWS_AS(P("1/0"), ParseError);
}

TEST_CASE("property: printing is a fixed point after one parse") {
    Gen gen(11);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
        const Polynomial p = gen.polynomial(n, 4, 5);
        const std::string once = p.to_string();
        const Polynomial back = parse_polynomial(once, n);
        CHECK(back == p);
        CHECK(back.to_string() == once);
    }
}

TEST_CASE("property: ring axioms") {
    Gen gen(7);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
        const Polynomial a = gen.polynomial(n, 3);
        const Polynomial b = gen.polynomial(n, 3);
        const Polynomial c = gen.polynomial(n, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(*(a * b).total_degree() == *a.total_degree() + *b.total_degree());
        }
    }
}

TEST_CASE("property: mixed partials commute and slices reassemble") {
    Gen gen(3);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
        const Polynomial p = gen.polynomial(n, 5, 6);
        const std::size_t i = static_cast<std::size_t>(gen.uniform(1, static_cast<int>(n)));
        const std::size_t j = static_cast<std::size_t>(gen.uniform(1, static_cast<int>(n)));
        CHECK(partial(partial(p, i), j) == partial(partial(p, j), i));

        Polynomial sum(n);
        for (std::uint32_t d = 0; d <= 5; ++d) {
            sum += homogeneous_slice(p, d);
        }
        CHECK(sum == p);
    }
}

TEST_CASE("property: Euler's formula on homogeneous polynomials") {
    Gen gen(5);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
        const std::uint32_t d = static_cast<std::uint32_t>(gen.uniform(0, 5));
        const Polynomial p = gen.homogeneous(n, d);
        Polynomial euler(n);
        for (std::size_t i = 1; i <= n; ++i) {
            euler += Polynomial::variable(n, i) * partial(p, i);
        }
        CHECK(euler == p * GaussianRational(static_cast<long>(d)));
    }
}

TEST_CASE("property: coordinates round-trip through the monomial basis") {
    Gen gen(9);
    for (int k = 0; k < 30; ++k) {
        const Polynomial p = gen.homogeneous(3, 3, 5);
        const auto basis = monomial_basis(3, 3);
        CHECK(from_coordinates(3, basis, coordinates(p, basis)) == p);
    }
    const auto basis = monomial_basis(2, 2);
    CHECK_THROWS_AS(coordinates(P("z1^3"), basis), PreconditionError);
}
