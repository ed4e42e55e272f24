#include "hnkit/diffop.hpp"
#include "hnkit/errors.hpp"
#include "hnkit/families.hpp"
#include "hnkit/hn_analysis.hpp"
#include "hnkit/text.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace hnkit;
using hnkit::testing::Gen;

namespace {

Polynomial P(const char* s, std::size_t n = 0) { return parse_polynomial(s, n); }
const GaussianRational I = GaussianRational::i();

}  // namespace

TEST_CASE("is_hn") {
    CHECK(is_hn(P("(z1+i*z2)^2")));
    CHECK_FALSE(is_hn(Polynomial::sigma2(2)));
    CHECK(is_hn(P("(z1+i*z2)^4")));
    const HnDecision d = is_hn_checked(P("(3*z1+4*z2+5i*z3)^3"));
    CHECK(d.hn);
    CHECK(d.matrix_route);
    CHECK(d.laplacian_route);
    CHECK_FALSE(is_hn_checked(P("z1^3 + z2^3")).hn);
    CHECK(is_hn(Polynomial(3)));
}

TEST_CASE("vanish_experiment") {
    SUBCASE("isotropic power vanishes from m = 1") {
        const VanishReport r = vanish_experiment(P("(z1+i*z2)^4"), std::nullopt, 5);
        REQUIRE(r.rows.size() == 6);
        CHECK_FALSE(r.rows[0].is_zero);
        CHECK(*r.rows[0].degree == 4);
        for (std::uint32_t m = 1; m <= 5; ++m) {
            CHECK(r.rows[m].is_zero);
        }
        CHECK(*r.first_all_zero_from == 1);
        CHECK(r.f_is_default);
    }
    SUBCASE("sigma2 never vanishes") {
        const Polynomial s = Polynomial::sigma2(3);
        const VanishReport r = vanish_experiment(s, std::nullopt, 3);
        CHECK_FALSE(r.first_all_zero_from);
        for (const auto& row : r.rows) {
            CHECK_FALSE(row.is_zero);
            CHECK(*row.degree == 2);
        }
        // Delta sigma2^2 = (8 + 4n) sigma2
        CHECK(laplacian(pow(s, 2)) == s * GaussianRational(8 + 4 * 3));
    }
    SUBCASE("m_max = 0 is P itself") {
        const VanishReport r = vanish_experiment(P("z1^3 - z2^3"), std::nullopt, 0);
        REQUIRE(r.rows.size() == 1);
        CHECK(*r.rows[0].degree == 3);
    }
    SUBCASE("parallel, incremental and fresh evaluation agree") {
        const Polynomial p = random_homogeneous(2, 3, 5);
        const Polynomial f = P("z1 - 2*z2");
        VanishOptions inc;
        inc.incremental = true;
        VanishOptions par;
        par.threads = 4;
        const VanishReport a = vanish_experiment(p, f, 4);
        const VanishReport b = vanish_experiment(p, f, 4, inc);
        const VanishReport c = vanish_experiment(p, f, 4, par);
        for (std::uint32_t m = 0; m <= 4; ++m) {
            CHECK(a.rows[m].degree == b.rows[m].degree);
            CHECK(a.rows[m].degree == c.rows[m].degree);
            CHECK(a.rows[m].is_zero == c.rows[m].is_zero);
        }
    }
}

TEST_CASE("degree law on non-HN homogeneous input") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Polynomial p = random_homogeneous(2, 3, seed);
        const VanishReport r = vanish_experiment(p, std::nullopt, 3);
        std::optional<std::uint32_t> last;
        for (const auto& row : r.rows) {
            if (!row.is_zero) {
                CHECK(*row.degree == (3 - 2) * row.m + 3);
                if (last) {
                    CHECK(*row.degree > *last);
                }
                last = row.degree;
            }
        }
    }
}

TEST_CASE("expansion identity") {
    Gen gen(53);
    const Polynomial p = P("z1^2*z2 + i*z2^3 - z1");
    const Polynomial f = P("3*z1*z2 + z2^2 - 2");
    // m = 1: product rule
    const Polynomial rule = laplacian(f) * p + f * laplacian(p) +
                            (partial(f, 1) * partial(p, 1) + partial(f, 2) * partial(p, 2)) * GaussianRational(2);
    CHECK(expansion_rhs(f, p, 1) == rule);
    CHECK(expansion_identity_check(f, p, 1));
    for (std::uint32_t m = 1; m <= 3; ++m) {
        CHECK(expansion_rhs(Polynomial::constant(2, 1), p, m) == laplacian_power(pow(p, m), m));
    }
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 3));
        const std::uint32_t m = static_cast<std::uint32_t>(gen.uniform(1, 3));
        CHECK(expansion_identity_check(gen.polynomial(n, 3), gen.polynomial(n, 3), m));
    }
    // coefficients 2^k2 m!/(k1! k3! s!) that need reducing
    CHECK(expansion_identity_check(P("z1^3 + 2*z1"), P("z1"), 3));
    CHECK(expansion_identity_check(P("z1*z2^2"), P("z1*z2"), 3));
    CHECK_THROWS_AS(expansion_identity_check(f, p, 0), PreconditionError);
}

TEST_CASE("membership_in_S") {
    const Polynomial p = P("(z1+i*z2)^4");
    // m = 0 means checking dP/dz_i(D) P = 0 and Delta P = 0 directly
    for (const auto& g : gradient_quadric_system(p)) {
        CHECK(apply_diffop(g, p).is_zero());
    }
    for (std::uint32_t m = 0; m <= 4; ++m) {
        CHECK(membership_in_S(p, m));
    }
    CHECK_THROWS_AS(membership_in_S(Polynomial::sigma2(2), 0), PreconditionError);
    CHECK_THROWS_AS(membership_in_S(P("(z1+i*z2)^2 + z1"), 0), PreconditionError);
}

TEST_CASE("vanishing bound arithmetic") {
    CHECK(*vanishing_bound_from_saturation(4, 3) == 0);
    CHECK(*vanishing_bound_from_saturation(4, 4) == 0);
    CHECK(*vanishing_bound_from_saturation(4, 5) == 1);
    CHECK(*vanishing_bound_from_saturation(4, 7) == 2);
    CHECK(*vanishing_bound_from_saturation(3, 7) == 4);
    CHECK(*vanishing_bound_from_saturation(2, 2) == 0);
    CHECK_FALSE(vanishing_bound_from_saturation(2, 3));
    // brute force: least m with (d-2)m + d >= M
    for (std::uint32_t d = 3; d <= 6; ++d) {
        for (std::uint32_t M = 1; M <= 20; ++M) {
            std::uint32_t m = 0;
            while ((d - 2) * m + d < M) {
                ++m;
            }
            CHECK(*vanishing_bound_from_saturation(d, M) == m);
        }
    }
}

TEST_CASE("certify_theorem1") {
    const Polynomial p = P("(z1+i*z2)^4");
    const Theorem1Certificate c = certify_theorem1(p);
    CHECK(c.base.status != CertificateStatus::NoCommonZero);
    CHECK_FALSE(c.vanishing_bound);
    const std::vector<GaussianRational> w{1, I};
    CHECK(is_common_zero(c.generators, w));
    CHECK_THROWS_AS(certify_theorem1(Polynomial::sigma2(2)), PreconditionError);
    CHECK_THROWS_AS(certify_theorem1(P("(z1+i*z2)^3 + (z1+i*z2)^2")), PreconditionError);
}

TEST_CASE("theorem2_threshold") {
    const Polynomial p = P("(z1+i*z2)^4");
    const Theorem2Threshold t = theorem2_threshold(p, P("z1", 2));
    CHECK(t.n == 0);
    CHECK(t.f_degree == 1);
    CHECK(t.verified_m == std::vector<std::uint32_t>{2, 3, 4});
    const Theorem2Threshold constant = theorem2_threshold(p, Polynomial::constant(2, 7));
    CHECK(constant.f_degree == 0);
    for (std::uint32_t m = 1; m <= 4; ++m) {
        CHECK(laplacian_power(pow(p, m) * GaussianRational(7), m).is_zero());
    }
    CHECK_THROWS_AS(theorem2_threshold(Polynomial::sigma2(2), P("z1", 2)), PreconditionError);
    CHECK_THROWS_AS(theorem2_threshold(P("(z1+i*z2)^2"), P("z1", 2), 2, 3), SearchCapExhausted);
}

TEST_CASE("symmetric map, Jacobian and fixed points") {
    CHECK(symmetric_map(Polynomial(2)).components[1] == P("z2", 2));
    const SymmetricMap zero_map = symmetric_map(Polynomial::sigma2(3) * GaussianRational::parse("1/2"));
    for (const auto& c : zero_map.components) {
        CHECK(c.is_zero());
    }
    const SymmetricMap f = symmetric_map(P("(z1+i*z2)^2"));
    CHECK(f.components[0] == P("z1 - 2*(z1+i*z2)"));
    CHECK(f.components[1] == P("z2 - 2i*(z1+i*z2)"));

    CHECK(jacobian_det(f) == Polynomial::constant(2, 1));
    CHECK(jacobian_det(symmetric_map(Polynomial(3))) == Polynomial::constant(3, 1));
    CHECK(jacobian_det(symmetric_map(Polynomial::sigma2(3))) == Polynomial::constant(3, -1));
    CHECK_FALSE(jacobian_det(symmetric_map(P("z1^3 + z2^3"))) == Polynomial::constant(2, 1));

    const SymmetricMap g = symmetric_map(P("(z1+i*z2)^4"));
    const std::vector<GaussianRational> w{1, I};
    const FixedPointResult r = fixed_point_check(g, w);
    CHECK(r.fixed);
    CHECK(r.on_isotropic_quadric);
    const std::vector<GaussianRational> e1{1, 0, 0};
    CHECK_FALSE(fixed_point_check(zero_map, e1).fixed);
    const std::vector<GaussianRational> generic{1, 2};
    CHECK_FALSE(fixed_point_check(g, generic).fixed);
    const std::vector<GaussianRational> zero{0, 0};
    CHECK_THROWS_AS(fixed_point_check(g, zero), PreconditionError);
}

TEST_CASE("property: Euler fixed-point correspondence") {
    // For homogeneous P and w != 0: grad P(w) = 0 implies P(w) = 0.
    const Polynomial p = P("(z1+i*z2)^3*z3");
    const SymmetricMap f = symmetric_map(p);
    const std::vector<std::vector<GaussianRational>> points{{1, I, 0}, {1, I, 5}, {2, 2 * I, -1}, {1, 0, 0}};
    for (const auto& w : points) {
        const FixedPointResult r = fixed_point_check(f, w);
        bool grad_zero = true;
        for (const auto& g : gradient(p)) {
            grad_zero = grad_zero && evaluate(g, w).is_zero();
        }
        CHECK(r.fixed == grad_zero);
        if (grad_zero) {
            CHECK(evaluate(p, w).is_zero());
        }
    }
}
