#include "hnkit/hn_analysis.hpp"

#include "hnkit/diffop.hpp"
#include "hnkit/errors.hpp"
#include "hnkit/poly_matrix.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace hnkit {

bool is_hn(const Polynomial& p) {
    return matrix_power_is_zero(hessian(p), static_cast<std::uint32_t>(p.nvars()));
}

bool hn_by_laplacian(const Polynomial& p, std::uint32_t cutoff) {
    Polynomial power = Polynomial::constant(p.nvars(), 1);
    for (std::uint32_t m = 1; m <= cutoff; ++m) {
        power *= p;
        if (!laplacian_power(power, m).is_zero()) {
            return false;
        }
    }
    return true;
}

HnDecision is_hn_checked(const Polynomial& p) {
    HnDecision d;
    d.matrix_route = is_hn(p);
    d.laplacian_route = hn_by_laplacian(p, static_cast<std::uint32_t>(p.nvars()));
    if (d.matrix_route != d.laplacian_route) {
        throw InternalInconsistency("HN routes disagree for " + p.to_string() + ": (Hes P)^n = 0 is " +
                                    (d.matrix_route ? "true" : "false") + ", Delta^m P^m = 0 (m <= n) is " +
                                    (d.laplacian_route ? "true" : "false"));
    }
    d.hn = d.matrix_route;
    return d;
}

// ---------------------------------------------------------------------------

namespace {

VanishRow make_row(std::uint32_t m, const Polynomial& value) {
    VanishRow row;
    row.m = m;
    row.is_zero = value.is_zero();
    row.degree = value.total_degree();
    return row;
}

}  // namespace

VanishReport vanish_experiment(const Polynomial& p, const std::optional<Polynomial>& f, std::uint32_t m_max,
                               const VanishOptions& options) {
    if (f) {
        require_same_ring(p, *f, "vanish_experiment");
    }
    VanishReport report{p, f.value_or(p), !f.has_value(), {}, std::nullopt, std::nullopt};
    report.rows.resize(m_max + 1);

    if (options.incremental) {
        Polynomial power = Polynomial::constant(p.nvars(), 1);
        for (std::uint32_t m = 0; m <= m_max; ++m) {
            if (m > 0) {
                power *= p;
            }
            report.rows[m] = make_row(m, laplacian_power(report.f * power, m));
        }
    } else {
        std::atomic<std::uint32_t> next{0};
        auto worker = [&] {
            for (std::uint32_t m = next++; m <= m_max; m = next++) {
                report.rows[m] = make_row(m, laplacian_power(report.f * pow(p, m), m));
            }
        };
        const unsigned threads = std::clamp(options.threads, 1U, m_max + 1);
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }

    for (std::uint32_t m = m_max + 1; m-- > 0;) {
        if (!report.rows[m].is_zero) {
            break;
        }
        report.first_all_zero_from = m;
    }
    return report;
}

// ---------------------------------------------------------------------------

Polynomial expansion_rhs(const Polynomial& f, const Polynomial& p, std::uint32_t m) {
    require_same_ring(f, p, "expansion_rhs");
    const std::size_t n = p.nvars();
    // laplacians_of_power[j] = Delta^j P^m
    std::vector<Polynomial> laplacians_of_power{pow(p, m)};
    for (std::uint32_t j = 1; j <= m; ++j) {
        laplacians_of_power.push_back(laplacian(laplacians_of_power.back()));
    }
    Integer m_fact;
    mpz_fac_ui(m_fact.get_mpz_t(), m);

    Polynomial sum(n);
    Polynomial lap_f = f;  // Delta^k1 f
    for (std::uint32_t k1 = 0; k1 <= m && !lap_f.is_zero(); ++k1) {
        for (std::uint32_t k2 = 0; k1 + k2 <= m; ++k2) {
            const std::uint32_t k3 = m - k1 - k2;
            const Polynomial& lap_p = laplacians_of_power[k3];
            if (lap_p.is_zero()) {
                continue;
            }
            Integer f1, f2, f3;
            mpz_fac_ui(f1.get_mpz_t(), k1);
            mpz_fac_ui(f2.get_mpz_t(), k2);
            mpz_fac_ui(f3.get_mpz_t(), k3);
            Integer two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, k2);
            // 2^k2 * m!/(k1! k2! k3!) * k2!/s!  ==  2^k2 * m! / (k1! k3! s!)
            const Integer outer = two_pow * m_fact / (f1 * f3);
            for (const auto& s : monomial_basis(n, k2)) {
                Polynomial left = partial(lap_f, s);
                if (left.is_zero()) {
                    continue;
                }
                Polynomial right = partial(lap_p, s);
                if (right.is_zero()) {
                    continue;
                }
                Rational coef(outer, s.factorial());
                coef.canonicalize();
                sum += (left * right) * GaussianRational(coef);
            }
        }
        lap_f = laplacian(lap_f);
    }
    return sum;
}

bool expansion_identity_check(const Polynomial& f, const Polynomial& p, std::uint32_t m) {
    if (m == 0) {
        throw PreconditionError("expansion_identity_check: m must be at least 1");
    }
    return expansion_rhs(f, p, m) == laplacian_power(f * pow(p, m), m);
}

// ---------------------------------------------------------------------------

std::vector<Polynomial> gradient_quadric_system(const Polynomial& p) {
    std::vector<Polynomial> system;
    for (auto& g : gradient(p)) {
        if (!g.is_zero()) {
            system.push_back(std::move(g));
        }
    }
    system.push_back(Polynomial::sigma2(p.nvars()));
    return system;
}

namespace {

std::uint32_t require_homogeneous_hn(const Polynomial& p, const char* op) {
    auto d = p.homogeneous_degree();
    if (!d) {
        throw PreconditionError(std::string(op) + ": P must be homogeneous");
    }
    if (!is_hn(p)) {
        throw PreconditionError(std::string(op) + ": P is not Hessian nilpotent");
    }
    return *d;
}

}  // namespace

bool membership_in_S(const Polynomial& p, std::uint32_t m) {
    require_homogeneous_hn(p, "membership_in_S");
    const Polynomial u = laplacian_power(pow(p, m + 1), m);
    if (u.is_zero()) {
        return true;
    }
    for (const auto& g : gradient_quadric_system(p)) {
        if (!apply_diffop(g, u).is_zero()) {
            return false;
        }
    }
    return true;
}

std::optional<std::uint32_t> vanishing_bound_from_saturation(std::uint32_t d, std::uint32_t saturation_degree) {
    if (d < 2) {
        throw PreconditionError("vanishing bound needs degree d >= 2");
    }
    if (d >= saturation_degree) {
        return 0;
    }
    if (d == 2) {
        return std::nullopt;
    }
    const std::uint32_t gap = saturation_degree - d;
    return (gap + (d - 2) - 1) / (d - 2);
}

Theorem1Certificate certify_theorem1(const Polynomial& p, std::optional<std::uint32_t> max_degree) {
    const std::uint32_t d = require_homogeneous_hn(p, "certify_theorem1");
    if (d < 2) {
        throw PreconditionError("certify_theorem1: P must have degree at least 2");
    }
    Theorem1Certificate out;
    out.degree = d;
    out.generators = gradient_quadric_system(p);
    out.base = common_zero_certificate(out.generators, p.nvars(), max_degree);
    if (out.base.status != CertificateStatus::NoCommonZero) {
        return out;
    }
    out.vanishing_bound = vanishing_bound_from_saturation(d, *out.base.saturation_degree);
    if (out.vanishing_bound) {
        for (std::uint32_t m = *out.vanishing_bound; m <= *out.vanishing_bound + 2; ++m) {
            if (!laplacian_power(pow(p, m + 1), m).is_zero()) {
                throw InternalInconsistency("certified vanishing bound violated at m = " + std::to_string(m));
            }
            out.verified_zero_at.push_back(m);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

Theorem2Threshold theorem2_threshold(const Polynomial& p, const Polynomial& f, std::uint32_t cap,
                                     std::uint32_t slack) {
    require_same_ring(p, f, "theorem2_threshold");
    if (!is_hn(p)) {
        throw PreconditionError("theorem2_threshold: P is not Hessian nilpotent");
    }
    Theorem2Threshold out;
    out.f_degree = f.total_degree().value_or(0);
    for (std::uint32_t b = 0; b <= out.f_degree; ++b) {
        std::uint32_t last_nonzero = 0;
        for (std::uint32_t m = 1; m <= cap; ++m) {
            if (!laplacian_power(pow(p, m + b), m).is_zero()) {
                last_nonzero = m;
            }
        }
        if (last_nonzero + slack > cap) {
            throw SearchCapExhausted("theorem2_threshold: Delta^m P^(m+" + std::to_string(b) +
                                     ") still nonzero at m = " + std::to_string(last_nonzero) + " with cap " +
                                     std::to_string(cap));
        }
        out.n = std::max(out.n, last_nonzero);
    }
    const std::uint32_t start = out.f_degree + out.n + 1;
    for (std::uint32_t m = start; m < start + slack; ++m) {
        if (!laplacian_power(f * pow(p, m), m).is_zero()) {
            throw InternalInconsistency("Delta^m (f P^m) nonzero at m = " + std::to_string(m) +
                                        " beyond the bound deg f + N");
        }
        out.verified_m.push_back(m);
    }
    return out;
}

// ---------------------------------------------------------------------------

SymmetricMap symmetric_map(const Polynomial& p) {
    SymmetricMap f{p, {}};
    const auto grad = gradient(p);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        f.components.push_back(Polynomial::variable(p.nvars(), i + 1) - grad[i]);
    }
    return f;
}

Polynomial jacobian_det(const SymmetricMap& f) {
    const std::size_t n = f.components.size();
    PolyMatrix jac(n, n, f.p.nvars());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            jac(i, j) = partial(f.components[i], j + 1);
        }
    }
    return determinant(jac);
}

FixedPointResult fixed_point_check(const SymmetricMap& f, std::span<const GaussianRational> w) {
    if (w.size() != f.components.size()) {
        throw DimensionMismatch("fixed_point_check: point length differs from variable count");
    }
    if (std::all_of(w.begin(), w.end(), [](const GaussianRational& x) { return x.is_zero(); })) {
        throw PreconditionError("fixed_point_check: w must be nonzero");
    }
    FixedPointResult r;
    r.fixed = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        r.image.push_back(evaluate(f.components[i], w));
        if (!(r.image.back() == w[i])) {
            r.fixed = false;
        }
    }
    r.on_isotropic_quadric = evaluate(Polynomial::sigma2(w.size()), w).is_zero();
    return r;
}

}  // namespace hnkit
