#include "hnkit/diffop.hpp"

#include "hnkit/errors.hpp"

namespace hnkit {

Polynomial apply_diffop(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f, g, "apply_diffop");
    std::vector<Term> out;
    for (const auto& s : f.terms()) {
        for (const auto& t : g.terms()) {
            if (!t.exponents.divisible_by(s.exponents)) {
                continue;
            }
            // D^a z^b = b!/(b-a)! z^(b-a)
            Integer factor = 1;
            for (std::size_t i = 0; i < g.nvars(); ++i) {
                for (std::uint32_t k = 0; k < s.exponents[i]; ++k) {
                    factor *= t.exponents[i] - k;
                }
            }
            out.push_back(Term{t.exponents - s.exponents,
                               s.coefficient * t.coefficient * GaussianRational(Rational(factor))});
        }
    }
    return Polynomial::from_terms(g.nvars(), std::move(out));
}

Polynomial laplacian(const Polynomial& g) {
    std::vector<Term> out;
    for (const auto& t : g.terms()) {
        for (std::size_t i = 0; i < g.nvars(); ++i) {
            const std::uint32_t e = t.exponents[i];
            if (e < 2) {
                continue;
            }
            ExponentVector lowered = t.exponents;
            lowered.set(i, e - 2);
            out.push_back(Term{std::move(lowered), t.coefficient * GaussianRational(static_cast<long>(e) * (e - 1))});
        }
    }
    return Polynomial::from_terms(g.nvars(), std::move(out));
}

Polynomial laplacian_power(const Polynomial& g, std::uint32_t m) {
    Polynomial r = g;
    for (std::uint32_t k = 0; k < m && !r.is_zero(); ++k) {
        r = laplacian(r);
    }
    return r;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
    std::vector<Polynomial> g;
    g.reserve(p.nvars());
    for (std::size_t i = 1; i <= p.nvars(); ++i) {
        g.push_back(partial(p, i));
    }
    return g;
}

PolyMatrix hessian(const Polynomial& p) {
    const std::size_t n = p.nvars();
    PolyMatrix h(n, n, n);
    const std::vector<Polynomial> grad = gradient(p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            h(i, j) = partial(grad[i], j + 1);
            if (j != i) {
                h(j, i) = h(i, j);
            }
        }
    }
    return h;
}

bool matrix_power_is_zero(const PolyMatrix& m, std::uint32_t k) {
    if (!m.is_square()) {
        throw PreconditionError("matrix_power_is_zero: matrix is not square");
    }
    if (k == 0) {
        throw PreconditionError("matrix_power_is_zero: power must be positive");
    }
    PolyMatrix power = m;
    for (std::uint32_t e = 1; e < k; ++e) {
        if (power.is_zero()) {
            return true;
        }
        power = power * m;
    }
    return power.is_zero();
}

namespace {

void require_in_slice(const Polynomial& p, std::uint32_t m, const char* which) {
    if (p.is_zero()) {
        return;
    }
    auto d = p.homogeneous_degree();
    if (!d || *d != m) {
        throw PreconditionError(std::string("apolar_form: ") + which + " is not homogeneous of degree " +
                                std::to_string(m));
    }
}

}  // namespace

ApolarValue apolar_form(const Polynomial& f, const Polynomial& g, std::uint32_t m) {
    require_same_ring(f, g, "apolar_form");
    require_in_slice(f, m, "first argument");
    require_in_slice(g, m, "second argument");
    const Polynomial v = apply_diffop(f, g);
    return ApolarValue{v.is_zero() ? GaussianRational{} : v.terms().front().coefficient};
}

Matrix apolar_gram(std::uint32_t m, std::size_t n) {
    const auto basis = monomial_basis(n, m);
    Matrix gram(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const Polynomial row = Polynomial::monomial(basis[r]);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            gram(r, c) = apolar_form(row, Polynomial::monomial(basis[c]), m).value;
        }
    }
    return gram;
}

}  // namespace hnkit
