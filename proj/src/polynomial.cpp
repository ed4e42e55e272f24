#include "hnkit/polynomial.hpp"

#include "hnkit/errors.hpp"
#include "hnkit/text.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace hnkit {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t index) {
    ExponentVector e(n);
    e.set(index, 1);
    return e;
}

void ExponentVector::set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_.at(i) + e;
    exps_[i] = e;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    ExponentVector r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] += o.exps_[i];
    }
    r.degree_ += o.degree_;
    return r;
}

bool ExponentVector::divisible_by(const ExponentVector& o) const noexcept {
    if (o.degree_ > degree_) {
        return false;
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (o.exps_[i] > exps_[i]) {
            return false;
        }
    }
    return true;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    ExponentVector r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] -= o.exps_[i];
    }
    r.degree_ -= o.degree_;
    return r;
}

Integer ExponentVector::factorial() const {
    Integer result = 1;
    for (std::uint32_t e : exps_) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), e);
        result *= f;
    }
    return result;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) {
        return c;
    }
    return a.exps_ <=> b.exps_;
}

namespace {

void fill_basis(std::size_t var, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
                std::vector<ExponentVector>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        cur[var] = e;
        fill_basis(var + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<ExponentVector> monomial_basis(std::size_t n, std::uint32_t degree) {
    if (n == 0) {
        throw PreconditionError("monomial basis needs at least one variable");
    }
    std::vector<ExponentVector> out;
    out.reserve(homogeneous_dimension(n, degree));
    std::vector<std::uint32_t> cur(n, 0);
    fill_basis(0, degree, cur, out);
    return out;
}

std::size_t homogeneous_dimension(std::size_t n, std::uint32_t degree) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), degree + n - 1, n - 1);
    return c.get_ui();
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

using TermMap = std::map<ExponentVector, GaussianRational, std::greater<>>;

std::vector<Term> drain(TermMap& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) {
        if (!c.is_zero()) {
            out.push_back(Term{e, std::move(c)});
        }
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(std::size_t n) : n_(n) {
    if (n == 0) {
        throw PreconditionError("a polynomial needs at least one variable");
    }
}

Polynomial Polynomial::constant(std::size_t n, const GaussianRational& c) {
    Polynomial p(n);
    if (!c.is_zero()) {
        p.terms_.push_back(Term{ExponentVector(n), c});
    }
    return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t index) {
    if (index < 1 || index > n) {
        throw std::out_of_range("variable index z" + std::to_string(index) + " outside 1.." +
                                std::to_string(n));
    }
    return monomial(ExponentVector::unit(n, index - 1));
}

Polynomial Polynomial::monomial(ExponentVector exps, const GaussianRational& c) {
    Polynomial p(exps.size());
    if (!c.is_zero()) {
        p.terms_.push_back(Term{std::move(exps), c});
    }
    return p;
}

Polynomial Polynomial::from_terms(std::size_t n, std::vector<Term> terms) {
    TermMap acc;
    for (auto& t : terms) {
        if (t.exponents.size() != n) {
            throw DimensionMismatch("term has " + std::to_string(t.exponents.size()) +
                                    " exponents, ring has " + std::to_string(n) + " variables");
        }
        auto [it, inserted] = acc.try_emplace(std::move(t.exponents), t.coefficient);
        if (!inserted) {
            it->second += t.coefficient;
        }
    }
    Polynomial p(n);
    p.terms_ = drain(acc);
    return p;
}

Polynomial Polynomial::sigma2(std::size_t n) {
    Polynomial p(n);
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector e(n);
        e.set(i, 2);
        p.terms_.push_back(Term{std::move(e), 1});
    }
    return p;
}

Polynomial Polynomial::linear_form(std::span<const GaussianRational> a) {
    Polynomial p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero()) {
            p.terms_.push_back(Term{ExponentVector::unit(a.size(), i), a[i]});
        }
    }
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().exponents.degree() == 0);
}

std::optional<std::uint32_t> Polynomial::total_degree() const noexcept {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.front().exponents.degree();
}

std::optional<std::uint32_t> Polynomial::homogeneous_degree() const noexcept {
    if (terms_.empty() || terms_.front().exponents.degree() != terms_.back().exponents.degree()) {
        return std::nullopt;
    }
    return terms_.front().exponents.degree();
}

GaussianRational Polynomial::coefficient(const ExponentVector& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const ExponentVector& key) { return t.exponents > key; });
    if (it != terms_.end() && it->exponents == e) {
        return it->coefficient;
    }
    return {};
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) {
        throw PreconditionError("the zero polynomial has no leading term");
    }
    return terms_.front();
}

bool Polynomial::same_terms(const Polynomial& b) const noexcept {
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (!(terms_[k].exponents == b.terms_[k].exponents) ||
            !(terms_[k].coefficient == b.terms_[k].coefficient)) {
            return false;
        }
    }
    return true;
}

void require_same_ring(const Polynomial& p, const Polynomial& q, const char* op) {
    if (p.nvars() != q.nvars()) {
        throw DimensionMismatch(std::string(op) + ": variable counts differ (" +
                                std::to_string(p.nvars()) + " vs " + std::to_string(q.nvars()) + ")");
    }
}

Polynomial& Polynomial::add_scaled(const Polynomial& o, bool negate) {
    require_same_ring(*this, o, negate ? "sub" : "add");
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exponents > b->exponents)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exponents > a->exponents) {
            merged.push_back(Term{b->exponents, negate ? -b->coefficient : b->coefficient});
            ++b;
        } else {
            if (negate) {
                a->coefficient -= b->coefficient;
            } else {
                a->coefficient += b->coefficient;
            }
            if (!a->coefficient.is_zero()) {
                merged.push_back(std::move(*a));
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) { return add_scaled(o, false); }
Polynomial& Polynomial::operator-=(const Polynomial& o) { return add_scaled(o, true); }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coefficient *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b, "mul");
    Polynomial r(a.n_);
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    TermMap acc;
    for (const auto& s : a.terms_) {
        for (const auto& t : b.terms_) {
            auto [it, inserted] = acc.try_emplace(s.exponents + t.exponents);
            if (inserted) {
                it->second = s.coefficient * t.coefficient;
            } else {
                it->second += s.coefficient * t.coefficient;
            }
        }
    }
    r.terms_ = drain(acc);
    return r;
}

Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) {
        t.coefficient = -t.coefficient;
    }
    return a;
}

std::string Polynomial::to_string() const { return format_polynomial(*this); }

// ---------------------------------------------------------------------------
// Free operations

Polynomial pow(const Polynomial& p, std::uint32_t m) {
    Polynomial result = Polynomial::constant(p.nvars(), 1);
    Polynomial base = p;
    while (m > 0) {
        if (m & 1U) {
            result *= base;
        }
        m >>= 1U;
        if (m > 0) {
            base *= base;
        }
    }
    return result;
}

Polynomial partial(const Polynomial& p, std::size_t index) {
    if (index < 1 || index > p.nvars()) {
        throw std::out_of_range("partial: index " + std::to_string(index) + " outside 1.." +
                                std::to_string(p.nvars()));
    }
    return partial(p, ExponentVector::unit(p.nvars(), index - 1));
}

Polynomial partial(const Polynomial& p, const ExponentVector& s) {
    if (s.size() != p.nvars()) {
        throw DimensionMismatch("partial: multi-index length differs from variable count");
    }
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (!t.exponents.divisible_by(s)) {
            continue;
        }
        // falling factorial e (e-1) ... (e-s+1) per variable
        Integer factor = 1;
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::uint32_t k = 0; k < s[i]; ++k) {
                factor *= t.exponents[i] - k;
            }
        }
        out.push_back(Term{t.exponents - s, t.coefficient * GaussianRational(Rational(factor))});
    }
    // Subtracting a fixed multi-index keeps graded-lex order within a degree
    // but can interleave degrees, so re-canonicalize.
    return Polynomial::from_terms(p.nvars(), std::move(out));
}

Polynomial homogeneous_slice(const Polynomial& p, std::uint32_t degree) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.exponents.degree() == degree) {
            out.push_back(t);
        }
    }
    return Polynomial::from_terms(p.nvars(), std::move(out));
}

GaussianRational evaluate(const Polynomial& p, std::span<const GaussianRational> point) {
    if (point.size() != p.nvars()) {
        throw DimensionMismatch("evaluate: point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " + std::to_string(p.nvars()) + " variables");
    }
    GaussianRational sum;
    for (const auto& t : p.terms()) {
        GaussianRational v = t.coefficient;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t k = 0; k < t.exponents[i]; ++k) {
                v *= point[i];
            }
        }
        sum += v;
    }
    return sum;
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    require_same_ring(p, q, "exact_divide");
    if (q.is_zero()) {
        throw std::domain_error("exact_divide: division by the zero polynomial");
    }
    const Term& lead = q.leading_term();
    const GaussianRational lead_inv = lead.coefficient.inverse();
    Polynomial rem = p;
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const Term& t = rem.leading_term();
        if (!t.exponents.divisible_by(lead.exponents)) {
            throw PreconditionError("exact_divide: divisor does not divide dividend");
        }
        Polynomial step = Polynomial::monomial(t.exponents - lead.exponents, t.coefficient * lead_inv);
        quotient.push_back(step.terms().front());
        rem -= step * q;
    }
    return Polynomial::from_terms(p.nvars(), std::move(quotient));
}

std::vector<GaussianRational> coordinates(const Polynomial& p, std::span<const ExponentVector> basis) {
    std::vector<GaussianRational> coords(basis.size());
    // Both sequences are graded-lex descending, so one merge pass suffices.
    std::size_t k = 0;
    for (const auto& t : p.terms()) {
        while (k < basis.size() && basis[k] > t.exponents) {
            ++k;
        }
        if (k == basis.size() || !(basis[k] == t.exponents)) {
            throw PreconditionError("coordinates: term outside the requested homogeneous basis");
        }
        coords[k] = t.coefficient;
    }
    return coords;
}

Polynomial from_coordinates(std::size_t n, std::span<const ExponentVector> basis,
                            std::span<const GaussianRational> coords) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (!coords[k].is_zero()) {
            terms.push_back(Term{basis[k], coords[k]});
        }
    }
    return Polynomial::from_terms(n, std::move(terms));
}

}  // namespace hnkit
