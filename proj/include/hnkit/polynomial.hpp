#pragma once

#include "hnkit/gaussian.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hnkit {

/// Exponents (e_1, ..., e_n) of the monomial z_1^e_1 * ... * z_n^e_n.
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// z1, then z2, and so on (so z1^2 > z1*z2 > z2^2 > z1 > z2 > 1).
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : exps_(n, 0) {}
    explicit ExponentVector(std::vector<std::uint32_t> exps);

    static ExponentVector unit(std::size_t n, std::size_t index);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
    std::uint32_t degree() const noexcept { return degree_; }
    std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

    void set(std::size_t i, std::uint32_t e);
    ExponentVector operator+(const ExponentVector& o) const;
    /// True when every exponent of `o` is at most the matching one here.
    bool divisible_by(const ExponentVector& o) const noexcept;
    /// Requires divisible_by(o).
    ExponentVector operator-(const ExponentVector& o) const;

    /// prod_i e_i!
    Integer factorial() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
        return a.exps_ == b.exps_;
    }
    friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept;

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

/// Every exponent vector of total degree `degree` in `n` variables, graded-lex
/// descending. This is the coordinate basis used for V_degree throughout.
std::vector<ExponentVector> monomial_basis(std::size_t n, std::uint32_t degree);

/// C(degree + n - 1, n - 1), the dimension of V_degree.
std::size_t homogeneous_dimension(std::size_t n, std::uint32_t degree);

struct Term {
    ExponentVector exponents;
    GaussianRational coefficient;
};

/// Sparse polynomial in z_1..z_n over Q(i). Terms are kept sorted graded-lex
/// descending with no zero coefficients, so equality is structural.
class Polynomial {
public:
    /// The zero polynomial in n variables.
    explicit Polynomial(std::size_t n = 1);

    static Polynomial constant(std::size_t n, const GaussianRational& c);
    /// z_index, index is 1-based like the text format.
    static Polynomial variable(std::size_t n, std::size_t index);
    static Polynomial monomial(ExponentVector exps, const GaussianRational& c = 1);
    /// Sums duplicate monomials and drops zeros.
    static Polynomial from_terms(std::size_t n, std::vector<Term> terms);
    /// sum_i z_i^2
    static Polynomial sigma2(std::size_t n);
    /// sum_i a_i z_i
    static Polynomial linear_form(std::span<const GaussianRational> a);

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::optional<std::uint32_t> total_degree() const noexcept;
    /// d iff every term has total degree d; nullopt for zero or mixed degrees.
    std::optional<std::uint32_t> homogeneous_degree() const noexcept;
    GaussianRational coefficient(const ExponentVector& e) const;
    const Term& leading_term() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const GaussianRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
    friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
        return a.n_ == b.n_ && a.terms_.size() == b.terms_.size() && a.same_terms(b);
    }

    /// Canonical text form, see text.hpp.
    std::string to_string() const;

private:
    bool same_terms(const Polynomial& b) const noexcept;
    Polynomial& add_scaled(const Polynomial& o, bool negate);

    std::size_t n_;
    std::vector<Term> terms_;
};

/// Throws DimensionMismatch unless both live in the same ring.
void require_same_ring(const Polynomial& p, const Polynomial& q, const char* op);

/// p^m by repeated squaring; p^0 == 1 for every p including 0.
Polynomial pow(const Polynomial& p, std::uint32_t m);

/// d p / d z_index, index 1-based.
Polynomial partial(const Polynomial& p, std::size_t index);

/// d^|s| p / d z^s for a multi-index s.
Polynomial partial(const Polynomial& p, const ExponentVector& s);

/// Sum of the terms of total degree exactly `degree`.
Polynomial homogeneous_slice(const Polynomial& p, std::uint32_t degree);

GaussianRational evaluate(const Polynomial& p, std::span<const GaussianRational> point);

/// Exact quotient p / q. Throws PreconditionError if q does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& q);

/// Coordinates of a homogeneous polynomial in monomial_basis(n, degree).
/// Terms of other degrees must be absent (PreconditionError otherwise).
std::vector<GaussianRational> coordinates(const Polynomial& p, std::span<const ExponentVector> basis);

/// Inverse of coordinates().
Polynomial from_coordinates(std::size_t n, std::span<const ExponentVector> basis,
                            std::span<const GaussianRational> coords);

}  // namespace hnkit
