#pragma once

#include "hnkit/graded.hpp"
#include "hnkit/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hnkit {

// ---------------------------------------------------------------------------
// Hessian nilpotency

/// (Hes P)^n == 0. For an n x n matrix this decides nilpotency.
bool is_hn(const Polynomial& p);

/// Delta^m P^m == 0 for every 1 <= m <= cutoff. Stops at the first nonzero.
bool hn_by_laplacian(const Polynomial& p, std::uint32_t cutoff);

struct HnDecision {
    bool hn = false;
    bool matrix_route = false;
    bool laplacian_route = false;
};

/// Runs both routes with cutoff n and throws InternalInconsistency if they disagree.
HnDecision is_hn_checked(const Polynomial& p);

// ---------------------------------------------------------------------------
// Vanishing experiments

struct VanishRow {
    std::uint32_t m = 0;
    std::optional<std::uint32_t> degree;  // nullopt when the row is zero
    bool is_zero = false;
};

struct VanishReport {
    Polynomial p;
    Polynomial f;
    bool f_is_default = true;  // f == P, rows are Delta^m P^(m+1)
    std::vector<VanishRow> rows;
    std::optional<std::uint32_t> first_all_zero_from;
    std::optional<std::uint32_t> threshold_n;
};

struct VanishOptions {
    /// Reuse P^m = P^(m-1) * P across rows; forces sequential evaluation.
    bool incremental = false;
    /// Rows are independent; more than one thread splits them.
    unsigned threads = 1;
};

/// Delta^m (f P^m) for 0 <= m <= m_max, f defaulting to P.
VanishReport vanish_experiment(const Polynomial& p, const std::optional<Polynomial>& f, std::uint32_t m_max,
                               const VanishOptions& options = {});

// ---------------------------------------------------------------------------
// Product expansion of Delta^m (f P^m)

/// sum over k1+k2+k3 = m and |s| = k2 of
///   2^k2 * multinomial(m; k1,k2,k3) * multinomial(k2; s)
///   * d^s Delta^k1 f * d^s Delta^k3 P^m
Polynomial expansion_rhs(const Polynomial& f, const Polynomial& p, std::uint32_t m);

/// expansion_rhs(f, p, m) == laplacian_power(f * p^m, m).
bool expansion_identity_check(const Polynomial& f, const Polynomial& p, std::uint32_t m);

// ---------------------------------------------------------------------------
// Solution space membership and the saturation-based vanishing certificate

/// {dP/dz_i != 0} together with sigma2: the PDE system whose solution space
/// contains every Delta^m P^(m+1).
std::vector<Polynomial> gradient_quadric_system(const Polynomial& p);

/// u = Delta^m P^(m+1) satisfies g(D) u = 0 for every g in gradient_quadric_system(P).
/// Throws PreconditionError unless P is homogeneous and HN.
bool membership_in_S(const Polynomial& p, std::uint32_t m);

/// Least m >= 0 with (d - 2) m + d >= saturation_degree. For d == 2 the degree
/// of Delta^m P^(m+1) never grows, so a bound exists only when M <= 2.
std::optional<std::uint32_t> vanishing_bound_from_saturation(std::uint32_t d, std::uint32_t saturation_degree);

struct Theorem1Certificate {
    Certificate base;
    std::vector<Polynomial> generators;
    std::uint32_t degree = 0;
    std::optional<std::uint32_t> vanishing_bound;
    /// m values at which Delta^m P^(m+1) was recomputed and found zero.
    std::vector<std::uint32_t> verified_zero_at;
};

/// Saturation check on gradient_quadric_system(P). When it certifies, sets
/// the vanishing bound and recomputes Delta^m P^(m+1) at the bound, +1, +2
/// (InternalInconsistency if any is nonzero).
Theorem1Certificate certify_theorem1(const Polynomial& p, std::optional<std::uint32_t> max_degree = std::nullopt);

// ---------------------------------------------------------------------------
// Threshold for Delta^m (f P^m)

struct Theorem2Threshold {
    std::uint32_t n = 0;
    std::uint32_t f_degree = 0;
    /// Sampled m in (d + N, d + N + slack] where Delta^m (f P^m) was confirmed zero.
    std::vector<std::uint32_t> verified_m;
};

/// Least N observed such that Delta^m P^(m+b) = 0 for all 0 <= b <= deg f and
/// all probed m in (N, cap], requiring at least `slack` zero rows after the
/// last nonzero one. Throws SearchCapExhausted otherwise, PreconditionError
/// unless P is HN.
Theorem2Threshold theorem2_threshold(const Polynomial& p, const Polynomial& f, std::uint32_t cap = 12,
                                     std::uint32_t slack = 3);

// ---------------------------------------------------------------------------
// The map F = z - grad P

struct SymmetricMap {
    Polynomial p;
    std::vector<Polynomial> components;
};

SymmetricMap symmetric_map(const Polynomial& p);

/// det of the Jacobian matrix (dF_i/dz_j) = I - Hes P.
Polynomial jacobian_det(const SymmetricMap& f);

struct FixedPointResult {
    bool fixed = false;
    /// sigma2(w) == 0
    bool on_isotropic_quadric = false;
    std::vector<GaussianRational> image;
};

/// F(w) == w, equivalently grad P(w) == 0. Throws PreconditionError for w == 0.
FixedPointResult fixed_point_check(const SymmetricMap& f, std::span<const GaussianRational> w);

}  // namespace hnkit
