#pragma once

#include "hnkit/exact_matrix.hpp"
#include "hnkit/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hnkit {

/// Subspace of V_m stored as a reduced row-echelon coefficient matrix against
/// monomial_basis(n, m). Two subspaces are equal iff their matrices are.
class SubspaceBasis {
public:
    SubspaceBasis(std::uint32_t degree, std::size_t nvars);
    /// Row-reduces `spanning_rows` (any spanning set, zero rows allowed).
    SubspaceBasis(std::uint32_t degree, std::size_t nvars, const Matrix& spanning_rows);

    static SubspaceBasis whole(std::uint32_t degree, std::size_t nvars);

    std::uint32_t degree() const noexcept { return degree_; }
    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t dim() const noexcept { return rows_.rows(); }
    std::size_t ambient_dim() const noexcept { return rows_.cols(); }
    const Matrix& rows() const noexcept { return rows_; }

    std::vector<Polynomial> polynomials() const;
    bool contains(const Polynomial& p) const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.degree_ == b.degree_ && a.nvars_ == b.nvars_ && a.rows_ == b.rows_;
    }

private:
    std::uint32_t degree_;
    std::size_t nvars_;
    Matrix rows_;
};

/// I_m: degree-m piece of the ideal generated by homogeneous `generators`,
/// spanned by z^b * g_i with |b| = m - deg g_i.
SubspaceBasis ideal_graded_piece(std::span<const Polynomial> generators, std::uint32_t m, std::size_t nvars);

/// B_m-orthogonal complement inside V_m. The Gram matrix is diag(a!), so this
/// is the kernel of the basis matrix with column a scaled by a!.
SubspaceBasis orthogonal_complement(const SubspaceBasis& basis);

/// S_m = { u in V_m : g(D) u = 0 for every generator g }, computed directly as
/// the kernel of the stacked maps u -> g(D) u.
SubspaceBasis pde_solution_slice(std::span<const Polynomial> generators, std::uint32_t m, std::size_t nvars);

enum class CertificateStatus { NoCommonZero, CommonZeroExistsLikely, Inconclusive };

std::string to_string(CertificateStatus s);

struct HilbertValue {
    std::uint32_t degree;
    std::size_t ideal_dim;
    std::size_t ambient_dim;
};

struct Certificate {
    CertificateStatus status = CertificateStatus::Inconclusive;
    /// First M with I_M = V_M; set iff status == NoCommonZero.
    std::optional<std::uint32_t> saturation_degree;
    std::uint32_t probe_degree_reached = 0;
    /// The probe bound used (caller-supplied or the default).
    std::uint32_t probe_bound = 0;
    std::uint32_t default_bound = 0;
    std::vector<HilbertValue> hilbert_values;
};

/// 1 + sum of (d_i - 1) over the min(k, n) largest generator degrees.
std::uint32_t default_probe_bound(std::span<const Polynomial> generators, std::size_t nvars);

/// Walks m = 0, 1, ... computing dim I_m until I_M = V_M or the probe bound.
/// On saturation, also probes M + 1 and throws InternalInconsistency if
/// saturation did not persist. Without saturation the status is
/// CommonZeroExistsLikely if the default bound was covered, else Inconclusive.
Certificate common_zero_certificate(std::span<const Polynomial> generators, std::size_t nvars,
                                    std::optional<std::uint32_t> max_degree = std::nullopt);

/// True iff every generator vanishes at `point`; confirms a common zero.
bool is_common_zero(std::span<const Polynomial> generators, std::span<const GaussianRational> point);

}  // namespace hnkit
