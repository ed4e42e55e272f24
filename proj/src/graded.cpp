#include "hnkit/graded.hpp"

#include "hnkit/diffop.hpp"
#include "hnkit/errors.hpp"

#include <algorithm>
#include <functional>

namespace hnkit {

namespace {

/// Validates generators and returns their degrees.
std::vector<std::uint32_t> generator_degrees(std::span<const Polynomial> generators, std::size_t nvars) {
    std::vector<std::uint32_t> degrees;
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const Polynomial& g = generators[k];
        if (g.nvars() != nvars) {
            throw DimensionMismatch("generator " + std::to_string(k + 1) + " has " + std::to_string(g.nvars()) +
                                    " variables, expected " + std::to_string(nvars));
        }
        auto d = g.homogeneous_degree();
        if (!d || *d == 0) {
            throw PreconditionError("generator " + std::to_string(k + 1) + " (" + g.to_string() +
                                    ") is not homogeneous of positive degree");
        }
        degrees.push_back(*d);
    }
    return degrees;
}

/// Rows z^b * g_k for |b| = m - d_k, in coordinates of V_m.
Matrix ideal_spanning_rows(std::span<const Polynomial> generators, const std::vector<std::uint32_t>& degrees,
                           std::uint32_t m, std::size_t nvars) {
    const auto basis = monomial_basis(nvars, m);
    Matrix spanning(0, basis.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (degrees[k] > m) {
            continue;
        }
        for (const auto& beta : monomial_basis(nvars, m - degrees[k])) {
            spanning.append_row(coordinates(Polynomial::monomial(beta) * generators[k], basis));
        }
    }
    return spanning;
}

}  // namespace

SubspaceBasis::SubspaceBasis(std::uint32_t degree, std::size_t nvars)
    : degree_(degree), nvars_(nvars), rows_(0, homogeneous_dimension(nvars, degree)) {}

SubspaceBasis::SubspaceBasis(std::uint32_t degree, std::size_t nvars, const Matrix& spanning_rows)
    : SubspaceBasis(degree, nvars) {
    if (spanning_rows.rows() > 0) {
        if (spanning_rows.cols() != rows_.cols()) {
            throw DimensionMismatch("SubspaceBasis: row length differs from dim V_m");
        }
        rows_ = rref(spanning_rows).reduced;
    }
}

SubspaceBasis SubspaceBasis::whole(std::uint32_t degree, std::size_t nvars) {
    return SubspaceBasis(degree, nvars, Matrix::identity(homogeneous_dimension(nvars, degree)));
}

std::vector<Polynomial> SubspaceBasis::polynomials() const {
    const auto basis = monomial_basis(nvars_, degree_);
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < rows_.rows(); ++r) {
        const auto coords = rows_.row(r);
        out.push_back(from_coordinates(nvars_, basis, coords));
    }
    return out;
}

bool SubspaceBasis::contains(const Polynomial& p) const {
    if (p.is_zero()) {
        return true;
    }
    const auto basis = monomial_basis(nvars_, degree_);
    Matrix extended = rows_;
    extended.append_row(coordinates(p, basis));
    return rank(extended) == dim();
}

SubspaceBasis ideal_graded_piece(std::span<const Polynomial> generators, std::uint32_t m, std::size_t nvars) {
    const auto degrees = generator_degrees(generators, nvars);
    return SubspaceBasis(m, nvars, ideal_spanning_rows(generators, degrees, m, nvars));
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& b) {
    const auto basis = monomial_basis(b.nvars(), b.degree());
    if (b.dim() == 0) {
        return SubspaceBasis::whole(b.degree(), b.nvars());
    }
    // B_m(row, u) = sum_a row_a * a! * u_a
    Matrix scaled = b.rows();
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const GaussianRational weight(Rational(basis[c].factorial()));
        for (std::size_t r = 0; r < scaled.rows(); ++r) {
            scaled(r, c) *= weight;
        }
    }
    return SubspaceBasis(b.degree(), b.nvars(), kernel(scaled));
}

SubspaceBasis pde_solution_slice(std::span<const Polynomial> generators, std::uint32_t m, std::size_t nvars) {
    const auto degrees = generator_degrees(generators, nvars);
    const auto basis = monomial_basis(nvars, m);
    // One block of rows per generator: the matrix of u -> g(D) u from V_m to V_{m-d}.
    Matrix stacked(0, basis.size());
    for (std::size_t k = 0; k < generators.size(); ++k) {
        if (degrees[k] > m) {
            continue;  // g(D) annihilates V_m outright
        }
        const auto target = monomial_basis(nvars, m - degrees[k]);
        Matrix block(target.size(), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const auto image = coordinates(apply_diffop(generators[k], Polynomial::monomial(basis[c])), target);
            for (std::size_t r = 0; r < target.size(); ++r) {
                block(r, c) = image[r];
            }
        }
        for (std::size_t r = 0; r < block.rows(); ++r) {
            stacked.append_row(block.row(r));
        }
    }
    if (stacked.rows() == 0) {
        return SubspaceBasis::whole(m, nvars);
    }
    return SubspaceBasis(m, nvars, kernel(stacked));
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::NoCommonZero: return "NO_COMMON_ZERO";
        case CertificateStatus::CommonZeroExistsLikely: return "COMMON_ZERO_EXISTS_LIKELY";
        case CertificateStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

std::uint32_t default_probe_bound(std::span<const Polynomial> generators, std::size_t nvars) {
    std::vector<std::uint32_t> degrees = generator_degrees(generators, nvars);
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    std::uint32_t bound = 1;
    for (std::size_t k = 0; k < std::min(degrees.size(), nvars); ++k) {
        bound += degrees[k] - 1;
    }
    return bound;
}

namespace {

std::size_t ideal_dimension(std::span<const Polynomial> generators, const std::vector<std::uint32_t>& degrees,
                            std::uint32_t m, std::size_t nvars) {
    const Matrix spanning = ideal_spanning_rows(generators, degrees, m, nvars);
    return spanning.rows() == 0 ? 0 : rank(spanning);
}

}  // namespace

Certificate common_zero_certificate(std::span<const Polynomial> generators, std::size_t nvars,
                                    std::optional<std::uint32_t> max_degree) {
    const auto degrees = generator_degrees(generators, nvars);
    Certificate cert;
    cert.default_bound = default_probe_bound(generators, nvars);
    cert.probe_bound = max_degree.value_or(cert.default_bound);
    for (std::uint32_t m = 0; m <= cert.probe_bound; ++m) {
        const std::size_t dim_i = ideal_dimension(generators, degrees, m, nvars);
        const std::size_t dim_v = homogeneous_dimension(nvars, m);
        cert.hilbert_values.push_back({m, dim_i, dim_v});
        cert.probe_degree_reached = m;
        if (dim_i == dim_v) {
            cert.saturation_degree = m;
            break;
        }
    }
    if (cert.saturation_degree) {
        const std::uint32_t next = *cert.saturation_degree + 1;
        const std::size_t dim_i = ideal_dimension(generators, degrees, next, nvars);
        const std::size_t dim_v = homogeneous_dimension(nvars, next);
        cert.hilbert_values.push_back({next, dim_i, dim_v});
        if (dim_i != dim_v) {
            throw InternalInconsistency("saturation did not persist from degree " +
                                        std::to_string(*cert.saturation_degree) + " to " + std::to_string(next));
        }
        cert.status = CertificateStatus::NoCommonZero;
    } else if (cert.probe_bound >= cert.default_bound) {
        cert.status = CertificateStatus::CommonZeroExistsLikely;
    } else {
        cert.status = CertificateStatus::Inconclusive;
    }
    return cert;
}

bool is_common_zero(std::span<const Polynomial> generators, std::span<const GaussianRational> point) {
    return std::all_of(generators.begin(), generators.end(),
                       [&](const Polynomial& g) { return evaluate(g, point).is_zero(); });
}

}  // namespace hnkit
