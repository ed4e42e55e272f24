#pragma once

#include "hnkit/exact_matrix.hpp"
#include "hnkit/poly_matrix.hpp"
#include "hnkit/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace hnkit {

/// f(D) g: substitute D_i = d/dz_i for z_i in f and apply the resulting
/// constant-coefficient operator to g. Bilinear in (f, g).
Polynomial apply_diffop(const Polynomial& f, const Polynomial& g);

/// sum_i d^2 g / dz_i^2, i.e. apply_diffop(sigma2, g).
Polynomial laplacian(const Polynomial& g);

/// m-fold Laplacian; m = 0 is the identity.
Polynomial laplacian_power(const Polynomial& g, std::uint32_t m);

std::vector<Polynomial> gradient(const Polynomial& p);

/// (d^2 p / dz_i dz_j), symmetric n x n.
PolyMatrix hessian(const Polynomial& p);

/// True iff M^k == 0, by exact symbolic products. Stops early once a lower
/// power already vanishes.
bool matrix_power_is_zero(const PolyMatrix& m, std::uint32_t k);

/// Value of the apolarity form B_m on V_m x V_m.
struct ApolarValue {
    GaussianRational value;
};

/// B_m(f, g) = f(D) g for f, g in V_m. On monomials B_m(z^a, z^b) = a! [a == b].
/// The zero polynomial counts as an element of every V_m. Throws
/// PreconditionError for inputs that are not homogeneous of degree m.
ApolarValue apolar_form(const Polynomial& f, const Polynomial& g, std::uint32_t m);

/// Gram matrix of B_m on monomial_basis(n, m). Diagonal with entries a!.
Matrix apolar_gram(std::uint32_t m, std::size_t n);

}  // namespace hnkit
