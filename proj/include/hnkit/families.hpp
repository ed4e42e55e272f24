#pragma once

#include "hnkit/polynomial.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hnkit {

using Direction = std::vector<GaussianRational>;

/// sum_i a_i b_i (bilinear, no conjugation).
GaussianRational dot(std::span<const GaussianRational> a, std::span<const GaussianRational> b);

/// (a . z)^d with a isotropic (a . a == 0, a != 0) and d >= 2.
Polynomial isotropic_power(const Direction& a, std::uint32_t d);

/// sum_j c_j (a_j . z)^d where every a_j is isotropic and a_j . a_k == 0.
Polynomial ortho_isotropic_sum(const std::vector<Direction>& directions,
                               const std::vector<GaussianRational>& coefficients, std::uint32_t d);

/// Deterministic homogeneous polynomial of degree d in n variables.
///
/// For the j-th monomial of monomial_basis(n, d) (0-based), draw
/// x = splitmix64(seed ^ splitmix64(j + 1)) and take the coefficient
/// ((x mod 7) - 3) + ((x >> 32) mod 7 - 3) i. If every draw is zero the first
/// monomial gets coefficient 1, so the result is never the zero polynomial.
Polynomial random_homogeneous(std::size_t n, std::uint32_t d, std::uint64_t seed);

/// One step of the splitmix64 generator's output function.
std::uint64_t splitmix64(std::uint64_t x);

enum class FamilyKind { IsotropicPower, OrthoIsotropicSum, RandomHomogeneous };

struct FamilySpec {
    FamilyKind kind = FamilyKind::IsotropicPower;
    std::size_t n = 1;
    std::uint32_t d = 2;
    std::vector<Direction> directions;
    std::vector<GaussianRational> coefficients;
    std::uint64_t seed = 0;
    /// Whether the member is expected HN; random draws are negative controls.
    bool expect_hn() const noexcept { return kind != FamilyKind::RandomHomogeneous; }
};

/// Builds the polynomial described by `spec`, validating its invariants.
Polynomial build(const FamilySpec& spec);

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& s);

// FamilySpec file format: a JSON array (or {"families": [...]}) of objects
//   {"kind": "isotropic_power" | "ortho_isotropic_sum" | "random_homogeneous",
//    "n": 2, "d": 4,
//    "directions": [["1", "i"]],     // coefficients in canonical text
//    "coefficients": ["1"],          // ortho_isotropic_sum only, defaults to 1s
//    "seed": 7}                      // random_homogeneous only
void to_json(nlohmann::json& j, const FamilySpec& spec);
void from_json(const nlohmann::json& j, FamilySpec& spec);

std::vector<FamilySpec> parse_family_file(const std::string& text);

/// The built-in HN corpus: isotropic powers and orthogonal isotropic sums with
/// n <= 6, d <= 5, chosen so that every member stays cheap to test.
std::vector<FamilySpec> standard_corpus();

/// `count` random homogeneous negative controls (n in 2..4, d in 2..4, and a
/// few quadrics at n = 5, 6), skipping the rare draw that is HN.
std::vector<FamilySpec> negative_controls(std::size_t count, std::uint64_t base_seed = 1);

}  // namespace hnkit
