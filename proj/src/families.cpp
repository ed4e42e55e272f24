#include "hnkit/families.hpp"

#include "hnkit/errors.hpp"
#include "hnkit/hn_analysis.hpp"

#include <nlohmann/json.hpp>

namespace hnkit {

GaussianRational dot(std::span<const GaussianRational> a, std::span<const GaussianRational> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot: vectors of different length");
    }
    GaussianRational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

namespace {

void require_isotropic(const Direction& a) {
    if (a.empty() || std::all_of(a.begin(), a.end(), [](const auto& x) { return x.is_zero(); })) {
        throw PreconditionError("direction must be nonzero");
    }
    if (!dot(a, a).is_zero()) {
        throw PreconditionError("direction is not isotropic: sum a_i^2 = " + dot(a, a).to_string());
    }
}

}  // namespace

Polynomial isotropic_power(const Direction& a, std::uint32_t d) {
    require_isotropic(a);
    if (d < 2) {
        throw PreconditionError("isotropic_power: degree must be at least 2");
    }
    return pow(Polynomial::linear_form(a), d);
}

Polynomial ortho_isotropic_sum(const std::vector<Direction>& directions,
                               const std::vector<GaussianRational>& coefficients, std::uint32_t d) {
    if (directions.empty()) {
        throw PreconditionError("ortho_isotropic_sum: at least one direction required");
    }
    if (coefficients.size() != directions.size()) {
        throw PreconditionError("ortho_isotropic_sum: one coefficient per direction required");
    }
    if (d < 2) {
        throw PreconditionError("ortho_isotropic_sum: degree must be at least 2");
    }
    const std::size_t n = directions.front().size();
    for (std::size_t j = 0; j < directions.size(); ++j) {
        if (directions[j].size() != n) {
            throw DimensionMismatch("ortho_isotropic_sum: directions of different length");
        }
        require_isotropic(directions[j]);
        for (std::size_t k = j + 1; k < directions.size(); ++k) {
            if (!dot(directions[j], directions[k]).is_zero()) {
                throw PreconditionError("ortho_isotropic_sum: directions " + std::to_string(j + 1) + " and " +
                                        std::to_string(k + 1) + " are not orthogonal");
            }
        }
    }
    Polynomial sum(n);
    for (std::size_t j = 0; j < directions.size(); ++j) {
        sum += pow(Polynomial::linear_form(directions[j]), d) * coefficients[j];
    }
    return sum;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Polynomial random_homogeneous(std::size_t n, std::uint32_t d, std::uint64_t seed) {
    const auto basis = monomial_basis(n, d);
    std::vector<Term> terms;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const std::uint64_t x = splitmix64(seed ^ splitmix64(j + 1));
        const long re = static_cast<long>(x % 7) - 3;
        const long im = static_cast<long>((x >> 32) % 7) - 3;
        terms.push_back(Term{basis[j], GaussianRational(Rational(re), Rational(im))});
    }
    Polynomial p = Polynomial::from_terms(n, std::move(terms));
    if (p.is_zero()) {
        p = Polynomial::monomial(basis.front());
    }
    return p;
}

Polynomial build(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::IsotropicPower:
            if (spec.directions.size() != 1) {
                throw PreconditionError("isotropic_power takes exactly one direction");
            }
            if (spec.directions.front().size() != spec.n) {
                throw DimensionMismatch("direction length differs from n");
            }
            return isotropic_power(spec.directions.front(), spec.d);
        case FamilyKind::OrthoIsotropicSum: {
            std::vector<GaussianRational> coefficients = spec.coefficients;
            if (coefficients.empty()) {
                coefficients.assign(spec.directions.size(), GaussianRational(1));
            }
            if (!spec.directions.empty() && spec.directions.front().size() != spec.n) {
                throw DimensionMismatch("direction length differs from n");
            }
            return ortho_isotropic_sum(spec.directions, coefficients, spec.d);
        }
        case FamilyKind::RandomHomogeneous: return random_homogeneous(spec.n, spec.d, spec.seed);
    }
    throw PreconditionError("unknown family kind");
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::IsotropicPower: return "isotropic_power";
        case FamilyKind::OrthoIsotropicSum: return "ortho_isotropic_sum";
        case FamilyKind::RandomHomogeneous: return "random_homogeneous";
    }
    return "unknown";
}

FamilyKind family_kind_from_string(const std::string& s) {
    if (s == "isotropic_power") return FamilyKind::IsotropicPower;
    if (s == "ortho_isotropic_sum") return FamilyKind::OrthoIsotropicSum;
    if (s == "random_homogeneous") return FamilyKind::RandomHomogeneous;
    throw PreconditionError("unknown family kind '" + s + "'");
}

void to_json(nlohmann::json& j, const FamilySpec& spec) {
    j = nlohmann::json{{"kind", to_string(spec.kind)}, {"n", spec.n}, {"d", spec.d}};
    if (spec.kind == FamilyKind::RandomHomogeneous) {
        j["seed"] = spec.seed;
        return;
    }
    auto dirs = nlohmann::json::array();
    for (const auto& a : spec.directions) {
        auto row = nlohmann::json::array();
        for (const auto& x : a) {
            row.push_back(x.to_string());
        }
        dirs.push_back(row);
    }
    j["directions"] = dirs;
    if (!spec.coefficients.empty()) {
        auto cs = nlohmann::json::array();
        for (const auto& c : spec.coefficients) {
            cs.push_back(c.to_string());
        }
        j["coefficients"] = cs;
    }
}

void from_json(const nlohmann::json& j, FamilySpec& spec) {
    spec.kind = family_kind_from_string(j.at("kind").get<std::string>());
    spec.n = j.at("n").get<std::size_t>();
    spec.d = j.at("d").get<std::uint32_t>();
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.directions.clear();
    spec.coefficients.clear();
    if (j.contains("directions")) {
        for (const auto& row : j.at("directions")) {
            Direction a;
            for (const auto& x : row) {
                a.push_back(GaussianRational::parse(x.is_string() ? x.get<std::string>() : x.dump()));
            }
            spec.directions.push_back(std::move(a));
        }
    }
    if (j.contains("coefficients")) {
        for (const auto& x : j.at("coefficients")) {
            spec.coefficients.push_back(GaussianRational::parse(x.is_string() ? x.get<std::string>() : x.dump()));
        }
    }
}

std::vector<FamilySpec> parse_family_file(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const auto& list = j.is_object() ? j.at("families") : j;
    if (!list.is_array()) {
        throw PreconditionError("family file must hold a JSON array of family specs");
    }
    return list.get<std::vector<FamilySpec>>();
}

namespace {

Direction dir(std::initializer_list<const char*> parts) {
    Direction a;
    for (const char* p : parts) {
        a.push_back(GaussianRational::parse(p));
    }
    return a;
}

FamilySpec power_spec(Direction a, std::uint32_t d) {
    FamilySpec s;
    s.kind = FamilyKind::IsotropicPower;
    s.n = a.size();
    s.d = d;
    s.directions = {std::move(a)};
    return s;
}

FamilySpec sum_spec(std::vector<Direction> dirs, std::vector<GaussianRational> coefs, std::uint32_t d) {
    FamilySpec s;
    s.kind = FamilyKind::OrthoIsotropicSum;
    s.n = dirs.front().size();
    s.d = d;
    s.directions = std::move(dirs);
    s.coefficients = std::move(coefs);
    return s;
}

}  // namespace

std::vector<FamilySpec> standard_corpus() {
    std::vector<FamilySpec> corpus;
    // Isotropic directions; the support size keeps (a.z)^(n d) manageable.
    const std::vector<Direction> small_support = {
        dir({"1", "i"}),          dir({"1", "-i"}),        dir({"2", "2i"}),         dir({"1/2", "-1/2i"}),
        dir({"1+i", "-1+i"}),     dir({"3", "4", "5i"}),   dir({"4", "3", "-5i"}),   dir({"1", "0", "i"}),
        dir({"0", "1", "-i"}),    dir({"5", "12", "13i"}), dir({"1", "1", "i", "i"}), dir({"2", "1", "2", "3i"}),
        dir({"0", "1", "0", "i"}), dir({"1", "i", "0", "0", "0"}), dir({"0", "0", "3", "4", "5i"}),
        dir({"0", "0", "0", "0", "1", "i"}), dir({"1", "0", "0", "-i", "0", "0"}),
    };
    for (const auto& a : small_support) {
        std::size_t support = 0;
        for (const auto& x : a) {
            support += x.is_zero() ? 0 : 1;
        }
        for (std::uint32_t d = 2; d <= 5; ++d) {
            // keep the Delta^n P^n cross-check cheap: dense 3- and 4-term
            // directions only up to moderate degree
            if (support >= 3 && d * a.size() > 16) {
                continue;
            }
            corpus.push_back(power_spec(a, d));
        }
    }
    const Direction e12 = dir({"1", "i", "0", "0"});
    const Direction e34 = dir({"0", "0", "1", "i"});
    corpus.push_back(sum_spec({e12, e34}, {1, 1}, 3));
    corpus.push_back(sum_spec({e12, e34}, {2, GaussianRational::parse("-3i")}, 4));
    corpus.push_back(sum_spec({dir({"1", "i", "1", "i"}), dir({"1", "i", "-1", "-i"})}, {1, 1}, 3));
    corpus.push_back(sum_spec({dir({"1", "i", "0", "0", "0"}), dir({"0", "0", "1", "i", "0"})},
                              {GaussianRational::parse("1/2"), 5}, 3));
    corpus.push_back(sum_spec({dir({"1", "i", "0", "0", "0", "0"}), dir({"0", "0", "1", "i", "0", "0"}),
                               dir({"0", "0", "0", "0", "1", "i"})},
                              {1, -1, GaussianRational::i()}, 2));
    corpus.push_back(sum_spec({dir({"1", "i", "0", "0", "0", "0"}), dir({"0", "0", "1", "i", "0", "0"}),
                               dir({"0", "0", "0", "0", "1", "i"})},
                              {1, 1, 1}, 3));
    corpus.push_back(sum_spec({dir({"1", "i", "0"}), dir({"2", "2i", "0"})}, {1, 1}, 5));
    return corpus;
}

std::vector<FamilySpec> negative_controls(std::size_t count, std::uint64_t base_seed) {
    std::vector<FamilySpec> out;
    std::uint64_t seed = base_seed;
    std::size_t k = 0;
    while (out.size() < count) {
        FamilySpec s;
        s.kind = FamilyKind::RandomHomogeneous;
        if (k % 10 == 9) {
            s.n = 5 + (k / 10) % 2;
            s.d = 2;
        } else {
            s.n = 2 + k % 3;
            s.d = 2 + static_cast<std::uint32_t>((k / 3) % 3);
        }
        s.seed = seed++;
        ++k;
        if (is_hn(build(s))) {
            continue;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace hnkit
