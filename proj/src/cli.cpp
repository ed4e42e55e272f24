#include "hnkit/cli.hpp"

#include "hnkit/diffop.hpp"
#include "hnkit/errors.hpp"
#include "hnkit/families.hpp"
#include "hnkit/graded.hpp"
#include "hnkit/hn_analysis.hpp"
#include "hnkit/text.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace hnkit::cli {

using nlohmann::json;

unsigned threads_from_env() {
    const char* env = std::getenv("HNKIT_THREADS");
    if (env == nullptr) {
        return 1;
    }
    try {
        const long v = std::stol(env);
        return v > 0 ? static_cast<unsigned>(v) : 1;
    } catch (const std::exception&) {
        return 1;
    }
}

std::string digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

/// Reports are built as JSON and rendered either verbatim or as text.
struct Outcome {
    json payload = json::object();
    std::string text;
    int code = kSuccess;
    std::string digest_input;
};

json optional_json(const std::optional<std::uint32_t>& v) { return v ? json(*v) : json(nullptr); }

std::vector<GaussianRational> parse_point(const std::string& text) {
    std::vector<GaussianRational> w;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        w.push_back(GaussianRational::parse(part));
    }
    if (w.empty()) {
        throw PreconditionError("empty point");
    }
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// One polynomial per line; '#' starts a comment.
std::vector<Polynomial> parse_generators(const std::string& text, std::size_t min_vars) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            lines.push_back(line);
        }
    }
    std::size_t n = std::max<std::size_t>(min_vars, 1);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        try {
            n = std::max(n, parse_polynomial(lines[k]).nvars());
        } catch (const ParseError& e) {
            throw ParseError("generator line " + std::to_string(k + 1) + ": " + e.what(), e.offset());
        }
    }
    std::vector<Polynomial> gens;
    for (const auto& l : lines) {
        gens.push_back(parse_polynomial(l, n));
    }
    return gens;
}

/// "3" or "2..5"
std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = static_cast<std::uint32_t>(std::stoul(text));
            return {v, v};
        }
        const auto lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, dots)));
        const auto hi = static_cast<std::uint32_t>(std::stoul(text.substr(dots + 2)));
        if (lo > hi) {
            throw PreconditionError("empty degree range '" + text + "'");
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw PreconditionError("bad degree range '" + text + "', expected M or LO..HI");
    }
}

json certificate_json(const Certificate& c) {
    json hv = json::array();
    for (const auto& h : c.hilbert_values) {
        hv.push_back({{"m", h.degree}, {"dim_I", h.ideal_dim}, {"dim_V", h.ambient_dim}});
    }
    return {{"status", to_string(c.status)},
            {"saturation_degree", optional_json(c.saturation_degree)},
            {"probe_degree_reached", c.probe_degree_reached},
            {"probe_bound", c.probe_bound},
            {"default_bound", c.default_bound},
            {"hilbert_values", hv}};
}

std::string hilbert_table(const Certificate& c) {
    std::ostringstream os;
    os << "  m  dim I_m  dim V_m\n";
    for (const auto& h : c.hilbert_values) {
        os << std::setw(3) << h.degree << std::setw(9) << h.ideal_dim << std::setw(9) << h.ambient_dim << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------

Outcome cmd_check(const std::string& input, std::size_t min_vars) {
    const Polynomial p = parse_polynomial(input, min_vars);
    const HnDecision hn = is_hn_checked(p);
    Outcome o;
    o.digest_input = p.to_string();
    o.payload = {{"polynomial", p.to_string()},
                 {"n", p.nvars()},
                 {"degree", optional_json(p.total_degree())},
                 {"homogeneous", p.homogeneous_degree().has_value()},
                 {"hn", hn.hn},
                 {"routes", {{"hessian_power", hn.matrix_route}, {"laplacian_powers", hn.laplacian_route}}}};
    std::ostringstream os;
    os << "P = " << p.to_string() << "\n"
       << "n = " << p.nvars() << ", degree = "
       << (p.total_degree() ? std::to_string(*p.total_degree()) : std::string("-inf"))
       << ", homogeneous = " << (p.homogeneous_degree() ? "yes" : "no") << "\n"
       << "(Hes P)^n = 0: " << (hn.matrix_route ? "true" : "false") << "\n"
       << "Delta^m P^m = 0 for 1 <= m <= n: " << (hn.laplacian_route ? "true" : "false") << "\n"
       << "hn: " << (hn.hn ? "true" : "false") << "\n";
    o.text = os.str();
    return o;
}

Outcome cmd_vanish(const std::string& input, const std::optional<std::string>& f_text, std::uint32_t mmax,
                   bool incremental, std::size_t min_vars) {
    Polynomial p = parse_polynomial(input, min_vars);
    std::optional<Polynomial> f;
    if (f_text) {
        f = parse_polynomial(*f_text, p.nvars());
        if (f->nvars() > p.nvars()) {
            p = parse_polynomial(input, f->nvars());
        }
    }
    VanishOptions opts;
    opts.incremental = incremental;
    opts.threads = threads_from_env();
    VanishReport report = vanish_experiment(p, f, mmax, opts);

    std::optional<std::string> threshold_note;
    if (f && is_hn(p)) {
        try {
            report.threshold_n = theorem2_threshold(p, *f, mmax).n;
        } catch (const SearchCapExhausted& e) {
            threshold_note = e.what();
        }
    }

    const auto hom = p.homogeneous_degree();
    Outcome o;
    o.digest_input = p.to_string() + "\n" + report.f.to_string() + "\n" + std::to_string(mmax);
    json rows = json::array();
    std::ostringstream os;
    os << "P = " << p.to_string() << "\n"
       << "f = " << (report.f_is_default ? "P (rows are Delta^m P^(m+1))" : report.f.to_string()) << "\n"
       << "  m  zero  degree" << (report.f_is_default && hom ? "  (d-2)m+d" : "") << "\n";
    for (const auto& r : report.rows) {
        json row = {{"m", r.m}, {"zero", r.is_zero}, {"degree", optional_json(r.degree)}};
        os << std::setw(3) << r.m << std::setw(6) << (r.is_zero ? "yes" : "no") << std::setw(8)
           << (r.degree ? std::to_string(*r.degree) : std::string("-"));
        if (report.f_is_default && hom) {
            const long expected = static_cast<long>(*hom - 2) * r.m + *hom;
            row["expected_degree"] = expected;
            os << std::setw(11) << expected;
        }
        os << "\n";
        rows.push_back(row);
    }
    o.payload = {{"P", p.to_string()},
                 {"f", report.f.to_string()},
                 {"f_is_default", report.f_is_default},
                 {"mmax", mmax},
                 {"rows", rows},
                 {"first_all_zero_from", optional_json(report.first_all_zero_from)},
                 {"threshold_N", optional_json(report.threshold_n)}};
    if (threshold_note) {
        o.payload["threshold_note"] = *threshold_note;
    }
    if (report.first_all_zero_from) {
        os << "vanishing observed from m = " << *report.first_all_zero_from << "\n";
        o.code = kSuccess;
    } else {
        os << "no vanishing observed up to m = " << mmax << "\n";
        o.code = kInconclusive;
    }
    if (report.threshold_n) {
        os << "threshold N = " << *report.threshold_n << "\n";
    }
    o.text = os.str();
    return o;
}

Outcome cmd_certify(const std::string& input, std::optional<std::uint32_t> max_degree, std::size_t min_vars) {
    const Polynomial p = parse_polynomial(input, min_vars);
    if (!p.homogeneous_degree()) {
        throw PreconditionError("certify: input is not homogeneous");
    }
    if (!is_hn(p)) {
        throw PreconditionError("certify: input is not Hessian nilpotent ((Hes P)^n != 0); "
                                "the certificate only concerns HN polynomials");
    }
    const Theorem1Certificate cert = certify_theorem1(p, max_degree);
    Outcome o;
    o.digest_input = p.to_string() + "\n" + (max_degree ? std::to_string(*max_degree) : std::string("default"));
    json gens = json::array();
    for (const auto& g : cert.generators) {
        gens.push_back(g.to_string());
    }
    o.payload = {{"P", p.to_string()},
                 {"degree", cert.degree},
                 {"generators", gens},
                 {"certificate", certificate_json(cert.base)},
                 {"vanishing_bound", optional_json(cert.vanishing_bound)},
                 {"verified_zero_at", cert.verified_zero_at}};
    std::ostringstream os;
    os << "P = " << p.to_string() << "\n"
       << "system: dP/dz_i (i = 1.." << p.nvars() << ") and sigma2, " << cert.generators.size()
       << " generators\n"
       << hilbert_table(cert.base) << "status: " << to_string(cert.base.status) << "\n";
    if (cert.base.saturation_degree) {
        os << "saturation degree M = " << *cert.base.saturation_degree << "\n";
    }
    if (cert.vanishing_bound) {
        os << "vanishing bound m0 = " << *cert.vanishing_bound << " (verified zero at m0, m0+1, m0+2)\n";
    }
    o.text = os.str();
    o.code = cert.base.status == CertificateStatus::NoCommonZero ? kSuccess : kInconclusive;
    return o;
}

Outcome cmd_ideal(const std::string& path, const std::string& range, std::size_t min_vars, bool certify,
                  std::optional<std::uint32_t> max_degree, const std::optional<std::string>& witness) {
    const std::vector<Polynomial> gens = parse_generators(read_file(path), min_vars);
    const std::size_t n = gens.empty() ? std::max<std::size_t>(min_vars, 1) : gens.front().nvars();
    const auto [lo, hi] = parse_range(range);

    Outcome o;
    json gens_json = json::array();
    for (const auto& g : gens) {
        gens_json.push_back(g.to_string());
        o.digest_input += g.to_string() + "\n";
    }
    o.digest_input += range;

    std::ostringstream os;
    os << "n = " << n << ", " << gens.size() << " generators\n"
       << "  m  dim I_m  dim S_m  dim V_m  S_m = I_m^perp\n";
    json slices = json::array();
    for (std::uint32_t m = lo; m <= hi; ++m) {
        const SubspaceBasis ideal = ideal_graded_piece(gens, m, n);
        const SubspaceBasis solutions = pde_solution_slice(gens, m, n);
        const bool matches = solutions == orthogonal_complement(ideal);
        json s_basis = json::array();
        for (const auto& u : solutions.polynomials()) {
            s_basis.push_back(u.to_string());
        }
        slices.push_back({{"m", m},
                          {"dim_I", ideal.dim()},
                          {"dim_S", solutions.dim()},
                          {"dim_V", ideal.ambient_dim()},
                          {"complement_matches", matches},
                          {"S_basis", s_basis}});
        os << std::setw(3) << m << std::setw(9) << ideal.dim() << std::setw(9) << solutions.dim() << std::setw(9)
           << ideal.ambient_dim() << std::setw(8) << (matches ? "yes" : "NO") << "\n";
        if (!matches) {
            o.code = kError;
        }
    }
    o.payload = {{"n", n}, {"generators", gens_json}, {"slices", slices}};

    if (certify) {
        if (gens.empty()) {
            throw PreconditionError("ideal --certify needs at least one generator");
        }
        const Certificate cert = common_zero_certificate(gens, n, max_degree);
        o.payload["certificate"] = certificate_json(cert);
        os << "saturation check\n" << hilbert_table(cert) << "status: " << to_string(cert.status) << "\n";
        if (cert.saturation_degree) {
            os << "saturation degree M = " << *cert.saturation_degree << "\n";
        }
        if (o.code == kSuccess && cert.status != CertificateStatus::NoCommonZero) {
            o.code = kInconclusive;
        }
    }
    if (witness) {
        const auto w = parse_point(*witness);
        if (w.size() != n) {
            throw DimensionMismatch("witness has " + std::to_string(w.size()) + " coordinates, expected " +
                                    std::to_string(n));
        }
        const bool zero = is_common_zero(gens, w);
        o.payload["witness"] = {{"point", *witness}, {"common_zero", zero}};
        os << "witness (" << *witness << ") is " << (zero ? "" : "not ") << "a common zero\n";
    }
    o.text = os.str();
    return o;
}

Outcome cmd_map(const std::string& input, const std::optional<std::string>& fixed_point, std::size_t min_vars) {
    const Polynomial p = parse_polynomial(input, min_vars);
    const SymmetricMap f = symmetric_map(p);
    const Polynomial jac = jacobian_det(f);
    const bool jac_one = jac == Polynomial::constant(p.nvars(), 1);
    Outcome o;
    o.digest_input = p.to_string() + "\n" + fixed_point.value_or("");
    json comps = json::array();
    std::ostringstream os;
    os << "P = " << p.to_string() << "\nF = z - grad P:\n";
    for (std::size_t i = 0; i < f.components.size(); ++i) {
        comps.push_back(f.components[i].to_string());
        os << "  F" << i + 1 << " = " << f.components[i].to_string() << "\n";
    }
    os << "j(F) = " << jac.to_string() << (jac_one ? "  (identically 1)" : "") << "\n";
    o.payload = {{"P", p.to_string()},
                 {"components", comps},
                 {"jacobian_det", jac.to_string()},
                 {"jacobian_is_one", jac_one}};
    if (fixed_point) {
        const auto w = parse_point(*fixed_point);
        const FixedPointResult r = fixed_point_check(f, w);
        json image = json::array();
        for (const auto& x : r.image) {
            image.push_back(x.to_string());
        }
        o.payload["fixed_point"] = {{"w", *fixed_point},
                                    {"fixed", r.fixed},
                                    {"on_isotropic_quadric", r.on_isotropic_quadric},
                                    {"image", image}};
        os << "F(w) = (";
        for (std::size_t i = 0; i < r.image.size(); ++i) {
            os << (i ? ", " : "") << r.image[i].to_string();
        }
        os << ")\nfixed: " << (r.fixed ? "yes" : "no")
           << ", sigma2(w) = 0: " << (r.on_isotropic_quadric ? "yes" : "no") << "\n";
    }
    o.text = os.str();
    return o;
}

Outcome cmd_family(const std::optional<std::string>& path, const std::string& builtin, bool check) {
    std::vector<FamilySpec> specs;
    if (path) {
        specs = parse_family_file(read_file(*path));
    } else if (builtin == "corpus") {
        specs = standard_corpus();
    } else if (builtin == "controls") {
        specs = negative_controls(50);
    } else {
        throw PreconditionError("family: give a spec file or --builtin corpus|controls");
    }
    Outcome o;
    json members = json::array();
    std::ostringstream os;
    for (const auto& spec : specs) {
        const Polynomial p = build(spec);
        json entry = {{"spec", spec}, {"polynomial", p.to_string()}, {"expect_hn", spec.expect_hn()}};
        o.digest_input += p.to_string() + "\n";
        os << p.to_string();
        if (check) {
            const HnDecision hn = is_hn_checked(p);
            entry["hn"] = hn.hn;
            os << "  # hn: " << (hn.hn ? "true" : "false");
            if (hn.hn != spec.expect_hn()) {
                o.code = kError;
            }
        }
        os << "\n";
        members.push_back(entry);
    }
    o.payload = {{"members", members}};
    o.text = os.str();
    return o;
}

json error_json(const std::string& kind, const std::string& message, std::optional<std::size_t> offset) {
    json e = {{"kind", kind}, {"message", message}};
    if (offset) {
        e["offset"] = *offset;
    }
    return e;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for Hessian nilpotent polynomials", "hnkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the structured (versioned JSON) report");
    std::size_t nvars = 0;
    app.add_option("--n", nvars, "Minimum number of variables");

    std::string poly;
    std::optional<std::string> f_text;
    std::optional<std::string> point;
    std::optional<std::uint32_t> max_degree;
    std::uint32_t mmax = 6;
    bool incremental = false;

    auto* check = app.add_subcommand("check", "Decide Hessian nilpotency by both routes");
    check->add_option("polynomial", poly)->required();

    auto* vanish = app.add_subcommand("vanish", "Tabulate Delta^m (f P^m), f defaulting to P");
    vanish->add_option("polynomial", poly)->required();
    vanish->add_option("--f", f_text, "Multiplier polynomial f");
    vanish->add_option("--mmax", mmax, "Largest m")->check(CLI::NonNegativeNumber);
    vanish->add_flag("--incremental", incremental, "Reuse P^(m-1) when forming P^m");

    auto* certify = app.add_subcommand("certify", "Saturation certificate for grad P and sigma2");
    certify->add_option("polynomial", poly)->required();
    certify->add_option("--max-degree", max_degree, "Probe bound (default: Macaulay-type bound)");

    std::string generators_path;
    std::string range = "0..4";
    bool ideal_certify = false;
    auto* ideal = app.add_subcommand("ideal", "Graded pieces I_m, S_m and the complement check");
    ideal->add_option("generators", generators_path, "File with one polynomial per line")->required();
    ideal->add_option("--m", range, "Degree M or range LO..HI");
    ideal->add_flag("--certify", ideal_certify, "Also run the saturation certificate");
    ideal->add_option("--max-degree", max_degree, "Probe bound for --certify");
    ideal->add_option("--witness", point, "Point w1,w2,... to test as a common zero");

    auto* map = app.add_subcommand("map", "The symmetric map F = z - grad P");
    map->add_option("polynomial", poly)->required();
    map->add_option("--fixed-point", point, "Point w1,w2,... to test F(w) = w");

    std::optional<std::string> family_path;
    std::string builtin;
    bool family_check = false;
    auto* family = app.add_subcommand("family", "Emit corpus members from a family spec file");
    family->add_option("spec", family_path, "JSON family spec file");
    family->add_option("--builtin", builtin, "Built-in list: corpus or controls");
    family->add_flag("--check", family_check, "Run the HN check on each member");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kError;
    }

    const auto start = std::chrono::steady_clock::now();
    const std::string command = app.get_subcommands().front()->get_name();
    json report = {{"schema", kReportSchema}, {"toolkit_version", kToolkitVersion}, {"command", command},
                   {"argv", args}};
    int code = kSuccess;
    try {
        Outcome o;
        if (command == "check") {
            o = cmd_check(poly, nvars);
        } else if (command == "vanish") {
            o = cmd_vanish(poly, f_text, mmax, incremental, nvars);
        } else if (command == "certify") {
            o = cmd_certify(poly, max_degree, nvars);
        } else if (command == "ideal") {
            o = cmd_ideal(generators_path, range, nvars, ideal_certify, max_degree, point);
        } else if (command == "map") {
            o = cmd_map(poly, point, nvars);
        } else {
            o = cmd_family(family_path, builtin, family_check);
        }
        code = o.code;
        report["input_digest"] = digest(o.digest_input);
        report["payload"] = std::move(o.payload);
        report["exit_code"] = code;
        if (!as_json) {
            out << o.text;
        }
    } catch (const ParseError& e) {
        report["error"] = error_json("parse_error", e.what(), e.offset());
        code = kError;
    } catch (const InternalInconsistency& e) {
        report["error"] = error_json("internal_error", e.what(), std::nullopt);
        code = kError;
    } catch (const std::exception& e) {
        report["error"] = error_json("error", e.what(), std::nullopt);
        code = kError;
    }
    if (report.contains("error")) {
        report["exit_code"] = code;
        err << "error: " << report["error"]["message"].get<std::string>() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["elapsed_ms"] = elapsed;
    if (as_json) {
        out << report.dump(2) << "\n";
    }
    return code;
}

}  // namespace hnkit::cli
