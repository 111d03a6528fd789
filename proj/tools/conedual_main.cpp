#include "conedual/cstar.hpp"
#include "conedual/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace conedual;

constexpr std::uint64_t kDefaultSeed = 20240817;  // documented default seed
constexpr int kMaxDim = 10;                       // ambient dimension ceiling
constexpr int kMaxFacets = 40;                    // per-polyhedron facet ceiling

// Exit codes: 0 = holds / success, 1 = property fails / violations,
// 2 = parse error, 3 = semantic error.
enum ExitCode { kHolds = 0, kFails = 1, kParseError = 2, kSemanticError = 3 };

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

void enforce_limits(const json& j) {
    if (j.is_object()) {
        if (j.contains("dim") && j["dim"].is_number_integer() && j["dim"].get<int>() > kMaxDim)
            throw std::invalid_argument("dimension exceeds the supported ceiling of " +
                                        std::to_string(kMaxDim));
        if (j.contains("h") && j["h"].is_array() && j["h"].size() > kMaxFacets)
            throw std::invalid_argument("facet count exceeds the supported ceiling of " +
                                        std::to_string(kMaxFacets));
        for (const auto& [key, val] : j.items()) enforce_limits(val);
    } else if (j.is_array()) {
        for (const auto& val : j) enforce_limits(val);
    }
}

void emit(const json& j, const std::string& format) {
    if (format == "compact")
        std::cout << dump_canonical(j) << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

int run_polar(const std::string& input, const std::string& format) {
    const json j = read_input(input);
    enforce_limits(j);
    const Polyhedron p = polyhedron_from_json(j);
    json out;
    out["polar"] = polyhedron_to_json(one_sided_polar(p));
    out["bipolar"] = polyhedron_to_json(bipolar(p));
    emit(out, format);
    return kHolds;
}

int run_check(const std::string& input, const std::string& property, const std::string& format) {
    const json j = read_input(input);
    enforce_limits(j);
    const Quadruple q = quadruple_from_json(j);
    const Property prop = property_from_string(property);
    const bool holds = has_property(q, prop);
    const auto constant = optimal_constant(q, prop);
    const auto dual_constant = optimal_constant(polar_quadruple(q), dual_property(prop));
    json out;
    out["property"] = property_to_string(prop);
    out["holds"] = holds;
    out["constant"] = extended_to_json(constant);
    out["dual_property"] = property_to_string(dual_property(prop));
    out["dual_constant"] = extended_to_json(dual_constant);
    out["duality_consistent"] =
        (constant && dual_constant) ? *constant == *dual_constant : !constant && !dual_constant;
    emit(out, format);
    return holds ? kHolds : kFails;
}

int run_ando(const std::string& input, const std::string& format) {
    const json j = read_input(input);
    enforce_limits(j);
    if (!j.contains("instance") || !j.contains("x"))
        throw std::invalid_argument("ando input needs \"instance\" and \"x\"");
    const DirectSumInstance inst = instance_from_json(j["instance"]);
    if (inst.ambient() > kMaxDim)
        throw std::invalid_argument("ambient dimension d*m exceeds the supported ceiling");
    const RatVector x = vector_from_json(j["x"]);
    const auto res = ando_decompose(inst, x);
    json out;
    out["decomposable"] = res.has_value();
    if (res) {
        out["value"] = rational_to_json(res->value);
        json parts = json::array();
        for (const auto& part : res->parts) parts.push_back(vector_to_json(part));
        out["parts"] = parts;
    }
    out["bound"] = extended_to_json(ando_bound(inst));
    emit(out, format);
    return res ? kHolds : kFails;
}

int run_sums(const std::string& input, double p_override, std::uint64_t seed, int samples,
             const std::string& format) {
    const json j = read_input(input);
    enforce_limits(j);
    const DirectSumInstance inst = instance_from_json(j);
    if (inst.ambient() > kMaxDim)
        throw std::invalid_argument("ambient dimension d*m exceeds the supported ceiling");
    json out;
    if (p_override > 1.0) {
        // Intermediate exponent: floating-point sampled mode.
        for (const Property prop : {Property::Normality, Property::Additivity}) {
            const SampledReport rep = sampled_constant(inst, p_override, prop, seed, samples);
            json r;
            r["bound"] = std::isinf(rep.bound) ? json("inf") : json(rep.bound);
            r["max_observed"] = rep.max_observed;
            r["samples"] = rep.samples;
            out[property_to_string(prop)] = r;
        }
        out["p"] = p_override;
        emit(out, format);
        return kHolds;
    }
    for (const Property prop : {Property::Normality, Property::Conormality, Property::Additivity,
                                Property::Coadditivity}) {
        out["constants"][property_to_string(prop)] = extended_to_json(sum_constant(inst, prop));
    }
    out["polar_identities"] = check_sum_polars(inst);
    out["normality_duality"] = verify_normality_duality(inst);
    out["additivity_duality"] = verify_additivity_duality(inst);
    emit(out, format);
    const bool ok = out["polar_identities"].get<bool>() && out["normality_duality"].get<bool>() &&
                    out["additivity_duality"].get<bool>();
    return ok ? kHolds : kFails;
}

int run_cstar(int item, int n, int samples, std::uint64_t seed, double tol,
              const std::string& format) {
    if (n < 1 || n > 8) throw std::invalid_argument("cstar: need 1 <= n <= 8");
    json out;
    int violations = 0;
    const auto run_item = [&](int it) {
        const CheckStats st = check_norm_inequality_item(it, n, samples, seed + static_cast<std::uint64_t>(it),
                                               tol);
        json r;
        r["samples"] = st.samples;
        r["violations"] = st.violations;
        r["worst_margin"] = st.worst_margin;
        out["items"][std::to_string(it)] = r;
        violations += st.violations;
    };
    if (item == 0)
        for (int it = 1; it <= 8; ++it) run_item(it);
    else
        run_item(item);
    emit(out, format);
    return violations == 0 ? kHolds : kFails;
}

int run_selftest(const std::string& format) {
    json out;
    bool ok = true;
    const auto note = [&](const char* name, bool pass) {
        out[name] = pass;
        ok = ok && pass;
    };

    // Square vs cross-polytope polarity in the plane.
    HRep square;
    square.dim = 2;
    square.rows = {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}};
    const Polyhedron sq = Polyhedron::from_h(square);
    const Polyhedron diamond = Polyhedron::from_v(VRep{2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {}});
    note("square_polar_is_diamond", one_sided_polar(sq) == diamond);
    note("bipolar_restores_square", bipolar(sq) == sq);

    // Normality of the plane under the orthant order with the max norm,
    // encoded as the two-block direct sum over the cone pair (X+, -X+):
    // both the normality constant and the dual decomposition constant are 1.
    DirectSumInstance gk;
    gk.d = 2;
    gk.m = 2;
    gk.p = PNorm::Infinity;
    gk.base_ball = sq;
    gk.cones = {Polyhedron::cone_from_rays(2, {{1, 0}, {0, 1}}),
                Polyhedron::cone_from_rays(2, {{-1, 0}, {0, -1}})};
    const auto nc = sum_constant(gk, Property::Normality);
    const auto cc = sum_constant(dual_instance(gk), Property::Conormality);
    note("mirror_encoding_constant_one", nc && *nc == 1 && cc && *cc == 1);
    note("sum_polar_identities", check_sum_polars(gk));

    // LP sanity: maximize x+y on the square.
    const LPOutcome lp = lp_solve({Rational(1), Rational(1)}, Sense::Maximize, square);
    note("lp_square_max", lp.status == LPStatus::Optimal && lp.value == 2);

    const CheckStats jd = check_jordan(3, 200, kDefaultSeed, 1e-10);
    note("jordan_decomposition", jd.violations == 0);

    emit(out, format);
    return ok ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-rational toolkit for the geometric duality theory of cones"};
    app.require_subcommand(1);

    std::string input;
    std::string property = "normality";
    std::string format = "pretty";
    double p_value = 0.0;
    std::uint64_t seed = kDefaultSeed;
    int samples = 1000;
    double tol = 1e-9;
    int item = 0;
    int n = 2;

    const auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input,-i", input, "input JSON file ('-' for stdin)");
        cmd->add_option("--format", format, "output format: pretty|compact")
            ->check(CLI::IsMember({"pretty", "compact"}));
    };

    CLI::App* polar = app.add_subcommand("polar", "one-sided polar and bipolar of a polyhedron");
    add_common(polar, true);

    CLI::App* check = app.add_subcommand("check", "check a property of a quadruple");
    add_common(check, true);
    check->add_option("--property", property,
                      "normality|additivity|conormality|coadditivity");

    CLI::App* ando = app.add_subcommand("ando", "minimal-norm conic decomposition");
    add_common(ando, true);

    CLI::App* sums = app.add_subcommand("sums", "direct-sum constants and dualities");
    add_common(sums, true);
    sums->add_option("--p", p_value, "intermediate exponent (enables sampled mode)");
    sums->add_option("--seed", seed, "RNG seed");
    sums->add_option("--samples", samples, "sample count for sampled mode");

    CLI::App* cstar = app.add_subcommand("cstar", "sampled matrix-algebra norm inequalities");
    add_common(cstar, false);
    cstar->add_option("--item", item, "inequality 1..8 (0 = all)")->check(CLI::Range(0, 8));
    cstar->add_option("--n", n, "matrix size");
    cstar->add_option("--samples", samples, "sample count");
    cstar->add_option("--seed", seed, "RNG seed");
    cstar->add_option("--tol", tol, "relative tolerance");

    CLI::App* selftest = app.add_subcommand("selftest", "run a built-in sanity battery");
    add_common(selftest, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kParseError;
    }

    try {
        if (polar->parsed()) return run_polar(input, format);
        if (check->parsed()) return run_check(input, property, format);
        if (ando->parsed()) return run_ando(input, format);
        if (sums->parsed()) return run_sums(input, p_value, seed, samples, format);
        if (cstar->parsed()) return run_cstar(item, n, samples, seed, tol, format);
        if (selftest->parsed()) return run_selftest(format);
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSemanticError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kSemanticError;
    }
    return kParseError;
}
