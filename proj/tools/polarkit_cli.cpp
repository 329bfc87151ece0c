// polarkit command-line front end: batch access to the factorization,
// covering, Stokes, transitivity, decomposition and basis-conversion
// solvers.  Inputs are inline JSON or file paths; output is JSON (17
// significant digits) or a plain table.  Exit codes: 0 success, 2 parse
// failure, 3 domain error, 4 constraint/degeneracy error.

#include "polarkit/polarkit.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace polarkit;

namespace {

/// Malformed input (bad JSON, bad CSV, wrong shape).  Exit code 2.
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// An argument is inline JSON when it starts with '[', '{' or a number;
/// anything else is treated as a file path.
Json read_json_arg(const std::string& arg) {
    std::string text = arg;
    const auto first = text.find_first_not_of(" \t\n");
    if (first == std::string::npos) throw ParseFailure("empty JSON argument");
    const char c = text[first];
    if (c != '[' && c != '{' && c != '-' && !std::isdigit(static_cast<unsigned char>(c)))
        text = slurp(arg);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseFailure(std::string("invalid JSON: ") + e.what());
    }
}

template <typename F>
auto parse_as(const std::string& arg, F&& convert) {
    const Json j = read_json_arg(arg);
    try {
        return convert(j);
    } catch (const std::exception& e) {
        throw ParseFailure(e.what());
    }
}

Vec3 vec3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw DomainError("expected a 3-array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<std::pair<StokesVector, StokesVector>> load_pairs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot open file: " + path);
    try {
        return read_stokes_pairs_csv(in);
    } catch (const std::exception& e) {
        throw ParseFailure(e.what());
    }
}

// ---------------------------------------------------------------------------
// output
// ---------------------------------------------------------------------------

void print_table(const Json& j, int depth = 0) {
    const std::string pad(static_cast<size_t>(2 * depth), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_structured()) {
                std::cout << pad << it.key() << ":\n";
                print_table(it.value(), depth + 1);
            } else {
                std::cout << pad << it.key() << " = " << dump_json(it.value(), 0) << "\n";
            }
        }
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_structured()) scalars = false;
        if (scalars) {
            std::cout << pad << dump_json(j, 0) << "\n";
        } else {
            for (const auto& v : j) print_table(v, depth);
        }
    } else {
        std::cout << pad << dump_json(j, 0) << "\n";
    }
}

struct OutputOptions {
    std::string format = "json";
};

void emit(const Json& j, const OutputOptions& out) {
    if (out.format == "table")
        print_table(j);
    else
        std::cout << dump_json(j) << "\n";
}

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
}

double tolerance_from_env() {
    if (const char* env = std::getenv("POLARKIT_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0) return v;
        } catch (const std::exception&) {
        }
        throw ParseFailure("POLARKIT_TOL must be a positive number");
    }
    return kDefaultTol;
}

// ---------------------------------------------------------------------------
// self test
// ---------------------------------------------------------------------------

int run_selftest(uint64_t seed, int trials) {
    std::mt19937_64 gen(seed);
    auto uni = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    };
    auto cbox = [&]() { return Complex{uni(-1, 1), uni(-1, 1)}; };
    auto unit_vec = [&]() {
        std::normal_distribution<double> nd;
        Vec3 v{nd(gen), nd(gen), nd(gen)};
        while (v.norm() < 1e-6) v = {nd(gen), nd(gen), nd(gen)};
        return v / v.norm();
    };
    auto unit_k = [&]() {
        SpinorParams k{cbox(), cbox(), cbox(), cbox()};
        while (std::abs(k.det()) < 1e-3) k = {cbox(), cbox(), cbox(), cbox()};
        return k.normalized();
    };

    int failures = 0;
    auto report = [&](const char* name, double err, double tol) {
        const bool ok = err <= tol;
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "  max-error "
                  << err << "  (tolerance " << tol << ")\n";
    };

    {
        double worst = 0;
        for (int t = 0; t < trials; ++t) {
            const SpinorParams k1 = unit_k(), k2 = unit_k();
            worst = std::max(worst, covering_map(compose_spinor(k1, k2))
                                        .max_abs_diff(covering_map(k1) * covering_map(k2)));
            worst = std::max(worst, covering_map(k1).lorentz_defect());
        }
        report("covering homomorphism and metric", worst, 1e-9);
    }
    {
        const char* schemes[] = {"121", "212", "131", "313", "232", "323",
                                 "123", "132", "231", "213", "312", "321"};
        double worst = 0;
        for (int s = 0; s < 12; ++s)
            for (int t = 0; t < trials; ++t) {
                std::normal_distribution<double> nd;
                UnitQuaternion q{nd(gen), nd(gen), nd(gen), nd(gen)};
                q = q.normalized();
                const FactorAngles f = s < 6 ? factor_2element(q, schemes[s])
                                             : factor_3element(q, schemes[s]);
                worst = std::max(worst, compose_axis_rotations(f).dist_up_to_sign(q));
            }
        report("factorization roundtrip (12 schemes)", worst, 1e-10);
    }
    {
        double worst = 0;
        for (int t = 0; t < trials; ++t) {
            const double p = (t % 2) ? 0.6 : 1.0;
            const Vec3 n = unit_vec();
            const double i0 = uni(0.5, 2.0);
            const StokesVector s{i0, i0 * p * n.x, i0 * p * n.y, i0 * p * n.z};
            const Matrix4R l = covering_map(
                compose_spinor(boost(uni(-1, 1), unit_vec()), rotation(uni(-3, 3), unit_vec())));
            const StokesVector out = mueller_apply(l, s);
            worst = std::max(worst, std::abs(out.minkowski() - s.minkowski()) /
                                        std::max(1.0, s.s0 * s.s0));
        }
        report("Stokes invariant conservation", worst, 1e-10);
    }
    {
        double worst = 0;
        for (int t = 0; t < trials; ++t) {
            const SpinorParams k = unit_k();
            const SpinorMatrix b = spinor_matrix(k);
            for (const auto& d : {polar_rotation_boost(k), polar_boost_rotation(k)}) {
                const SpinorMatrix p = d.product();
                worst = std::max(worst,
                                 std::min(p.max_abs_diff(b), (-p).max_abs_diff(b)));
            }
        }
        report("polar decomposition reconstruction", worst, 1e-10);
    }
    {
        double worst = 0;
        for (int t = 0; t < trials; ++t) {
            const SpinorMatrix m = spinor_matrix(unit_k());
            const SpinorMatrix rec = recover_spinor(isotropic_from_spinor(m));
            worst = std::max(worst,
                             std::min(rec.max_abs_diff(m), (-rec).max_abs_diff(m)));
        }
        report("isotropic-basis spinor recovery", worst, 1e-9);
    }
    {
        double worst = 0;
        int done = 0;
        while (done < trials) {
            const Vec3 n = unit_vec();
            const double i0 = uni(0.5, 2.0), p = uni(0.2, 0.8);
            const StokesVector s{i0, i0 * p * n.x, i0 * p * n.y, i0 * p * n.z};
            const Matrix4R l = covering_map(
                compose_spinor(boost(uni(-1, 1), unit_vec()), rotation(uni(-3, 3), unit_vec())));
            const StokesVector sp = mueller_apply(l, s);
            if (std::abs(s.s0 - sp.s0) < 0.05) continue;
            ++done;
            for (const auto& params :
                 {pure_boost_params(s, sp), boost_rotation_params(s, sp)}) {
                const SpinorParams k = transitivity_general(s, sp, params);
                worst = std::max(worst, mueller_apply(covering_map(k), s).max_abs_diff(sp));
            }
        }
        report("transitivity specializations", worst, 1e-9);
    }
    {
        double worst = 0;
        for (int t = 0; t < trials; ++t) {
            const SpinorParams k = unit_k();
            const JonesSpinor psi{cbox(), cbox()};
            const auto v = spinor_matrix(k) * std::array<Complex, 2>{psi.psi1, psi.psi2};
            const StokesVector lhs = stokes_from_jones({v[0], v[1]});
            const StokesVector rhs =
                mueller_apply(mueller_for_spinor_action(k), stokes_from_jones(psi));
            worst = std::max(worst, lhs.max_abs_diff(rhs));
        }
        report("Jones equivariance", worst, 1e-10);
    }
    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : 4;
}

// ---------------------------------------------------------------------------
// subcommand payloads
// ---------------------------------------------------------------------------

Json factor_result(const FactorAngles& f, const UnitQuaternion& n) {
    const UnitQuaternion back = compose_axis_rotations(f);
    Json out;
    out["scheme"] = f.scheme;
    out["angles"] = Json::array({f.a, f.b, f.c});
    out["degenerate"] = f.degenerate;
    out["reconstruction_error"] = back.dist_up_to_sign(n.normalized());
    return out;
}

UnitQuaternion quaternion_arg(const std::string& arg) {
    return parse_as(arg, [](const Json& j) {
        if (!j.is_array() || j.size() != 4)
            throw DomainError("expected a 4-array quaternion");
        return UnitQuaternion{j[0].get<double>(), j[1].get<double>(),
                              j[2].get<double>(), j[3].get<double>()};
    });
}

Json spinor_with_matrix(const SpinorParams& k, double tol) {
    Json out;
    out["spinor"] = to_json(k);
    out["lorentz"] = to_json(covering_map(k, tol));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarkit: Mueller/Jones polarization algebra toolkit"};
    app.require_subcommand(1);

    OutputOptions out;
    double tol = kDefaultTol;

    // ---- factor2 / factor3 ----
    std::string scheme = "121", order = "123", quaternion_text;
    auto* factor2 = app.add_subcommand("factor2", "Euler-type two-axis factorization");
    factor2->add_option("--scheme", scheme, "Axis scheme (121, 212, 131, 313, 232, 323)")
        ->capture_default_str();
    factor2->add_option("--quaternion", quaternion_text, "Unit quaternion [n0,n1,n2,n3]")
        ->required();
    add_output_options(factor2, out);

    auto* factor3 = app.add_subcommand("factor3", "Three-axis factorization");
    factor3->add_option("--order", order, "Axis order (123, 132, 231, 213, 312, 321)")
        ->capture_default_str();
    factor3->add_option("--quaternion", quaternion_text, "Unit quaternion [n0,n1,n2,n3]")
        ->required();
    add_output_options(factor3, out);

    // ---- boost / rotate ----
    double beta = 0.0, phi = 0.0;
    std::string axis_text = "[0,0,1]", stokes_text, stokes_csv;
    auto* boost_cmd = app.add_subcommand("boost", "Boost spinor/Mueller matrix; "
                                                  "optionally apply to Stokes input");
    boost_cmd->add_option("--beta", beta, "Rapidity")->required();
    boost_cmd->add_option("--axis", axis_text, "Unit axis [x,y,z]")->capture_default_str();
    auto* bst = boost_cmd->add_option("--stokes", stokes_text,
                                      "Stokes 4-vector to transform");
    boost_cmd->add_option("--stokes-csv", stokes_csv, "CSV of Stokes rows to transform")
        ->excludes(bst);
    add_output_options(boost_cmd, out);

    auto* rotate_cmd = app.add_subcommand("rotate", "Rotation spinor/Mueller matrix; "
                                                    "optionally apply to Stokes input");
    rotate_cmd->add_option("--phi", phi, "Rotation angle (radians)")->required();
    rotate_cmd->add_option("--axis", axis_text, "Unit axis [x,y,z]")->capture_default_str();
    auto* rst = rotate_cmd->add_option("--stokes", stokes_text,
                                       "Stokes 4-vector to transform");
    rotate_cmd->add_option("--stokes-csv", stokes_csv, "CSV of Stokes rows to transform")
        ->excludes(rst);
    add_output_options(rotate_cmd, out);

    // ---- decompose ----
    std::string spinor_text, decomp_order = "rotation-boost";
    auto* decompose_cmd = app.add_subcommand("decompose",
                                             "Polar split into rotation and boost");
    decompose_cmd->add_option("--spinor", spinor_text, "Spinor parameters k")->required();
    decompose_cmd->add_option("--order", decomp_order, "Factor order")
        ->check(CLI::IsMember({"rotation-boost", "boost-rotation"}))
        ->capture_default_str();
    add_output_options(decompose_cmd, out);

    // ---- thomas ----
    std::string b1_text, b2_text;
    auto* thomas_cmd = app.add_subcommand("thomas",
                                          "Compose two boosts, extract the precession");
    thomas_cmd->add_option("--b1", b1_text, "First boost [b0, bx, by, bz]")->required();
    thomas_cmd->add_option("--b2", b2_text, "Second boost [b0, bx, by, bz]")->required();
    add_output_options(thomas_cmd, out);

    // ---- stationary ----
    std::string nvec_text = "[0,0,1]";
    double scale = 1.0;
    auto* stationary_cmd = app.add_subcommand("stationary",
                                              "Stabilizer element of a Stokes vector");
    stationary_cmd->add_option("--stokes", stokes_text, "Stokes 4-vector")->required();
    stationary_cmd->add_option("--n", nvec_text, "Free rotation vector")
        ->capture_default_str();
    stationary_cmd->add_option("--scale", scale, "n0 before normalization")
        ->capture_default_str();
    add_output_options(stationary_cmd, out);

    // ---- transit ----
    std::string pairs_csv, s_text, sp_text, mode = "pure-boost", params_text;
    auto* transit_cmd = app.add_subcommand("transit",
                                           "Transitivity solver L S = S'");
    auto* tp = transit_cmd->add_option("--pairs", pairs_csv,
                                       "CSV of S,S' pairs (8 columns)");
    transit_cmd->add_option("--s", s_text, "Source Stokes vector")->excludes(tp);
    transit_cmd->add_option("--s-prime", sp_text, "Target Stokes vector")->excludes(tp);
    transit_cmd->add_option("--mode", mode, "Family member")
        ->check(CLI::IsMember({"pure-boost", "boost-rotation", "general"}))
        ->capture_default_str();
    transit_cmd->add_option("--params", params_text,
                            "General-mode parameters [M+, M-, N+, N-]");
    add_output_options(transit_cmd, out);

    // ---- fit ----
    auto* fit_cmd = app.add_subcommand("fit", "Least-squares Mueller matrix from pairs");
    fit_cmd->add_option("--pairs", pairs_csv, "CSV of S,S' pairs (8 columns)")->required();
    add_output_options(fit_cmd, out);

    // ---- convert ----
    std::string basis = "isotropic", lorentz_text, isotropic_text;
    bool recover = false;
    auto* convert_cmd = app.add_subcommand("convert",
                                           "Isotropic-basis conversions and recovery");
    convert_cmd->add_option("--basis", basis, "Target basis")
        ->check(CLI::IsMember({"isotropic", "real"}))
        ->capture_default_str();
    auto* cl = convert_cmd->add_option("--lorentz", lorentz_text,
                                       "Real Lorentz matrix (JSON)");
    auto* ck = convert_cmd->add_option("--spinor", spinor_text, "Spinor parameters k")
                   ->excludes(cl);
    auto* ci = convert_cmd->add_option("--isotropic", isotropic_text,
                                       "Isotropic-form matrix")
                   ->excludes(cl)
                   ->excludes(ck);
    convert_cmd->add_option("--stokes", stokes_text, "Stokes vector to convert")
        ->excludes(cl)
        ->excludes(ck)
        ->excludes(ci);
    convert_cmd->add_flag("--recover", recover, "Recover spinor entries from "
                                                "an isotropic-form matrix");
    add_output_options(convert_cmd, out);

    // ---- jones ----
    std::string jones_spinor_text, bispinor_text, jones_model = "standard";
    double gamma = 0.0, mute_phase = 0.0;
    bool jones_convert = false, jones_invert = false, jones_tensor = false;
    auto* jones_cmd = app.add_subcommand("jones", "Jones spinor maps");
    auto* js = jones_cmd->add_option("--stokes", stokes_text,
                                     "Isotropic Stokes vector");
    auto* jp = jones_cmd->add_option("--spinor", jones_spinor_text, "Jones spinor")
                   ->excludes(js);
    jones_cmd->add_option("--bispinor", bispinor_text, "Bi-spinor {xi, eta}")
        ->excludes(js)
        ->excludes(jp);
    jones_cmd->add_option("--model", jones_model, "Spinor model for --stokes")
        ->check(CLI::IsMember({"standard", "alt"}))
        ->capture_default_str();
    jones_cmd->add_option("--gamma", gamma, "Global phase")->capture_default_str();
    jones_cmd->add_option("--mute-phase", mute_phase,
                          "Phase used on the degenerate axis")->capture_default_str();
    jones_cmd->add_flag("--convert", jones_convert, "Apply the model conversion");
    jones_cmd->add_flag("--invert", jones_invert, "Apply the inverse conversion");
    jones_cmd->add_flag("--tensor", jones_tensor,
                        "Emit the Stokes tensor of a completely polarized spinor");
    add_output_options(jones_cmd, out);

    // ---- selftest ----
    uint64_t seed = 12345;
    int trials = 200;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites");
    selftest_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    selftest_cmd->add_option("--trials", trials, "Trials per suite")->capture_default_str();

    for (auto* cmd : app.get_subcommands({}))
        cmd->add_option("--tol", tol, "Tolerance override");

    try {
        tol = tolerance_from_env();
        app.parse(argc, argv);
        if (tol <= 0.0) throw ParseFailure("tolerance must be positive");

        if (factor2->parsed() || factor3->parsed()) {
            const UnitQuaternion n = quaternion_arg(quaternion_text);
            const FactorAngles f = factor2->parsed()
                                       ? factor_2element(n, scheme, tol)
                                       : factor_3element(n, order, tol);
            emit(factor_result(f, n), out);
        } else if (boost_cmd->parsed() || rotate_cmd->parsed()) {
            const Vec3 axis = parse_as(axis_text, vec3_from_json);
            const SpinorParams k = boost_cmd->parsed() ? polarkit::boost(beta, axis, tol)
                                                       : polarkit::rotation(phi, axis, tol);
            Json result = spinor_with_matrix(k, tol);
            if (!stokes_text.empty()) {
                const StokesVector s = parse_as(stokes_text, stokes_from_json);
                result["transformed"] = to_json(mueller_apply(covering_map(k, tol), s));
            }
            if (!stokes_csv.empty()) {
                std::ifstream in(stokes_csv);
                if (!in) throw ParseFailure("cannot open file: " + stokes_csv);
                Json rows = Json::array();
                for (const StokesVector& s : read_stokes_csv(in))
                    rows.push_back(to_json(mueller_apply(covering_map(k, tol), s)));
                result["transformed"] = std::move(rows);
            }
            emit(result, out);
        } else if (decompose_cmd->parsed()) {
            const SpinorParams k = parse_as(spinor_text, spinor_params_from_json);
            const PolarDecomposition d = decomp_order == "rotation-boost"
                                             ? polar_rotation_boost(k, tol)
                                             : polar_boost_rotation(k, tol);
            Json result = to_json(d);
            const SpinorMatrix b = spinor_matrix(k.normalized(tol));
            const SpinorMatrix p = d.product();
            result["reconstruction_error"] =
                std::min(p.max_abs_diff(b), (-p).max_abs_diff(b));
            emit(result, out);
        } else if (thomas_cmd->parsed()) {
            auto boost_arg = [&](const std::string& text) {
                return parse_as(text, [&](const Json& j) {
                    if (!j.is_array() || j.size() != 4)
                        throw DomainError("expected [b0, bx, by, bz]");
                    return BoostQuat(j[0].get<double>(),
                                     {j[1].get<double>(), j[2].get<double>(),
                                      j[3].get<double>()},
                                     1e-6);
                });
            };
            const BoostQuat b1 = boost_arg(b1_text), b2 = boost_arg(b2_text);
            const BoostComposition c = compose_boosts(b1, b2, tol);
            Json result;
            result["spinor"] = to_json(c.k);
            result["thomas"] = to_json(c.thomas);
            result["thomas_angle"] = c.thomas.rotation_angle();
            result["parallel"] = b1.b.cross(b2.b).norm() <= 1e-12;
            emit(result, out);
        } else if (stationary_cmd->parsed()) {
            const StokesVector s = parse_as(stokes_text, stokes_from_json);
            const Vec3 n = parse_as(nvec_text, vec3_from_json);
            const SpinorParams k = stationary_element(s, n, scale, tol);
            Json result;
            result["spinor"] = to_json(k);
            result["residual"] =
                mueller_apply(covering_map(k, tol), s).max_abs_diff(s);
            emit(result, out);
        } else if (transit_cmd->parsed()) {
            std::vector<std::pair<StokesVector, StokesVector>> pairs;
            if (!pairs_csv.empty()) {
                pairs = load_pairs(pairs_csv);
            } else if (!s_text.empty() && !sp_text.empty()) {
                pairs.emplace_back(parse_as(s_text, stokes_from_json),
                                   parse_as(sp_text, stokes_from_json));
            } else {
                throw ParseFailure("transit needs --pairs or both --s and --s-prime");
            }
            Json rows = Json::array();
            for (const auto& [s, sp] : pairs) {
                TransitivityParams params;
                if (mode == "pure-boost") {
                    params = pure_boost_params(s, sp, tol);
                } else if (mode == "boost-rotation") {
                    params = boost_rotation_params(s, sp, tol);
                } else {
                    if (params_text.empty())
                        throw ParseFailure("general mode needs --params [M+,M-,N+,N-]");
                    params = parse_as(params_text, [](const Json& j) {
                        if (!j.is_array() || j.size() != 4)
                            throw DomainError("expected [M+, M-, N+, N-]");
                        return TransitivityParams{j[0].get<double>(), j[1].get<double>(),
                                                  j[2].get<double>(), j[3].get<double>()};
                    });
                    params = solve_on_surface(s, sp, params, tol);
                }
                const SpinorParams k = transitivity_general(s, sp, params, tol);
                Json row;
                row["spinor"] = to_json(k);
                row["params"] = Json::array({params.M_plus, params.M_minus,
                                             params.N_plus, params.N_minus});
                row["surface_residual"] = constraint_residual(s, sp, params, tol);
                row["map_residual"] =
                    mueller_apply(covering_map(k, tol), s).max_abs_diff(sp);
                rows.push_back(std::move(row));
            }
            emit(pairs.size() == 1 ? rows[0] : Json{{"solutions", rows}}, out);
        } else if (fit_cmd->parsed()) {
            const MuellerFit fit = fit_mueller(load_pairs(pairs_csv), tol);
            Json result;
            result["matrix"] = to_json(fit.matrix);
            result["lorentz_deviation"] = fit.lorentz_deviation;
            result["max_residual"] = fit.max_residual;
            emit(result, out);
        } else if (convert_cmd->parsed()) {
            Json result;
            if (recover) {
                if (isotropic_text.empty())
                    throw ParseFailure("--recover needs --isotropic");
                const Matrix4C u = parse_as(isotropic_text, matrix4c_from_json);
                const SpinorMatrix m = recover_spinor(u, tol);
                result["spinor_matrix"] = to_json(m);
                result["spinor"] = to_json(spinor_params(m));
                result["residual"] = isotropic_from_spinor(m, 1e-5).max_abs_diff(u);
            } else if (basis == "isotropic") {
                if (!lorentz_text.empty()) {
                    const Matrix4R l = parse_as(lorentz_text, matrix4r_from_json);
                    result["isotropic"] = to_json(to_isotropic(l));
                } else if (!spinor_text.empty()) {
                    const SpinorParams k = parse_as(spinor_text, spinor_params_from_json);
                    result["isotropic"] =
                        to_json(isotropic_from_spinor(spinor_matrix(k), tol));
                } else if (!stokes_text.empty()) {
                    const StokesVector s = parse_as(stokes_text, stokes_from_json);
                    result["isotropic"] = to_json(stokes_to_isotropic(s));
                } else {
                    throw ParseFailure("convert needs --lorentz, --spinor or --stokes");
                }
            } else {
                if (isotropic_text.empty())
                    throw ParseFailure("convert --basis real needs --isotropic");
                const Matrix4C u = parse_as(isotropic_text, matrix4c_from_json);
                result["lorentz"] = to_json(from_isotropic(u));
            }
            emit(result, out);
        } else if (jones_cmd->parsed()) {
            Json result;
            if (!bispinor_text.empty()) {
                const JonesBiSpinor b = parse_as(bispinor_text, bispinor_from_json);
                const StokesVector s = partly_polarized_stokes(b);
                const auto [lo, hi] = partly_polarized_bounds(b);
                result["stokes"] = to_json(s);
                result["invariant"] = s.minkowski();
                result["invariant_bounds"] = Json::array({lo, hi});
                result["completely_polarized"] = b.is_completely_polarized(tol);
            } else if (jones_tensor) {
                if (jones_spinor_text.empty())
                    throw ParseFailure("--tensor needs --spinor");
                const JonesSpinor xi = parse_as(jones_spinor_text, jones_from_json);
                const PolarizedTensor pt = polarized_stokes_tensor(xi.psi1, xi.psi2);
                result["stokes"] = to_json(pt.stokes);
                result["tensor_a"] =
                    Json::array({pt.tensor.a.x, pt.tensor.a.y, pt.tensor.a.z});
                result["tensor_b"] =
                    Json::array({pt.tensor.b.x, pt.tensor.b.y, pt.tensor.b.z});
                result["invariant1"] = pt.tensor.invariant1();
                result["invariant2"] = pt.tensor.invariant2();
            } else if (jones_convert || jones_invert) {
                if (jones_spinor_text.empty())
                    throw ParseFailure("--convert/--invert need --spinor");
                const JonesSpinor psi = parse_as(jones_spinor_text, jones_from_json);
                result["spinor"] = to_json(jones_convert ? convert_models(psi)
                                                         : convert_models_inverse(psi));
            } else if (!jones_spinor_text.empty()) {
                const JonesSpinor psi = parse_as(jones_spinor_text, jones_from_json);
                result["stokes"] = to_json(stokes_from_jones(psi));
            } else if (!stokes_text.empty()) {
                const StokesVector s = parse_as(stokes_text, stokes_from_json);
                if (jones_model == "alt") {
                    const AltSpinor alt = alt_spinor_model(s, mute_phase, tol);
                    result["spinor"] = to_json(alt.psi);
                    result["n_prime"] = alt.n_prime;
                    result["m_prime"] = alt.m_prime;
                    result["delta"] = alt.delta;
                    result["s3_sign"] = alt.s3_sign;
                    result["degenerate_axis"] = alt.degenerate_axis;
                    result["stokes_check"] = to_json(alt_model_stokes(alt));
                } else {
                    const JonesChart j = jones_from_stokes(s, gamma, mute_phase, tol);
                    result["spinor"] = to_json(j.psi);
                    result["degenerate_axis"] = j.degenerate_axis;
                    result["near_branch_seam"] = j.near_branch_seam;
                    result["stokes_check"] = to_json(stokes_from_jones(j.psi));
                }
            } else {
                throw ParseFailure("jones needs --stokes, --spinor or --bispinor");
            }
            emit(result, out);
        } else if (selftest_cmd->parsed()) {
            return run_selftest(seed, trials);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    } catch (const ParseFailure& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const ConstraintError& e) {
        std::cerr << "constraint error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
