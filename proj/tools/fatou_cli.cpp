// Command-line front end: declarative scenario runs, grid exports for plots,
// classification and holonomy lookups, and the counterexample report.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "fatou/holonomy.hpp"
#include "fatou/scenario.hpp"

namespace {

using fatou::Complex;
using json = fatou::scenario::json;

std::filesystem::path default_out_dir() {
    if (const char* env = std::getenv("FATOU_OUT_DIR")) return env;
    return "fatou-out";
}

Complex parse_complex_arg(const std::string& s) {
    // "re" or "re,im"
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

int cmd_run(const std::string& config, const std::string& out_dir, std::uint64_t seed, int jobs,
            double invariance_tol, double c_min) {
    fatou::scenario::RunOptions opts;
    opts.out_dir = out_dir;
    opts.seed = seed;
    opts.jobs = jobs;
    opts.invariance_tol = invariance_tol;
    opts.c_min = c_min;
    const auto result = fatou::scenario::run_config(config, opts);
    for (const auto& line : result.summary["scenarios"]) {
        std::cout << (line["ok"].get<bool>() ? "[ ok ] " : "[FAIL] ")
                  << line["id"].get<std::string>();
        if (line.contains("verdict")) std::cout << " -> " << line["verdict"].get<std::string>();
        std::cout << '\n';
    }
    std::cout << (result.exit_code == 0 ? "all scenarios ok" : "scenario failures") << '\n';
    return result.exit_code;
}

int cmd_grid(const std::string& quantity, int resolution, const std::string& out,
             const std::string& lambda, const std::string& mu, double lo1, double hi1, double lo2,
             double hi2) {
    fatou::scenario::GridSpec spec;
    if (quantity == "eq215_abs") spec.quantity = fatou::scenario::GridQuantity::Eq215Abs;
    else if (quantity == "f_value") spec.quantity = fatou::scenario::GridQuantity::FValue;
    else if (quantity == "metric_ratio") spec.quantity = fatou::scenario::GridQuantity::MetricRatio;
    else if (quantity == "multiplier_field")
        spec.quantity = fatou::scenario::GridQuantity::MultiplierField;
    else {
        std::cerr << "unknown quantity: " << quantity << '\n';
        return 2;
    }
    spec.resolution = resolution;
    spec.lambda = parse_complex_arg(lambda);
    spec.mu = parse_complex_arg(mu);
    spec.lo1 = lo1;
    spec.hi1 = hi1;
    spec.lo2 = lo2;
    spec.hi2 = hi2;

    std::ofstream csv(out);
    if (!csv) {
        std::cerr << "cannot open " << out << '\n';
        return 2;
    }
    fatou::scenario::grid_export(csv, spec);
    std::ofstream meta(out + ".meta.json");
    meta << fatou::scenario::grid_metadata(spec).dump(2) << '\n';
    std::cout << "wrote " << out << " and " << out << ".meta.json\n";
    return 0;
}

int cmd_classify(const std::string& alpha_arg, const std::string& ambient_arg) {
    const Complex alpha = parse_complex_arg(alpha_arg);
    const fatou::Ambient ambient =
        ambient_arg == "affine" ? fatou::Ambient::Affine2 : fatou::Ambient::Projective2;
    const auto d = fatou::verify::known_classification(alpha, ambient);
    json j;
    j["alpha"] = json::array({alpha.real(), alpha.imag()});
    j["ambient"] = ambient_arg;
    j["fatou"] = d.fatou;
    j["julia"] = d.julia;
    j["source"] = d.source;
    j["lower_confidence"] = d.lower_confidence;
    j["via_swap"] = d.via_swap;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_holonomy(const std::string& alpha_arg, const std::string& axis_arg, double tol) {
    const Complex alpha = parse_complex_arg(alpha_arg);
    const fatou::LinearFoliation F = fatou::affine_foliation(alpha);
    const auto axis = axis_arg == "first" ? fatou::holonomy::Axis::FirstAxis
                                          : fatou::holonomy::Axis::SecondAxis;
    const Complex m = fatou::holonomy::axis_multiplier(F, axis);

    // Cross-check by integrating the loop.
    fatou::holonomy::LeafPath lp;
    lp.base = axis == fatou::holonomy::Axis::FirstAxis ? fatou::holonomy::BaseCoord::SecondCoord
                                                       : fatou::holonomy::BaseCoord::FirstCoord;
    lp.path = fatou::holonomy::BasePath::circle(1.0);
    lp.start_fiber = 1.0;
    const auto r = fatou::holonomy::integrate_leaf(F, lp, 1e-10);

    json j;
    j["alpha"] = json::array({alpha.real(), alpha.imag()});
    j["axis"] = axis_arg;
    j["multiplier"] = json::array({m.real(), m.imag()});
    j["multiplier_abs"] = std::abs(m);
    j["integrated"] = json::array({r.end_fiber.real(), r.end_fiber.imag()});
    j["integrator_steps"] = r.steps;
    j["hyperbolic"] = fatou::holonomy::is_hyperbolic(m, tol);
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_boundary(const std::string& family, double alpha, const std::string& lambda,
                 const std::string& mu, const std::string& ambient, int n, int count,
                 const std::string& out, std::uint64_t seed) {
    fatou::compact::CompactApproxFamily fam{fatou::compact::SphereComplement{}};
    if (family == "sphere_complement") fam = fatou::compact::SphereComplement{};
    else if (family == "siegel_level") fam = fatou::compact::SiegelLevel{alpha};
    else if (family == "projective_triple") fam = fatou::compact::ProjectiveTriple{};
    else if (family == "projective_f") fam = fatou::compact::ProjectiveF{};
    else if (family == "annulus_norm_sq") fam = fatou::compact::AnnulusNormSq{};
    else if (family == "annulus_product") fam = fatou::compact::AnnulusProduct{};
    else if (family == "weighted_cone") fam = fatou::compact::WeightedCone{alpha};
    else if (family == "affine_cone_g1") fam = fatou::compact::AffineConeG1{};
    else if (family == "half_space_x") fam = fatou::compact::HalfSpaceX{};
    else {
        std::cerr << "unknown family: " << family << '\n';
        return 2;
    }
    const fatou::LinearFoliation F(parse_complex_arg(lambda), parse_complex_arg(mu),
                                   ambient == "affine" ? fatou::Ambient::Affine2
                                                       : fatou::Ambient::Projective2);
    std::ofstream csv(out);
    if (!csv) {
        std::cerr << "cannot open " << out << '\n';
        return 2;
    }
    fatou::SampleStream stream(seed, "boundary_csv");
    fatou::compact::export_boundary_indicator_csv(csv, F, fam, n, count, stream);
    std::cout << "wrote " << out << '\n';
    return 0;
}

int cmd_counterexamples(const std::string& out_dir) {
    const json j = fatou::scenario::counterexamples_to_json();
    std::cout << j.dump(2) << '\n';
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream f(std::filesystem::path(out_dir) / "counterexamples.json");
        f << j.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numeric certificates for Fatou sets of linear holomorphic foliations"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "execute a scenario config and emit reports");
    std::string config;
    std::string out_dir = default_out_dir().string();
    std::uint64_t seed = 20240607ULL;
    int jobs = 1;
    double inv_tol = -1.0, c_min = -1.0;
    run->add_option("--config", config, "scenario config (JSON)")->required();
    run->add_option("--out-dir", out_dir, "report directory (default $FATOU_OUT_DIR or fatou-out)");
    run->add_option("--seed", seed, "run seed");
    run->add_option("--jobs", jobs, "scenario worker count");
    run->add_option("--invariance-tol", inv_tol, "override the invariance defect tolerance");
    run->add_option("--c-min", c_min, "override the lower-bound floor");

    auto* grid = app.add_subcommand("grid", "export a CSV grid of a diagnostic quantity");
    std::string quantity = "f_value", out = "grid.csv", lambda = "0,1", mu = "1";
    int resolution = 200;
    double lo1 = 1e-2, hi1 = 2.0, lo2 = 1e-2, hi2 = 2.0;
    grid->add_option("--quantity", quantity,
                     "eq215_abs | f_value | metric_ratio | multiplier_field");
    grid->add_option("--resolution", resolution, "cells per axis (max 4096)");
    grid->add_option("--out", out, "CSV output path");
    grid->add_option("--lambda", lambda, "lambda as re[,im]");
    grid->add_option("--mu", mu, "mu as re[,im]");
    grid->add_option("--lo1", lo1);
    grid->add_option("--hi1", hi1);
    grid->add_option("--lo2", lo2);
    grid->add_option("--hi2", hi2);

    auto* classify = app.add_subcommand("classify", "known Fatou/Julia table entry for alpha");
    std::string alpha_arg = "0,1", ambient_arg = "projective";
    classify->add_option("--alpha", alpha_arg, "alpha as re[,im]")->required();
    classify->add_option("--ambient", ambient_arg, "affine | projective");

    auto* hol = app.add_subcommand("holonomy", "axis-loop multiplier for alpha");
    std::string axis_arg = "first";
    double tol = 1e-6;
    hol->add_option("--alpha", alpha_arg, "alpha as re[,im]")->required();
    hol->add_option("--axis", axis_arg, "first | second");
    hol->add_option("--tol", tol, "hyperbolicity tolerance");

    auto* cx = app.add_subcommand("counterexamples", "necessity witnesses report");
    std::string cx_out;
    cx->add_option("--out-dir", cx_out, "also write counterexamples.json here");

    auto* bnd = app.add_subcommand("boundary", "sample a K_n boundary with the indicator as CSV");
    std::string family = "projective_f", b_ambient = "projective", b_out = "boundary.csv";
    std::string b_lambda = "0,1", b_mu = "1";
    double b_alpha = 0.5;
    int b_n = 28, b_count = 500;
    std::uint64_t b_seed = 20240607ULL;
    bnd->add_option("--family", family,
                    "sphere_complement | siegel_level | projective_triple | projective_f | "
                    "annulus_norm_sq | annulus_product | weighted_cone | affine_cone_g1 | "
                    "half_space_x");
    bnd->add_option("--family-alpha", b_alpha, "family parameter where applicable");
    bnd->add_option("--lambda", b_lambda, "foliation lambda as re[,im]");
    bnd->add_option("--mu", b_mu, "foliation mu as re[,im]");
    bnd->add_option("--ambient", b_ambient, "affine | projective");
    bnd->add_option("--n", b_n, "family index");
    bnd->add_option("--count", b_count, "boundary sample count");
    bnd->add_option("--out", b_out, "CSV output path");
    bnd->add_option("--seed", b_seed, "sampling seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config, out_dir, seed, jobs, inv_tol, c_min);
        if (grid->parsed())
            return cmd_grid(quantity, resolution, out, lambda, mu, lo1, hi1, lo2, hi2);
        if (classify->parsed()) return cmd_classify(alpha_arg, ambient_arg);
        if (hol->parsed()) return cmd_holonomy(alpha_arg, axis_arg, tol);
        if (cx->parsed()) return cmd_counterexamples(cx_out);
        if (bnd->parsed())
            return cmd_boundary(family, b_alpha, b_lambda, b_mu, b_ambient, b_n, b_count, b_out,
                                b_seed);
    } catch (const fatou::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const fatou::FatouError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
