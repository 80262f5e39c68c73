#include "fatou/scenario.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <set>

#include "fatou/charts.hpp"
#include "fatou/holonomy.hpp"

namespace fatou::scenario {

namespace {

// Strict-schema accessor: every key must be consumed, unknown keys are fatal.
class Strict {
public:
    Strict(const json& j, std::string ctx) : j_(j), ctx_(std::move(ctx)) {
        if (!j.is_object()) throw ConfigError(ctx_ + ": expected an object");
    }

    const json& req(const std::string& key) {
        if (!j_.contains(key)) throw ConfigError(ctx_ + ": missing key '" + key + "'");
        seen_.insert(key);
        return j_.at(key);
    }

    const json* opt(const std::string& key) {
        if (!j_.contains(key)) return nullptr;
        seen_.insert(key);
        return &j_.at(key);
    }

    void done() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key()))
                throw ConfigError(ctx_ + ": unknown key '" + it.key() + "'");
    }

private:
    const json& j_;
    std::string ctx_;
    std::set<std::string> seen_;
};

Complex parse_complex(const json& j, const std::string& ctx) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ConfigError(ctx + ": expected a number or [re, im]");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

LinearFoliation parse_foliation(const json& j, const std::string& ctx) {
    Strict s(j, ctx);
    const Complex lambda = parse_complex(s.req("lambda"), ctx + ".lambda");
    const Complex mu = parse_complex(s.req("mu"), ctx + ".mu");
    const std::string amb = s.req("ambient").get<std::string>();
    s.done();
    if (amb != "affine" && amb != "projective")
        throw ConfigError(ctx + ".ambient: expected 'affine' or 'projective'");
    if (std::abs(lambda) <= kDenomCutoff || std::abs(mu) <= kDenomCutoff)
        throw ConfigError(ctx + ": lambda and mu must be nonzero");
    return {lambda, mu, amb == "affine" ? Ambient::Affine2 : Ambient::Projective2};
}

verify::RegionSpec parse_region(const json& j, const std::string& ctx) {
    Strict s(j, ctx);
    const std::string kind = s.req("kind").get<std::string>();
    verify::RegionSpec r;
    using K = verify::RegionSpec::Kind;
    if (kind == "complement_of_axes") r.kind = K::ComplementOfAxes;
    else if (kind == "complement_of_origin") r.kind = K::ComplementOfOrigin;
    else if (kind == "complement_of_coord_triangle") r.kind = K::ComplementOfCoordTriangle;
    else if (kind == "complement_of_two_lines") {
        r.kind = K::ComplementOfTwoLines;
        const json& lines = s.req("lines");
        if (!lines.is_array() || lines.size() != 2)
            throw ConfigError(ctx + ".lines: expected [i, j]");
        r.line_i = lines[0].get<int>();
        r.line_j = lines[1].get<int>();
        if (r.line_i < 0 || r.line_i > 2 || r.line_j < 0 || r.line_j > 2 || r.line_i == r.line_j)
            throw ConfigError(ctx + ".lines: indices must be distinct in 0..2");
    } else if (kind == "complement_of_point") r.kind = K::ComplementOfPoint;
    else if (kind == "half_space_y_nonzero") {
        r = verify::region_half_space_y_nonzero();
    } else throw ConfigError(ctx + ".kind: unknown region '" + kind + "'");
    if (const json* f = s.opt("inner_floor")) r.inner_floor = f->get<double>();
    if (const json* f = s.opt("outer_reach")) r.outer_reach = f->get<double>();
    s.done();
    return r;
}

forms::TransverseForm parse_form(const json& j, const LinearFoliation& F, const std::string& ctx) {
    Strict s(j, ctx);
    const std::string kind = s.req("kind").get<std::string>();
    forms::TransverseForm phi = forms::EtaPrime{};
    if (kind == "omega_prime") phi = forms::omega_prime_for(F);
    else if (kind == "eta") phi = forms::make_eta(s.req("alpha").get<double>());
    else if (kind == "nu") phi = forms::make_nu(s.req("alpha").get<double>());
    else if (kind == "gamma")
        phi = forms::make_gamma(s.req("alpha").get<double>(), s.req("k").get<double>(),
                                s.req("l").get<double>());
    else if (kind == "eta_prime") phi = forms::EtaPrime{};
    else throw ConfigError(ctx + ".kind: unknown form '" + kind + "'");
    s.done();
    return phi;
}

compact::CompactApproxFamily parse_family(const json& j, const std::string& ctx) {
    Strict s(j, ctx);
    const std::string kind = s.req("kind").get<std::string>();
    compact::CompactApproxFamily fam = compact::SphereComplement{};
    if (kind == "sphere_complement") fam = compact::SphereComplement{};
    else if (kind == "siegel_level") fam = compact::SiegelLevel{s.req("alpha").get<double>()};
    else if (kind == "projective_triple") fam = compact::ProjectiveTriple{};
    else if (kind == "projective_f") fam = compact::ProjectiveF{};
    else if (kind == "annulus_norm_sq") fam = compact::AnnulusNormSq{};
    else if (kind == "annulus_product") fam = compact::AnnulusProduct{};
    else if (kind == "weighted_cone") fam = compact::WeightedCone{s.req("alpha").get<double>()};
    else if (kind == "affine_cone_g1") fam = compact::AffineConeG1{};
    else if (kind == "half_space_x") fam = compact::HalfSpaceX{};
    else throw ConfigError(ctx + ".kind: unknown family '" + kind + "'");
    s.done();
    return fam;
}

Poly2 parse_poly(const json& j, const std::string& ctx) {
    if (!j.is_array()) throw ConfigError(ctx + ": expected an array of terms");
    Poly2 p;
    for (const json& t : j) {
        if (!t.is_array() || t.size() != 4)
            throw ConfigError(ctx + ": term must be [deg_x, deg_y, re, im]");
        p.add(t[0].get<int>(), t[1].get<int>(), {t[2].get<double>(), t[3].get<double>()});
    }
    if (p.is_zero()) throw ConfigError(ctx + ": polynomial is identically zero");
    return p;
}

verify::CheckParams parse_params(const json* j, std::uint64_t seed, const RunOptions& opts,
                                 const std::string& ctx) {
    verify::CheckParams p;
    p.seed = seed;
    if (j) {
        Strict s(*j, ctx);
        if (const json* v = s.opt("n_holonomy")) p.n_holonomy = v->get<int>();
        if (const json* v = s.opt("n_lower_bound")) p.n_lower_bound = v->get<int>();
        if (const json* v = s.opt("c_min")) p.c_min = v->get<double>();
        if (const json* v = s.opt("invariance_tol")) p.invariance_tol = v->get<double>();
        if (const json* v = s.opt("boundary_samples")) p.boundary_samples = v->get<int>();
        if (const json* v = s.opt("union_samples")) p.union_samples = v->get<int>();
        if (const json* v = s.opt("integrator_tol")) p.integrator_tol = v->get<double>();
        s.done();
    }
    if (opts.invariance_tol > 0) p.invariance_tol = opts.invariance_tol;
    if (opts.c_min > 0) p.c_min = opts.c_min;
    return p;
}

pg::Mobius parse_map(const json& j, const std::string& ctx) {
    Strict s(j, ctx);
    const std::string kind = s.req("kind").get<std::string>();
    if (kind == "affine") {
        const Complex a = parse_complex(s.req("a"), ctx + ".a");
        const Complex b = parse_complex(s.req("b"), ctx + ".b");
        s.done();
        return pg::Mobius::affine(a, b);
    }
    if (kind == "mobius") {
        const Complex a = parse_complex(s.req("a"), ctx + ".a");
        const Complex b = parse_complex(s.req("b"), ctx + ".b");
        const Complex c = parse_complex(s.req("c"), ctx + ".c");
        const Complex d = parse_complex(s.req("d"), ctx + ".d");
        s.done();
        return {a, b, c, d};
    }
    if (kind == "disc_automorphism") {
        const Complex a = parse_complex(s.req("a"), ctx + ".a");
        const double theta = s.req("theta").get<double>();
        s.done();
        return pg::Mobius::disc_automorphism(a, theta);
    }
    throw ConfigError(ctx + ".kind: unknown map '" + kind + "'");
}

pg::Disc parse_disc(const json& j, const std::string& ctx) {
    Strict s(j, ctx);
    const Complex c = parse_complex(s.req("center"), ctx + ".center");
    const double r = s.req("radius").get<double>();
    s.done();
    if (!(r > 0)) throw ConfigError(ctx + ".radius must be positive");
    return {c, r};
}

struct PseudogroupScenario {
    std::vector<pg::Generator> gens;
    std::vector<Complex> K;
    pg::TransversalMetric metric = pg::EuclideanMetric{};
    double metric_lower_bound = 1.0;
    pg::ExtensionOptions opts;
    long expected_violations = 0;
};

PseudogroupScenario parse_pseudogroup(Strict& s, const std::string& ctx) {
    PseudogroupScenario ps;
    for (const json& gj : s.req("generators")) {
        Strict g(gj, ctx + ".generators[]");
        const std::string id = g.req("id").get<std::string>();
        const pg::Mobius map = parse_map(g.req("map"), ctx + ".map");
        const pg::Disc dom = parse_disc(g.req("domain"), ctx + ".domain");
        const pg::Disc ext = parse_disc(g.req("extension"), ctx + ".extension");
        g.done();
        ps.gens.emplace_back(id, map, dom, ext);
    }
    if (const json* tp = s.opt("T_prime")) {
        std::vector<pg::Disc> discs;
        for (const json& dj : *tp) discs.push_back(parse_disc(dj, ctx + ".T_prime[]"));
        ps.gens = pg::restrict(ps.gens, discs);
        if (ps.gens.empty()) throw ConfigError(ctx + ": restriction to T_prime drops every generator");
    }
    {
        Strict m(s.req("metric"), ctx + ".metric");
        const std::string kind = m.req("kind").get<std::string>();
        if (kind == "euclidean") ps.metric = pg::EuclideanMetric{};
        else if (kind == "poincare_disc")
            ps.metric = pg::PoincareDiscMetric{m.req("radius").get<double>()};
        else throw ConfigError(ctx + ".metric.kind: unknown metric '" + kind + "'");
        m.done();
    }
    {
        Strict k(s.req("samples"), ctx + ".samples");
        const Complex c = parse_complex(k.req("center"), ctx + ".samples.center");
        const double r = k.req("radius").get<double>();
        const int count = k.req("count").get<int>();
        k.done();
        // Deterministic polar grid in the sample disc.
        ps.K.push_back(c);
        const int rings = std::max(1, static_cast<int>(std::sqrt(count)));
        for (int i = 1; i <= rings && static_cast<int>(ps.K.size()) < count; ++i) {
            const double rad = r * i / rings;
            const int spokes = std::max(4, 2 * rings);
            for (int j = 0; j < spokes && static_cast<int>(ps.K.size()) < count; ++j) {
                const double th = 2.0 * 3.14159265358979323846 * j / spokes;
                ps.K.push_back(c + std::polar(rad, th));
            }
        }
    }
    ps.metric_lower_bound = s.req("metric_lower_bound").get<double>();
    ps.opts.max_word_length = s.req("max_word_length").get<int>();
    if (const json* m = s.opt("inner_margin"))
        if (!m->is_null()) ps.opts.inner_margin = m->get<double>();
    ps.expected_violations = s.req("expected_violations").get<long>();
    return ps;
}

json evidence_to_json(const verify::HypothesisEvidence& e) {
    json j;
    j["name"] = e.name;
    j["passed"] = e.passed;
    if (!e.detail.empty()) j["detail"] = e.detail;
    if (!e.numbers.empty()) {
        json n;
        for (const auto& [k, v] : e.numbers) n[k] = v;
        j["numbers"] = n;
    }
    return j;
}

}  // namespace

json verdict_to_json(const verify::Verdict& v) {
    json j;
    switch (v.kind) {
        case verify::VerdictKind::FatouSubset: j["verdict"] = "fatou_subset"; break;
        case verify::VerdictKind::Inconclusive: j["verdict"] = "inconclusive"; break;
        case verify::VerdictKind::KnownJuliaIntersection:
            j["verdict"] = "known_julia_intersection";
            break;
    }
    j["failed"] = v.failed;
    json ev = json::array();
    for (const auto& e : v.evidence) ev.push_back(evidence_to_json(e));
    j["evidence"] = ev;
    return j;
}

json extension_report_to_json(const pg::ExtensionReport& rep) {
    json j;
    j["isometric"] = rep.isometric;
    j["non_isometric_generators"] = rep.non_isometric_generators;
    j["delta"] = rep.delta;
    j["C"] = rep.C;
    j["c"] = rep.c;
    j["delta_prime"] = rep.delta_prime;
    j["words_checked"] = rep.words_checked;
    j["words_defined"] = rep.words_defined;
    json viol = json::array();
    for (const auto& v : rep.violations) {
        json e;
        e["word"] = v.word;
        e["point"] = complex_to_json(v.point);
        e["available_radius"] = v.available_radius;
        e["required_radius"] = v.required_radius;
        viol.push_back(e);
    }
    j["violations"] = viol;
    return j;
}

json counterexamples_to_json() {
    json out = json::array();
    for (const auto& e : verify::counterexample_suite()) {
        json j;
        j["id"] = e.id;
        j["statement"] = e.statement;
        json n = json::object();
        for (const auto& [k, v] : e.numbers) n[k] = v;
        j["numbers"] = n;
        j["citation"] = e.citation;
        out.push_back(j);
    }
    return out;
}

namespace {

json run_one_scenario(const json& sj, const RunOptions& opts) {
    Strict s(sj, "scenario");
    const std::string id = s.req("id").get<std::string>();
    const std::string kind = s.req("kind").get<std::string>();
    const std::uint64_t seed = opts.seed ^ fnv1a(id);

    json rep;
    rep["schema_version"] = 1;
    rep["tool"] = "fatou 0.1.0";
    rep["id"] = id;
    rep["kind"] = kind;
    rep["seed"] = seed;

    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;

    if (kind == "invariant_metric") {
        const LinearFoliation F = parse_foliation(s.req("foliation"), id + ".foliation");
        const verify::RegionSpec U = parse_region(s.req("region"), id + ".region");
        const forms::TransverseForm phi = parse_form(s.req("form"), F, id + ".form");
        const compact::CompactApproxFamily fam = parse_family(s.req("family"), id + ".family");
        const std::string expected = s.req("expected").get<std::string>();
        const verify::CheckParams params = parse_params(s.opt("params"), seed, opts, id + ".params");
        s.done();

        const verify::Verdict v = verify::certify_invariant_metric(F, U, phi, fam, params);
        rep["result"] = verdict_to_json(v);
        rep["expected"] = expected;
        rep["tolerances"] = {{"invariance_tol", params.invariance_tol},
                             {"c_min", params.c_min},
                             {"integrator_tol", params.integrator_tol}};
        ok = rep["result"]["verdict"].get<std::string>() == expected;
    } else if (kind == "closed_form") {
        const Poly2 P = parse_poly(s.req("P"), id + ".P");
        const Poly2 Q = parse_poly(s.req("Q"), id + ".Q");
        const compact::CompactApproxFamily fam = parse_family(s.req("family"), id + ".family");
        const std::string expected = s.req("expected").get<std::string>();
        const verify::CheckParams params = parse_params(s.opt("params"), seed, opts, id + ".params");
        s.done();

        const verify::Verdict v = verify::certify_closed_form(P, Q, fam, params);
        rep["result"] = verdict_to_json(v);
        rep["expected"] = expected;
        rep["tolerances"] = {{"closedness_residual", 1e-12}, {"c_min", params.c_min}};
        ok = rep["result"]["verdict"].get<std::string>() == expected;
    } else if (kind == "counterexamples") {
        s.done();
        rep["result"] = counterexamples_to_json();
        rep["expected"] = "report";
        ok = rep["result"].size() == 3;
    } else if (kind == "pseudogroup") {
        PseudogroupScenario ps = parse_pseudogroup(s, id);
        s.done();
        const pg::ExtensionReport er =
            pg::verify_extension_auto(ps.gens, ps.K, ps.metric, ps.metric_lower_bound, ps.opts);
        rep["result"] = extension_report_to_json(er);
        rep["expected_violations"] = ps.expected_violations;
        ok = static_cast<long>(er.violations.size()) == ps.expected_violations;
    } else {
        throw ConfigError(id + ": unknown scenario kind '" + kind + "'");
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms > opts.timeout_seconds * 1000.0) {
        ok = false;
        rep["timed_out"] = true;
    }
    rep["ok"] = ok;
    rep["wall_time_ms"] = ms;
    return rep;
}

}  // namespace

RunResult run_config_json(const json& config, const RunOptions& opts) {
    RunResult result;
    json& summary = result.summary;

    Strict top(config, "config");
    const int version = top.req("version").get<int>();
    if (version != 1) throw ConfigError("config.version: only version 1 is supported");
    const json& scenarios = top.req("scenarios");
    if (!scenarios.is_array()) throw ConfigError("config.scenarios: expected an array");
    top.done();

    summary["version"] = 1;
    summary["seed"] = opts.seed;
    summary["scenarios"] = json::array();

    std::vector<std::future<json>> futures;
    const int jobs = std::max(1, opts.jobs);
    std::vector<json> reports(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); i += jobs) {
        futures.clear();
        const std::size_t hi = std::min(scenarios.size(), i + jobs);
        for (std::size_t k = i; k < hi; ++k)
            futures.push_back(std::async(std::launch::async,
                                         [&, k] { return run_one_scenario(scenarios[k], opts); }));
        for (std::size_t k = i; k < hi; ++k) reports[k] = futures[k - i].get();
    }

    bool all_ok = true;
    for (json& rep : reports) {
        if (!opts.out_dir.empty()) {
            std::filesystem::create_directories(opts.out_dir);
            std::ofstream f(opts.out_dir / (rep["id"].get<std::string>() + ".report.json"));
            f << rep.dump(2) << '\n';
        }
        json line;
        line["id"] = rep["id"];
        line["ok"] = rep["ok"];
        if (rep.contains("result") && rep["result"].is_object() &&
            rep["result"].contains("verdict"))
            line["verdict"] = rep["result"]["verdict"];
        all_ok = all_ok && rep["ok"].get<bool>();
        summary["scenarios"].push_back(line);
    }
    summary["all_ok"] = all_ok;
    result.exit_code = all_ok ? 0 : 1;

    if (!opts.out_dir.empty()) {
        std::ofstream f(opts.out_dir / "summary.json");
        f << summary.dump(2) << '\n';
    }
    return result;
}

RunResult run_config(const std::filesystem::path& config_path, const RunOptions& opts) {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config file " + config_path.string());
    json config;
    try {
        in >> config;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    return run_config_json(config, opts);
}

int exit_code_of(const json& summary) { return summary.at("all_ok").get<bool>() ? 0 : 1; }

void grid_export(std::ostream& csv, const GridSpec& spec) {
    if (spec.resolution < 2 || static_cast<long>(spec.resolution) * spec.resolution > 4096L * 4096L)
        throw ResolutionTooLarge("grid resolution must be in [2, 4096] per axis");

    const LinearFoliation Fm1 = affine_foliation(-1.0);
    const forms::TransverseForm eta_prime = forms::EtaPrime{};

    auto value = [&](double a1, double a2) -> double {
        switch (spec.quantity) {
            case GridQuantity::Eq215Abs:
                return std::abs(compact::eq215_indicator(spec.lambda, spec.mu,
                                                         {a1, a2, ChartId::XY}));
            case GridQuantity::FValue: {
                const double s = a1 * a1, t = a2 * a2;
                const double d = 1.0 + s + t;
                return s * t / (d * d * d);
            }
            case GridQuantity::MetricRatio: {
                const AffinePoint2 q{a1, a2, ChartId::XY};
                try {
                    const Tangent2 v =
                        forms::unit_transverse(Fm1, q, ReferenceMetricId::Euclidean2);
                    return forms::metric_norm_sq(eta_prime, q, v);
                } catch (const FatouError&) {
                    return std::numeric_limits<double>::quiet_NaN();
                }
            }
            case GridQuantity::MultiplierField: {
                const Complex alpha{a1, a2};
                if (std::abs(alpha) <= kDenomCutoff)
                    return std::numeric_limits<double>::quiet_NaN();
                return std::abs(std::exp(Complex{0.0, 2.0 * 3.14159265358979323846} * alpha));
            }
        }
        return 0.0;
    };

    const char* names[] = {"axis1", "axis2", "value"};
    csv << names[0] << ',' << names[1] << ',' << names[2] << '\n';
    csv.precision(17);
    for (int i = 0; i < spec.resolution; ++i) {
        const double a1 = spec.lo1 + (spec.hi1 - spec.lo1) * i / (spec.resolution - 1);
        for (int j = 0; j < spec.resolution; ++j) {
            const double a2 = spec.lo2 + (spec.hi2 - spec.lo2) * j / (spec.resolution - 1);
            csv << a1 << ',' << a2 << ',' << value(a1, a2) << '\n';
        }
    }
}

json grid_metadata(const GridSpec& spec) {
    json m;
    switch (spec.quantity) {
        case GridQuantity::Eq215Abs:
            m["quantity"] = "eq215_abs";
            m["axis1"] = "|x| (dimensionless modulus)";
            m["axis2"] = "|y| (dimensionless modulus)";
            m["value"] = "|lambda (1 - 2|x|^2 + |y|^2) + mu (1 - 2|y|^2 + |x|^2)|";
            m["lambda"] = complex_to_json(spec.lambda);
            m["mu"] = complex_to_json(spec.mu);
            break;
        case GridQuantity::FValue:
            m["quantity"] = "f_value";
            m["axis1"] = "|x|";
            m["axis2"] = "|y|";
            m["value"] = "|x|^2 |y|^2 / (1 + |x|^2 + |y|^2)^3";
            break;
        case GridQuantity::MetricRatio:
            m["quantity"] = "metric_ratio";
            m["axis1"] = "|x|";
            m["axis2"] = "|y|";
            m["value"] = "h(v,v)/g(v,v), h = eta' (x) conj(eta'), v the unit transverse "
                         "direction of the alpha = -1 foliation, g Euclidean";
            break;
        case GridQuantity::MultiplierField:
            m["quantity"] = "multiplier_field";
            m["axis1"] = "Re alpha";
            m["axis2"] = "Im alpha";
            m["value"] = "|exp(2 pi i alpha)| (first-axis loop multiplier modulus)";
            break;
    }
    m["row_order"] = "row-major over (axis1, axis2)";
    m["resolution"] = spec.resolution;
    m["range_axis1"] = json::array({spec.lo1, spec.hi1});
    m["range_axis2"] = json::array({spec.lo2, spec.hi2});
    return m;
}

}  // namespace fatou::scenario
