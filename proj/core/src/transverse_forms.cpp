#include "fatou/transverse_forms.hpp"

#include "fatou/charts.hpp"

namespace fatou::forms {

bool gamma_constraint_check(double alpha, double k, double l) {
    return std::abs(k + alpha * l - 1.0 - alpha) <= 1e-12;
}

TransverseForm make_eta(double alpha) {
    if (!(alpha > 0.0)) throw FatouError("Eta requires alpha in R_{>0}");
    return Eta{alpha};
}

TransverseForm make_nu(double alpha) {
    if (!(alpha < 0.0)) throw FatouError("Nu requires alpha in R_{<0}");
    return Nu{alpha};
}

TransverseForm make_gamma(double alpha, double k, double l) {
    if (!gamma_constraint_check(alpha, k, l))
        throw FatouError("Gamma requires k + alpha*l = 1 + alpha");
    return Gamma{alpha, k, l};
}

TransverseForm make_meromorphic(const Poly2& P, const Poly2& Q) {
    if (P.is_zero() || Q.is_zero())
        throw FatouError("MeromorphicClosed requires P, Q not identically zero");
    return MeromorphicClosed{P, Q};
}

TransverseForm omega_prime_for(const LinearFoliation& F) {
    return OmegaPrime{F.lambda(), F.mu(), F.ambient() == Ambient::Projective2};
}

namespace {

void require_nonsingular(Complex denom, const char* what) {
    if (std::abs(denom) <= kDenomCutoff) throw FormSingular(what);
}

Covector eval_omega_prime(const OmegaPrime& w, const AffinePoint2& q) {
    const Complex l = w.lambda, m = w.mu;
    if (!w.projective) {
        if (q.chart != ChartId::XY) throw ChartUndefined("omega' on C^2 lives on chart XY");
        require_nonsingular(q.c1, "omega' singular at x = 0");
        require_nonsingular(q.c2, "omega' singular at y = 0");
        return {1.0 / (l * q.c1), -1.0 / (m * q.c2)};
    }
    // Projective orientation: (1/mu) dlog x - (1/lambda) dlog y, pulled back
    // per chart.
    switch (q.chart) {
        case ChartId::XY:
            require_nonsingular(q.c1, "omega' singular at x = 0");
            require_nonsingular(q.c2, "omega' singular at y = 0");
            return {1.0 / (m * q.c1), -1.0 / (l * q.c2)};
        case ChartId::AB:
            require_nonsingular(q.c1, "omega' singular at a = 0");
            require_nonsingular(q.c2, "omega' singular at b = 0");
            return {1.0 / (m * q.c1), (1.0 / l - 1.0 / m) / q.c2};
        case ChartId::UV:
            require_nonsingular(q.c1, "omega' singular at u = 0");
            require_nonsingular(q.c2, "omega' singular at v = 0");
            return {-1.0 / (l * q.c1), (1.0 / l - 1.0 / m) / q.c2};
    }
    throw ChartUndefined("unreachable");
}

Covector eval_eta(const Eta& f, const AffinePoint2& q) {
    const double a = f.alpha;
    if (q.chart == ChartId::XY) {
        const double D = std::pow(std::abs(q.c1), (a + 1.0) / a) + std::pow(std::abs(q.c2), a + 1.0);
        require_nonsingular(D, "eta singular where both coordinates vanish");
        return {q.c2 / D, -a * q.c1 / D};
    }
    if (std::abs(a - 1.0) > kRealTol)
        throw ChartUndefined("eta extends beyond chart XY only for alpha = 1");
    // eta_1 = (y dx - x dy) / (|x|^2 + |y|^2); pullbacks:
    //   AB: da |b|^2 / (b^2 (|a|^2 + 1)),  UV: -du |v|^2 / (v^2 (1 + |u|^2)).
    if (q.chart == ChartId::AB) {
        require_nonsingular(q.c2, "eta_1 singular at b = 0");
        const Complex w = std::norm(q.c2) / (q.c2 * q.c2 * (std::norm(q.c1) + 1.0));
        return {w, 0.0};
    }
    require_nonsingular(q.c2, "eta_1 singular at v = 0");
    const Complex w = -std::norm(q.c2) / (q.c2 * q.c2 * (1.0 + std::norm(q.c1)));
    return {w, 0.0};
}

Covector eval_nu(const Nu& f, const AffinePoint2& q) {
    if (q.chart != ChartId::XY) throw ChartUndefined("nu lives on chart XY");
    require_nonsingular(q.c1, "nu singular at x = 0");
    require_nonsingular(q.c2, "nu singular at y = 0");
    return {1.0 / (f.alpha * q.c1), -1.0 / q.c2};
}

Covector eval_gamma(const Gamma& g, const AffinePoint2& q) {
    const double a = g.alpha, k = g.k, l = g.l;
    const double r1 = std::abs(q.c1), r2 = std::abs(q.c2);
    switch (q.chart) {
        case ChartId::XY: {
            const double D = std::pow(r1, k) * (std::pow(r1, a * l) + std::pow(r2, l));
            require_nonsingular(D, "gamma singular at x = 0");
            return {a * q.c2 / D, -q.c1 / D};
        }
        case ChartId::AB: {
            // (alpha b da - (alpha-1) a db) |b|^{k+l} / (b^3 |a|^k (|a|^{al}|b|^{(1-a)l} + 1))
            const double num = std::pow(r2, k + l);
            const Complex den = q.c2 * q.c2 * q.c2 *
                                (std::pow(r1, k) *
                                 (std::pow(r1, a * l) * std::pow(r2, (1.0 - a) * l) + 1.0));
            require_nonsingular(den, "gamma singular on the a = 0 / b = 0 locus");
            const Complex w = num / den;
            return {a * q.c2 * w, -(a - 1.0) * q.c1 * w};
        }
        case ChartId::UV: {
            // (-v du + (1-alpha) u dv) |v|^{k+l} / (v^3 (|u|^l + |v|^{(1-a)l}))
            const double num = std::pow(r2, k + l);
            const Complex den =
                q.c2 * q.c2 * q.c2 * (std::pow(r1, l) + std::pow(r2, (1.0 - a) * l));
            require_nonsingular(den, "gamma singular at v = 0");
            const Complex w = num / den;
            return {-q.c2 * w, (1.0 - a) * q.c1 * w};
        }
    }
    throw ChartUndefined("unreachable");
}

Covector eval_eta_prime(const AffinePoint2& q) {
    if (q.chart != ChartId::XY) throw ChartUndefined("eta' lives on chart XY");
    return {q.c2, q.c1};
}

Covector eval_meromorphic(const MeromorphicClosed& f, const AffinePoint2& q) {
    if (q.chart != ChartId::XY) throw ChartUndefined("meromorphic form lives on chart XY");
    const Complex P = f.P.eval(q.c1, q.c2);
    const Complex Q = f.Q.eval(q.c1, q.c2);
    require_nonsingular(P, "pole of dy/P");
    require_nonsingular(Q, "pole of dx/Q");
    return {1.0 / Q, 1.0 / P};
}

}  // namespace

Covector eval_form(const TransverseForm& phi, const AffinePoint2& q) {
    return std::visit(
        [&](const auto& f) -> Covector {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, OmegaPrime>) return eval_omega_prime(f, q);
            else if constexpr (std::is_same_v<T, Eta>) return eval_eta(f, q);
            else if constexpr (std::is_same_v<T, Nu>) return eval_nu(f, q);
            else if constexpr (std::is_same_v<T, Gamma>) return eval_gamma(f, q);
            else if constexpr (std::is_same_v<T, EtaPrime>) return eval_eta_prime(q);
            else return eval_meromorphic(f, q);
        },
        phi);
}

double metric_norm_sq(const TransverseForm& phi, const AffinePoint2& q, const Tangent2& v) {
    return std::norm(eval_form(phi, q).apply(v));
}

double invariance_defect(const TransverseForm& phi, const holonomy::TransversalMap& hol,
                         const AffinePoint2& q, Complex v_fiber) {
    const AffinePoint2 q1 = hol.apply(q);
    const Covector c0 = eval_form(phi, q);
    const Covector c1 = eval_form(phi, q1);
    const bool first_base = hol.base == holonomy::BaseCoord::FirstCoord;
    const Complex before = (first_base ? c0.c2 : c0.c1) * v_fiber;
    const Complex after = (first_base ? c1.c2 : c1.c1) * hol.derivative() * v_fiber;
    return std::abs(std::norm(after) - std::norm(before));
}

Tangent2 unit_transverse(const LinearFoliation& F, const AffinePoint2& q,
                         ReferenceMetricId metric) {
    return unit_transverse_of(foliation::tangent_field(F, q), q, metric);
}

Tangent2 unit_transverse_of(const Tangent2& X, const AffinePoint2& q, ReferenceMetricId metric) {
    const double xns = charts::reference_norm_sq(metric, q, X);
    if (xns <= kDenomCutoff) throw SingularPoint("no transverse direction at a singular point");
    // Start from the Euclidean normal and project out the tangent component
    // with respect to the requested metric.
    Tangent2 v{-std::conj(X.v2), std::conj(X.v1)};
    const Complex coef = charts::reference_inner(metric, q, v, X) / xns;
    v = {v.v1 - coef * X.v1, v.v2 - coef * X.v2};
    const double vns = charts::reference_norm_sq(metric, q, v);
    if (vns <= kDenomCutoff) throw SingularPoint("degenerate transverse complement");
    const double inv = 1.0 / std::sqrt(vns);
    return {v.v1 * inv, v.v2 * inv};
}

LowerBoundEstimate lower_bound_estimate(const TransverseForm& phi, const TangentFieldFn& tangent,
                                        const PointSampler& region, ReferenceMetricId metric,
                                        int n_samples, SampleStream& stream) {
    LowerBoundEstimate est;
    est.samples_requested = n_samples;
    est.infimum = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_samples; ++i) {
        const auto q = region(stream);
        if (!q) continue;
        double ratio;
        Tangent2 v;
        try {
            v = unit_transverse_of(tangent(*q), *q, metric);
            ratio = metric_norm_sq(phi, *q, v);
        } catch (const FatouError&) {
            continue;  // form singular or tangent degenerate at the sample
        }
        ++est.samples_used;
        if (ratio < est.infimum) {
            est.infimum = ratio;
            est.argmin = *q;
            est.minimum = {*q, v, ratio, 1.0, ratio};
        }
    }
    if (est.samples_used == 0) throw EmptyRegion("lower_bound_estimate: no valid samples");
    return est;
}

LowerBoundEstimate lower_bound_estimate(const TransverseForm& phi, const LinearFoliation& F,
                                        const PointSampler& region, ReferenceMetricId metric,
                                        int n_samples, SampleStream& stream) {
    return lower_bound_estimate(
        phi, [&F](const AffinePoint2& q) { return foliation::tangent_field(F, q); }, region,
        metric, n_samples, stream);
}

}  // namespace fatou::forms
