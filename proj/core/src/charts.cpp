#include "fatou/charts.hpp"

namespace fatou::charts {

namespace {

// Chart denominator: XY divides by z2, AB by z1, UV by z0.
int denominator_index(ChartId chart) {
    switch (chart) {
        case ChartId::XY: return 2;
        case ChartId::AB: return 1;
        case ChartId::UV: return 0;
    }
    return 2;
}

}  // namespace

AffinePoint2 to_affine(const ProjectivePoint& p, ChartId chart) {
    const Complex d = p.coord(denominator_index(chart));
    if (std::abs(d) <= kDenomCutoff)
        throw ChartUndefined(std::string("chart ") + to_string(chart) +
                             " undefined: denominator coordinate vanishes");
    switch (chart) {
        case ChartId::XY: return {p.z0() / d, p.z1() / d, ChartId::XY};
        case ChartId::AB: return {p.z0() / d, p.z2() / d, ChartId::AB};
        case ChartId::UV: return {p.z1() / d, p.z2() / d, ChartId::UV};
    }
    throw ChartUndefined("unreachable");
}

ProjectivePoint to_projective(const AffinePoint2& q) {
    switch (q.chart) {
        case ChartId::XY: return {q.c1, q.c2, 1.0};
        case ChartId::AB: return {q.c1, 1.0, q.c2};
        case ChartId::UV: return {1.0, q.c1, q.c2};
    }
    throw ChartUndefined("unreachable");
}

AffinePoint2 chart_transition(const AffinePoint2& q, ChartId to) {
    if (q.chart == to) return q;
    return to_affine(to_projective(q), to);
}

Jacobian2 chart_transition_differential(const AffinePoint2& q, ChartId to) {
    const Complex s = q.c1, t = q.c2;
    if (q.chart == to) return {1.0, 0.0, 0.0, 1.0};

    // All six transitions are one of three rational patterns; the target
    // chart must be defined at q (same cutoff as chart_transition).
    auto require = [&](Complex d) {
        if (std::abs(d) <= kDenomCutoff)
            throw ChartUndefined("chart transition differential undefined at this point");
    };

    // P1(s,t) = (s/t, 1/t)
    auto p1 = [&]() -> Jacobian2 {
        require(t);
        return {1.0 / t, -s / (t * t), 0.0, -1.0 / (t * t)};
    };
    // P2(s,t) = (t/s, 1/s)
    auto p2 = [&]() -> Jacobian2 {
        require(s);
        return {-t / (s * s), 1.0 / s, -1.0 / (s * s), 0.0};
    };
    // P3(s,t) = (1/s, t/s)
    auto p3 = [&]() -> Jacobian2 {
        require(s);
        return {-1.0 / (s * s), 0.0, -t / (s * s), 1.0 / s};
    };

    // (x,y) -> (a,b) = (x/y, 1/y): P1.   (a,b) -> (x,y) = (a/b, 1/b): P1.
    // (x,y) -> (u,v) = (y/x, 1/x): P2.   (u,v) -> (x,y) = (1/v, u/v): swap-P1, see below.
    // (a,b) -> (u,v) = (1/a, b/a): P3.   (u,v) -> (a,b) = (1/u, v/u): P3.
    switch (q.chart) {
        case ChartId::XY:
            return to == ChartId::AB ? p1() : p2();
        case ChartId::AB:
            return to == ChartId::XY ? p1() : p3();
        case ChartId::UV:
            if (to == ChartId::AB) return p3();
            // (u,v) -> (x,y) = (1/v, u/v)
            require(t);
            return {0.0, -1.0 / (t * t), 1.0 / t, -s / (t * t)};
    }
    throw ChartUndefined("unreachable");
}

double reference_norm_sq(ReferenceMetricId metric, const AffinePoint2& at, const Tangent2& v) {
    return reference_inner(metric, at, v, v).real();
}

Complex reference_inner(ReferenceMetricId metric, const AffinePoint2& at, const Tangent2& v,
                        const Tangent2& w) {
    if (metric == ReferenceMetricId::Euclidean2)
        return v.v1 * std::conj(w.v1) + v.v2 * std::conj(w.v2);

    // Fubini-Study in an affine chart: g(v,w) = ((1+|z|^2)<v,w> - <v,z><z,w>) / (1+|z|^2)^2.
    const double zz = std::norm(at.c1) + std::norm(at.c2);
    const Complex vw = v.v1 * std::conj(w.v1) + v.v2 * std::conj(w.v2);
    const Complex vz = v.v1 * std::conj(at.c1) + v.v2 * std::conj(at.c2);
    const Complex zw = at.c1 * std::conj(w.v1) + at.c2 * std::conj(w.v2);
    const double s = 1.0 + zz;
    return (s * vw - vz * zw) / (s * s);
}

}  // namespace fatou::charts
