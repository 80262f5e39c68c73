#include "fatou/foliation.hpp"

#include "fatou/charts.hpp"

namespace fatou::foliation {

FieldPair chart_field(const LinearFoliation& F, ChartId chart) {
    const Complex l = F.lambda(), m = F.mu();
    if (F.ambient() == Ambient::Affine2) {
        if (chart != ChartId::XY)
            throw ChartUndefined("affine foliation lives on chart XY");
        return {l, m};
    }
    // Projective extension: homogeneous field mu*z0 d/dz0 + lambda*z1 d/dz1.
    switch (chart) {
        case ChartId::XY: return {m, l};
        case ChartId::AB: return {m - l, -l};
        case ChartId::UV: return {l - m, -m};
    }
    throw ChartUndefined("unreachable");
}

Tangent2 tangent_field(const LinearFoliation& F, const AffinePoint2& q) {
    const FieldPair f = chart_field(F, q.chart);
    return {f.on_c1 * q.c1, f.on_c2 * q.c2};
}

Complex defining_form_value(const LinearFoliation& F, const AffinePoint2& q, const Tangent2& v) {
    // The kernel form of the field (p*c1, q*c2) is q*c2 dc1 - p*c1 dc2.
    const FieldPair f = chart_field(F, q.chart);
    return f.on_c2 * q.c2 * v.v1 - f.on_c1 * q.c1 * v.v2;
}

LinearFoliation chart_model(const LinearFoliation& G, ChartId chart) {
    if (G.ambient() != Ambient::Projective2)
        throw AmbientMismatch("chart_model expects a projective foliation");
    if (chart != ChartId::XY && std::abs(G.alpha() - 1.0) <= kRealTol)
        throw DegenerateChartModel("chart model degenerates for alpha = 1 outside chart XY");
    // Model label = chart field read in the reversed coordinate order.
    const FieldPair f = chart_field(G, chart);
    return {f.on_c2, f.on_c1, Ambient::Affine2};
}

SingularSet singular_set(const LinearFoliation& F) {
    SingularSet s;
    if (F.ambient() == Ambient::Affine2) {
        s.affine_points.push_back({0.0, 0.0, ChartId::XY});
        return s;
    }
    if (std::abs(F.alpha() - 1.0) <= kRealTol) {
        s.projective_points.emplace_back(0.0, 0.0, 1.0);
        s.transversal_to_line_at_infinity = true;
        return s;
    }
    s.projective_points.emplace_back(0.0, 0.0, 1.0);
    s.projective_points.emplace_back(0.0, 1.0, 0.0);
    s.projective_points.emplace_back(1.0, 0.0, 0.0);
    return s;
}

SingularityType classify_ratio(Complex ratio, double real_tol) {
    if (std::abs(ratio.imag()) <= real_tol && ratio.real() < 0.0)
        return SingularityType::Siegel;
    return SingularityType::Poincare;
}

namespace {

Classification classify_from_ratio(Complex ratio) {
    Classification c;
    c.local_ratio = ratio;
    c.type = classify_ratio(ratio);
    const bool real = std::abs(ratio.imag()) <= kRealTol;
    c.boundary_case = !real ? std::abs(ratio.imag()) <= 10 * kRealTol
                            : std::abs(ratio.real()) <= 10 * kRealTol;
    return c;
}

}  // namespace

Classification classify_singularity(const LinearFoliation& F, const AffinePoint2& p) {
    if (F.ambient() != Ambient::Affine2)
        throw AmbientMismatch("affine point passed for a projective foliation");
    if (std::abs(p.c1) > kDenomCutoff || std::abs(p.c2) > kDenomCutoff)
        throw NotSingular("not a singular point of the affine foliation");
    return classify_from_ratio(F.alpha());
}

Classification classify_singularity(const LinearFoliation& F, const ProjectivePoint& p) {
    if (F.ambient() != Ambient::Projective2)
        throw AmbientMismatch("projective point passed for an affine foliation");
    const SingularSet s = singular_set(F);
    for (const ProjectivePoint& q : s.projective_points) {
        if (!p.equals(q)) continue;
        // Local ratio per chart model: [0:0:1] -> alpha, [0:1:0] -> alpha/(alpha-1),
        // [1:0:0] -> 1/(1-alpha).
        ChartId chart = ChartId::XY;
        if (std::abs(p.coord(1)) > 0.5) chart = ChartId::AB;
        else if (std::abs(p.coord(0)) > 0.5) chart = ChartId::UV;
        return classify_from_ratio(chart_model(F, chart).alpha());
    }
    throw NotSingular("point is not in the singular set");
}

}  // namespace fatou::foliation
