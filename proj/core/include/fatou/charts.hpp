#pragma once

#include "fatou/geometry.hpp"

// Chart maps of CP^2, their differentials, and the two reference metrics
// (Euclidean on C^2, Fubini-Study on CP^2).

namespace fatou::charts {

/// Affine coordinates of p in the given chart.
/// Throws ChartUndefined when the chart's denominator coordinate vanishes
/// (|denominator| <= kDenomCutoff after normalization).
AffinePoint2 to_affine(const ProjectivePoint& p, ChartId chart);

/// Inverse of the chart map; the result is normalized.
ProjectivePoint to_projective(const AffinePoint2& q);

/// Composite chart change; equals to_affine(to_projective(q), to).
AffinePoint2 chart_transition(const AffinePoint2& q, ChartId to);

/// Holomorphic Jacobian of chart_transition at q, as a 2x2 matrix
/// {{m00, m01}, {m10, m11}} acting on column vectors (v1, v2).
struct Jacobian2 {
    Complex m00, m01, m10, m11;
    Tangent2 apply(const Tangent2& v) const {
        return {m00 * v.v1 + m01 * v.v2, m10 * v.v1 + m11 * v.v2};
    }
};
Jacobian2 chart_transition_differential(const AffinePoint2& q, ChartId to);

/// Squared norm of tangent vector v at a chart point.
/// Euclidean2: |v1|^2 + |v2|^2, any chart point of C^2.
/// FubiniStudy: ((1+|z|^2)|v|^2 - |<v,z>|^2) / (1+|z|^2)^2 in the chart of q.
double reference_norm_sq(ReferenceMetricId metric, const AffinePoint2& at, const Tangent2& v);

/// Hermitian inner product of the reference metric at a chart point.
Complex reference_inner(ReferenceMetricId metric, const AffinePoint2& at, const Tangent2& v,
                        const Tangent2& w);

}  // namespace fatou::charts
