#pragma once

#include <vector>

#include "fatou/geometry.hpp"

// The linear foliation families: on C^2 the foliation F_alpha defined by
// omega = mu*y dx - lambda*x dy (leaf tangent X = (lambda*x, mu*y)), and its
// extension G_alpha to CP^2.
//
// Chart bookkeeping for the projective extension: the affine models of
// G_alpha in the three standard charts trace the classical ratio triple
//   XY -> alpha,  AB -> alpha/(alpha-1),  UV -> 1/(1-alpha),
// where each model is labeled in the chart's transversal ordering; the
// actual chart vector field is the model field with the two coordinates
// read in reverse order (see chart_field).

namespace fatou {

enum class SingularityType { Poincare, Siegel };

class LinearFoliation {
public:
    LinearFoliation(Complex lambda, Complex mu, Ambient ambient)
        : lambda_(lambda), mu_(mu), ambient_(ambient) {
        if (std::abs(lambda) <= kDenomCutoff || std::abs(mu) <= kDenomCutoff)
            throw FatouError("LinearFoliation requires lambda, mu != 0");
        if (!is_finite(lambda) || !is_finite(mu))
            throw FatouError("LinearFoliation requires finite lambda, mu");
    }

    Complex lambda() const { return lambda_; }
    Complex mu() const { return mu_; }
    Ambient ambient() const { return ambient_; }

    Complex alpha() const { return lambda_ / mu_; }

    bool alpha_is_real(double tol = kRealTol) const { return std::abs(alpha().imag()) <= tol; }

private:
    Complex lambda_, mu_;
    Ambient ambient_;
};

/// F_alpha on C^2 with the normalization (lambda, mu) = (alpha, 1).
inline LinearFoliation affine_foliation(Complex alpha) {
    return {alpha, 1.0, Ambient::Affine2};
}
/// G_alpha on CP^2 with the same normalization.
inline LinearFoliation projective_foliation(Complex alpha) {
    return {alpha, 1.0, Ambient::Projective2};
}

namespace foliation {

/// Coefficient pair (p, q) of the leaf tangent field (p*c1, q*c2) in the
/// given chart. Affine ambient lives on chart XY only.
struct FieldPair {
    Complex on_c1;
    Complex on_c2;
};
FieldPair chart_field(const LinearFoliation& F, ChartId chart);

/// Leaf tangent vector at q, in q's chart coordinates. Vanishes exactly at
/// singular points.
Tangent2 tangent_field(const LinearFoliation& F, const AffinePoint2& q);

/// Evaluation of the defining 1-form of the chart model on a tangent vector;
/// identically zero on tangent_field.
Complex defining_form_value(const LinearFoliation& F, const AffinePoint2& q, const Tangent2& v);

/// Affine model of a projective foliation in one chart, labeled so the
/// model of chart XY is F_alpha itself. AB carries alpha/(alpha-1) and UV
/// carries 1/(1-alpha); both degenerate when alpha = 1.
LinearFoliation chart_model(const LinearFoliation& G, ChartId chart);

struct SingularSet {
    std::vector<AffinePoint2> affine_points;
    std::vector<ProjectivePoint> projective_points;
    // alpha = 1 only: Sing G_1 = {[0:0:1]} and G_1 is transversal to the
    // line at infinity.
    bool transversal_to_line_at_infinity = false;
};
SingularSet singular_set(const LinearFoliation& F);

struct Classification {
    SingularityType type;
    Complex local_ratio;
    // Set when the ratio sits within tolerance of the real axis boundary
    // cases the classification is discontinuous across.
    bool boundary_case = false;
};

Classification classify_singularity(const LinearFoliation& F, const AffinePoint2& p);
Classification classify_singularity(const LinearFoliation& F, const ProjectivePoint& p);

/// Siegel iff the ratio is real (|Im| <= tol) with negative real part.
SingularityType classify_ratio(Complex ratio, double real_tol = kRealTol);

}  // namespace foliation
}  // namespace fatou
