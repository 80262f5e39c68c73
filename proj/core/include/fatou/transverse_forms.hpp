#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "fatou/foliation.hpp"
#include "fatou/holonomy.hpp"
#include "fatou/poly2.hpp"
#include "fatou/sampling.hpp"

// The explicit transverse 1-forms and the Hermitian metrics h = phi (x) conj(phi)
// they induce on the transversal direction, together with the numeric
// invariance and bounded-from-below estimators.
//
// Evaluation conventions (chart XY unless stated):
//   OmegaPrime(lambda, mu):  (1/lambda) dx/x - (1/mu) dy/y for affine F;
//                            the projective extension pairs the roles the
//                            other way around, (1/mu) dx/x - (1/lambda) dy/y,
//                            and is available in all three charts.
//   Eta(alpha), alpha > 0:   (y dx - alpha x dy) / (|x|^{(alpha+1)/alpha} + |y|^{alpha+1});
//                            alpha = 1 also evaluates on charts AB and UV.
//   Nu(alpha), alpha < 0:    (1/alpha) dx/x - dy/y (closed).
//   Gamma(alpha, k, l):      (alpha y dx - x dy) / (|x|^k (|x|^{alpha l} + |y|^l)),
//                            k + alpha l = 1 + alpha, projective; all charts.
//   EtaPrime:                y dx + x dy (= d(xy), closed).
//   MeromorphicClosed(P, Q): dx/Q + dy/P.

namespace fatou::forms {

struct OmegaPrime {
    Complex lambda, mu;
    bool projective = false;
};
struct Eta {
    double alpha;  // > 0
};
struct Nu {
    double alpha;  // < 0
};
struct Gamma {
    double alpha, k, l;  // k + alpha*l = 1 + alpha
};
struct EtaPrime {};
struct MeromorphicClosed {
    Poly2 P, Q;  // form dx/Q + dy/P
};

using TransverseForm = std::variant<OmegaPrime, Eta, Nu, Gamma, EtaPrime, MeromorphicClosed>;

/// |k + alpha*l - 1 - alpha| <= 1e-12.
bool gamma_constraint_check(double alpha, double k, double l);

/// Validating constructors.
TransverseForm make_eta(double alpha);
TransverseForm make_nu(double alpha);
TransverseForm make_gamma(double alpha, double k, double l);
TransverseForm make_meromorphic(const Poly2& P, const Poly2& Q);
/// omega' oriented to annihilate the leaf tangent of F in its ambient.
TransverseForm omega_prime_for(const LinearFoliation& F);

struct Covector {
    Complex c1, c2;  // coefficients of d(c1), d(c2) in the chart of the point
    Complex apply(const Tangent2& v) const { return c1 * v.v1 + c2 * v.v2; }
};

/// Coefficients of the form at q in q's chart. Throws FormSingular on the
/// singular locus (denominator cutoff 1e-12) and ChartUndefined for charts
/// the variant does not extend to.
Covector eval_form(const TransverseForm& phi, const AffinePoint2& q);

/// h(v, v) = |phi_q(v)|^2.
double metric_norm_sq(const TransverseForm& phi, const AffinePoint2& q, const Tangent2& v);

/// Pointwise pullback defect of h under a holonomy transport: the transport
/// germ acts on the transversal fiber, and the defect is
/// | |phi(d hol . v)|^2 at hol(q)  -  |phi(v)|^2 at q |
/// for the fiber-direction vector with component v_fiber.
double invariance_defect(const TransverseForm& phi, const holonomy::TransversalMap& hol,
                         const AffinePoint2& q, Complex v_fiber);

/// Region sampler abstraction used by the estimator; yields chart points.
using PointSampler = std::function<std::optional<AffinePoint2>(SampleStream&)>;

using TangentFieldFn = std::function<Tangent2(const AffinePoint2&)>;

/// One evaluated comparison point of the estimator.
struct MetricSample {
    AffinePoint2 point{};
    Tangent2 transverse_vector{};
    double h_value = 0.0;
    double g_value = 1.0;  // transverse vector is g-normalized
    double ratio = 0.0;
};

struct LowerBoundEstimate {
    double infimum = 0.0;
    AffinePoint2 argmin{};
    MetricSample minimum{};  // full record of the witness sample
    int samples_used = 0;
    int samples_requested = 0;
};

/// Sampling infimum of h(v,v)/g(v,v) over g-unit transverse vectors v, where
/// v at q is the g-orthogonal complement of the leaf tangent. Not a certified
/// bound; deterministic for a fixed stream seed, and nested under refinement.
LowerBoundEstimate lower_bound_estimate(const TransverseForm& phi, const TangentFieldFn& tangent,
                                        const PointSampler& region, ReferenceMetricId metric,
                                        int n_samples, SampleStream& stream);
LowerBoundEstimate lower_bound_estimate(const TransverseForm& phi, const LinearFoliation& F,
                                        const PointSampler& region, ReferenceMetricId metric,
                                        int n_samples, SampleStream& stream);

/// g-unit transverse direction at q (orthogonal complement of the tangent).
Tangent2 unit_transverse_of(const Tangent2& leaf_tangent, const AffinePoint2& q,
                            ReferenceMetricId metric);
Tangent2 unit_transverse(const LinearFoliation& F, const AffinePoint2& q, ReferenceMetricId metric);

}  // namespace fatou::forms
