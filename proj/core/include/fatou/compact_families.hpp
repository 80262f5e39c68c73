#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "fatou/foliation.hpp"
#include "fatou/sampling.hpp"

// The K_n families with membership, defining functions, nesting and
// boundary-transversality checks. Boundaries are certified by sampling the
// Wirtinger transversality indicator sum_i X_i dg/dz_i along root-found
// boundary points.

namespace fatou::compact {

// K_n = {|x|^2 + |y|^2 >= 1/n^2} on C^2.
struct SphereComplement {};
// K_n = {|x| |y|^{-alpha} >= 1/n} on C^2, alpha < 0 (level sets of a leafwise
// first integral: tangent boundaries).
struct SiegelLevel {
    double alpha;
};
// CP^2 minus the three chart balls of radius 1/n around the coordinate points.
struct ProjectiveTriple {};
// K_n = {f >= 1/n}, f = |z0 z1 z2|^2 / (|z0|^2+|z1|^2+|z2|^2)^3; n >= 28.
struct ProjectiveF {};
// K_n = {1/n <= |x|^2 + |y|^2 <= n} on C^2.
struct AnnulusNormSq {};
// K_n = {1/n <= |x| |y| <= n} on C^2.
struct AnnulusProduct {};
// K_n = {|z0|^{1-alpha} |z2|^alpha >= |z1|/n} on CP^2, 0 < alpha < 1.
struct WeightedCone {
    double alpha;
};
// K_n = {(|z0|^2 + |z1|^2)/|z2|^2 >= 1/n} on CP^2 (degree-2 homogeneous
// reading; the chart trace is {|x|^2 + |y|^2 >= 1/n} plus the line z2 = 0).
struct AffineConeG1 {};
// K_n = {|x| >= 1/n} on C^2.
struct HalfSpaceX {};

using CompactApproxFamily =
    std::variant<SphereComplement, SiegelLevel, ProjectiveTriple, ProjectiveF, AnnulusNormSq,
                 AnnulusProduct, WeightedCone, AffineConeG1, HalfSpaceX>;

enum class BoundaryKind { TransversalBoundary, TangentBoundary };
enum class Side { GreaterEq, Interval };

// Why condition iii of the compact-approximation definition holds for the
// family: the K_n are compact, the tangent-boundary product-collar case, or
// an assertion carried with its provenance.
struct GenerationCertificate {
    enum class Kind { Compact, TangentProduct, Asserted } kind;
    std::string note;
};

Ambient ambient(const CompactApproxFamily& fam);
std::string family_name(const CompactApproxFamily& fam);
GenerationCertificate generation_certificate(const CompactApproxFamily& fam);

/// Real defining function value at a point (independent of the index n).
double defining_value(const CompactApproxFamily& fam, const AffinePoint2& p);
double defining_value(const CompactApproxFamily& fam, const ProjectivePoint& p);

struct Thresholds {
    Side side;
    double lo;  // g >= lo (both kinds)
    double hi;  // g <= hi (Interval only)
};
Thresholds thresholds(const CompactApproxFamily& fam, int n);

int min_index(const CompactApproxFamily& fam);

bool contains(const CompactApproxFamily& fam, int n, const AffinePoint2& p);
bool contains(const CompactApproxFamily& fam, int n, const ProjectivePoint& p);

/// Samples K_n and checks the strict K_{n+1}-interior inequality; for these
/// monotone families the check must pass exactly.
bool nesting_check(const CompactApproxFamily& fam, int n, int n_samples, SampleStream& stream);

/// Central finite-difference Wirtinger gradient (dg/dx, dg/dy) of a real
/// function of two complex variables. step in [1e-7, 1e-4]; error O(step^2).
std::pair<Complex, Complex> wirtinger_gradient(
    const std::function<double(Complex, Complex)>& g, Complex x, Complex y, double step = 1e-5);

/// The family's defining function as a chart-local real function.
std::function<double(Complex, Complex)> chart_function(const CompactApproxFamily& fam,
                                                       ChartId chart);

/// Pointwise transversality field sum_i X_i dg/dz_i (no boundary membership
/// check); p given in a chart where the family's g is defined.
Complex transversality_indicator_at(const LinearFoliation& F, const CompactApproxFamily& fam,
                                    const AffinePoint2& p);

/// Boundary-checked version: requires |g(p) - level(n)| < 1e-9 (NotOnBoundary)
/// and a nonvanishing leaf tangent at p (SingularPoint).
Complex transversality_indicator(const LinearFoliation& F, const CompactApproxFamily& fam,
                                 const AffinePoint2& p, int n);

/// lambda (1 - 2|x|^2 + |y|^2) + mu (1 - 2|y|^2 + |x|^2).
Complex eq215_indicator(Complex lambda, Complex mu, const AffinePoint2& q);

/// Root-found points of the boundary component(s) of K_n, |g - level| < 1e-9.
std::vector<AffinePoint2> sample_boundary(const CompactApproxFamily& fam, int n, int count,
                                          SampleStream& stream);

/// Decides the boundary kind by sampling |indicator| on the n-th boundary:
/// all below 1e-9 -> Tangent, all above -> Transversal, else MixedBoundary.
BoundaryKind boundary_kind(const LinearFoliation& F, const CompactApproxFamily& fam,
                           int n_samples = 500, SampleStream* stream = nullptr);

/// Same decision plus the sampled indicator range (certification evidence).
struct BoundaryKindDetail {
    BoundaryKind kind;
    double min_indicator_abs;
    double max_indicator_abs;
    int samples;
};
BoundaryKindDetail boundary_kind_detail(const LinearFoliation& F, const CompactApproxFamily& fam,
                                        int n_samples, SampleStream& stream);

struct UnionCheck {
    bool ok = true;
    int max_index = 0;
    AffinePoint2 witness{};  // sample not swallowed by any K_n when !ok
};
/// Every sampled region point must lie in some K_n; max admissible index and
/// the first failure witness are reported.
UnionCheck union_check(const CompactApproxFamily& fam,
                       const std::function<AffinePoint2(SampleStream&)>& region_sampler,
                       int n_samples, int n_cap, SampleStream& stream);

/// CSV export: boundary samples with g and indicator columns
/// (coord1 re/im, coord2 re/im, g, indicator re, indicator im, abs).
void export_boundary_indicator_csv(std::ostream& os, const LinearFoliation& F,
                                   const CompactApproxFamily& fam, int n, int count,
                                   SampleStream& stream);

}  // namespace fatou::compact
