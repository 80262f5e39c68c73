#pragma once

#include <map>
#include <optional>
#include <string>

#include "fatou/compact_families.hpp"
#include "fatou/transverse_forms.hpp"

// Orchestration of the two sufficient-condition pipelines (invariant
// bounded-below transverse metric + compact approximation, and the closed
// meromorphic 1-form variant), the known-answer Fatou/Julia classification
// of the linear families, and the counterexample suite.

namespace fatou::verify {

/// F-invariant open sets the scenarios run over. Samplers draw chart-XY
/// representatives inside a documented bounded window; contains() is exact.
struct RegionSpec {
    enum class Kind {
        ComplementOfAxes,          // C^2 \ {xy = 0}
        ComplementOfOrigin,        // C^2 \ {(0,0)}
        ComplementOfCoordTriangle, // CP^2 \ {z0 z1 z2 = 0}
        ComplementOfTwoLines,      // CP^2 \ {z_i z_j = 0}
        ComplementOfPoint,         // CP^2 \ {[0:0:1]}
        HalfSpaceYNonzero,         // C^2 \ {y = 0}
        MeromorphicComplement,     // C^2 \ {P Q = 0}
    };

    Kind kind = Kind::ComplementOfOrigin;
    int line_i = 1, line_j = 2;      // ComplementOfTwoLines
    Poly2 P, Q;                      // MeromorphicComplement
    double inner_floor = 5e-2;       // sampling window floor
    double outer_reach = 2.0;        // sampling window reach

    Ambient ambient() const;
    bool contains(const AffinePoint2& xy_point) const;
    bool contains(const ProjectivePoint& p) const;
    forms::PointSampler sampler() const;
    std::string name() const;
};

RegionSpec region_complement_of_axes();
RegionSpec region_complement_of_origin();
RegionSpec region_complement_of_coord_triangle();
RegionSpec region_complement_of_two_lines(int i, int j);
RegionSpec region_complement_of_point();
RegionSpec region_half_space_y_nonzero();

enum class VerdictKind { FatouSubset, Inconclusive, KnownJuliaIntersection };

struct HypothesisEvidence {
    bool passed = false;
    std::string name;
    std::string detail;
    std::map<std::string, double> numbers;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::vector<HypothesisEvidence> evidence;
    std::vector<std::string> failed;

    bool fatou() const { return kind == VerdictKind::FatouSubset; }
};

struct CheckParams {
    int n_holonomy = 50;
    int n_lower_bound = 16000;
    int refine_factor = 4;
    double c_min = 1e-6;
    double invariance_tol = 1e-6;
    double stability = 0.10;     // relative change allowed under refinement
    double integrator_tol = 1e-9;
    int boundary_samples = 400;
    int union_samples = 400;
    std::uint64_t seed = 20240607ULL;
};

/// Sufficient-condition check: invariant metric evidence (holonomy-transport
/// defects + refinement-stable positive lower bound) and compact-approximation
/// evidence (nesting, boundary kind, generation certificate, exhaustion).
/// One-directional: never claims Julia membership.
Verdict certify_invariant_metric(const LinearFoliation& F, const RegionSpec& U, const forms::TransverseForm& phi,
                    const compact::CompactApproxFamily& fam, const CheckParams& params);

struct FatouJuliaDescription {
    std::string fatou;           // human-readable region description
    std::string julia;
    std::optional<RegionSpec> fatou_region;  // when expressible as a RegionSpec
    std::string source;          // provenance note
    bool lower_confidence = false;
    bool via_swap = false;       // alpha > 1 handled through alpha -> 1/alpha
};

/// Known-answer classification per branch of the linear-family table.
/// Throws UnclassifiedAlpha for alpha within tolerance of a branch boundary.
FatouJuliaDescription known_classification(Complex alpha, Ambient ambient);

struct ClosednessResult {
    bool closed = false;
    double residual_max_coeff = 0.0;   // of d(omega') as a rational-numerator polynomial
    Complex residual_witness{};        // d(omega') coefficient evaluated at a sample point
    AffinePoint2 witness_point{};
};

/// Symbolic closedness of omega' = dx/Q + dy/P:
/// d(omega') = 0 iff Q_y P^2 - P_x Q^2 = 0 identically.
ClosednessResult closedness_check(const Poly2& P, const Poly2& Q);

/// Condition-(H) pipeline: builds the meromorphic form, checks closedness
/// symbolically (NotClosed evidence on failure), records the pole set and the
/// automatic no-zeroes fact, then delegates to the metric and family checks.
Verdict certify_closed_form(const Poly2& P, const Poly2& Q, const compact::CompactApproxFamily& fam,
                     const CheckParams& params);

struct CounterexampleEntry {
    std::string id;
    std::string statement;
    std::map<std::string, double> numbers;
    std::string citation;
};

/// The three necessity witnesses: hyperbolic axis holonomy (no invariant
/// metric), the known-answer no-compact-approximation record, and the
/// invariant-but-unbounded metric decay table.
std::vector<CounterexampleEntry> counterexample_suite();

}  // namespace fatou::verify
