#pragma once

#include <vector>

#include "fatou/foliation.hpp"

// Leafwise integration and holonomy of the affine families. Away from the
// axes, leaves of F_alpha are graphs over a declared base coordinate: along
// a base path x(t) the fiber solves y'/y = (mu/lambda) x'(t)/x(t), and
// symmetrically with the roles exchanged. Holonomy germs of a linear
// foliation are linear, so a transport is determined by its multiplier.

namespace fatou::holonomy {

enum class BaseCoord { FirstCoord, SecondCoord };
enum class Axis { FirstAxis, SecondAxis };

/// Piecewise-smooth parametric curve in C, avoiding 0 for loop bases.
class BasePath {
public:
    struct Segment {
        bool arc = false;         // false: straight line from a to b
        Complex a{}, b{};         // line endpoints
        Complex center{};         // arc data
        double radius = 0.0;
        double theta0 = 0.0, theta1 = 0.0;
    };

    static BasePath circle(double radius, double turns = 1.0, double start_angle = 0.0);
    static BasePath arc(Complex center, double radius, double theta0, double theta1);
    static BasePath polyline(const std::vector<Complex>& points);

    BasePath& append(const BasePath& other);

    Complex value(int seg, double t) const;
    Complex derivative(int seg, double t) const;
    int segments() const { return static_cast<int>(segs_.size()); }
    Complex start() const;
    Complex end() const;
    bool closed(double tol = 1e-12) const;
    BasePath reversed() const;

private:
    std::vector<Segment> segs_;
};

struct LeafPath {
    BaseCoord base = BaseCoord::FirstCoord;
    BasePath path;
    Complex start_fiber{1.0, 0.0};
};

struct HolonomyResult {
    Complex end_fiber{};
    Complex multiplier{};   // fiber maps are linear: w -> multiplier * w
    double error_estimate = 0.0;
    long steps = 0;
};

/// Adaptive Dormand-Prince 5(4) integration of the fiber and its variational
/// multiplier along the base path. tol in [1e-12, 1e-3].
HolonomyResult integrate_leaf(const LinearFoliation& F, const LeafPath& path, double tol);

/// Closed-form multipliers of the simple loops: a counterclockwise loop in
/// the first coordinate around the second axis {c1 = 0} acts on the fiber by
/// exp(2*pi*i*mu/lambda) = exp(2*pi*i/alpha); a loop in the second
/// coordinate around the first axis {c2 = 0} gives exp(2*pi*i*alpha).
Complex axis_multiplier(const LinearFoliation& F, Axis axis);

/// | |m| - 1 | > tol. Requires tol in (0, 0.1).
bool is_hyperbolic(Complex multiplier, double tol);

/// Transport germ on the transversal fiber over the base path: the germ is
/// w -> multiplier * w, carried from the fiber over path.start() to the
/// fiber over path.end().
struct TransversalMap {
    BaseCoord base = BaseCoord::FirstCoord;
    Complex base_start{};
    Complex base_end{};
    Complex multiplier{1.0, 0.0};
    double error_estimate = 0.0;

    AffinePoint2 apply(const AffinePoint2& q) const {
        if (base == BaseCoord::FirstCoord) return {base_end, multiplier * q.c2, q.chart};
        return {multiplier * q.c1, base_end, q.chart};
    }
    Complex derivative() const { return multiplier; }
};

TransversalMap holonomy_transport(const LinearFoliation& F, BaseCoord base, const BasePath& path,
                                  double tol);

/// Convenience: straight-segment transport between the base coordinates of
/// two points on nearby leaves.
TransversalMap holonomy_transport(const LinearFoliation& F, const AffinePoint2& from,
                                  const AffinePoint2& to, BaseCoord base, double tol);

}  // namespace fatou::holonomy
