#include "fatou/holonomy.hpp"

#include <algorithm>
#include <array>

namespace fatou::holonomy {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kBaseFloor = 1e-9;
constexpr long kMaxSteps = 1000000;
}  // namespace

BasePath BasePath::circle(double radius, double turns, double start_angle) {
    BasePath p;
    Segment s;
    s.arc = true;
    s.center = 0.0;
    s.radius = radius;
    s.theta0 = start_angle;
    s.theta1 = start_angle + 2.0 * kPi * turns;
    p.segs_.push_back(s);
    return p;
}

BasePath BasePath::arc(Complex center, double radius, double theta0, double theta1) {
    BasePath p;
    Segment s;
    s.arc = true;
    s.center = center;
    s.radius = radius;
    s.theta0 = theta0;
    s.theta1 = theta1;
    p.segs_.push_back(s);
    return p;
}

BasePath BasePath::polyline(const std::vector<Complex>& points) {
    BasePath p;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        Segment s;
        s.a = points[i];
        s.b = points[i + 1];
        p.segs_.push_back(s);
    }
    return p;
}

BasePath& BasePath::append(const BasePath& other) {
    segs_.insert(segs_.end(), other.segs_.begin(), other.segs_.end());
    return *this;
}

Complex BasePath::value(int seg, double t) const {
    const Segment& s = segs_[seg];
    if (!s.arc) return s.a + t * (s.b - s.a);
    const double th = s.theta0 + t * (s.theta1 - s.theta0);
    return s.center + s.radius * Complex{std::cos(th), std::sin(th)};
}

Complex BasePath::derivative(int seg, double t) const {
    const Segment& s = segs_[seg];
    if (!s.arc) return s.b - s.a;
    const double th = s.theta0 + t * (s.theta1 - s.theta0);
    const double dth = s.theta1 - s.theta0;
    return s.radius * dth * Complex{-std::sin(th), std::cos(th)};
}

Complex BasePath::start() const { return value(0, 0.0); }
Complex BasePath::end() const { return value(segments() - 1, 1.0); }

bool BasePath::closed(double tol) const { return std::abs(end() - start()) <= tol; }

BasePath BasePath::reversed() const {
    BasePath p;
    for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) {
        Segment s = *it;
        if (s.arc) std::swap(s.theta0, s.theta1);
        else std::swap(s.a, s.b);
        p.segs_.push_back(s);
    }
    return p;
}

namespace {

// Exact minimum modulus of a path (distance of each segment to the origin).
double path_min_modulus(const BasePath& p) {
    double best = std::numeric_limits<double>::infinity();
    for (int seg = 0; seg < p.segments(); ++seg) {
        const Complex a = p.value(seg, 0.0);
        const Complex b = p.value(seg, 1.0);
        best = std::min({best, std::abs(a), std::abs(b)});
        // Interior minimum: lines by projection, arcs by the radial angle.
        const Complex d = p.derivative(seg, 0.5);
        if (std::abs(d) < 1e-300) continue;
        const Complex da = p.derivative(seg, 0.0);
        if (std::abs(p.value(seg, 0.5) - 0.5 * (a + b)) < 1e-14 * (1.0 + std::abs(a))) {
            // straight segment: t* = -<a, b-a>/|b-a|^2
            const Complex dir = b - a;
            const double nd = std::norm(dir);
            if (nd > 0) {
                const double t = -std::real(a * std::conj(dir)) / nd;
                if (t > 0.0 && t < 1.0) best = std::min(best, std::abs(a + t * dir));
            }
        } else {
            // arc: sample densely; exact enough for validity checking
            for (int k = 1; k < 64; ++k)
                best = std::min(best, std::abs(p.value(seg, k / 64.0)));
            (void)da;
        }
    }
    return best;
}

// Dormand-Prince 5(4) pair.
struct DP45 {
    static constexpr std::array<double, 7> c{0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static constexpr std::array<std::array<double, 6>, 7> a{{
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    }};
    static constexpr std::array<double, 7> b5{35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                                              -2187.0 / 6784, 11.0 / 84, 0.0};
    static constexpr std::array<double, 7> b4{5179.0 / 57600,  0.0,        7571.0 / 16695,
                                              393.0 / 640,     -92097.0 / 339200,
                                              187.0 / 2100,    1.0 / 40};
};

struct FiberState {
    Complex w;  // fiber value
    Complex m;  // variational multiplier, m(0) = 1
};

}  // namespace

HolonomyResult integrate_leaf(const LinearFoliation& F, const LeafPath& leaf, double tol) {
    if (!(tol >= 1e-12 && tol <= 1e-3))
        throw FatouError("integrate_leaf: tol must lie in [1e-12, 1e-3]");
    if (path_min_modulus(leaf.path) <= kBaseFloor)
        throw PathThroughSingularity("base path passes through 0");
    const foliation::FieldPair f = foliation::chart_field(F, ChartId::XY);
    // Fiber equation coefficient: base FirstCoord => dw/w = (q/p) db/b.
    const Complex kappa = (leaf.base == BaseCoord::FirstCoord) ? f.on_c2 / f.on_c1
                                                               : f.on_c1 / f.on_c2;

    FiberState y{leaf.start_fiber, {1.0, 0.0}};
    long steps = 0;
    double err_accum = 0.0;
    // Error-per-unit-step control keeps the accumulated error near tol over
    // the whole path; split the budget across segments.
    const double seg_tol = tol / leaf.path.segments();

    for (int seg = 0; seg < leaf.path.segments(); ++seg) {
        auto rhs = [&](double t, const FiberState& s) -> FiberState {
            const Complex b = leaf.path.value(seg, t);
            if (std::abs(b) <= kBaseFloor)
                throw PathThroughSingularity("base path passes through 0");
            const Complex coeff = kappa * leaf.path.derivative(seg, t) / b;
            return {coeff * s.w, coeff * s.m};
        };

        double t = 0.0;
        double h = 0.05;
        while (t < 1.0) {
            if (++steps > kMaxSteps) throw ToleranceNotMet("integrate_leaf: step limit reached");
            h = std::min(h, 1.0 - t);

            std::array<FiberState, 7> k;
            for (int i = 0; i < 7; ++i) {
                FiberState yi = y;
                for (int j = 0; j < i; ++j) {
                    yi.w += h * DP45::a[i][j] * k[j].w;
                    yi.m += h * DP45::a[i][j] * k[j].m;
                }
                k[i] = rhs(t + DP45::c[i] * h, yi);
            }
            FiberState y5 = y, y4 = y;
            for (int i = 0; i < 7; ++i) {
                y5.w += h * DP45::b5[i] * k[i].w;
                y5.m += h * DP45::b5[i] * k[i].m;
                y4.w += h * DP45::b4[i] * k[i].w;
                y4.m += h * DP45::b4[i] * k[i].m;
            }
            const double scale = 1.0 + std::max(std::abs(y.w), std::abs(y.m));
            const double err =
                std::max(std::abs(y5.w - y4.w), std::abs(y5.m - y4.m)) / scale;

            if (err <= seg_tol * h) {
                t += h;
                y = y5;
                err_accum += err;
            }
            const double safety =
                0.9 * std::pow(seg_tol * h / std::max(err, 1e-300), 0.25);
            h *= std::clamp(safety, 0.2, 5.0);
            if (h < 1e-14) throw ToleranceNotMet("integrate_leaf: step underflow");
        }
    }

    HolonomyResult r;
    r.end_fiber = y.w;
    r.multiplier = y.m;
    r.error_estimate = err_accum;
    r.steps = steps;
    return r;
}

Complex axis_multiplier(const LinearFoliation& F, Axis axis) {
    const Complex two_pi_i{0.0, 2.0 * kPi};
    const Complex alpha = F.alpha();
    return std::exp(axis == Axis::FirstAxis ? two_pi_i * alpha : two_pi_i / alpha);
}

bool is_hyperbolic(Complex multiplier, double tol) {
    if (!(tol > 0.0 && tol < 0.1))
        throw FatouError("is_hyperbolic: tol must lie in (0, 0.1)");
    return std::abs(std::abs(multiplier) - 1.0) > tol;
}

TransversalMap holonomy_transport(const LinearFoliation& F, BaseCoord base, const BasePath& path,
                                  double tol) {
    LeafPath lp;
    lp.base = base;
    lp.path = path;
    lp.start_fiber = {1.0, 0.0};
    const HolonomyResult r = integrate_leaf(F, lp, tol);
    TransversalMap m;
    m.base = base;
    m.base_start = path.start();
    m.base_end = path.end();
    m.multiplier = r.multiplier;
    m.error_estimate = r.error_estimate;
    return m;
}

TransversalMap holonomy_transport(const LinearFoliation& F, const AffinePoint2& from,
                                  const AffinePoint2& to, BaseCoord base, double tol) {
    const Complex b0 = (base == BaseCoord::FirstCoord) ? from.c1 : from.c2;
    const Complex b1 = (base == BaseCoord::FirstCoord) ? to.c1 : to.c2;
    return holonomy_transport(F, base, BasePath::polyline({b0, b1}), tol);
}

}  // namespace fatou::holonomy
