#include "fatou/compact_families.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "fatou/charts.hpp"

namespace fatou::compact {

namespace {

constexpr double kBoundaryTol = 1e-9;
constexpr double kIndicatorTol = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double sq(double v) { return v * v; }

}  // namespace

Ambient ambient(const CompactApproxFamily& fam) {
    return std::visit(overloaded{
                          [](const ProjectiveTriple&) { return Ambient::Projective2; },
                          [](const ProjectiveF&) { return Ambient::Projective2; },
                          [](const WeightedCone&) { return Ambient::Projective2; },
                          [](const AffineConeG1&) { return Ambient::Projective2; },
                          [](const auto&) { return Ambient::Affine2; },
                      },
                      fam);
}

std::string family_name(const CompactApproxFamily& fam) {
    return std::visit(overloaded{
                          [](const SphereComplement&) { return std::string("sphere_complement"); },
                          [](const SiegelLevel&) { return std::string("siegel_level"); },
                          [](const ProjectiveTriple&) { return std::string("projective_triple"); },
                          [](const ProjectiveF&) { return std::string("projective_f"); },
                          [](const AnnulusNormSq&) { return std::string("annulus_norm_sq"); },
                          [](const AnnulusProduct&) { return std::string("annulus_product"); },
                          [](const WeightedCone&) { return std::string("weighted_cone"); },
                          [](const AffineConeG1&) { return std::string("affine_cone_g1"); },
                          [](const HalfSpaceX&) { return std::string("half_space_x"); },
                      },
                      fam);
}

GenerationCertificate generation_certificate(const CompactApproxFamily& fam) {
    using K = GenerationCertificate::Kind;
    return std::visit(
        overloaded{
            [](const SphereComplement&) {
                return GenerationCertificate{K::Asserted,
                                             "complement of a shrinking ball around the "
                                             "singular point; restriction compactly generated"};
            },
            [](const SiegelLevel&) {
                return GenerationCertificate{K::TangentProduct,
                                             "tangent boundary with a product collar"};
            },
            [](const ProjectiveTriple&) { return GenerationCertificate{K::Compact, "K_n compact"}; },
            [](const ProjectiveF&) { return GenerationCertificate{K::Compact, "K_n compact"}; },
            [](const AnnulusNormSq&) { return GenerationCertificate{K::Compact, "K_n compact"}; },
            [](const AnnulusProduct&) { return GenerationCertificate{K::Compact, "K_n compact"}; },
            [](const WeightedCone&) {
                return GenerationCertificate{K::Compact, "K_n closed in CP^2, hence compact"};
            },
            [](const AffineConeG1&) {
                return GenerationCertificate{K::Compact, "K_n closed in CP^2, hence compact"};
            },
            [](const HalfSpaceX&) {
                return GenerationCertificate{K::Asserted,
                                             "half-space family of the bounded-below counterexample"};
            },
        },
        fam);
}

int min_index(const CompactApproxFamily& fam) {
    if (std::holds_alternative<ProjectiveF>(fam)) return 28;  // max f = 1/27
    // ProjectiveTriple: the chart balls {|c1|^2+|c2|^2 < 1/n^2} around two
    // distinct coordinate points force |y| < 1/n and |y| > n simultaneously,
    // impossible once n >= 1, so the three balls are pairwise disjoint (and
    // the singular points are their centers) from n = 1 on.
    return 1;
}

Thresholds thresholds(const CompactApproxFamily& fam, int n) {
    const double dn = static_cast<double>(n);
    return std::visit(
        overloaded{
            [&](const SphereComplement&) { return Thresholds{Side::GreaterEq, 1.0 / (dn * dn), 0.0}; },
            [&](const SiegelLevel&) { return Thresholds{Side::GreaterEq, 1.0 / dn, 0.0}; },
            [&](const ProjectiveTriple&) {
                return Thresholds{Side::GreaterEq, 1.0 / (dn * dn), 0.0};
            },
            [&](const ProjectiveF&) { return Thresholds{Side::GreaterEq, 1.0 / dn, 0.0}; },
            [&](const AnnulusNormSq&) { return Thresholds{Side::Interval, 1.0 / dn, dn}; },
            [&](const AnnulusProduct&) { return Thresholds{Side::Interval, 1.0 / dn, dn}; },
            [&](const WeightedCone&) { return Thresholds{Side::GreaterEq, 1.0 / dn, 0.0}; },
            [&](const AffineConeG1&) { return Thresholds{Side::GreaterEq, 1.0 / dn, 0.0}; },
            [&](const HalfSpaceX&) { return Thresholds{Side::GreaterEq, 1.0 / dn, 0.0}; },
        },
        fam);
}

std::function<double(Complex, Complex)> chart_function(const CompactApproxFamily& fam,
                                                       ChartId chart) {
    const bool xy = chart == ChartId::XY;
    return std::visit(
        overloaded{
            [&](const SphereComplement&) -> std::function<double(Complex, Complex)> {
                if (!xy) throw ChartUndefined("affine family lives on chart XY");
                return [](Complex x, Complex y) { return std::norm(x) + std::norm(y); };
            },
            [&](const SiegelLevel& f) -> std::function<double(Complex, Complex)> {
                if (!xy) throw ChartUndefined("affine family lives on chart XY");
                const double a = f.alpha;
                return [a](Complex x, Complex y) {
                    return std::abs(x) * std::pow(std::abs(y), -a);
                };
            },
            [&](const ProjectiveTriple&) -> std::function<double(Complex, Complex)> {
                // Local ball function of the chart's own coordinate point.
                return [](Complex c1, Complex c2) { return std::norm(c1) + std::norm(c2); };
            },
            [&](const ProjectiveF&) -> std::function<double(Complex, Complex)> {
                // f has the same shape in each chart by symmetry of the display.
                return [](Complex c1, Complex c2) {
                    const double s = std::norm(c1), t = std::norm(c2);
                    const double d = 1.0 + s + t;
                    return s * t / (d * d * d);
                };
            },
            [&](const AnnulusNormSq&) -> std::function<double(Complex, Complex)> {
                if (!xy) throw ChartUndefined("affine family lives on chart XY");
                return [](Complex x, Complex y) { return std::norm(x) + std::norm(y); };
            },
            [&](const AnnulusProduct&) -> std::function<double(Complex, Complex)> {
                if (!xy) throw ChartUndefined("affine family lives on chart XY");
                return [](Complex x, Complex y) { return std::abs(x) * std::abs(y); };
            },
            [&](const WeightedCone& f) -> std::function<double(Complex, Complex)> {
                const double a = f.alpha;
                switch (chart) {
                    case ChartId::XY:
                        return [a](Complex x, Complex y) {
                            return std::pow(std::abs(x), 1.0 - a) / std::abs(y);
                        };
                    case ChartId::AB:
                        return [a](Complex p, Complex q) {
                            return std::pow(std::abs(p), 1.0 - a) * std::pow(std::abs(q), a);
                        };
                    case ChartId::UV:
                        return [a](Complex p, Complex q) {
                            return std::pow(std::abs(q), a) / std::abs(p);
                        };
                }
                throw ChartUndefined("unreachable");
            },
            [&](const AffineConeG1&) -> std::function<double(Complex, Complex)> {
                switch (chart) {
                    case ChartId::XY:
                        return [](Complex x, Complex y) { return std::norm(x) + std::norm(y); };
                    case ChartId::AB:
                        return [](Complex p, Complex q) {
                            return (std::norm(p) + 1.0) / std::norm(q);
                        };
                    case ChartId::UV:
                        return [](Complex p, Complex q) {
                            return (1.0 + std::norm(p)) / std::norm(q);
                        };
                }
                throw ChartUndefined("unreachable");
            },
            [&](const HalfSpaceX&) -> std::function<double(Complex, Complex)> {
                if (!xy) throw ChartUndefined("affine family lives on chart XY");
                return [](Complex x, Complex) { return std::abs(x); };
            },
        },
        fam);
}

double defining_value(const CompactApproxFamily& fam, const AffinePoint2& p) {
    if (ambient(fam) == Ambient::Affine2 && p.chart != ChartId::XY)
        throw ChartUndefined("affine family expects chart XY points");
    return chart_function(fam, p.chart)(p.c1, p.c2);
}

double defining_value(const CompactApproxFamily& fam, const ProjectivePoint& p) {
    if (ambient(fam) != Ambient::Projective2)
        throw AmbientMismatch("projective point passed to an affine family");
    const double n0 = std::abs(p.z0()), n1 = std::abs(p.z1()), n2 = std::abs(p.z2());
    return std::visit(
        overloaded{
            [&](const ProjectiveF&) {
                return sq(n0) * sq(n1) * sq(n2);  // coordinates normalized to unit length
            },
            [&](const WeightedCone& f) {
                const double num = std::pow(n0, 1.0 - f.alpha) * std::pow(n2, f.alpha);
                if (n1 <= kDenomCutoff) return std::numeric_limits<double>::infinity();
                return num / n1;
            },
            [&](const AffineConeG1&) {
                if (n2 <= kDenomCutoff) return std::numeric_limits<double>::infinity();
                return (sq(n0) + sq(n1)) / sq(n2);
            },
            [&](const ProjectiveTriple&) {
                double best = std::numeric_limits<double>::infinity();
                for (ChartId c : {ChartId::XY, ChartId::AB, ChartId::UV}) {
                    try {
                        const AffinePoint2 q = charts::to_affine(p, c);
                        best = std::min(best, std::norm(q.c1) + std::norm(q.c2));
                    } catch (const ChartUndefined&) {
                        // the point sits on this chart's removed line
                    }
                }
                return best;
            },
            [&](const auto&) -> double { throw AmbientMismatch("unreachable"); },
        },
        fam);
}

namespace {

bool satisfies(const Thresholds& th, double g) {
    if (th.side == Side::GreaterEq) return g >= th.lo;
    return g >= th.lo && g <= th.hi;
}

bool strictly_inside(const Thresholds& th, double g) {
    if (th.side == Side::GreaterEq) return g > th.lo;
    return g > th.lo && g < th.hi;
}

void require_index(const CompactApproxFamily& fam, int n) {
    if (n < min_index(fam))
        throw IndexTooSmall(family_name(fam) + ": index " + std::to_string(n) +
                            " below minimal admissible " + std::to_string(min_index(fam)));
}

}  // namespace

bool contains(const CompactApproxFamily& fam, int n, const AffinePoint2& p) {
    require_index(fam, n);
    if (ambient(fam) == Ambient::Projective2)
        return contains(fam, n, charts::to_projective(p));
    return satisfies(thresholds(fam, n), defining_value(fam, p));
}

bool contains(const CompactApproxFamily& fam, int n, const ProjectivePoint& p) {
    require_index(fam, n);
    return satisfies(thresholds(fam, n), defining_value(fam, p));
}

std::vector<AffinePoint2> sample_boundary(const CompactApproxFamily& fam, int n, int count,
                                          SampleStream& stream) {
    require_index(fam, n);
    const Thresholds th = thresholds(fam, n);
    std::vector<AffinePoint2> out;
    out.reserve(count);

    auto unit_pair = [&](double min_mod) {
        Complex d1, d2;
        do {
            d1 = stream.disc(0.0, 1.0);
            d2 = stream.disc(0.0, 1.0);
        } while (std::abs(d1) < min_mod || std::abs(d2) < min_mod);
        const double s = std::sqrt(std::norm(d1) + std::norm(d2));
        return std::pair<Complex, Complex>{d1 / s, d2 / s};
    };

    // Power-homogeneous radial solve: g(t*d1, t*d2) = t^deg * g(d1, d2).
    auto radial = [&](double deg, double min_mod, double level) {
        const auto [d1, d2] = unit_pair(min_mod);
        const double g1 = chart_function(fam, ChartId::XY)(d1, d2);
        const double t = std::pow(level / g1, 1.0 / deg);
        return AffinePoint2{t * d1, t * d2, ChartId::XY};
    };

    for (int i = 0; i < count; ++i) {
        const bool upper = (th.side == Side::Interval) && (i % 2 == 1);
        const double level = upper ? th.hi : th.lo;
        std::visit(
            overloaded{
                [&](const SphereComplement&) { out.push_back(radial(2.0, 0.0, level)); },
                [&](const AnnulusNormSq&) { out.push_back(radial(2.0, 0.0, level)); },
                [&](const AnnulusProduct&) { out.push_back(radial(2.0, 0.05, level)); },
                [&](const SiegelLevel& f) { out.push_back(radial(1.0 - f.alpha, 0.05, level)); },
                [&](const HalfSpaceX&) {
                    const double phase = stream.angle();
                    out.push_back(AffinePoint2{level * Complex{std::cos(phase), std::sin(phase)},
                                               stream.annulus(0.05, 1.5), ChartId::XY});
                },
                [&](const WeightedCone& f) {
                    const Complex x = stream.annulus(0.2, 2.0);
                    const double ym = std::pow(std::abs(x), 1.0 - f.alpha) / level;
                    const double phase = stream.angle();
                    out.push_back(
                        AffinePoint2{x, ym * Complex{std::cos(phase), std::sin(phase)}, ChartId::XY});
                },
                [&](const AffineConeG1&) { out.push_back(radial(2.0, 0.0, level)); },
                [&](const ProjectiveTriple&) {
                    const int which = static_cast<int>(stream.uniform(0.0, 3.0));
                    const ChartId chart = which == 0   ? ChartId::XY
                                          : which == 1 ? ChartId::AB
                                                       : ChartId::UV;
                    const auto [d1, d2] = unit_pair(0.0);
                    const double r = 1.0 / static_cast<double>(n);
                    out.push_back(AffinePoint2{r * d1, r * d2, chart});
                },
                [&](const ProjectiveF&) {
                    // Unimodal along radial rays in the chart; bisect from an
                    // interior anchor outward/inward alternately.
                    const Complex ph1 = std::polar(1.0, stream.angle());
                    const Complex ph2 = std::polar(1.0, stream.angle());
                    const double m1 = stream.uniform(0.9, 1.1);
                    const double m2 = stream.uniform(0.9, 1.1);
                    auto g = chart_function(fam, ChartId::XY);
                    auto at = [&](double t) { return g(t * m1 * ph1, t * m2 * ph2); };
                    double lo = 1.0, hi = (i % 2 == 0) ? 8.0 : 0.05;
                    if (at(lo) < level) {  // anchor fell outside; retry nearer (1,1)
                        --i;
                        return;
                    }
                    for (int it = 0; it < 200; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        if (at(mid) >= level) lo = mid;
                        else hi = mid;
                        if (std::abs(at(0.5 * (lo + hi)) - level) < 0.1 * kBoundaryTol) break;
                    }
                    const double t = 0.5 * (lo + hi);
                    out.push_back(AffinePoint2{t * m1 * ph1, t * m2 * ph2, ChartId::XY});
                },
            },
            fam);
    }
    return out;
}

bool nesting_check(const CompactApproxFamily& fam, int n, int n_samples, SampleStream& stream) {
    require_index(fam, n);
    const Thresholds next = thresholds(fam, n + 1);
    // Boundary points of K_n are the tight spots; all must be strictly
    // interior to K_{n+1}.
    for (const AffinePoint2& p : sample_boundary(fam, n, n_samples, stream)) {
        const double g = ambient(fam) == Ambient::Projective2
                             ? defining_value(fam, charts::to_projective(p))
                             : defining_value(fam, p);
        if (!strictly_inside(next, g)) return false;
    }
    return true;
}

std::pair<Complex, Complex> wirtinger_gradient(const std::function<double(Complex, Complex)>& g,
                                               Complex x, Complex y, double step) {
    if (!(step >= 1e-7 && step <= 1e-4))
        throw FatouError("wirtinger_gradient: step must lie in [1e-7, 1e-4]");
    const Complex i{0.0, 1.0};
    auto d = [&](auto f) {
        const double re = (f(step) - f(-step)) / (2.0 * step);
        const double im = (f(step * i) - f(-step * i)) / (2.0 * step);
        return Complex{re, -im} * 0.5;  // d/dz = (d/dre - i d/dim)/2
    };
    const Complex gx = d([&](Complex h) { return g(x + h, y); });
    const Complex gy = d([&](Complex h) { return g(x, y + h); });
    return {gx, gy};
}

Complex transversality_indicator_at(const LinearFoliation& F, const CompactApproxFamily& fam,
                                    const AffinePoint2& p) {
    const Tangent2 X = foliation::tangent_field(F, p);
    const auto g = chart_function(fam, p.chart);
    const auto [gx, gy] = wirtinger_gradient(g, p.c1, p.c2);
    return X.v1 * gx + X.v2 * gy;
}

Complex transversality_indicator(const LinearFoliation& F, const CompactApproxFamily& fam,
                                 const AffinePoint2& p, int n) {
    require_index(fam, n);
    const Thresholds th = thresholds(fam, n);
    const double g = chart_function(fam, p.chart)(p.c1, p.c2);
    const bool on_lo = std::abs(g - th.lo) < kBoundaryTol;
    const bool on_hi = th.side == Side::Interval && std::abs(g - th.hi) < kBoundaryTol;
    if (!on_lo && !on_hi) throw NotOnBoundary("point is not on the K_n boundary");
    const Tangent2 X = foliation::tangent_field(F, p);
    if (std::abs(X.v1) + std::abs(X.v2) <= kDenomCutoff)
        throw SingularPoint("foliation singular at the boundary point");
    return transversality_indicator_at(F, fam, p);
}

Complex eq215_indicator(Complex lambda, Complex mu, const AffinePoint2& q) {
    const double s = std::norm(q.c1), t = std::norm(q.c2);
    return lambda * (1.0 - 2.0 * s + t) + mu * (1.0 - 2.0 * t + s);
}

BoundaryKindDetail boundary_kind_detail(const LinearFoliation& F, const CompactApproxFamily& fam,
                                        int n_samples, SampleStream& rng) {
    if ((F.ambient() == Ambient::Projective2) != (ambient(fam) == Ambient::Projective2))
        throw AmbientMismatch("boundary_kind: foliation and family ambients differ");

    BoundaryKindDetail d{BoundaryKind::TransversalBoundary,
                         std::numeric_limits<double>::infinity(), 0.0, 0};
    for (int n : {min_index(fam), min_index(fam) + 2}) {
        for (const AffinePoint2& p : sample_boundary(fam, n, n_samples / 2, rng)) {
            const double a = std::abs(transversality_indicator(F, fam, p, n));
            d.min_indicator_abs = std::min(d.min_indicator_abs, a);
            d.max_indicator_abs = std::max(d.max_indicator_abs, a);
            ++d.samples;
        }
    }
    if (d.max_indicator_abs < kIndicatorTol) d.kind = BoundaryKind::TangentBoundary;
    else if (d.min_indicator_abs > kIndicatorTol) d.kind = BoundaryKind::TransversalBoundary;
    else
        throw MixedBoundary("boundary is neither uniformly tangent nor uniformly transversal");
    return d;
}

BoundaryKind boundary_kind(const LinearFoliation& F, const CompactApproxFamily& fam, int n_samples,
                           SampleStream* stream) {
    SampleStream local(20240607ULL, "boundary_kind");
    return boundary_kind_detail(F, fam, n_samples, stream ? *stream : local).kind;
}

UnionCheck union_check(const CompactApproxFamily& fam,
                       const std::function<AffinePoint2(SampleStream&)>& region_sampler,
                       int n_samples, int n_cap, SampleStream& stream) {
    UnionCheck res;
    for (int i = 0; i < n_samples; ++i) {
        const AffinePoint2 p = region_sampler(stream);
        int n = min_index(fam);
        bool found = false;
        while (n <= n_cap) {
            if (contains(fam, n, p)) {
                found = true;
                break;
            }
            n = n * 2 + 1;
        }
        if (!found) {
            res.ok = false;
            res.witness = p;
            return res;
        }
        res.max_index = std::max(res.max_index, n);
    }
    return res;
}

void export_boundary_indicator_csv(std::ostream& os, const LinearFoliation& F,
                                   const CompactApproxFamily& fam, int n, int count,
                                   SampleStream& stream) {
    os << "chart,c1_re,c1_im,c2_re,c2_im,g,indicator_re,indicator_im,indicator_abs\n";
    for (const AffinePoint2& p : sample_boundary(fam, n, count, stream)) {
        const double g = chart_function(fam, p.chart)(p.c1, p.c2);
        const Complex ind = transversality_indicator_at(F, fam, p);
        os << to_string(p.chart) << ',' << p.c1.real() << ',' << p.c1.imag() << ',' << p.c2.real()
           << ',' << p.c2.imag() << ',' << g << ',' << ind.real() << ',' << ind.imag() << ','
           << std::abs(ind) << '\n';
    }
}

}  // namespace fatou::compact
