#pragma once

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

// Points of C, C^2 and CP^2 with chart bookkeeping, plus the error types
// shared by the rest of the library.

namespace fatou {

using Complex = std::complex<double>;

// Double-precision noise floor used for chart / form denominators.
inline constexpr double kDenomCutoff = 1e-12;
// |Im| at or below this counts as real for classification purposes.
inline constexpr double kRealTol = 1e-12;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

struct FatouError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ChartUndefined : FatouError { using FatouError::FatouError; };
struct NotSingular : FatouError { using FatouError::FatouError; };
struct DegenerateChartModel : FatouError { using FatouError::FatouError; };
struct FormSingular : FatouError { using FatouError::FatouError; };
struct HolonomyUndefined : FatouError { using FatouError::FatouError; };
struct EmptyRegion : FatouError { using FatouError::FatouError; };
struct IndexTooSmall : FatouError { using FatouError::FatouError; };
struct NotOnBoundary : FatouError { using FatouError::FatouError; };
struct SingularPoint : FatouError { using FatouError::FatouError; };
struct MixedBoundary : FatouError { using FatouError::FatouError; };
struct PathThroughSingularity : FatouError { using FatouError::FatouError; };
struct ToleranceNotMet : FatouError { using FatouError::FatouError; };
struct InvalidConstants : FatouError { using FatouError::FatouError; };
struct EmptySample : FatouError { using FatouError::FatouError; };
struct AmbientMismatch : FatouError { using FatouError::FatouError; };
struct UnclassifiedAlpha : FatouError { using FatouError::FatouError; };
struct NotClosed : FatouError { using FatouError::FatouError; };
struct ConfigError : FatouError { using FatouError::FatouError; };
struct ResolutionTooLarge : FatouError { using FatouError::FatouError; };

/// The three standard affine charts of CP^2.
///   XY: (x, y) = (z0/z2, z1/z2),  AB: (a, b) = (z0/z1, z2/z1),
///   UV: (u, v) = (z1/z0, z2/z0).
enum class ChartId { XY, AB, UV };

inline const char* to_string(ChartId c) {
    switch (c) {
        case ChartId::XY: return "XY";
        case ChartId::AB: return "AB";
        case ChartId::UV: return "UV";
    }
    return "?";
}

enum class Ambient { Affine2, Projective2 };

/// A point of C^2 together with the chart its coordinates live in.
/// Affine-ambient data always uses chart XY.
struct AffinePoint2 {
    Complex c1{};
    Complex c2{};
    ChartId chart = ChartId::XY;
};

/// Tangent vector in the coordinates of some chart.
struct Tangent2 {
    Complex v1{};
    Complex v2{};
};

inline Tangent2 operator*(Complex s, const Tangent2& v) { return {s * v.v1, s * v.v2}; }

/// A point of CP^2, stored normalized to |z0|^2+|z1|^2+|z2|^2 = 1.
/// Equality is up to a unit complex scalar.
class ProjectivePoint {
public:
    ProjectivePoint(Complex z0, Complex z1, Complex z2) {
        const double n = std::sqrt(std::norm(z0) + std::norm(z1) + std::norm(z2));
        if (!(n > 0.0) || !std::isfinite(n))
            throw FatouError("ProjectivePoint: coordinates must be finite and not all zero");
        z_[0] = z0 / n;
        z_[1] = z1 / n;
        z_[2] = z2 / n;
    }

    Complex z0() const { return z_[0]; }
    Complex z1() const { return z_[1]; }
    Complex z2() const { return z_[2]; }
    Complex coord(int i) const { return z_[i]; }

    /// |<p,q>| = 1 (within tol) iff p and q differ by a unit scalar.
    bool equals(const ProjectivePoint& q, double tol = 1e-10) const {
        const Complex ip = z_[0] * std::conj(q.z_[0]) + z_[1] * std::conj(q.z_[1]) +
                           z_[2] * std::conj(q.z_[2]);
        return std::abs(std::abs(ip) - 1.0) <= tol;
    }

private:
    Complex z_[3];
};

enum class ReferenceMetricId { Euclidean2, FubiniStudy };

}  // namespace fatou
