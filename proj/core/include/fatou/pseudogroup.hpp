#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fatou/geometry.hpp"

// Desk-scale model of a holonomy pseudogroup on a transversal in C:
// affine/Moebius generators with disc domains, exact disc arithmetic for
// domain tracking of words, and the brute-force finite-word check of the
// extension radius delta' = delta * c / (2C).

namespace fatou::pg {

struct Disc {
    Complex center{};
    double radius = 0.0;

    bool contains(Complex z, double slack = 0.0) const {
        return std::abs(z - center) < radius + slack;
    }
    /// Largest rho with disc(p, rho) inside *this (negative if p outside).
    double inner_radius_at(Complex p) const { return radius - std::abs(p - center); }
};

/// Moebius transformation (az + b) / (cz + d), det != 0. Affine maps have
/// c = 0. Composition is matrix multiplication, so words stay exact.
class Mobius {
public:
    Mobius() : a_(1), b_(0), c_(0), d_(1) {}
    Mobius(Complex a, Complex b, Complex c, Complex d);

    static Mobius affine(Complex slope, Complex offset) { return {slope, offset, 0.0, 1.0}; }
    static Mobius identity() { return {}; }
    /// Unit-disc automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z).
    static Mobius disc_automorphism(Complex a, double theta);

    Complex apply(Complex z) const;
    Complex derivative(Complex z) const;
    Mobius inverse() const;
    Mobius then(const Mobius& next) const;  // next o this
    bool is_affine() const { return std::abs(c_) <= kDenomCutoff; }
    std::optional<Complex> pole() const;

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }

private:
    Complex a_, b_, c_, d_;
};

/// Exact image of a disc under a Moebius map whose pole lies outside the
/// closed disc (images of discs are discs).
Disc disc_image(const Mobius& m, const Disc& d);
Disc disc_preimage(const Mobius& m, const Disc& d);

/// Independent recomputation of disc_image by mapping three boundary points
/// and fitting the circumscribed circle (oracle for tests).
Disc disc_image_three_point(const Mobius& m, const Disc& d);

struct Generator {
    std::string id;
    Mobius map;
    // Effective domain = intersection of the discs; restrict() adds
    // constraints. The first disc is the nominal domain.
    std::vector<Disc> domain;
    Disc extension;  // same formula on a strictly larger disc

    Generator(std::string id_, Mobius map_, Disc dom, Disc ext);

    bool in_domain(Complex z) const {
        for (const Disc& d : domain)
            if (!d.contains(z)) return false;
        return true;
    }
};

struct Letter {
    int gen = 0;
    bool inverse = false;
};

struct Word {
    std::vector<Letter> letters;

    Word composed_with(int gen, bool inverse) const {
        Word w = *this;
        w.letters.push_back({gen, inverse});
        return w;
    }
    std::string str(const std::vector<Generator>& gens) const;
    Mobius mobius(const std::vector<Generator>& gens) const;
};

/// Domain data of a word at an evaluation point: the maximal disc centered
/// at p on which every prefix stays inside the required generator discs.
/// Empty (nullopt) when the word is undefined at p.
struct WordDomain {
    double radius = 0.0;  // maximal centered-disc radius
    Complex end{};        // word value at p
};
std::optional<WordDomain> word_domain_at(const Word& w, Complex p,
                                         const std::vector<Generator>& gens,
                                         bool use_extensions);

/// Spec op `compose`: extend a word by a generator and recompute its domain
/// at the point; an empty domain is a value, not an error.
struct ComposedWord {
    Word word;
    std::optional<WordDomain> domain;
};
ComposedWord compose(const Word& w, int gen, bool inverse, Complex at,
                     const std::vector<Generator>& gens);

/// delta = min over (p in K, generator applicable at p) of the distance from
/// p to the extension boundary; C = max(1, max |g'(p)|).
struct Constants {
    double delta = 0.0;
    double C = 1.0;
};
Constants estimate_constants(const std::vector<Generator>& gens, const std::vector<Complex>& K);

/// delta * c / (2 C); requires delta > 0, c > 0, C >= 1.
double extension_radius(double delta, double c, double C);

/// Transversal metric h = rho(z)^2 |dz|^2.
struct EuclideanMetric {};
struct PoincareDiscMetric {
    double disc_radius = 1.0;  // metric 2R/(R^2 - |z|^2) |dz| on disc(0, R)
};
using TransversalMetric = std::variant<EuclideanMetric, PoincareDiscMetric>;

double conformal_factor(const TransversalMetric& h, Complex z);
/// h-ball of radius r around p as an exact Euclidean disc.
Disc metric_ball(const TransversalMetric& h, Complex p, double r);

struct ExtensionViolation {
    std::string word;
    Complex point{};
    double available_radius = 0.0;
    double required_radius = 0.0;
};

struct ExtensionReport {
    bool isometric = true;
    std::vector<std::string> non_isometric_generators;
    double c = 1.0;       // metric lower bound used for ball conversion
    double delta = 0.0;
    double C = 1.0;
    double delta_prime = 0.0;
    long words_checked = 0;
    long words_defined = 0;
    std::vector<ExtensionViolation> violations;
};

struct ExtensionOptions {
    int max_word_length = 6;  // <= 8
    double isometry_tol = 1e-9;
    // Optional inner margin of the ambient open set; the effective delta' is
    // capped by it and reported.
    std::optional<double> inner_margin;
};

/// Brute-force check that every word of length <= L defined at a sample
/// point extends (with the generators' extension discs) to the h-ball of
/// radius delta' around it. Non-isometric generators are reported, not fatal.
ExtensionReport verify_extension(const std::vector<Generator>& gens,
                                 const std::vector<Complex>& K, const TransversalMetric& h,
                                 double delta_prime, const ExtensionOptions& opts);

/// Constants + radius + verification in one call (delta' from the estimate).
ExtensionReport verify_extension_auto(const std::vector<Generator>& gens,
                                      const std::vector<Complex>& K, const TransversalMetric& h,
                                      double metric_lower_bound, const ExtensionOptions& opts);

/// Restriction to T' (a union of discs): domains shrink so that domain and
/// image lie in T'; generators with empty restricted domain are dropped.
std::vector<Generator> restrict(const std::vector<Generator>& gens, const std::vector<Disc>& Tp);

/// Feasibility of a finite disc intersection (used by restrict and tests).
std::optional<Complex> intersection_point(const std::vector<Disc>& discs);

}  // namespace fatou::pg
