#include "fatou/pseudogroup.hpp"

#include <algorithm>
#include <cmath>

namespace fatou::pg {

Mobius::Mobius(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
    if (std::abs(a * d - b * c) <= kDenomCutoff)
        throw FatouError("Mobius: determinant must be nonzero");
}

Mobius Mobius::disc_automorphism(Complex a, double theta) {
    if (std::abs(a) >= 1.0) throw FatouError("disc_automorphism: |a| < 1 required");
    const Complex phase = std::polar(1.0, theta);
    return {phase, -phase * a, -std::conj(a), 1.0};
}

Complex Mobius::apply(Complex z) const {
    const Complex den = c_ * z + d_;
    if (std::abs(den) <= kDenomCutoff) throw FatouError("Mobius: evaluation at the pole");
    return (a_ * z + b_) / den;
}

Complex Mobius::derivative(Complex z) const {
    const Complex den = c_ * z + d_;
    if (std::abs(den) <= kDenomCutoff) throw FatouError("Mobius: derivative at the pole");
    return (a_ * d_ - b_ * c_) / (den * den);
}

Mobius Mobius::inverse() const { return {d_, -b_, -c_, a_}; }

Mobius Mobius::then(const Mobius& n) const {
    return {n.a_ * a_ + n.b_ * c_, n.a_ * b_ + n.b_ * d_, n.c_ * a_ + n.d_ * c_,
            n.c_ * b_ + n.d_ * d_};
}

std::optional<Complex> Mobius::pole() const {
    if (is_affine()) return std::nullopt;
    return -d_ / c_;
}

Disc disc_image(const Mobius& m, const Disc& d) {
    if (m.is_affine()) {
        const Complex slope = m.a() / m.d();
        return {m.apply(d.center), std::abs(slope) * d.radius};
    }
    const Complex p = *m.pole();
    if (std::abs(p - d.center) <= d.radius + kDenomCutoff)
        throw FatouError("disc_image: pole meets the closed disc");
    // The point symmetric to the pole about the circle maps to the image
    // center; any boundary point gives the radius.
    const Complex sym = d.center + d.radius * d.radius / std::conj(p - d.center);
    const Complex w0 = m.apply(sym);
    const double r = std::abs(m.apply(d.center + d.radius) - w0);
    return {w0, r};
}

Disc disc_preimage(const Mobius& m, const Disc& d) { return disc_image(m.inverse(), d); }

Disc disc_image_three_point(const Mobius& m, const Disc& d) {
    const Complex z1 = d.center + d.radius;
    const Complex z2 = d.center - d.radius;
    const Complex z3 = d.center + Complex{0.0, d.radius};
    const Complex w1 = m.apply(z1), w2 = m.apply(z2), w3 = m.apply(z3);
    // Circumcenter of (w1, w2, w3).
    const Complex u = w2 - w1, v = w3 - w1;
    const double den = 2.0 * (u.real() * v.imag() - u.imag() * v.real());
    if (std::abs(den) <= 1e-300) throw FatouError("three-point circle: collinear images");
    const double nu = std::norm(u), nv = std::norm(v);
    const double cx = (v.imag() * nu - u.imag() * nv) / den;
    const double cy = (u.real() * nv - v.real() * nu) / den;
    const Complex center = w1 + Complex{cx, cy};
    return {center, std::abs(w1 - center)};
}

Generator::Generator(std::string id_, Mobius map_, Disc dom, Disc ext)
    : id(std::move(id_)), map(map_), domain{dom}, extension(ext) {
    if (std::abs(dom.center - ext.center) + dom.radius >= ext.radius)
        throw FatouError("Generator: domain closure must sit inside the extension");
    if (const auto p = map.pole(); p && ext.contains(*p, kDenomCutoff))
        throw FatouError("Generator: map pole inside the extension disc");
}

std::string Word::str(const std::vector<Generator>& gens) const {
    std::string s;
    for (const Letter& l : letters) {
        if (!s.empty()) s += ".";
        s += gens[l.gen].id;
        if (l.inverse) s += "^-1";
    }
    return s.empty() ? "id" : s;
}

Mobius Word::mobius(const std::vector<Generator>& gens) const {
    Mobius m = Mobius::identity();
    for (const Letter& l : letters) {
        const Mobius g = l.inverse ? gens[l.gen].map.inverse() : gens[l.gen].map;
        m = m.then(g);
    }
    return m;
}

std::optional<WordDomain> word_domain_at(const Word& w, Complex p,
                                         const std::vector<Generator>& gens,
                               bool use_extensions) {
    double radius = std::numeric_limits<double>::infinity();
    Mobius prefix = Mobius::identity();
    Complex z = p;
    for (const Letter& l : w.letters) {
        const Generator& g = gens[l.gen];
        const Mobius step = l.inverse ? g.map.inverse() : g.map;

        std::vector<Disc> constraints;
        if (use_extensions) {
            constraints.push_back(l.inverse ? disc_image(g.map, g.extension) : g.extension);
        } else {
            for (const Disc& d : g.domain)
                constraints.push_back(l.inverse ? disc_image(g.map, d) : d);
        }
        for (const Disc& d : constraints) {
            if (!d.contains(z)) return std::nullopt;
            // Pull the constraint back to the evaluation point.
            const Disc back = disc_preimage(prefix, d);
            radius = std::min(radius, back.inner_radius_at(p));
        }
        prefix = prefix.then(step);
        z = step.apply(z);
    }
    if (radius <= 0.0) return std::nullopt;
    return WordDomain{radius, z};
}

ComposedWord compose(const Word& w, int gen, bool inverse, Complex at,
                     const std::vector<Generator>& gens) {
    ComposedWord c{w.composed_with(gen, inverse), std::nullopt};
    c.domain = word_domain_at(c.word, at, gens, /*use_extensions=*/false);
    return c;
}

Constants estimate_constants(const std::vector<Generator>& gens, const std::vector<Complex>& K) {
    if (K.empty()) throw EmptySample("estimate_constants: empty sample set");
    Constants c;
    c.delta = std::numeric_limits<double>::infinity();
    c.C = 1.0;
    bool any = false;
    for (const Complex p : K) {
        for (const Generator& g : gens) {
            if (!g.in_domain(p)) continue;
            any = true;
            c.delta = std::min(c.delta, g.extension.inner_radius_at(p));
            // Inverse letters count as generators, so bound both derivatives.
            const double d = std::abs(g.map.derivative(p));
            c.C = std::max({c.C, d, 1.0 / d});
        }
    }
    if (!any) throw EmptySample("estimate_constants: no sample lies in a generator domain");
    return c;
}

double extension_radius(double delta, double c, double C) {
    if (!(delta > 0.0) || !(c > 0.0) || !(C >= 1.0))
        throw InvalidConstants("extension_radius requires delta > 0, c > 0, C >= 1");
    return delta * c / (2.0 * C);
}

double conformal_factor(const TransversalMetric& h, Complex z) {
    if (std::holds_alternative<EuclideanMetric>(h)) return 1.0;
    const double R = std::get<PoincareDiscMetric>(h).disc_radius;
    const double n = std::norm(z);
    if (n >= R * R) throw FatouError("Poincare factor outside the disc");
    return 2.0 * R / (R * R - n);
}

Disc metric_ball(const TransversalMetric& h, Complex p, double r) {
    if (std::holds_alternative<EuclideanMetric>(h)) return {p, r};
    const double R = std::get<PoincareDiscMetric>(h).disc_radius;
    // Reduce to the unit disc by w = z/R; the metric becomes 2/(1-|w|^2)|dw|
    // (curvature -1), whose balls are Euclidean discs with the classical
    // center/radius formulas.
    const Complex w = p / R;
    const double t = std::tanh(r / 2.0);
    const double nw = std::norm(w);
    const double den = 1.0 - t * t * nw;
    const Complex center = w * ((1.0 - t * t) / den);
    const double radius = t * (1.0 - nw) / den;
    return {center * R, radius * R};
}

namespace {

bool disc_inside_disc(const Disc& inner, const Disc& outer, double slack) {
    return std::abs(inner.center - outer.center) + inner.radius <= outer.radius + slack;
}

}  // namespace

ExtensionReport verify_extension(const std::vector<Generator>& gens, const std::vector<Complex>& K,
                                 const TransversalMetric& h, double delta_prime,
                                 const ExtensionOptions& opts) {
    if (opts.max_word_length > 8)
        throw FatouError("verify_extension: word length capped at 8");
    ExtensionReport rep;
    rep.delta_prime = opts.inner_margin ? std::min(delta_prime, *opts.inner_margin) : delta_prime;

    // Isometry hypothesis: |g'(p)| * rho(g(p)) = rho(p) on the samples.
    for (const Generator& g : gens) {
        bool iso = true;
        for (const Complex p : K) {
            if (!g.in_domain(p)) continue;
            const double lhs = std::abs(g.map.derivative(p)) * conformal_factor(h, g.map.apply(p));
            const double rhs = conformal_factor(h, p);
            if (std::abs(lhs - rhs) > opts.isometry_tol * std::max(1.0, rhs)) {
                iso = false;
                break;
            }
        }
        if (!iso) {
            rep.isometric = false;
            rep.non_isometric_generators.push_back(g.id);
        }
    }

    const int r = static_cast<int>(gens.size());
    std::vector<Word> frontier{Word{}};
    for (int len = 1; len <= opts.max_word_length; ++len) {
        std::vector<Word> next;
        next.reserve(frontier.size() * 2 * r);
        for (const Word& w : frontier)
            for (int g = 0; g < r; ++g)
                for (const bool inv : {false, true}) next.push_back(w.composed_with(g, inv));
        for (const Word& w : next) {
            for (const Complex p : K) {
                ++rep.words_checked;
                const auto dom = word_domain_at(w, p, gens, /*use_extensions=*/false);
                if (!dom) continue;
                ++rep.words_defined;
                const auto ext = word_domain_at(w, p, gens, /*use_extensions=*/true);
                const double avail = ext ? ext->radius : 0.0;
                const Disc ball = metric_ball(h, p, rep.delta_prime);
                if (!disc_inside_disc(ball, Disc{p, avail}, 1e-12)) {
                    rep.violations.push_back(
                        {w.str(gens), p, avail, std::abs(ball.center - p) + ball.radius});
                }
            }
        }
        frontier = std::move(next);
    }
    return rep;
}

ExtensionReport verify_extension_auto(const std::vector<Generator>& gens,
                                      const std::vector<Complex>& K, const TransversalMetric& h,
                                      double metric_lower_bound, const ExtensionOptions& opts) {
    const Constants c = estimate_constants(gens, K);
    const double dp = extension_radius(c.delta, metric_lower_bound, c.C);
    ExtensionReport rep = verify_extension(gens, K, h, dp, opts);
    rep.c = metric_lower_bound;
    rep.delta = c.delta;
    rep.C = c.C;
    return rep;
}

std::optional<Complex> intersection_point(const std::vector<Disc>& discs) {
    if (discs.empty()) return std::nullopt;
    // Minimize max_i (|z - c_i| - r_i) by subgradient descent from the
    // centroid; the objective is convex, so this settles reliably at desk
    // scale.
    Complex z = 0.0;
    for (const Disc& d : discs) z += d.center;
    z /= static_cast<double>(discs.size());
    double step = 0.0;
    for (const Disc& d : discs) step = std::max(step, d.radius);
    auto worst = [&](Complex p) {
        double w = -std::numeric_limits<double>::infinity();
        int idx = 0;
        for (std::size_t i = 0; i < discs.size(); ++i) {
            const double v = std::abs(p - discs[i].center) - discs[i].radius;
            if (v > w) {
                w = v;
                idx = static_cast<int>(i);
            }
        }
        return std::pair<double, int>{w, idx};
    };
    for (int it = 0; it < 400; ++it) {
        const auto [w, idx] = worst(z);
        if (w < -1e-12) return z;
        const Complex dir = discs[idx].center - z;
        const double len = std::abs(dir);
        if (len <= 1e-15) break;
        z += dir / len * std::min(step, w + step * 0.5);
        step *= 0.97;
    }
    return worst(z).first < -1e-12 ? std::optional<Complex>(z) : std::nullopt;
}

std::vector<Generator> restrict(const std::vector<Generator>& gens, const std::vector<Disc>& Tp) {
    std::vector<Generator> out;
    for (const Generator& g : gens) {
        for (std::size_t i = 0; i < Tp.size(); ++i) {
            for (std::size_t j = 0; j < Tp.size(); ++j) {
                // Candidate piece: domain part inside Tp[i] whose image lies
                // in Tp[j].
                std::vector<Disc> constraints = g.domain;
                constraints.push_back(Tp[i]);
                constraints.push_back(disc_preimage(g.map, Tp[j]));
                if (!intersection_point(constraints)) continue;
                Generator piece = g;
                piece.domain = constraints;
                if (Tp.size() > 1)
                    piece.id = g.id + "|" + std::to_string(i) + ">" + std::to_string(j);
                out.push_back(std::move(piece));
            }
        }
    }
    return out;
}

}  // namespace fatou::pg
