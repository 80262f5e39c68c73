#include "doctest.h"

#include "fatou/pseudogroup.hpp"
#include "fatou/sampling.hpp"

using namespace fatou;
using namespace fatou::pg;

namespace {

std::vector<Complex> disc_grid(Complex center, double radius, int rings) {
    std::vector<Complex> K{center};
    for (int i = 1; i <= rings; ++i) {
        const double r = radius * i / rings;
        for (int j = 0; j < 8; ++j)
            K.push_back(center + std::polar(r, 2.0 * 3.14159265358979323846 * j / 8.0));
    }
    return K;
}

}  // namespace

TEST_CASE("mobius basics") {
    const Mobius m{Complex{1.0, 1.0}, 0.5, 0.2, 1.0};
    const Mobius id = m.then(m.inverse());
    const Complex z{0.3, -0.4};
    CHECK(std::abs(id.apply(z) - z) < 1e-12);

    // Derivative against finite differences.
    const double h = 1e-7;
    const Complex fd = (m.apply(z + h) - m.apply(z - h)) / (2.0 * h);
    CHECK(std::abs(fd - m.derivative(z)) < 1e-6);

    CHECK_THROWS(Mobius(1.0, 2.0, 2.0, 4.0));  // zero determinant
}

TEST_CASE("disc images: affine exact, mobius vs three-point oracle") {
    const Disc d{Complex{0.2, 0.1}, 0.7};
    const Mobius aff = Mobius::affine(Complex{0.0, 2.0}, Complex{1.0, -1.0});
    const Disc img = disc_image(aff, d);
    CHECK(std::abs(img.center - aff.apply(d.center)) < 1e-14);
    CHECK(img.radius == doctest::Approx(1.4));

    SampleStream s(21);
    for (int i = 0; i < 100; ++i) {
        const Disc dd{s.disc(0.0, 0.6), s.uniform(0.1, 0.5)};
        const Mobius m = Mobius::disc_automorphism(s.disc(0.0, 0.3), s.angle());
        if (const auto p = m.pole(); p && std::abs(*p - dd.center) <= dd.radius + 0.05) continue;
        const Disc a = disc_image(m, dd);
        const Disc b = disc_image_three_point(m, dd);
        CHECK(std::abs(a.center - b.center) < 1e-9);
        CHECK(std::abs(a.radius - b.radius) < 1e-9);

        // Boundary maps onto boundary.
        for (int k = 0; k < 16; ++k) {
            const Complex z = dd.center + std::polar(dd.radius, k * 0.3927);
            CHECK(std::abs(std::abs(m.apply(z) - a.center) - a.radius) < 1e-9);
        }
    }
}

TEST_CASE("word composition pins") {
    // Two copies of z -> 0.5 z + 0.1 on disc(0,1): composition 0.25 z + 0.15,
    // domain at 0 still the full disc(0,1) (the image sits inside disc(0,0.6)).
    const Generator g{"g", Mobius::affine(0.5, 0.1), Disc{0.0, 1.0}, Disc{0.0, 2.0}};
    const std::vector<Generator> gens{g};

    Word w;
    const ComposedWord once = compose(w, 0, false, 0.0, gens);
    REQUIRE(once.domain.has_value());
    CHECK(once.domain->radius == doctest::Approx(1.0));

    const ComposedWord twice = compose(once.word, 0, false, 0.0, gens);
    REQUIRE(twice.domain.has_value());
    CHECK(twice.domain->radius == doctest::Approx(1.0));
    const Mobius m = twice.word.mobius(gens);
    CHECK(std::abs(m.apply(0.3) - (0.25 * 0.3 + 0.15)) < 1e-14);

    // g then g^{-1} is the identity where defined.
    Word cancel;
    cancel = cancel.composed_with(0, false).composed_with(0, true);
    const Mobius mc = cancel.mobius(gens);
    CHECK(std::abs(mc.apply(0.4) - 0.4) < 1e-12);

    // Empty domain is a value, not an error.
    const ComposedWord off = compose(w, 0, false, Complex{5.0, 0.0}, gens);
    CHECK_FALSE(off.domain.has_value());
}

TEST_CASE("domain monotonicity under composition") {
    const std::vector<Generator> gens{
        {"t", Mobius::affine(1.0, 0.15), Disc{0.0, 1.0}, Disc{0.0, 1.6}},
        {"r", Mobius::affine(std::polar(1.0, 0.8), 0.0), Disc{0.0, 1.0}, Disc{0.0, 1.6}},
    };
    SampleStream s(12);
    for (int i = 0; i < 200; ++i) {
        Word w;
        std::optional<WordDomain> prev;
        const Complex p = s.disc(0.0, 0.5);
        for (int step = 0; step < 5; ++step) {
            const int g = static_cast<int>(s.uniform(0.0, 2.0));
            const bool inv = s.uniform(0.0, 1.0) < 0.5;
            const ComposedWord c = compose(w, g, inv, p, gens);
            if (!c.domain) break;
            if (prev) CHECK(c.domain->radius <= prev->radius + 1e-12);
            prev = c.domain;
            w = c.word;
        }
    }
}

TEST_CASE("estimate_constants pins") {
    // Single generator z -> m z with extension disc(0,2), samples in |p| <= 1:
    // delta = 1 (attained at |p| = 1), C = max(1, |m|).
    const Complex m{0.0, 1.5};
    const Generator g{"s", Mobius::affine(m, 0.0), Disc{0.0, 1.0}, Disc{0.0, 2.0}};
    std::vector<Complex> K;
    for (int k = 0; k < 16; ++k) K.push_back(std::polar(1.0 - 1e-12, k * 0.3927));
    const Constants c = estimate_constants({g}, K);
    CHECK(c.delta == doctest::Approx(1.0));
    CHECK(c.C == doctest::Approx(1.5));

    // Identity / rotation generators give C = 1.
    const Generator r{"r", Mobius::affine(std::polar(1.0, 0.7), 0.0), Disc{0.0, 1.0},
                      Disc{0.0, 2.0}};
    CHECK(estimate_constants({r}, K).C == doctest::Approx(1.0));

    CHECK_THROWS_AS(estimate_constants({g}, {}), EmptySample);
}

TEST_CASE("extension_radius pins") {
    CHECK(extension_radius(0.1, 0.5, 2.0) == doctest::Approx(0.0125));
    CHECK(extension_radius(1.0, 1.0, 1.0) == doctest::Approx(0.5));
    CHECK(extension_radius(0.3, 2.0, 3.0) == doctest::Approx(0.1));
    CHECK_THROWS_AS(extension_radius(-1.0, 1.0, 1.0), InvalidConstants);
    CHECK_THROWS_AS(extension_radius(1.0, 1.0, 0.5), InvalidConstants);
}

TEST_CASE("metric balls") {
    CHECK(metric_ball(EuclideanMetric{}, Complex{0.3, 0.1}, 0.25).radius ==
          doctest::Approx(0.25));
    // Hyperbolic ball at the origin of the unit disc: Euclidean radius tanh(r/2).
    const Disc b0 = metric_ball(PoincareDiscMetric{1.0}, 0.0, 0.5);
    CHECK(std::abs(b0.center) < 1e-15);
    CHECK(b0.radius == doctest::Approx(std::tanh(0.25)));
    // Off-center balls stay inside the unit disc.
    const Disc b1 = metric_ball(PoincareDiscMetric{1.0}, Complex{0.6, 0.0}, 1.0);
    CHECK(std::abs(b1.center) + b1.radius < 1.0);
}

TEST_CASE("verify_extension: rotations never shrink") {
    const std::vector<Generator> gens{
        {"r1", Mobius::affine(std::polar(1.0, 2.399963), 0.0), Disc{0.0, 0.8}, Disc{0.0, 0.95}},
        {"r2", Mobius::affine(std::polar(1.0, 0.7853982), 0.0), Disc{0.0, 0.8}, Disc{0.0, 0.95}},
    };
    const auto K = disc_grid(0.0, 0.7, 3);
    ExtensionOptions opts;
    opts.max_word_length = 6;
    const ExtensionReport rep = verify_extension_auto(gens, K, EuclideanMetric{}, 1.0, opts);
    CHECK(rep.isometric);
    CHECK(rep.delta == doctest::Approx(0.25));
    CHECK(rep.C == doctest::Approx(1.0));
    CHECK(rep.delta_prime == doctest::Approx(0.125));
    CHECK(rep.violations.empty());
    CHECK(rep.words_defined > 0);
}

TEST_CASE("verify_extension: translation with margin") {
    const std::vector<Generator> gens{
        {"t", Mobius::affine(1.0, 0.1), Disc{0.0, 1.0}, Disc{0.0, 1.5}},
    };
    const auto K = disc_grid(0.0, 0.5, 3);
    ExtensionOptions opts;
    opts.max_word_length = 6;
    const ExtensionReport rep = verify_extension_auto(gens, K, EuclideanMetric{}, 1.0, opts);
    CHECK(rep.isometric);
    CHECK(rep.delta == doctest::Approx(1.0));
    CHECK(rep.delta_prime == doctest::Approx(0.5));  // delta / 2
    CHECK(rep.violations.empty());
}

TEST_CASE("verify_extension: zero violations up to the full word-length cap") {
    // The finite-word soundness property holds all the way to L = 8 whenever
    // the constants pass, not merely usually.
    const std::vector<Generator> rot{
        {"r1", Mobius::affine(std::polar(1.0, 2.399963), 0.0), Disc{0.0, 0.8}, Disc{0.0, 0.95}},
        {"r2", Mobius::affine(std::polar(1.0, 0.7853982), 0.0), Disc{0.0, 0.8}, Disc{0.0, 0.95}},
    };
    const std::vector<Generator> tra{
        {"t", Mobius::affine(1.0, 0.1), Disc{0.0, 1.0}, Disc{0.0, 1.5}},
    };
    ExtensionOptions opts;
    opts.max_word_length = 8;
    const auto K1 = disc_grid(0.0, 0.7, 2);
    const auto K2 = disc_grid(0.0, 0.5, 2);
    CHECK(verify_extension_auto(rot, K1, EuclideanMetric{}, 1.0, opts).violations.empty());
    CHECK(verify_extension_auto(tra, K2, EuclideanMetric{}, 1.0, opts).violations.empty());
    opts.max_word_length = 9;
    CHECK_THROWS(verify_extension_auto(rot, K1, EuclideanMetric{}, 1.0, opts));
}

TEST_CASE("inner margin caps the effective extension radius") {
    const std::vector<Generator> gens{
        {"t", Mobius::affine(1.0, 0.1), Disc{0.0, 1.0}, Disc{0.0, 1.5}},
    };
    const auto K = disc_grid(0.0, 0.5, 2);
    ExtensionOptions opts;
    opts.max_word_length = 3;
    opts.inner_margin = 0.2;
    const ExtensionReport rep = verify_extension_auto(gens, K, EuclideanMetric{}, 1.0, opts);
    CHECK(rep.delta_prime == doctest::Approx(0.2));  // min(0.5, margin)
    CHECK(rep.violations.empty());
}

TEST_CASE("verify_extension: non-isometric generator reported, not fatal") {
    const std::vector<Generator> gens{
        {"d", Mobius::affine(2.0, 0.0), Disc{0.0, 0.5}, Disc{0.0, 1.0}},
    };
    const auto K = disc_grid(0.0, 0.4, 2);
    ExtensionOptions opts;
    opts.max_word_length = 3;
    const ExtensionReport rep = verify_extension(gens, K, EuclideanMetric{}, 0.1, opts);
    CHECK_FALSE(rep.isometric);
    REQUIRE(rep.non_isometric_generators.size() == 1);
    CHECK(rep.non_isometric_generators[0] == "d");
}

TEST_CASE("verify_extension: mobius isometries of the Poincare disc") {
    const std::vector<Generator> gens{
        {"m1", Mobius::disc_automorphism(Complex{0.15, 0.0}, 0.0), Disc{0.0, 0.55},
         Disc{0.0, 0.7}},
        {"m2", Mobius::disc_automorphism(Complex{0.0, 0.1}, 1.2), Disc{0.0, 0.55},
         Disc{0.0, 0.7}},
    };
    const auto K = disc_grid(0.0, 0.4, 3);
    ExtensionOptions opts;
    opts.max_word_length = 6;
    // h >= c^2 h_0 on the unit disc with c = 2 (the conformal factor minimum).
    const ExtensionReport rep =
        verify_extension_auto(gens, K, PoincareDiscMetric{1.0}, 2.0, opts);
    CHECK(rep.isometric);
    CHECK(rep.violations.empty());
    CHECK(rep.words_defined > 1000);
}

TEST_CASE("rotation conjugation preserves word domain radii") {
    const Mobius rot = Mobius::affine(std::polar(1.0, 1.1), 0.0);
    const std::vector<Generator> gens{
        {"r", Mobius::affine(std::polar(1.0, 0.9), 0.0), Disc{0.0, 0.8}, Disc{0.0, 1.1}},
        {"s", Mobius::affine(std::polar(1.0, -0.4), 0.0), Disc{0.0, 0.8}, Disc{0.0, 1.1}},
    };
    SampleStream st(9);
    for (int i = 0; i < 100; ++i) {
        Word w;
        for (int k = 0; k < 4; ++k)
            w = w.composed_with(static_cast<int>(st.uniform(0.0, 2.0)),
                                st.uniform(0.0, 1.0) < 0.5);
        const Complex p = st.disc(0.0, 0.6);
        const auto d1 = word_domain_at(w, p, gens, false);
        const auto d2 = word_domain_at(w, rot.apply(p), gens, false);
        REQUIRE(d1.has_value() == d2.has_value());
        if (d1) CHECK(d1->radius == doctest::Approx(d2->radius).epsilon(1e-12));
    }
}

TEST_CASE("restrict shrinks domains into T'") {
    const Generator g{"t", Mobius::affine(1.0, 0.2), Disc{0.0, 1.0}, Disc{0.0, 1.5}};

    // T' covering everything: unchanged domain feasibility.
    const auto same = restrict({g}, {Disc{0.0, 10.0}});
    REQUIRE(same.size() == 1);
    CHECK(same[0].in_domain(Complex{0.5, 0.0}));

    // T' disjoint from the range: the generator is dropped.
    const auto dropped = restrict({g}, {Disc{Complex{30.0, 0.0}, 0.5}});
    CHECK(dropped.empty());

    // T' = disc(0, 0.5): domain = disc(0,1) cap disc(0,0.5) cap {z: |z+0.2| < 0.5}.
    const auto shrunk = restrict({g}, {Disc{0.0, 0.5}});
    REQUIRE(shrunk.size() == 1);
    CHECK(shrunk[0].in_domain(Complex{-0.2, 0.0}));
    CHECK(shrunk[0].in_domain(Complex{0.1, 0.0}));
    CHECK_FALSE(shrunk[0].in_domain(Complex{0.4, 0.0}));   // image 0.6 leaves T'
    CHECK_FALSE(shrunk[0].in_domain(Complex{-0.6, 0.0}));  // outside T'
}

TEST_CASE("word domains agree with the three-point-circle recomputation") {
    const std::vector<Generator> gens{
        {"m", Mobius::disc_automorphism(Complex{0.2, 0.1}, 0.5), Disc{0.0, 0.6},
         Disc{0.0, 0.8}},
        {"n", Mobius::disc_automorphism(Complex{-0.1, 0.15}, -0.9), Disc{0.0, 0.6},
         Disc{0.0, 0.8}},
    };
    SampleStream st(14);
    for (int i = 0; i < 200; ++i) {
        Word w;
        for (int k = 0; k < 3; ++k)
            w = w.composed_with(static_cast<int>(st.uniform(0.0, 2.0)),
                                st.uniform(0.0, 1.0) < 0.5);
        const Complex p = st.disc(0.0, 0.3);

        const auto fast = word_domain_at(w, p, gens, false);
        // Independent recomputation: constraints pulled back through the
        // prefix by the three-point circle fit.
        double radius = std::numeric_limits<double>::infinity();
        Mobius prefix = Mobius::identity();
        Complex z = p;
        bool defined = true;
        for (const Letter& l : w.letters) {
            const Generator& g = gens[l.gen];
            const Mobius step = l.inverse ? g.map.inverse() : g.map;
            const Disc dom =
                l.inverse ? disc_image_three_point(g.map, g.domain[0]) : g.domain[0];
            if (!dom.contains(z)) {
                defined = false;
                break;
            }
            const Disc back = disc_image_three_point(prefix.inverse(), dom);
            radius = std::min(radius, back.radius - std::abs(p - back.center));
            prefix = prefix.then(step);
            z = step.apply(z);
        }
        defined = defined && radius > 0.0;
        REQUIRE(fast.has_value() == defined);
        if (fast) CHECK(std::abs(fast->radius - radius) < 1e-9);
    }
}
