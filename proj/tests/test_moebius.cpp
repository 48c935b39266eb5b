#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skinlab/moebius.hpp"

#include <cmath>
#include <random>

using namespace skinlab;

namespace {

std::mt19937 rng(20240817);

Complex random_complex(double scale = 2.0)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng)};
}

Moebius random_moebius()
{
    for (;;) {
        Moebius m{random_complex(), random_complex(), random_complex(),
                  random_complex()};
        if (std::abs(m.det()) > 0.1) return m;
    }
}

double dist(const ExtComplex& z, const ExtComplex& w) { return chordal(z, w); }

} // namespace

TEST_CASE("composition matches pointwise application")
{
    for (int it = 0; it < 50; ++it) {
        const Moebius m = random_moebius(), n = random_moebius();
        const Moebius mn = m * n;
        for (int k = 0; k < 10; ++k) {
            const ExtComplex z = random_complex(3.0);
            CHECK(dist(mn(z), m(n(z))) < 1e-10);
        }
    }
}

TEST_CASE("inverse undoes the map and normalized has det 1")
{
    for (int it = 0; it < 50; ++it) {
        const Moebius m = random_moebius();
        const Moebius id = m * m.inverse();
        const ExtComplex z = random_complex(3.0);
        CHECK(dist(id(z), z) < 1e-10);
        CHECK(std::abs(m.normalized().det() - 1.0) < 1e-12);
    }
}

TEST_CASE("canonical representative fixes the trace sign")
{
    for (int it = 0; it < 50; ++it) {
        const Moebius c = random_moebius().canonical();
        CHECK(std::abs(c.det() - 1.0) < 1e-12);
        const Complex tr = c.tr();
        CHECK((tr.real() > -1e-15));
        if (std::abs(tr.real()) < 1e-15) CHECK(tr.imag() >= -1e-15);
        // canonical() of the negated matrix lands on the same representative
        const Moebius neg{-c.a, -c.b, -c.c, -c.d};
        CHECK(projective_defect(neg.canonical(), c) < 1e-12);
    }
}

TEST_CASE("projective comparison accepts sign flips and rejects noise")
{
    const Moebius m = random_moebius();
    const Moebius neg{-m.a, -m.b, -m.c, -m.d};
    CHECK(same_projective(m, neg));
    Moebius off = m;
    off.b += Complex(1e-3, 0);
    CHECK_FALSE(same_projective(m, off));
}

TEST_CASE("fixed points satisfy the fixed-point equation")
{
    for (int it = 0; it < 100; ++it) {
        const Moebius m = random_moebius();
        if (std::abs(trace_sq(m) - 4.0) < 1e-3) continue; // skip near-parabolic
        const auto [p, q] = fixed_points(m);
        CHECK(dist(m(p), p) < 1e-8);
        CHECK(dist(m(q), q) < 1e-8);
    }
}

TEST_CASE("fixed points of a conjugated dilation are the conjugated axis ends")
{
    const Complex lambda(1.7, 0.4);
    for (int it = 0; it < 25; ++it) {
        const Moebius g = random_moebius();
        const Moebius diag{lambda, 0.0, 0.0, 1.0 / lambda};
        const Moebius m = g * diag * g.inverse();
        const auto [p, q] = fixed_points(m);
        const ExtComplex axis_a = g(ExtComplex(0.0)), axis_b = g(ExtComplex::infinity());
        const double direct = std::min(dist(p, axis_a) + dist(q, axis_b),
                                       dist(p, axis_b) + dist(q, axis_a));
        CHECK(direct < 1e-8);
    }
}

TEST_CASE("upper-triangular and parabolic fixed-point conventions")
{
    const Moebius tri{2.0, 1.0, 0.0, 0.5};
    const auto [p, q] = fixed_points(tri);
    CHECK(p.is_inf() == false);
    CHECK(std::abs(p.value() - Complex(-2.0 / 3.0)) < 1e-13); // b/(d-a)
    CHECK(q.is_inf());

    const Moebius shift{1.0, 1.0, 0.0, 1.0};
    const auto [s1, s2] = fixed_points(shift);
    CHECK(s1.is_inf());
    CHECK(s2.is_inf());

    CHECK_THROWS_AS((void)fixed_points(Moebius{}), std::domain_error);
}

TEST_CASE("translation length of a real dilation is 2 log lambda")
{
    for (double lambda : {1.3, 2.0, 5.5}) {
        const Moebius diag{lambda, 0.0, 0.0, 1.0 / lambda};
        CHECK(translation_length(diag) ==
              doctest::Approx(2.0 * std::log(lambda)).epsilon(1e-12));
        const Moebius g = random_moebius();
        CHECK(translation_length(g * diag * g.inverse()) ==
              doctest::Approx(2.0 * std::log(lambda)).epsilon(1e-9));
    }
    CHECK_THROWS_AS((void)translation_length(Moebius{1.0, 1.0, 0.0, 1.0}),
                    std::domain_error);
}

TEST_CASE("cross-ratio: direct formula, symmetry normalization, invariance")
{
    for (int it = 0; it < 50; ++it) {
        const Complex a = random_complex(), b = random_complex(),
                      c = random_complex(), d = random_complex();
        if (std::abs(d - c) < 0.1 || std::abs(b - a) < 0.1) continue;
        const Complex direct = ((d - a) * (b - c)) / ((d - c) * (b - a));
        CHECK(std::abs(cross_ratio(a, b, c, d) - direct) < 1e-12);

        const Moebius g = random_moebius();
        const Complex moved =
            cross_ratio(g(ExtComplex(a)), g(ExtComplex(b)), g(ExtComplex(c)),
                        g(ExtComplex(d)));
        CHECK(std::abs(moved - direct) < 1e-8);
    }
}

TEST_CASE("cross-ratio limits at infinity agree with large-proxy evaluation")
{
    const Complex a(0.3, -0.2), b(1.1, 0.4), c(-0.7, 0.9);
    const ExtComplex inf = ExtComplex::infinity();
    const Complex proxy(3e7, 1e7);

    const Complex lim1 = cross_ratio(inf, b, c, Complex(0.5, 0.1));
    const Complex ref1 = cross_ratio(proxy, b, c, Complex(0.5, 0.1));
    CHECK(std::abs(lim1 - ref1) < 1e-5);

    const Complex lim2 = cross_ratio(a, inf, c, Complex(0.5, 0.1));
    const Complex ref2 = cross_ratio(a, proxy, c, Complex(0.5, 0.1));
    CHECK(std::abs(lim2 - ref2) < 1e-5);

    const Complex lim3 = cross_ratio(a, b, inf, Complex(0.5, 0.1));
    const Complex ref3 = cross_ratio(a, b, proxy, Complex(0.5, 0.1));
    CHECK(std::abs(lim3 - ref3) < 1e-5);

    const Complex lim4 = cross_ratio(a, b, c, inf);
    const Complex ref4 = cross_ratio(a, b, c, proxy);
    CHECK(std::abs(lim4 - ref4) < 1e-5);
}

TEST_CASE("triple transport map hits its targets")
{
    const std::array<ExtComplex, 3> v{ExtComplex(Complex(0.2, 0.1)),
                                      ExtComplex(Complex(-1.0, 0.5)),
                                      ExtComplex::infinity()};
    const std::array<ExtComplex, 3> w{ExtComplex(1.0), ExtComplex(Complex(0, 2)),
                                      ExtComplex(Complex(-3.0, 0.2))};
    const Moebius g = mobius_from_triples(v, w);
    CHECK(std::abs(g.det() - 1.0) < 1e-10);
    for (int i = 0; i < 3; ++i) CHECK(dist(g(v[i]), w[i]) < 1e-10);

    CHECK_THROWS_AS((void)mobius_from_triples(
                        {ExtComplex(1.0), ExtComplex(1.0), ExtComplex(2.0)}, w),
                    std::invalid_argument);
}

TEST_CASE("anti-Moebius: involution-style conjugation acts pointwise")
{
    for (int it = 0; it < 25; ++it) {
        const AntiMoebius psi{random_moebius()};
        const Moebius m = random_moebius();
        const Moebius n = anti_conjugate(psi, m);
        for (int k = 0; k < 5; ++k) {
            const ExtComplex z = random_complex(2.0);
            const ExtComplex via = psi(m(psi.inverse()(z)));
            CHECK(dist(n(z), via) < 1e-8);
        }
    }
}

TEST_CASE("chordal metric anchor values")
{
    CHECK(chordal(ExtComplex(0.0), ExtComplex::infinity()) ==
          doctest::Approx(2.0));
    CHECK(chordal(ExtComplex(1.0), ExtComplex(1.0)) == doctest::Approx(0.0));
    CHECK(chordal(ExtComplex(1.0), ExtComplex(-1.0)) ==
          doctest::Approx(2.0)); // antipodal on the sphere
    const ExtComplex z(Complex(0.3, -0.8)), w(Complex(-1.2, 0.4));
    CHECK(chordal(z, w) == doctest::Approx(chordal(w, z)));
}
