#include "skinlab/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skinlab {

namespace {

bool ext_equal(const ExtComplex& z, const ExtComplex& w)
{
    if (z.is_inf() || w.is_inf()) return z.is_inf() && w.is_inf();
    return z.value() == w.value();
}

double max_abs_entry(const Moebius& m)
{
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

// Map sending the triple (v0, v1, v2) to (0, 1, inf).
Moebius to_standard_triple(const std::array<ExtComplex, 3>& v)
{
    const ExtComplex &p = v[0], &q = v[1], &r = v[2];
    if (p.is_inf()) return Moebius{0.0, q.value() - r.value(), 1.0, -r.value()};
    if (q.is_inf()) return Moebius{1.0, -p.value(), 1.0, -r.value()};
    if (r.is_inf()) return Moebius{1.0, -p.value(), 0.0, q.value() - p.value()};
    const Complex qr = q.value() - r.value();
    const Complex qp = q.value() - p.value();
    return Moebius{qr, -p.value() * qr, qp, -r.value() * qp};
}

} // namespace

ExtComplex ExtComplex::infinity()
{
    ExtComplex z;
    z.inf_ = true;
    return z;
}

Complex ExtComplex::value() const
{
    if (inf_) throw std::domain_error("ExtComplex::value: point at infinity");
    return z_;
}

double chordal(const ExtComplex& z, const ExtComplex& w)
{
    if (z.is_inf() && w.is_inf()) return 0.0;
    if (z.is_inf()) return 2.0 / std::sqrt(1.0 + std::norm(w.value()));
    if (w.is_inf()) return 2.0 / std::sqrt(1.0 + std::norm(z.value()));
    return 2.0 * std::abs(z.value() - w.value()) /
           std::sqrt((1.0 + std::norm(z.value())) * (1.0 + std::norm(w.value())));
}

Moebius Moebius::inverse() const
{
    const Complex dt = det();
    if (dt == Complex(0.0)) throw std::domain_error("Moebius::inverse: singular matrix");
    return Moebius{d / dt, -b / dt, -c / dt, a / dt};
}

Moebius Moebius::normalized() const
{
    const Complex dt = det();
    if (dt == Complex(0.0)) throw std::domain_error("Moebius::normalized: singular matrix");
    const Complex s = std::sqrt(dt);
    return Moebius{a / s, b / s, c / s, d / s};
}

Moebius Moebius::canonical() const
{
    Moebius n = normalized();
    const Complex t = n.tr();
    bool flip = false;
    if (t.real() < 0.0) {
        flip = true;
    } else if (t.real() == 0.0) {
        if (t.imag() < 0.0) {
            flip = true;
        } else if (t.imag() == 0.0) {
            // trace-zero representative: pin the sign of the first nonzero entry
            for (const Complex* e : {&n.a, &n.b, &n.c, &n.d}) {
                if (*e != Complex(0.0)) {
                    flip = e->real() < 0.0 ||
                           (e->real() == 0.0 && e->imag() < 0.0);
                    break;
                }
            }
        }
    }
    if (flip) return Moebius{-n.a, -n.b, -n.c, -n.d};
    return n;
}

ExtComplex Moebius::operator()(const ExtComplex& z) const
{
    if (z.is_inf()) {
        if (c == Complex(0.0)) return ExtComplex::infinity();
        return ExtComplex(a / c);
    }
    const Complex num = a * z.value() + b;
    const Complex den = c * z.value() + d;
    if (den == Complex(0.0)) return ExtComplex::infinity();
    const Complex w = num / den;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
        return ExtComplex::infinity();
    return ExtComplex(w);
}

Moebius operator*(const Moebius& m, const Moebius& n)
{
    return Moebius{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                   m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

ExtComplex AntiMoebius::operator()(const ExtComplex& z) const
{
    if (z.is_inf()) return m(z);
    return m(ExtComplex(std::conj(z.value())));
}

AntiMoebius AntiMoebius::inverse() const
{
    // (P . conj)^{-1} = conj . P^{-1} = conj(P^{-1}) . conj
    const Moebius inv = m.inverse();
    return AntiMoebius{Moebius{std::conj(inv.a), std::conj(inv.b),
                               std::conj(inv.c), std::conj(inv.d)}};
}

double projective_defect(const Moebius& m, const Moebius& n)
{
    const Moebius x = m.normalized();
    const Moebius y = n.normalized();
    const double diff = std::max(std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)),
                                 std::max(std::abs(x.c - y.c), std::abs(x.d - y.d)));
    const double sum = std::max(std::max(std::abs(x.a + y.a), std::abs(x.b + y.b)),
                                std::max(std::abs(x.c + y.c), std::abs(x.d + y.d)));
    return std::min(diff, sum);
}

bool same_projective(const Moebius& m, const Moebius& n, double tol)
{
    return projective_defect(m, n) <= tol;
}

Moebius mobius_from_triples(const std::array<ExtComplex, 3>& v,
                            const std::array<ExtComplex, 3>& w)
{
    for (const auto* triple : {&v, &w}) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (ext_equal((*triple)[i], (*triple)[j]))
                    throw std::invalid_argument(
                        "mobius_from_triples: coincident points in a triple");
    }
    const Moebius mv = to_standard_triple(v);
    const Moebius mw = to_standard_triple(w);
    const Moebius m = mw.inverse() * mv;
    if (std::abs(m.det()) <= 1e-300 * max_abs_entry(m) * max_abs_entry(m))
        throw std::invalid_argument("mobius_from_triples: degenerate configuration");
    return m.canonical();
}

Moebius anti_conjugate(const AntiMoebius& psi, const Moebius& m)
{
    const Moebius mc{std::conj(m.a), std::conj(m.b), std::conj(m.c), std::conj(m.d)};
    return psi.m * mc * psi.m.inverse();
}

Complex trace_sq(const Moebius& m)
{
    const Complex dt = m.det();
    if (dt == Complex(0.0)) throw std::domain_error("trace_sq: singular matrix");
    const Complex t = m.tr();
    return t * t / dt;
}

std::pair<ExtComplex, ExtComplex> fixed_points(const Moebius& m)
{
    if (m.b == Complex(0.0) && m.c == Complex(0.0) && m.a == m.d)
        throw std::domain_error("fixed_points: identity map fixes every point");
    if (m.c == Complex(0.0)) {
        if (m.a == m.d) // parabolic translation z -> z + b/d
            return {ExtComplex::infinity(), ExtComplex::infinity()};
        return {ExtComplex(m.b / (m.d - m.a)), ExtComplex::infinity()};
    }
    const Complex amd = m.a - m.d;
    const Complex disc = amd * amd + 4.0 * m.b * m.c; // tr^2 - 4 det
    const Complex root = std::sqrt(disc);              // principal branch
    const Complex twoc = 2.0 * m.c;
    return {ExtComplex((amd + root) / twoc), ExtComplex((amd - root) / twoc)};
}

double translation_length(const Moebius& m)
{
    const Complex dt = m.det();
    if (dt == Complex(0.0)) throw std::domain_error("translation_length: singular matrix");
    const double half = std::abs(m.tr()) / (2.0 * std::sqrt(std::abs(dt)));
    if (half <= 1.0)
        throw std::domain_error("translation_length: |trace| <= 2 (not loxodromic "
                                "with positive real length)");
    return 2.0 * std::acosh(half);
}

Complex cross_ratio(const ExtComplex& a, const ExtComplex& b,
                    const ExtComplex& c, const ExtComplex& d)
{
    const int infs = int(a.is_inf()) + int(b.is_inf()) + int(c.is_inf()) + int(d.is_inf());
    if (infs > 1)
        throw std::domain_error("cross_ratio: repeated point at infinity");
    if (a.is_inf()) return (b.value() - c.value()) / (d.value() - c.value());
    if (b.is_inf()) return (d.value() - a.value()) / (d.value() - c.value());
    if (c.is_inf()) return (d.value() - a.value()) / (b.value() - a.value());
    if (d.is_inf()) return (b.value() - c.value()) / (b.value() - a.value());
    const Complex num = (d.value() - a.value()) * (b.value() - c.value());
    const Complex den = (d.value() - c.value()) * (b.value() - a.value());
    if (den == Complex(0.0))
        throw std::domain_error("cross_ratio: degenerate configuration (coincident points)");
    const Complex r = num / den;
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw std::domain_error("cross_ratio: degenerate configuration");
    return r;
}

} // namespace skinlab
