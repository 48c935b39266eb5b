#pragma once

#include <array>
#include <complex>
#include <utility>

namespace skinlab {

using Complex = std::complex<double>;

/// Point on the Riemann sphere: a finite complex value or the point at infinity.
class ExtComplex {
public:
    ExtComplex() = default;
    ExtComplex(Complex z) : z_(z) {}
    ExtComplex(double x) : z_(x, 0.0) {}
    static ExtComplex infinity();

    bool is_inf() const { return inf_; }
    /// Finite value; throws std::domain_error at infinity.
    Complex value() const;

private:
    Complex z_{0.0, 0.0};
    bool inf_ = false;
};

/// Chordal (spherical) distance, range [0,2]; d(z,inf) = 2/sqrt(1+|z|^2).
double chordal(const ExtComplex& z, const ExtComplex& w);

/// Fractional linear map z -> (az+b)/(cz+d).  Entries are kept as given;
/// operations that need a determinant-1 representative normalize explicitly.
struct Moebius {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Complex det() const { return a * d - b * c; }
    Complex tr() const { return a + d; }
    Moebius inverse() const;      // adjugate / det
    Moebius normalized() const;   // scaled to det 1 (principal square root)
    /// det-1 representative with Re(tr) >= 0, ties broken toward Im(tr) >= 0.
    Moebius canonical() const;
    ExtComplex operator()(const ExtComplex& z) const;
};

Moebius operator*(const Moebius& m, const Moebius& n);

/// Orientation-reversing map z -> m(conj(z)).
struct AntiMoebius {
    Moebius m;
    ExtComplex operator()(const ExtComplex& z) const;
    AntiMoebius inverse() const;
};

/// Equality in PSL(2,C): det-1 normalization agrees up to a global sign
/// within tol (max entry difference).
bool same_projective(const Moebius& m, const Moebius& n, double tol = 1e-9);
/// The entrywise defect used by same_projective (min over the two signs).
double projective_defect(const Moebius& m, const Moebius& n);

/// Unique Moebius map sending v[i] -> w[i]; result has det 1.
/// Throws std::invalid_argument when a triple has coincident points.
Moebius mobius_from_triples(const std::array<ExtComplex, 3>& v,
                            const std::array<ExtComplex, 3>& w);

/// psi . m . psi^{-1} as a Moebius map (= P conj(M) P^{-1} for psi = P . conj).
Moebius anti_conjugate(const AntiMoebius& psi, const Moebius& m);

/// Scale-invariant squared trace (a+d)^2 / (ad-bc).
Complex trace_sq(const Moebius& m);

/// Fixed points (p+, p-) with the principal branch of sqrt(tr^2 - 4 det)
/// taken on the matrix exactly as supplied: p+- = ((a-d) +- root)/(2c).
/// For c = 0 returns (finite point, infinity); a parabolic translation gives
/// (infinity, infinity).  Throws std::domain_error for the identity.
std::pair<ExtComplex, ExtComplex> fixed_points(const Moebius& m);

/// Real translation length 2 acosh(|tr|/2) of a loxodromic with |tr| > 2
/// (trace measured on the det-1 normalization).  Throws std::domain_error
/// when |tr| <= 2.
double translation_length(const Moebius& m);

/// Cross-ratio [a:b:c:d] = ((d-a)(b-c)) / ((d-c)(b-a)) with the usual limits
/// at infinity.  Throws std::domain_error for degenerate (0/0) configurations.
Complex cross_ratio(const ExtComplex& a, const ExtComplex& b,
                    const ExtComplex& c, const ExtComplex& d);

} // namespace skinlab
