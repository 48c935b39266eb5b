#pragma once

#include "skinlab/rational.hpp"

namespace skinlab {

/// Closed interval with exact rational endpoints.  Every operation returns an
/// interval guaranteed to contain the exact result; rational +, -, * are
/// themselves exact, and the series-based enclosures carry explicit remainder
/// brackets.
struct RatInterval {
    BigRational lo, hi;

    RatInterval() = default;
    RatInterval(BigRational l, BigRational h);
    static RatInterval point(BigRational v);
    /// Construction without the lo <= hi check, for operator results whose
    /// endpoint order holds by construction (rational comparisons are
    /// cross-multiplications and dominate the cost of interval arithmetic).
    static RatInterval unchecked(BigRational l, BigRational h);

    BigRational width() const { return hi - lo; }
    BigRational mid() const { return (lo + hi) / 2; }
    bool contains(const BigRational& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& other) const
    {
        return lo <= other.lo && other.hi <= hi;
    }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
RatInterval operator*(const RatInterval& a, const RatInterval& b);
RatInterval operator+(const RatInterval& a, const BigRational& b);
RatInterval operator-(const RatInterval& a, const BigRational& b);
RatInterval operator*(const BigRational& s, const RatInterval& a);
/// Division; the divisor interval must not contain zero.
RatInterval operator/(const RatInterval& a, const RatInterval& b);

/// True when a.hi < b.lo (strict separation).
bool strictly_less(const RatInterval& a, const RatInterval& b);

/// Round endpoints outward to the dyadic grid of spacing 2^{-bits}
/// (keeps denominators bounded between stages of a long computation).
RatInterval outward_round(const RatInterval& x, unsigned bits);

/// Enclosure of sqrt(d) with width <= width; point interval for perfect
/// squares.  Throws std::invalid_argument for d < 0 or width <= 0.
RatInterval sqrt_enclosure(const BigInt& d, const BigRational& width);

/// Enclosure of sqrt(q) for rational q >= 0 (via sqrt((num*den)) / den).
RatInterval sqrt_enclosure(const BigRational& q, const BigRational& width);

/// Monotone enclosure of sqrt over an interval with x.lo >= 0.
RatInterval sqrt_enclosure(const RatInterval& x, unsigned bits);

/// Certified pi with width <= 2^{-bits} (Machin arctangent series with
/// alternating-series brackets).  Requires bits >= 8.
RatInterval pi_enclosure(unsigned bits);

/// Certified cos over x, |x| <= 4, by exact Taylor partial sums bracketed by
/// the alternating tail; monotonicity-aware on subranges of [-pi, pi].
/// `terms` caps the series length; the bracket is valid for any cap.
RatInterval cos_enclosure(const RatInterval& x, unsigned terms = 64);

/// Certified natural log for x.lo > 0 (atanh series after power-of-two range
/// reduction); `bits` steers the internal target width.
RatInterval log_enclosure(const RatInterval& x, unsigned bits = 192);

/// Certified exp (round-trip oracle for log_enclosure).
RatInterval exp_enclosure(const RatInterval& x, unsigned bits = 192);

/// Certified acos(q) for rational q in (-1, 1), via
/// acos(q) = 2 atan(sqrt((1-q)/(1+q))) with arctangent argument halving and
/// an alternating series, to width ~ 2^{-bits}.
RatInterval acos_enclosure(const BigRational& q, unsigned bits);

/// Certified acosh(q) = log(q + sqrt(q^2 - 1)) for rational q > 1.
RatInterval acosh_enclosure(const BigRational& q, unsigned bits);

} // namespace skinlab
