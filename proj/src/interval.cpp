#include "skinlab/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace skinlab {

namespace {

// Alternating series Sum (-1)^k / ((2k+1) m^{2k+1}): consecutive partial sums
// bracket atan(1/m).
RatInterval atan_reciprocal(unsigned m, const BigRational& target)
{
    const BigRational m2 = BigRational(1, BigInt(m) * m);
    BigRational power(1, m); // m^{-(2k+1)}
    BigRational sum = 0;
    for (unsigned k = 0;; ++k) {
        const BigRational term = power / (2 * k + 1);
        if (term <= target) {
            // remainder carries the sign of the first omitted term
            if (k % 2 == 0) return RatInterval(sum, sum + term);
            return RatInterval(sum - term, sum);
        }
        sum += (k % 2 == 0) ? term : -term;
        power *= m2;
        if (k > 100000)
            throw std::logic_error("atan_reciprocal: series failed to converge");
    }
}

// Taylor bracket for cos at a rational point y >= 0 (|y| <= 4), accumulated
// in interval arithmetic with outward rounding at `prec` bits so numerator
// sizes stay bounded regardless of the denominator of y. The remainder is
// bounded by the first omitted term once the terms decrease, which holds
// from k = 3 for |y| <= 4; we always run at least 4 terms.
RatInterval cos_taylor(const BigRational& y, unsigned terms, unsigned prec)
{
    if (y * y > 16)
        throw std::invalid_argument("cos_enclosure: |x| must be <= 4");
    terms = std::max(terms, 4u);
    const RatInterval y2 = outward_round(RatInterval::point(y * y), prec);
    RatInterval term = RatInterval::point(1); // encloses y^{2k} / (2k)!
    RatInterval sum = RatInterval::point(0);
    for (unsigned k = 0; k < terms; ++k) {
        sum = outward_round((k % 2 == 0) ? sum + term : sum - term, prec);
        const BigRational inv_fact(1, std::int64_t(2 * k + 1) * (2 * k + 2));
        term = outward_round(inv_fact * (term * y2), prec);
        if (term.hi == 0) break;
    }
    return RatInterval(sum.lo - term.hi, sum.hi + term.hi);
}

// Positive-series bracket for atanh(u), 0 <= u <= 1/3 + slack, accumulated
// in interval arithmetic with outward rounding so numerator sizes stay
// bounded regardless of the denominator of u.
RatInterval atanh_nonneg(const BigRational& u, unsigned bits)
{
    if (u == 0) return RatInterval::point(0);
    if (3 * u > BigRational(51, 50))
        throw std::invalid_argument("atanh_nonneg: argument too large");
    const unsigned prec = bits + 32;
    const BigRational target(1, pow2(bits));
    const RatInterval u2 = outward_round(RatInterval::point(u * u), prec);
    RatInterval power = outward_round(RatInterval::point(u), prec);
    RatInterval sum = RatInterval::point(0);
    for (unsigned k = 0;; ++k) {
        sum = outward_round(sum + BigRational(1, 2 * k + 1) * power, prec);
        power = outward_round(power * u2, prec);
        if (power.hi <= target) {
            // tail <= u^{2K+3}/(2K+3) * 1/(1-u^2), and 1/(1-u^2) <= 8/7
            // for u <= 0.34
            const BigRational tail =
                power.hi * BigRational(8, 7) / (2 * k + 3);
            return RatInterval(sum.lo, sum.hi + tail);
        }
        if (k > 100000)
            throw std::logic_error("atanh_nonneg: series failed to converge");
    }
}

RatInterval atanh_signed(const BigRational& u, unsigned bits)
{
    if (u >= 0) return atanh_nonneg(u, bits);
    const RatInterval pos = atanh_nonneg(-u, bits);
    return RatInterval(-pos.hi, -pos.lo);
}

RatInterval log2_enclosure(unsigned bits)
{
    const RatInterval a = atanh_nonneg(BigRational(1, 3), bits + 2);
    return RatInterval(2 * a.lo, 2 * a.hi);
}

// log of a rational point z > 0.
RatInterval log_point(const BigRational& z, unsigned bits)
{
    if (z <= 0) throw std::domain_error("log_enclosure: argument must be positive");
    if (z == 1) return RatInterval::point(0);

    // z = 2^e * m with m in [1, 2)
    long e = long(numerator(z) == 1 ? 0 : boost::multiprecision::msb(numerator(z))) -
             long(denominator(z) == 1 ? 0 : boost::multiprecision::msb(denominator(z)));
    BigRational m = e >= 0 ? z / BigRational(pow2(unsigned(e)))
                           : z * BigRational(pow2(unsigned(-e)));
    while (m >= 2) {
        m /= 2;
        ++e;
    }
    while (m < 1) {
        m *= 2;
        --e;
    }

    // round m outward so the series runs on small dyadic rationals
    const RatInterval mr = outward_round(RatInterval::point(m), bits + 16);
    const RatInterval u(
        (mr.lo - 1) / (mr.lo + 1),
        (mr.hi - 1) / (mr.hi + 1)); // monotone in m
    const RatInterval at(atanh_signed(u.lo, bits + 8).lo,
                         atanh_signed(u.hi, bits + 8).hi);

    RatInterval result(2 * at.lo, 2 * at.hi);
    if (e != 0) {
        unsigned extra = 8;
        unsigned long ae = static_cast<unsigned long>(e >= 0 ? e : -e);
        while (ae >>= 1) ++extra; // widen log2 precision with the exponent size
        result = result + BigRational(e) * log2_enclosure(bits + extra);
    }
    return outward_round(result, bits + 2);
}

// exp of a rational point.
RatInterval exp_point(const BigRational& y, unsigned bits)
{
    if (y == 0) return RatInterval::point(1);
    const BigInt n = floor_rat(y * BigRational(10, 7) + BigRational(1, 2));
    // r = y - n*log2 lies in roughly [-0.37, 0.37]
    unsigned extra = 8;
    {
        BigInt an = abs(n);
        while (an > 1) {
            an >>= 1;
            ++extra;
        }
    }
    const RatInterval r =
        RatInterval::point(y) - BigRational(n) * log2_enclosure(bits + extra);
    if (r.lo < BigRational(-3, 4) || r.hi > BigRational(3, 4))
        throw std::logic_error("exp_point: range reduction failed");

    const BigRational target(1, pow2(bits + 8));
    const unsigned prec = bits + 40;
    const auto series = [&](const BigRational& c) {
        const RatInterval ci = outward_round(RatInterval::point(c), prec);
        RatInterval term = RatInterval::point(1); // encloses c^j / j!
        RatInterval sum = RatInterval::point(0);
        for (unsigned j = 0;; ++j) {
            sum = outward_round(sum + term, prec);
            term = outward_round(BigRational(1, j + 1) * (term * ci), prec);
            // mag bounds |c|^{j+1}/(j+1)!; the geometric tail ratio is
            // |c|/(j+2) <= 1/2 from j >= 0 for |c| <= 3/4
            const BigRational mag = std::max(abs(term.lo), abs(term.hi));
            if (j >= 2 && mag <= target)
                return RatInterval(sum.lo - 2 * mag, sum.hi + 2 * mag);
            if (j > 10000)
                throw std::logic_error("exp_point: series failed to converge");
        }
    };
    const RatInterval er(series(r.lo).lo, series(r.hi).hi);
    const long ni = n.convert_to<long>();
    RatInterval out = ni >= 0
        ? BigRational(BigInt(1) << unsigned(ni)) * er
        : BigRational(1, BigInt(1) << unsigned(-ni)) * er;
    return outward_round(out, bits + 2);
}

} // namespace

RatInterval::RatInterval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h))
{
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval RatInterval::point(BigRational v)
{
    RatInterval r;
    r.lo = v;
    r.hi = std::move(v);
    return r;
}

RatInterval RatInterval::unchecked(BigRational l, BigRational h)
{
    RatInterval r;
    r.lo = std::move(l);
    r.hi = std::move(h);
    return r;
}

RatInterval operator+(const RatInterval& a, const RatInterval& b)
{
    return RatInterval::unchecked(a.lo + b.lo, a.hi + b.hi);
}

RatInterval operator-(const RatInterval& a, const RatInterval& b)
{
    return RatInterval::unchecked(a.lo - b.hi, a.hi - b.lo);
}

RatInterval operator-(const RatInterval& a)
{
    return RatInterval::unchecked(-a.hi, -a.lo);
}

RatInterval operator*(const RatInterval& a, const RatInterval& b)
{
    // sign-cased so the common (sign-definite) cases need two products and
    // no rational comparisons
    const int alo = sign(a.lo), ahi = sign(a.hi);
    const int blo = sign(b.lo), bhi = sign(b.hi);
    if (alo >= 0) {
        if (blo >= 0) return RatInterval::unchecked(a.lo * b.lo, a.hi * b.hi);
        if (bhi <= 0) return RatInterval::unchecked(a.hi * b.lo, a.lo * b.hi);
        return RatInterval::unchecked(a.hi * b.lo, a.hi * b.hi);
    }
    if (ahi <= 0) {
        if (blo >= 0) return RatInterval::unchecked(a.lo * b.hi, a.hi * b.lo);
        if (bhi <= 0) return RatInterval::unchecked(a.hi * b.hi, a.lo * b.lo);
        return RatInterval::unchecked(a.lo * b.hi, a.lo * b.lo);
    }
    if (blo >= 0) return RatInterval::unchecked(a.lo * b.hi, a.hi * b.hi);
    if (bhi <= 0) return RatInterval::unchecked(a.hi * b.lo, a.lo * b.lo);
    // both straddle zero: two candidate extremes on each side
    return RatInterval::unchecked(std::min(a.lo * b.hi, a.hi * b.lo),
                                  std::max(a.lo * b.lo, a.hi * b.hi));
}

RatInterval operator+(const RatInterval& a, const BigRational& b)
{
    return RatInterval::unchecked(a.lo + b, a.hi + b);
}

RatInterval operator-(const RatInterval& a, const BigRational& b)
{
    return RatInterval::unchecked(a.lo - b, a.hi - b);
}

RatInterval operator*(const BigRational& s, const RatInterval& a)
{
    if (s >= 0) return RatInterval::unchecked(s * a.lo, s * a.hi);
    return RatInterval::unchecked(s * a.hi, s * a.lo);
}

RatInterval operator/(const RatInterval& a, const RatInterval& b)
{
    if (b.lo <= 0 && b.hi >= 0)
        throw std::domain_error("RatInterval: division by interval containing zero");
    return a * RatInterval(1 / b.hi, 1 / b.lo);
}

bool strictly_less(const RatInterval& a, const RatInterval& b)
{
    return a.hi < b.lo;
}

RatInterval outward_round(const RatInterval& x, unsigned bits)
{
    const BigInt scale = pow2(bits);
    return RatInterval::unchecked(BigRational(floor_rat(x.lo * scale), scale),
                                  BigRational(ceil_rat(x.hi * scale), scale));
}

RatInterval sqrt_enclosure(const BigInt& d, const BigRational& width)
{
    if (d < 0) throw std::invalid_argument("sqrt_enclosure: negative radicand");
    if (width <= 0) throw std::invalid_argument("sqrt_enclosure: width must be positive");
    const BigInt r = isqrt_floor(d);
    if (r * r == d) return RatInterval::point(BigRational(r));
    const unsigned k = bits_for_width(width);
    const BigInt s = isqrt_floor(d << (2 * k));
    const BigInt den = pow2(k);
    return RatInterval(BigRational(s, den), BigRational(s + 1, den));
}

RatInterval sqrt_enclosure(const BigRational& q, const BigRational& width)
{
    if (q < 0) throw std::invalid_argument("sqrt_enclosure: negative radicand");
    if (q == 0) return RatInterval::point(0);
    const BigInt num = numerator(q), den = denominator(q);
    const RatInterval inner =
        sqrt_enclosure(BigInt(num * den), BigRational(width * den));
    return RatInterval(inner.lo / den, inner.hi / den);
}

RatInterval sqrt_enclosure(const RatInterval& x, unsigned bits)
{
    if (x.lo < 0) throw std::invalid_argument("sqrt_enclosure: negative interval");
    const BigRational w(1, pow2(bits));
    return RatInterval(sqrt_enclosure(x.lo, w).lo, sqrt_enclosure(x.hi, w).hi);
}

RatInterval pi_enclosure(unsigned bits)
{
    if (bits < 8) throw std::invalid_argument("pi_enclosure: bits must be >= 8");
    if (bits > 1u << 14) throw std::invalid_argument("pi_enclosure: bits too large");
    const BigRational target(1, pow2(bits + 6));
    const RatInterval a5 = atan_reciprocal(5, target);
    const RatInterval a239 = atan_reciprocal(239, target);
    const RatInterval pi = BigRational(16) * a5 - BigRational(4) * a239;
    return outward_round(pi, bits + 2);
}

RatInterval cos_enclosure(const RatInterval& x, unsigned terms)
{
    RatInterval v = x;
    if (v.hi < 0) v = -v; // cos is even
    static const RatInterval pi64 = pi_enclosure(64);
    const BigRational& pi_lo = pi64.lo;
    const unsigned prec = 64 + 4 * terms;

    if (v.lo >= 0 && v.hi <= pi_lo) {
        // strictly decreasing on [0, pi]
        return RatInterval(cos_taylor(v.hi, terms, prec).lo,
                           cos_taylor(v.lo, terms, prec).hi);
    }
    const BigRational mag = std::max(abs(v.lo), abs(v.hi));
    if (v.lo < 0 && v.hi >= 0 && mag <= pi_lo) {
        // contains the maximum at 0
        return RatInterval(std::min(cos_taylor(abs(v.lo), terms, prec).lo,
                                    cos_taylor(v.hi, terms, prec).lo),
                           1);
    }
    // conservative hull for arguments reaching past pi (|x| <= 4 enforced
    // inside cos_taylor)
    BigRational hi = std::max(cos_taylor(abs(v.lo), terms, prec).hi,
                              cos_taylor(abs(v.hi), terms, prec).hi);
    if (v.lo < 0 && v.hi >= 0) hi = std::max(hi, BigRational(1));
    return RatInterval(-1, std::min(hi, BigRational(1)));
}

RatInterval log_enclosure(const RatInterval& x, unsigned bits)
{
    if (x.lo <= 0) throw std::domain_error("log_enclosure: interval must be positive");
    return RatInterval(log_point(x.lo, bits).lo, log_point(x.hi, bits).hi);
}

RatInterval exp_enclosure(const RatInterval& x, unsigned bits)
{
    return RatInterval(exp_point(x.lo, bits).lo, exp_point(x.hi, bits).hi);
}

namespace {

// Alternating arctangent series at a rational point 0 <= y <= 1/4,
// accumulated with outward rounding; remainder bounded by the first omitted
// term (the terms decrease for |y| <= 1).
RatInterval atan_taylor(const BigRational& y, unsigned prec,
                        const BigRational& target)
{
    const RatInterval y2 = outward_round(RatInterval::point(y * y), prec);
    RatInterval power = outward_round(RatInterval::point(y), prec);
    RatInterval sum = RatInterval::point(0);
    for (unsigned k = 0;; ++k) {
        sum = outward_round(
            (k % 2 == 0) ? sum + BigRational(1, 2 * k + 1) * power
                         : sum - BigRational(1, 2 * k + 1) * power,
            prec);
        power = outward_round(power * y2, prec);
        const BigRational bound = power.hi / (2 * k + 3);
        if (bound <= target)
            return RatInterval(sum.lo - bound, sum.hi + bound);
        if (k > 100000)
            throw std::logic_error("atan_taylor: series failed to converge");
    }
}

} // namespace

RatInterval acos_enclosure(const BigRational& q, unsigned bits)
{
    if (q <= -1 || q >= 1)
        throw std::domain_error("acos_enclosure: argument must lie in (-1, 1)");
    if (q < BigRational(-1) + BigRational(1, pow2(100)))
        throw std::domain_error(
            "acos_enclosure: argument too close to -1 for the arctangent "
            "range reduction");
    const unsigned prec = bits + 48;

    // acos(q) = 2 atan(r),  r = sqrt((1-q)/(1+q))
    RatInterval x = sqrt_enclosure(BigRational((1 - q) / (1 + q)),
                                   BigRational(1, pow2(prec)));

    // halve the argument until the series converges fast:
    // atan(x) = 2 atan(x / (1 + sqrt(1 + x^2)))
    unsigned halvings = 0;
    while (x.hi > BigRational(1, 4)) {
        const RatInterval root =
            sqrt_enclosure(outward_round(x * x + BigRational(1), prec), prec);
        x = outward_round(x / (root + BigRational(1)), prec);
        if (++halvings > 200)
            throw std::logic_error("acos_enclosure: range reduction stalled");
    }

    // total scale factor 2^{halvings + 1}; tighten the series target so the
    // final scaled width still meets the request
    const BigRational target(1, pow2(bits + halvings + 8));
    const RatInterval at(atan_taylor(x.lo, prec, target).lo,
                         atan_taylor(x.hi, prec, target).hi); // atan increasing
    return outward_round(BigRational(pow2(halvings + 1)) * at, bits + 2);
}

RatInterval acosh_enclosure(const BigRational& q, unsigned bits)
{
    if (q <= 1) throw std::domain_error("acosh_enclosure: argument must be > 1");
    const RatInterval root =
        sqrt_enclosure(q * q - 1, BigRational(1, pow2(bits + 8)));
    return log_enclosure(root + q, bits + 4);
}

} // namespace skinlab
