#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace skinlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned bits)
{
    return BigInt(1) << bits;
}

/// Floor division (cpp_int's operator/ truncates toward zero).
inline BigInt floor_div(const BigInt& num, const BigInt& den)
{
    BigInt q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

inline BigInt floor_rat(const BigRational& q)
{
    return floor_div(numerator(q), denominator(q));
}

inline BigInt ceil_rat(const BigRational& q)
{
    return -floor_div(-numerator(q), denominator(q));
}

/// Floor of the integer square root.
inline BigInt isqrt_floor(const BigInt& n)
{
    return boost::multiprecision::sqrt(n);
}

/// Smallest k >= 0 with 2^{-k} <= q, for q in (0, 1]; returns 0 for q >= 1.
inline unsigned bits_for_width(const BigRational& q)
{
    if (q >= 1) return 0;
    const BigInt ratio = ceil_rat(BigRational(denominator(q), numerator(q)));
    unsigned k = static_cast<unsigned>(boost::multiprecision::msb(ratio));
    if ((BigInt(1) << k) < ratio) ++k;
    return k;
}

} // namespace skinlab
