#pragma once

#include "skinlab/interval.hpp"
#include "skinlab/rational.hpp"

namespace skinlab {

/// Real quadratic surd a + b sqrt(d) with d a positive square-free integer.
/// Arithmetic is closed for a fixed d and exact.
struct QuadSurd {
    BigRational a, b;
    BigInt d;

    QuadSurd(BigRational a_, BigRational b_, BigInt d_);

    bool is_rational() const { return b == 0; }
};

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y); // same d
QuadSurd operator*(const QuadSurd& x, const QuadSurd& y); // same d
QuadSurd operator*(const BigRational& s, const QuadSurd& x);

/// Exact n-th power by binary exponentiation.
QuadSurd surd_pow(const QuadSurd& s, unsigned n);

/// Interval containing the real value, sqrt(d) enclosed to 2^{-bits}.
RatInterval surd_enclosure(const QuadSurd& s, unsigned bits);

enum class Ordering { Less, Equal, Greater, Undecided };

/// Strict ordering of real values.  Exact (sign analysis and squaring) when
/// the surds share d or either side is rational; otherwise certified interval
/// refinement from 128 bits, doubling to a 4096-bit cap, after which equal
/// values with genuinely different radicands report Undecided.
Ordering surd_compare(const QuadSurd& lhs, const QuadSurd& rhs);

} // namespace skinlab
