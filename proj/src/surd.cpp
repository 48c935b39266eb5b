#include "skinlab/surd.hpp"

#include <stdexcept>

namespace skinlab {

namespace {

void require_square_free(const BigInt& d)
{
    if (d <= 0) throw std::invalid_argument("QuadSurd: radicand must be positive");
    if (d > (BigInt(1) << 62))
        throw std::invalid_argument("QuadSurd: radicand too large to validate");
    // full square-free validation for d < 2^32; trial factors capped beyond
    for (BigInt p = 2; p * p <= d && p <= 65536; ++p)
        if (d % (p * p) == 0)
            throw std::invalid_argument("QuadSurd: radicand must be square-free");
}

void require_same_d(const QuadSurd& x, const QuadSurd& y, const char* who)
{
    if (x.d != y.d)
        throw std::invalid_argument(std::string(who) +
                                    ": mixed radicands (arithmetic is closed per d)");
}

// Sign of A + B sqrt(d), exactly.
int sign_of(const BigRational& A, const BigRational& B, const BigInt& d)
{
    const int sa = A > 0 ? 1 : (A < 0 ? -1 : 0);
    const int sb = B > 0 ? 1 : (B < 0 ? -1 : 0);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare A^2 with B^2 d
    const BigRational a2 = A * A;
    const BigRational b2d = B * B * d;
    if (a2 == b2d) return 0;
    // value has the sign of the bigger magnitude side
    return (a2 > b2d) ? sa : sb;
}

} // namespace

QuadSurd::QuadSurd(BigRational a_, BigRational b_, BigInt d_)
    : a(std::move(a_)), b(std::move(b_)), d(std::move(d_))
{
    require_square_free(d);
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y)
{
    require_same_d(x, y, "QuadSurd operator+");
    return QuadSurd(x.a + y.a, x.b + y.b, x.d);
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y)
{
    require_same_d(x, y, "QuadSurd operator*");
    return QuadSurd(x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d);
}

QuadSurd operator*(const BigRational& s, const QuadSurd& x)
{
    return QuadSurd(s * x.a, s * x.b, x.d);
}

QuadSurd surd_pow(const QuadSurd& s, unsigned n)
{
    QuadSurd result(1, 0, s.d);
    QuadSurd base = s;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

RatInterval surd_enclosure(const QuadSurd& s, unsigned bits)
{
    if (s.b == 0) return RatInterval::point(s.a);
    const RatInterval root = sqrt_enclosure(s.d, BigRational(1, pow2(bits)));
    return s.b * root + s.a;
}

Ordering surd_compare(const QuadSurd& lhs, const QuadSurd& rhs)
{
    // Exact path: shared radicand, or either side rational (compare against
    // the other side's radicand).
    if (lhs.d == rhs.d || lhs.is_rational() || rhs.is_rational()) {
        const BigInt d = lhs.is_rational() ? rhs.d : lhs.d;
        const BigRational A = lhs.a - rhs.a;
        const BigRational B = (lhs.is_rational() ? BigRational(0) : lhs.b) -
                              (rhs.is_rational() ? BigRational(0) : rhs.b);
        const int s = sign_of(A, B, d);
        if (s < 0) return Ordering::Less;
        if (s > 0) return Ordering::Greater;
        return Ordering::Equal;
    }
    // Certified refinement across different radicands.
    for (unsigned bits = 128; bits <= 4096; bits *= 2) {
        const RatInterval l = surd_enclosure(lhs, bits);
        const RatInterval r = surd_enclosure(rhs, bits);
        if (strictly_less(l, r)) return Ordering::Less;
        if (strictly_less(r, l)) return Ordering::Greater;
    }
    return Ordering::Undecided;
}

} // namespace skinlab
