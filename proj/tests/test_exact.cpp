#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skinlab/certificates.hpp"
#include "skinlab/interval.hpp"
#include "skinlab/surd.hpp"

#include "json.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <random>

using namespace skinlab;

namespace {

// independent 100-digit floating-point oracle
using F100 = boost::multiprecision::cpp_bin_float_100;

F100 to_f100(const BigRational& q)
{
    return F100(numerator(q)) / F100(denominator(q));
}

bool contains_oracle(const RatInterval& iv, const F100& v)
{
    return to_f100(iv.lo) <= v && v <= to_f100(iv.hi);
}

F100 width_of(const RatInterval& iv) { return to_f100(iv.hi - iv.lo); }

} // namespace

TEST_CASE("interval arithmetic encloses rational point arithmetic")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    for (int it = 0; it < 400; ++it) {
        const BigRational a(num(rng), den(rng)), b(num(rng), den(rng));
        const BigRational c(num(rng), den(rng)), d(num(rng), den(rng));
        const RatInterval x(std::min(a, b), std::max(a, b));
        const RatInterval y(std::min(c, d), std::max(c, d));

        // every product of contained points lies inside the product interval
        const RatInterval prod = x * y;
        for (const BigRational& p : {x.lo, x.mid(), x.hi})
            for (const BigRational& q : {y.lo, y.mid(), y.hi})
                CHECK(prod.contains(p * q));

        CHECK((x + y).contains(x.mid() + y.mid()));
        CHECK((x - y).contains(x.lo - y.lo));
        if (y.lo > 0 || y.hi < 0) CHECK((x / y).contains(x.mid() / y.mid()));
    }
}

TEST_CASE("outward rounding keeps the enclosure and bounds the growth")
{
    const RatInterval x(BigRational(1, 3), BigRational(22, 7));
    for (unsigned bits : {16u, 64u, 192u}) {
        const RatInterval r = outward_round(x, bits);
        CHECK(r.contains(x));
        CHECK(r.width() - x.width() <= BigRational(2, pow2(bits)));
    }
}

TEST_CASE("pi enclosure brackets the oracle at every precision")
{
    const F100 pi = boost::math::constants::pi<F100>();
    for (unsigned bits : {16u, 64u, 128u, 256u}) {
        const RatInterval p = pi_enclosure(bits);
        CHECK(contains_oracle(p, pi));
        CHECK(width_of(p) <= F100(pow2(1)) / F100(pow2(bits)));
    }
}

TEST_CASE("square-root enclosures bracket the oracle")
{
    for (long d : {2L, 3L, 5L, 7L, 14L, 37169L, 1234567L}) {
        const RatInterval r =
            sqrt_enclosure(BigInt(d), BigRational(1, pow2(80)));
        CHECK(contains_oracle(r, sqrt(F100(d))));
        CHECK(r.width() <= BigRational(1, pow2(80)));
    }
    const RatInterval exact = sqrt_enclosure(BigInt(144), BigRational(1, 8));
    CHECK(exact.lo == exact.hi);
    CHECK(exact.lo == 12);

    const RatInterval q =
        sqrt_enclosure(BigRational(7, 2), BigRational(1, pow2(70)));
    CHECK(contains_oracle(q, sqrt(F100(7) / 2)));
}

TEST_CASE("cosine enclosure brackets the oracle on points and intervals")
{
    for (const BigRational& y :
         {BigRational(0), BigRational(1, 7), BigRational(1, 2), BigRational(1),
          BigRational(3, 2), BigRational(2), BigRational(3),
          BigRational(-5, 4)}) {
        const RatInterval c = cos_enclosure(RatInterval(y, y), 64);
        CHECK(contains_oracle(c, cos(to_f100(y))));
        CHECK(width_of(c) < F100("1e-30"));
    }
    // interval containing the maximum
    const RatInterval hump =
        cos_enclosure(RatInterval(BigRational(-1, 4), BigRational(1, 3)));
    CHECK(hump.hi == 1);
    CHECK(contains_oracle(hump, cos(F100(1) / 3)));
    // wide interval past pi falls back to a valid hull
    const RatInterval hull =
        cos_enclosure(RatInterval(BigRational(1), BigRational(4)));
    CHECK(hull.lo == -1);
    CHECK(contains_oracle(hull, cos(F100(2))));
    CHECK(contains_oracle(hull, cos(F100(4))));
}

TEST_CASE("log and exp enclosures bracket the oracle and round-trip")
{
    for (const BigRational& x :
         {BigRational(1, 2), BigRational(3, 4), BigRational(1), BigRational(2),
          BigRational(7, 2), BigRational(137, 25), BigRational(43897, 6728),
          BigRational(1000003, 7)}) {
        const RatInterval lg = log_enclosure(RatInterval(x, x), 160);
        CHECK(contains_oracle(lg, log(to_f100(x))));
        CHECK(width_of(lg) < F100("1e-40"));

        // exp is the independent round-trip witness
        const RatInterval back = exp_enclosure(lg, 160);
        CHECK(back.contains(x));
    }
    CHECK_THROWS_AS((void)log_enclosure(RatInterval(BigRational(0), BigRational(1)), 64),
                    std::domain_error);
}

TEST_CASE("acos enclosure brackets the oracle across the domain")
{
    for (const BigRational& q :
         {BigRational(11, 25), BigRational(1136, 4205), BigRational(116, 225),
          BigRational(-1, 3), BigRational(9, 10), BigRational(-93, 100),
          BigRational(1, 1000000)}) {
        for (unsigned bits : {64u, 128u, 256u}) {
            const RatInterval a = acos_enclosure(q, bits);
            CHECK(contains_oracle(a, acos(to_f100(q))));
            CHECK(width_of(a) <= F100(4) / F100(pow2(bits)));
        }
    }
    CHECK_THROWS_AS((void)acos_enclosure(BigRational(1), 64), std::domain_error);
    CHECK_THROWS_AS((void)acos_enclosure(BigRational(-3, 2), 64),
                    std::domain_error);
}

TEST_CASE("acosh enclosure brackets the oracle")
{
    for (const BigRational& q :
         {BigRational(3, 2), BigRational(7, 2), BigRational(137, 25),
          BigRational(43897, 6728), BigRational(225, 116)}) {
        const RatInterval a = acosh_enclosure(q, 128);
        CHECK(contains_oracle(a, acosh(to_f100(q))));
        CHECK(width_of(a) < F100("1e-35"));
    }
    CHECK_THROWS_AS((void)acosh_enclosure(BigRational(1), 64),
                    std::domain_error);
}

TEST_CASE("quadratic surds: algebra, powers, enclosures, comparisons")
{
    const QuadSurd s(BigRational(1), BigRational(1), 2); // 1 + sqrt 2
    const QuadSurd sq = surd_pow(s, 2);                  // 3 + 2 sqrt 2
    CHECK(sq.a == 3);
    CHECK(sq.b == 2);

    const QuadSurd golden(BigRational(7), BigRational(3), 5);
    const QuadSurd p27 = surd_pow(golden, 27);
    const RatInterval enc = surd_enclosure(p27, 96);
    const F100 oracle = pow(F100(7) + 3 * sqrt(F100(5)), 27);
    CHECK(contains_oracle(enc, oracle));

    CHECK(surd_compare(s, QuadSurd(BigRational(12, 5), BigRational(0), 2)) ==
          Ordering::Greater); // 1 + 1.414... > 2.4
    CHECK(surd_compare(s, QuadSurd(BigRational(5, 2), BigRational(0), 2)) ==
          Ordering::Less);
    CHECK(surd_compare(sq, surd_pow(s, 2)) == Ordering::Equal);

    CHECK_THROWS_AS(QuadSurd(BigRational(1), BigRational(1), 8),
                    std::invalid_argument); // not square-free
}

TEST_CASE("large-exponent surd comparisons behind the length constants")
{
    // 25^20 (7 + 3 sqrt 5)^27  >  2^27 (137 + 36 sqrt 14)^20
    {
        const RatInterval lhs =
            BigRational(boost::multiprecision::pow(BigInt(25), 20)) *
            surd_enclosure(surd_pow(QuadSurd(BigRational(7), BigRational(3), 5), 27), 160);
        const RatInterval rhs =
            BigRational(boost::multiprecision::pow(BigInt(2), 27)) *
            surd_enclosure(surd_pow(QuadSurd(BigRational(137), BigRational(36), 14), 20), 160);
        CHECK(strictly_less(rhs, lhs));

        // 100-digit logarithmic cross-check of the same comparison
        const F100 llog = 20 * log(F100(25)) + 27 * log(F100(7) + 3 * sqrt(F100(5)));
        const F100 rlog = 27 * log(F100(2)) + 20 * log(F100(137) + 36 * sqrt(F100(14)));
        CHECK(llog > rlog);
    }
    // 6728^43 (137 + 36 sqrt 14)^46  <  25^46 (43897 + 225 sqrt 37169)^43
    {
        const RatInterval lhs =
            BigRational(boost::multiprecision::pow(BigInt(6728), 43)) *
            surd_enclosure(surd_pow(QuadSurd(BigRational(137), BigRational(36), 14), 46), 400);
        const RatInterval rhs =
            BigRational(boost::multiprecision::pow(BigInt(25), 46)) *
            surd_enclosure(surd_pow(QuadSurd(BigRational(43897), BigRational(225), 37169), 43), 400);
        CHECK(strictly_less(lhs, rhs));

        const F100 llog = 43 * log(F100(6728)) + 46 * log(F100(137) + 36 * sqrt(F100(14)));
        const F100 rlog = 46 * log(F100(25)) + 43 * log(F100(43897) + 225 * sqrt(F100(37169)));
        CHECK(llog < rlog);
    }
}

TEST_CASE("certificate driver: all lemmas prove and report cleanly")
{
    const std::vector<CertEntry> entries = verify_all();
    REQUIRE(entries.size() == lemma_ids().size());
    CHECK(all_proved(entries));
    for (const CertEntry& e : entries) {
        CHECK(e.verdict == Verdict::Proved);
        CHECK(e.precision_bits >= 128);
        CHECK(!e.statement.empty());
    }

    const auto json = nlohmann::json::parse(report_json(entries));
    REQUIRE(json.is_array());
    REQUIRE(json.size() == entries.size());
    for (const auto& row : json) {
        CHECK(row.contains("id"));
        CHECK(row.contains("statement"));
        CHECK(row.contains("verdict"));
        CHECK(row.contains("precision_bits"));
        CHECK(row.contains("elapsed_ms"));
    }
}

TEST_CASE("certificate driver: single-lemma runs and negation injection")
{
    for (const std::string& id : lemma_ids()) {
        CertOptions one;
        one.only = id;
        const auto single = verify_all(one);
        REQUIRE(single.size() == 1);
        CHECK(single[0].id == id);
        CHECK(single[0].verdict == Verdict::Proved);

        CertOptions neg;
        neg.only = id;
        neg.negate = id;
        const auto flipped = verify_all(neg);
        REQUIRE(flipped.size() == 1);
        CHECK(flipped[0].verdict == Verdict::Refuted);
    }

    CertOptions bad;
    bad.only = "nonsense";
    CHECK_THROWS_AS((void)verify_all(bad), std::invalid_argument);
}
