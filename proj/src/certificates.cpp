#include "skinlab/certificates.hpp"

#include "skinlab/interval.hpp"
#include "skinlab/surd.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace skinlab {

namespace {

enum class Direction { Less, Greater };

struct Lemma {
    std::string id;
    std::string statement;
    Direction claim;
    // evaluator returns (lhs, rhs) enclosures at the given working precision
    std::function<std::pair<RatInterval, RatInterval>(unsigned)> eval;
};

unsigned cos_terms(unsigned bits) { return 16 + bits / 2; }

// cos(pi * num/den) enclosure
RatInterval cos_pi_multiple(long num, long den, unsigned bits)
{
    const RatInterval x = outward_round(
        BigRational(num, den) * pi_enclosure(bits), bits + 16);
    return cos_enclosure(x, cos_terms(bits));
}

// (pi + acos(u)) / acosh(v); u == 1 means the acos term is absent
RatInterval alpha_interval(const BigRational& u, const BigRational& v, unsigned bits)
{
    RatInterval num = pi_enclosure(bits);
    if (u != 1) num = num + acos_enclosure(u, bits);
    return num / acosh_enclosure(v, bits);
}

// 2 acos(u) / acosh(v)
RatInterval beta0_interval(const BigRational& u, const BigRational& v, unsigned bits)
{
    return BigRational(2) * acos_enclosure(u, bits) / acosh_enclosure(v, bits);
}

std::vector<Lemma> build_lemmas()
{
    std::vector<Lemma> lemmas;

    lemmas.push_back(
        {"t0", "(5 + 3*sqrt(3) - sqrt(44 + 26*sqrt(3)))/2 < 2/5", Direction::Less,
         [](unsigned bits) {
             const BigRational w(1, pow2(bits));
             const RatInterval s3 = sqrt_enclosure(BigInt(3), w);
             const RatInterval inner = BigRational(26) * s3 + BigRational(44);
             const RatInterval outer = sqrt_enclosure(inner, bits);
             const RatInterval val =
                 BigRational(1, 2) *
                 (BigRational(3) * s3 - outer + BigRational(5));
             return std::pair{val, RatInterval::point(BigRational(2, 5))};
         }});

    struct CosCase {
        const char* id;
        long qn, qd;       // the rational side
        long pn, pd;       // cos(pi * pn/pd)
        Direction claim;   // rational (lhs) vs cosine (rhs)
        const char* stmt;
    };
    const CosCase cos_cases[] = {
        {"A1", 11, 25, 7, 20, Direction::Less, "11/25 < cos(7*pi/20)"},
        {"A2", 1136, 4205, 5, 12, Direction::Greater, "1136/4205 > cos(5*pi/12)"},
        {"A3", 5, 9, 19, 60, Direction::Greater, "5/9 > cos(19*pi/60)"},
        {"A4", 116, 225, 13, 40, Direction::Less, "116/225 < cos(13*pi/40)"},
    };
    for (const CosCase& c : cos_cases) {
        lemmas.push_back({c.id, c.stmt, c.claim, [c](unsigned bits) {
                              return std::pair{
                                  RatInterval::point(BigRational(c.qn, c.qd)),
                                  cos_pi_multiple(c.pn, c.pd, bits)};
                          }});
    }

    lemmas.push_back(
        {"A5", "25^20 * (7 + 3*sqrt(5))^27 > 2^27 * (137 + 36*sqrt(14))^20",
         Direction::Greater, [](unsigned bits) {
             using boost::multiprecision::pow;
             const QuadSurd lhs = BigRational(pow(BigInt(25), 20)) *
                                  surd_pow(QuadSurd(7, 3, 5), 27);
             const QuadSurd rhs = BigRational(pow(BigInt(2), 27)) *
                                  surd_pow(QuadSurd(137, 36, 14), 20);
             return std::pair{surd_enclosure(lhs, bits), surd_enclosure(rhs, bits)};
         }});

    lemmas.push_back(
        {"A7",
         "6728^43 * (137 + 36*sqrt(14))^46 < 25^46 * (43897 + 225*sqrt(37169))^43",
         Direction::Less, [](unsigned bits) {
             using boost::multiprecision::pow;
             const QuadSurd lhs = BigRational(pow(BigInt(6728), 43)) *
                                  surd_pow(QuadSurd(137, 36, 14), 46);
             const QuadSurd rhs = BigRational(pow(BigInt(25), 46)) *
                                  surd_pow(QuadSurd(43897, 225, 37169), 43);
             return std::pair{surd_enclosure(lhs, bits), surd_enclosure(rhs, bits)};
         }});

    lemmas.push_back(
        {"alpha1", "(pi + acos(11/25))/acosh(137/25) > pi/acosh(7/2)",
         Direction::Greater, [](unsigned bits) {
             return std::pair{
                 alpha_interval(BigRational(11, 25), BigRational(137, 25), bits),
                 alpha_interval(BigRational(1), BigRational(7, 2), bits)};
         }});

    lemmas.push_back(
        {"alphabeta25",
         "(pi + acos(11/25))/acosh(137/25) - (pi + acos(1136/4205))/acosh(43897/6728)"
         " > 2*acos(5/9)/acosh(137/25) - 2*acos(116/225)/acosh(43897/6728)",
         Direction::Greater, [](unsigned bits) {
             const BigRational v12(137, 25), v25(43897, 6728);
             const RatInterval lhs =
                 alpha_interval(BigRational(11, 25), v12, bits) -
                 alpha_interval(BigRational(1136, 4205), v25, bits);
             const RatInterval rhs = beta0_interval(BigRational(5, 9), v12, bits) -
                                     beta0_interval(BigRational(116, 225), v25, bits);
             return std::pair{lhs, rhs};
         }});

    return lemmas;
}

double width_log2_of(const RatInterval& a, const RatInterval& b)
{
    const BigRational w = std::max(a.width(), b.width());
    if (w == 0) return -std::numeric_limits<double>::infinity();
    const double num_bits =
        double(boost::multiprecision::msb(numerator(w)));
    const double den_bits =
        double(boost::multiprecision::msb(denominator(w)));
    return num_bits - den_bits;
}

CertEntry run_lemma(const Lemma& lemma, bool negate)
{
    CertEntry entry;
    entry.id = lemma.id;
    entry.statement = lemma.statement;
    if (negate) {
        entry.statement += "  [direction negated]";
    }
    const Direction claim =
        negate ? (lemma.claim == Direction::Less ? Direction::Greater
                                                 : Direction::Less)
               : lemma.claim;

    const auto start = std::chrono::steady_clock::now();
    for (unsigned bits = 128; bits <= 4096; bits *= 2) {
        const auto [lhs, rhs] = lemma.eval(bits);
        entry.precision_bits = bits;
        entry.width_log2 = width_log2_of(lhs, rhs);
        if (strictly_less(lhs, rhs)) {
            entry.verdict = claim == Direction::Less ? Verdict::Proved
                                                     : Verdict::Refuted;
            break;
        }
        if (strictly_less(rhs, lhs)) {
            entry.verdict = claim == Direction::Greater ? Verdict::Proved
                                                        : Verdict::Refuted;
            break;
        }
        entry.verdict = Verdict::Undecided;
    }
    const auto stop = std::chrono::steady_clock::now();
    entry.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return entry;
}

} // namespace

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Proved: return "Proved";
    case Verdict::Refuted: return "Refuted";
    default: return "Undecided";
    }
}

const std::vector<std::string>& lemma_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Lemma& l : build_lemmas()) v.push_back(l.id);
        return v;
    }();
    return ids;
}

std::vector<CertEntry> verify_all(const CertOptions& opts)
{
    if (!opts.only.empty()) {
        bool known = false;
        for (const std::string& id : lemma_ids()) known |= (id == opts.only);
        if (!known)
            throw std::invalid_argument("verify_all: unknown lemma id '" +
                                        opts.only + "'");
    }
    std::vector<CertEntry> out;
    for (const Lemma& lemma : build_lemmas()) {
        if (!opts.only.empty() && lemma.id != opts.only) continue;
        out.push_back(run_lemma(lemma, lemma.id == opts.negate));
    }
    return out;
}

bool all_proved(const std::vector<CertEntry>& entries)
{
    if (entries.empty()) return false;
    for (const CertEntry& e : entries)
        if (e.verdict != Verdict::Proved) return false;
    return true;
}

std::string report_json(const std::vector<CertEntry>& entries)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const CertEntry& e : entries) {
        arr.push_back({{"id", e.id},
                       {"statement", e.statement},
                       {"verdict", verdict_name(e.verdict)},
                       {"precision_bits", e.precision_bits},
                       {"elapsed_ms", e.elapsed_ms}});
    }
    return arr.dump(2);
}

} // namespace skinlab
