#include "skinlab/representation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace skinlab {

namespace {

void push_reduced(std::vector<Gen>& letters, Gen g)
{
    if (!letters.empty() && letters.back() == inverse(g))
        letters.pop_back();
    else
        letters.push_back(g);
}

constexpr Complex kI{0.0, 1.0};

// Quantized position on the unit sphere (stereographic model of C + inf),
// packed into 64 bits.  inv_res = 1/resolution, at most ~2^20.
std::uint64_t sphere_key(const ExtComplex& z, double inv_res)
{
    double X, Y, Z;
    if (z.is_inf()) {
        X = 0.0;
        Y = 0.0;
        Z = 1.0;
    } else {
        const double n = std::norm(z.value());
        X = 2.0 * z.value().real() / (1.0 + n);
        Y = 2.0 * z.value().imag() / (1.0 + n);
        Z = (n - 1.0) / (n + 1.0);
    }
    const auto q = [inv_res](double v) {
        return std::uint64_t(std::llround(v * inv_res) + (1 << 20));
    };
    return (q(X) << 42) | (q(Y) << 21) | q(Z);
}

} // namespace

Gen inverse(Gen g)
{
    switch (g) {
    case Gen::A: return Gen::Ainv;
    case Gen::Ainv: return Gen::A;
    case Gen::B: return Gen::Binv;
    default: return Gen::B;
    }
}

char letter_char(Gen g)
{
    switch (g) {
    case Gen::A: return 'a';
    case Gen::Ainv: return 'A';
    case Gen::B: return 'b';
    default: return 'B';
    }
}

Word Word::parse(std::string_view s)
{
    Word w;
    w.letters.reserve(s.size());
    for (char ch : s) {
        Gen g;
        switch (ch) {
        case 'a': g = Gen::A; break;
        case 'A': g = Gen::Ainv; break;
        case 'b': g = Gen::B; break;
        case 'B': g = Gen::Binv; break;
        default:
            throw std::invalid_argument("Word::parse: letters must be one of a, A, b, B");
        }
        push_reduced(w.letters, g);
    }
    return w;
}

Word Word::inverse() const
{
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back(skinlab::inverse(*it));
    return w;
}

std::string Word::str() const
{
    std::string s;
    s.reserve(letters.size());
    for (Gen g : letters) s.push_back(letter_char(g));
    return s;
}

Word operator*(const Word& u, const Word& v)
{
    Word w = u;
    for (Gen g : v.letters) push_reduced(w.letters, g);
    return w;
}

bool operator==(const Word& u, const Word& v) { return u.letters == v.letters; }

Word word_delta1() { return Word::parse("AAb"); }
Word word_delta2() { return Word::parse("BBA"); }
Word word_delta3() { return Word::parse("aBa"); }
Word word_delta4() { return Word::parse("Abbaa"); }
Word word_xi() { return word_delta1() * word_delta3(); }
Word word_eta() { return word_delta2() * word_delta4(); }

RepPoint rep_at(double t)
{
    if (!(t > 0.0) || t > 1.0)
        throw std::domain_error("rep_at: parameter must lie in (0, 1]");
    const Complex tc{t, 0.0};
    const Complex sa = 1.0 / (tc * (tc - kI));
    const Moebius a{sa * tc * tc, sa * tc * tc, sa * (1.0 + 2.0 * kI * tc), sa * tc * tc};
    const Complex sb = -kI / (tc + kI);
    const Moebius b{sb * kI * tc, sb * (-1.0 + 2.0 * kI * tc), sb, sb * kI * tc};
    return RepPoint{t, a, b};
}

Moebius evaluate_word(const RepPoint& rep, const Word& w)
{
    const Moebius mats[4] = {rep.gen_a, rep.gen_a.inverse(), rep.gen_b,
                             rep.gen_b.inverse()};
    Moebius m{}; // identity
    for (Gen g : w.letters) m = m * mats[static_cast<int>(g)];
    return m;
}

Complex delta12_trace_closed(double t)
{
    const double t2 = t * t;
    const double den = std::pow(1.0 + t2, 3);
    const double re = 2.0 * t2 * (t2 * t2 - 22.0 * t2 - 7.0) / den;
    const double im = (t2 - 1.0) * std::pow(5.0 * t2 + 1.0, 2) / (t * den);
    return Complex{re, im};
}

AntiMoebius involution_at(double t)
{
    if (!(t > 0.0) || t > 1.0)
        throw std::domain_error("involution_at: parameter must lie in (0, 1]");
    return AntiMoebius{Moebius{0.0, kI * t, 1.0, 0.0}};
}

bool SymmetryReport::all_ok() const
{
    for (bool b : ok)
        if (!b) return false;
    return true;
}

SymmetryReport check_symmetry(double t, double tol)
{
    const RepPoint rep = rep_at(t);
    const AntiMoebius psi = involution_at(t);
    const auto ev = [&rep](const Word& w) { return evaluate_word(rep, w); };
    const Word a2 = Word::parse("aa");
    const auto conj_a2 = [&](const Word& w) { return ev(a2 * w * a2.inverse()); };

    const Word d1 = word_delta1(), d2 = word_delta2(), d3 = word_delta3(),
               d4 = word_delta4();

    const std::pair<Moebius, Moebius> checks[6] = {
        {anti_conjugate(psi, rep.gen_a), rep.gen_b},
        {anti_conjugate(psi, rep.gen_b), rep.gen_a.inverse()},
        {anti_conjugate(psi, ev(d1)), conj_a2(d4.inverse())},
        {anti_conjugate(psi, ev(d2)), conj_a2(d1.inverse())},
        {anti_conjugate(psi, ev(d3)), conj_a2(d1 * d3 * d4)},
        {anti_conjugate(psi, ev(d4)), conj_a2(d1 * d2 * d4)},
    };

    SymmetryReport rep_out;
    rep_out.t = t;
    rep_out.tol = tol;
    for (int i = 0; i < 6; ++i) {
        rep_out.defect[i] = projective_defect(checks[i].first, checks[i].second);
        rep_out.ok[i] = rep_out.defect[i] <= tol;
    }
    return rep_out;
}

Orbit limit_orbit(double t, int depth)
{
    if (depth < 0 || depth > 16)
        throw std::invalid_argument("limit_orbit: depth must lie in [0, 16]");
    const RepPoint rep = rep_at(t);
    const Moebius xi = evaluate_word(rep, word_xi());
    const auto seeds = fixed_points(xi);

    const Moebius mats[4] = {rep.gen_a, rep.gen_a.inverse(), rep.gen_b,
                             rep.gen_b.inverse()};

    std::unordered_set<std::uint64_t> seen;
    Orbit orbit;
    orbit.depth = depth;
    const auto visit = [&](const Moebius& m) {
        for (const ExtComplex* seed : {&seeds.first, &seeds.second}) {
            const ExtComplex z = m(*seed);
            if (seen.insert(sphere_key(z, 1e6)).second) {
                if (z.is_inf())
                    ++orbit.infinite_count;
                else
                    orbit.points.push_back(z.value());
            }
        }
    };

    const std::function<void(const Moebius&, int, int)> walk =
        [&](const Moebius& m, int last, int d) {
            visit(m);
            if (d == depth) return;
            for (int g = 0; g < 4; ++g) {
                if (last >= 0 && g == static_cast<int>(inverse(static_cast<Gen>(last))))
                    continue;
                walk(m * mats[g], g, d + 1);
            }
        };
    walk(Moebius{}, -1, 0);

    std::sort(orbit.points.begin(), orbit.points.end(),
              [](const Complex& x, const Complex& y) {
                  if (x.real() != y.real()) return x.real() < y.real();
                  return x.imag() < y.imag();
              });
    return orbit;
}

double orbit_symmetry_defect(const Orbit& orbit, double t)
{
    const AntiMoebius psi = involution_at(t);

    std::vector<ExtComplex> pts;
    pts.reserve(orbit.points.size() + (orbit.infinite_count ? 1 : 0));
    for (const Complex& z : orbit.points) pts.emplace_back(z);
    if (orbit.infinite_count > 0) pts.push_back(ExtComplex::infinity());
    if (pts.empty()) return 0.0;

    // Bin points on the sphere so the nearest-point search is local; fall
    // back to a full scan when a neighborhood is empty.
    constexpr double cell = 1e-3;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i < pts.size(); ++i)
        grid[sphere_key(pts[i], 1.0 / cell)].push_back(i);

    const auto nearest = [&](const ExtComplex& w) {
        double best = 4.0;
        const std::uint64_t key = sphere_key(w, 1.0 / cell);
        const auto kx = (key >> 42) & 0x1fffff, ky = (key >> 21) & 0x1fffff,
                   kz = key & 0x1fffff;
        bool found = false;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz) {
                    const std::uint64_t k =
                        ((kx + dx) << 42) | ((ky + dy) << 21) | (kz + dz);
                    const auto it = grid.find(k);
                    if (it == grid.end()) continue;
                    for (std::size_t i : it->second) {
                        best = std::min(best, chordal(w, pts[i]));
                        found = true;
                    }
                }
        if (!found)
            for (const ExtComplex& p : pts) best = std::min(best, chordal(w, p));
        return best;
    };

    // Probe with the interior sub-orbit: the involution sends a point reached
    // by a word of length k to one reached by a word of length <= k + 3, so
    // only images of words of length <= depth - 3 are guaranteed to lie in
    // the sampled set.
    const Orbit interior = limit_orbit(t, std::max(orbit.depth - 3, 0));
    double worst = 0.0;
    for (const Complex& z : interior.points)
        worst = std::max(worst, nearest(psi(ExtComplex(z))));
    if (interior.infinite_count > 0)
        worst = std::max(worst, nearest(psi(ExtComplex::infinity())));
    return worst;
}

} // namespace skinlab
