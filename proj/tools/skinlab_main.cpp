#include "skinlab/certificates.hpp"
#include "skinlab/convex_core.hpp"
#include "skinlab/modulus.hpp"
#include "skinlab/profile.hpp"
#include "skinlab/representation.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace skinlab;

// Shortest round-trip decimal formatting, locale-independent.
std::string fmt(double v)
{
    if (std::isnan(v)) return "";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string iso_timestamp()
{
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_header(std::ostream& os, const std::string& subcommand,
                  bool timestamp, const std::vector<std::string>& notes)
{
    os << "# skinlab " << subcommand << "\n";
    if (timestamp) os << "# generated: " << iso_timestamp() << "\n";
    for (const std::string& n : notes) os << "# " << n << "\n";
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
}

constexpr const char* kUnitsNote =
    "angles in radians; lengths in hyperbolic units";

int cmd_verify(const std::string& only, const std::string& json_path,
               const std::string& inject_negate)
{
    CertOptions opts;
    opts.only = only;
    opts.negate = inject_negate;
    const std::vector<CertEntry> entries = verify_all(opts);

    bool ok = true;
    std::printf("%-14s %-10s %6s  %s\n", "certificate", "verdict", "bits", "ms");
    for (const CertEntry& e : entries) {
        std::printf("%-14s %-10s %6u  %.1f\n", e.id.c_str(),
                    verdict_name(e.verdict), e.precision_bits, e.elapsed_ms);
        if (e.verdict != Verdict::Proved) {
            ok = false;
            std::printf("  FAILED: %s -> %s\n", e.id.c_str(),
                        verdict_name(e.verdict));
        }
    }

    if (!json_path.empty()) {
        std::ofstream os = open_output(json_path);
        os << report_json(entries) << "\n";
    }

    if (only.empty()) {
        // floating-point consistency suites
        {
            double worst = 0.0;
            for (int k = 0; k < 25; ++k) {
                const double t = 0.04 + 0.96 * k / 24.0;
                const SymmetryReport rep = check_symmetry(t);
                for (double d : rep.defect) worst = std::max(worst, d);
            }
            const bool pass = worst <= 1e-9;
            ok &= pass;
            std::printf("suite symmetry-grid     %s (max defect %.3g, tol 1e-9)\n",
                        pass ? "pass" : "FAIL", worst);
        }
        {
            const double lo = t0().value + 0.01;
            double worst = 0.0;
            bool branch_ok = true;
            for (int k = 0; k < 25; ++k) {
                const double t = lo + (0.99 - lo) * k / 24.0;
                try {
                    worst = std::max(worst,
                                     std::abs(bending_angle_crossratio(t) - theta(t)));
                } catch (const std::exception&) {
                    branch_ok = false;
                }
            }
            const bool pass = branch_ok && worst <= 1e-8;
            ok &= pass;
            std::printf("suite bending-angle     %s (max diff %.3g, tol 1e-8)\n",
                        pass ? "pass" : "FAIL", worst);
        }
        {
            const Containment c1 = region_contains(0.5, 1.0);
            const Containment c2 = region_contains(0.5, 0.4);
            const bool pass = c1.contains && c2.contains;
            ok &= pass;
            std::printf(
                "suite containment       %s (min margins %.6f, %.6f)\n",
                pass ? "pass" : "FAIL", c1.min_margin, c2.min_margin);
        }
    }

    std::printf("result: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

int cmd_sweep(double t_min, double t_max, int steps, bool with_modulus,
              int grid, int refine, const std::string& out, bool timestamp)
{
    std::vector<double> ts(steps);
    for (int k = 0; k < steps; ++k)
        ts[k] = t_min + (t_max - t_min) * k / (steps - 1);

    std::vector<ModulusResult> mods;
    if (with_modulus) mods = sweep_modulus(ts, grid, refine);

    std::ofstream os = open_output(out);
    std::vector<std::string> notes = {kUnitsNote};
    if (with_modulus) notes.push_back(kModulusConvention);
    write_header(os, "sweep", timestamp, notes);
    os << "t,theta,L,alpha,ell_xi,ell_eta,mod_h,mod_w,est_error,grid_levels\n";
    for (int k = 0; k < steps; ++k) {
        const BendData d = bend_data(ts[k]);
        os << fmt(d.t) << ',' << fmt(d.theta) << ',' << fmt(d.biglen) << ','
           << fmt(d.alpha) << ',' << fmt(d.ell_xi) << ',' << fmt(d.ell_eta)
           << ',';
        if (with_modulus) {
            const ModulusResult& m = mods[k];
            os << fmt(m.mod_h) << ',' << fmt(m.mod_w) << ','
               << fmt(m.est_error) << ',';
            for (std::size_t i = 0; i < m.grid_levels.size(); ++i)
                os << (i ? "/" : "") << m.grid_levels[i];
        } else {
            os << ",,,";
        }
        os << '\n';
    }
    return 0;
}

int cmd_profile(double t, int samples, const std::string& out, bool timestamp)
{
    // evaluate everything before touching the filesystem so a domain error
    // leaves no partial file behind
    std::vector<std::array<double, 3>> rows(samples);
    for (int k = 0; k < samples; ++k) {
        const double x = double(k) / (samples - 1);
        ProfileRegion r = ProfileRegion::family(t);
        rows[k] = {x, r.upper(x), r.lower(x)};
    }
    std::ofstream os = open_output(out);
    write_header(os, "profile", timestamp,
                 {kUnitsNote, "region between F_upper and F_lower at parameter t=" +
                                  fmt(t)});
    os << "x,F_upper,F_lower\n";
    for (const auto& r : rows)
        os << fmt(r[0]) << ',' << fmt(r[1]) << ',' << fmt(r[2]) << '\n';
    return 0;
}

int cmd_modulus(double t, int grid, int refine, bool as_json)
{
    const ModulusResult m = solve_modulus(ProfileRegion::family(t), grid, refine);
    if (as_json) {
        nlohmann::json j{{"t", m.t},
                         {"mod_h", m.mod_h},
                         {"mod_w", m.mod_w},
                         {"est_error", m.est_error},
                         {"order_h", m.order_h},
                         {"order_w", m.order_w},
                         {"grid_levels", m.grid_levels},
                         {"energies_h", m.energies_h},
                         {"energies_w", m.energies_w},
                         {"reciprocity", m.reciprocity()},
                         {"convention", kModulusConvention}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("# %s\n", kModulusConvention);
        std::printf("t          %s\n", fmt(m.t).c_str());
        std::printf("mod_h      %s\n", fmt(m.mod_h).c_str());
        std::printf("mod_w      %s\n", fmt(m.mod_w).c_str());
        std::printf("est_error  %s\n", fmt(m.est_error).c_str());
        std::printf("orders     h: %.3f  w: %.3f\n", m.order_h, m.order_w);
        std::printf("levels     ");
        for (std::size_t i = 0; i < m.grid_levels.size(); ++i)
            std::printf("%s%d", i ? "/" : "", m.grid_levels[i]);
        std::printf("\nreciprocity %.8f\n", m.reciprocity());
    }
    if (!m.order_ok) {
        std::fprintf(stderr,
                     "warning: measured convergence order below 1.5; result "
                     "not trustworthy\n");
        return 1;
    }
    return 0;
}

int cmd_limitset(double t, int depth, bool check_symmetry,
                 const std::string& out, bool timestamp)
{
    const Orbit orbit = limit_orbit(t, depth);
    double defect = 0.0;
    if (check_symmetry) defect = orbit_symmetry_defect(orbit, t);

    std::ofstream os = open_output(out);
    std::vector<std::string> notes = {
        "orbit of the xi-image fixed points under words of length <= " +
            std::to_string(depth),
        "points at infinity omitted: " + std::to_string(orbit.infinite_count)};
    if (check_symmetry)
        notes.push_back("symmetry defect under z -> i*t/conj(z): " + fmt(defect));
    write_header(os, "limitset", timestamp, notes);
    os << "re,im\n";
    for (const Complex& z : orbit.points)
        os << fmt(z.real()) << ',' << fmt(z.imag()) << '\n';

    if (check_symmetry) {
        std::printf("symmetry defect: %s (tol 1e-4)\n", fmt(defect).c_str());
        if (defect > 1e-4) {
            std::fprintf(stderr, "symmetry check failed: defect %g > 1e-4\n",
                         defect);
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "computations along a one-parameter family of hyperbolic structures: "
        "certified inequalities, bending data, grafting profiles, conformal "
        "moduli, and limit-set orbits"};
    app.require_subcommand(1);
    app.fallthrough(true); // allow global flags after the subcommand name
    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp,
                 "omit the timestamp header line from file outputs");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "run the certified inequalities and consistency suites");
    std::string only, json_path, inject_negate;
    verify->add_option("--only", only, "run a single certificate by id");
    verify->add_option("--json", json_path, "write the certificate report JSON");
    verify->add_option("--inject-negate", inject_negate)->group(""); // test hook

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "tabulate bending data (and optionally moduli) over t");
    double t_min = 0.0, t_max = 0.0;
    int steps = 0, sweep_grid = 128, sweep_refine = 2;
    bool with_modulus = false;
    std::string sweep_out;
    sweep->add_option("--t-min", t_min, "lower end of the parameter range")
        ->required();
    sweep->add_option("--t-max", t_max, "upper end of the parameter range")
        ->required();
    sweep->add_option("--steps", steps, "number of samples (>= 2)")->required();
    sweep->add_flag("--modulus", with_modulus, "also solve for the moduli");
    sweep->add_option("--grid", sweep_grid, "modulus base grid resolution");
    sweep->add_option("--refine", sweep_refine, "modulus refinement levels");
    sweep->add_option("--out", sweep_out, "output CSV path")->required();

    // profile
    auto* profile = app.add_subcommand(
        "profile", "sample the upper/lower graphs bounding the region");
    double profile_t = 0.0;
    int samples = 0;
    std::string profile_out;
    profile->add_option("--t", profile_t, "family parameter")->required();
    profile->add_option("--samples", samples, "number of x samples (>= 2)")
        ->required();
    profile->add_option("--out", profile_out, "output CSV path")->required();

    // modulus
    auto* modulus = app.add_subcommand(
        "modulus", "solve the conformal modulus of the region at one t");
    double modulus_t = 0.0;
    int grid = 256, refine = 3;
    bool as_json = false;
    modulus->add_option("--t", modulus_t, "family parameter")->required();
    modulus->add_option("--grid", grid, "base grid resolution (>= 32)");
    modulus->add_option("--refine", refine, "refinement levels (>= 1)");
    modulus->add_flag("--json", as_json, "emit JSON instead of text");

    // limitset
    auto* limitset = app.add_subcommand(
        "limitset", "export an orbit approximation of the limit set");
    double limitset_t = 0.0;
    int depth = 0;
    bool check_symmetry = false;
    std::string limitset_out;
    limitset->add_option("--t", limitset_t, "family parameter")->required();
    limitset->add_option("--depth", depth, "orbit word length (1..16)")
        ->required();
    limitset->add_flag("--check-symmetry", check_symmetry,
                       "verify invariance under the family involution");
    limitset->add_option("--out", limitset_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const double cusp = t0().value;
        if (*verify) return cmd_verify(only, json_path, inject_negate);
        if (*sweep) {
            if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
            if (!(t_min > cusp) || !(t_max <= 1.0) || !(t_min < t_max))
                throw std::invalid_argument(
                    "sweep: need cusp parameter < t-min < t-max <= 1");
            return cmd_sweep(t_min, t_max, steps, with_modulus, sweep_grid,
                             sweep_refine, sweep_out, !no_timestamp);
        }
        if (*profile) {
            if (samples < 2)
                throw std::invalid_argument("profile: samples must be >= 2");
            if (!(profile_t > cusp) || profile_t > 1.0)
                throw std::invalid_argument(
                    "profile: t must lie in (cusp parameter, 1]");
            return cmd_profile(profile_t, samples, profile_out, !no_timestamp);
        }
        if (*modulus) {
            if (!(modulus_t > cusp) || modulus_t > 1.0)
                throw std::invalid_argument(
                    "modulus: t must lie in (cusp parameter, 1]");
            return cmd_modulus(modulus_t, grid, refine, as_json);
        }
        if (*limitset) {
            if (depth < 1 || depth > 16)
                throw std::invalid_argument("limitset: depth must lie in [1, 16]");
            if (!(limitset_t > 0.0) || limitset_t > 1.0)
                throw std::invalid_argument("limitset: t must lie in (0, 1]");
            return cmd_limitset(limitset_t, depth, check_symmetry, limitset_out,
                                !no_timestamp);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
