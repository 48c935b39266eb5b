#include "skinlab/certificates.hpp"
#include "skinlab/convex_core.hpp"
#include "skinlab/modulus.hpp"
#include "skinlab/profile.hpp"
#include "skinlab/representation.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace skinlab;

namespace {

py::dict modulus_dict(const ModulusResult& m)
{
    py::dict d;
    d["t"] = m.t;
    d["mod_h"] = m.mod_h;
    d["mod_w"] = m.mod_w;
    d["grid_levels"] = m.grid_levels;
    d["energies_h"] = m.energies_h;
    d["energies_w"] = m.energies_w;
    d["order_h"] = m.order_h;
    d["order_w"] = m.order_w;
    d["est_error"] = m.est_error;
    d["order_ok"] = m.order_ok;
    d["reciprocity"] = m.reciprocity();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "computations along a one-parameter family of hyperbolic "
              "structures: bending data, grafting profiles, conformal moduli, "
              "limit-set orbits, and certified inequalities";

    m.def("cusp_parameter", [] {
        const CuspParameter c = t0();
        return py::make_tuple(c.value, c.closed_form);
    },
          "numeric value and closed form of the lower endpoint of the "
          "parameter interval");

    m.def("theta", &theta, py::arg("t"), "bending angle (radians)");
    m.def("biglen", &biglen, py::arg("t"), "half translation length L(t)");
    m.def("alpha", &alpha, py::arg("t"), "half-width (pi + theta) / (2 L)");
    m.def("beta", &beta, py::arg("x"), py::arg("t"),
          "acos(cosh(x L)/cosh L) / L");
    m.def("profile_f", &profile_f, py::arg("x"), py::arg("t"),
          "upper graph alpha - beta of the grafting region");
    m.def("lengths", [](double t) {
        const CoreLengths l = lengths(t);
        return py::make_tuple(l.ell_xi, l.ell_eta);
    },
          py::arg("t"),
          "translation lengths (ell_xi, ell_eta); ell_eta is NaN at or below "
          "the cusp parameter");
    m.def("trace_shift_xi", &trace_shift_xi, py::arg("t"));
    m.def("trace_shift_eta", &trace_shift_eta, py::arg("t"));
    m.def("bending_angle_crossratio", &bending_angle_crossratio, py::arg("t"),
          "bending angle recomputed from the support-plane cross-ratio");

    m.def("bend_data", [](double t) {
        const BendData d = bend_data(t);
        py::dict out;
        out["t"] = d.t;
        out["theta"] = d.theta;
        out["L"] = d.biglen;
        out["alpha"] = d.alpha;
        out["ell_xi"] = d.ell_xi;
        out["ell_eta"] = d.ell_eta;
        return out;
    },
          py::arg("t"));

    m.def("check_symmetry", [](double t, double tol) {
        const SymmetryReport r = check_symmetry(t, tol);
        py::dict out;
        out["t"] = r.t;
        out["tol"] = r.tol;
        out["defect"] = r.defect;
        out["ok"] = r.ok;
        out["all_ok"] = r.all_ok();
        return out;
    },
          py::arg("t"), py::arg("tol") = 1e-9,
          "defects of the six involution conjugation identities");

    m.def("limit_orbit", [](double t, int depth) {
        const Orbit o = limit_orbit(t, depth);
        return py::make_tuple(o.points, o.infinite_count);
    },
          py::arg("t"), py::arg("depth"),
          "orbit of the xi fixed points under words of length <= depth");

    m.def("region_contains", [](double outer_t, double inner_t, int grid) {
        const Containment c = region_contains(outer_t, inner_t, grid);
        py::dict out;
        out["contains"] = c.contains;
        out["min_margin"] = c.min_margin;
        out["max_margin"] = c.max_margin;
        out["at_x"] = c.at_x;
        out["analytic_bound"] = c.analytic_bound;
        return out;
    },
          py::arg("outer_t"), py::arg("inner_t"), py::arg("grid") = 1024);

    m.def("solve_modulus", [](double t, int grid, int refine) {
        return modulus_dict(solve_modulus(ProfileRegion::family(t), grid,
                                          refine));
    },
          py::arg("t"), py::arg("grid") = 128, py::arg("refine") = 2);

    m.def("rectangle_modulus", [](double aspect, int grid, int refine) {
        return modulus_dict(solve_modulus(ProfileRegion::rectangle(aspect),
                                          grid, refine));
    },
          py::arg("aspect"), py::arg("grid") = 64, py::arg("refine") = 1);

    m.def("verify", [](const std::string& only, const std::string& negate) {
        CertOptions opts;
        opts.only = only;
        opts.negate = negate;
        py::list out;
        for (const CertEntry& e : verify_all(opts)) {
            py::dict d;
            d["id"] = e.id;
            d["statement"] = e.statement;
            d["verdict"] = verdict_name(e.verdict);
            d["precision_bits"] = e.precision_bits;
            d["elapsed_ms"] = e.elapsed_ms;
            out.append(d);
        }
        return out;
    },
          py::arg("only") = std::string(), py::arg("negate") = std::string(),
          "run the certified inequality suite; each entry reports "
          "Proved/Refuted/Undecided");

    m.attr("MODULUS_CONVENTION") = kModulusConvention;
}
