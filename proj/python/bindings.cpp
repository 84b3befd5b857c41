// Python bindings for the main operations: curve construction, Frenet data,
// tension residuals, the classification, frame integration, and Killing-axis
// diagnostics. Vector quantities cross the boundary as plain tuples/lists in
// frame components; reports come back as JSON strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <cmath>
#include <string>

#include "solcurves/classification.hpp"
#include "solcurves/curve_spec.hpp"
#include "solcurves/errors.hpp"
#include "solcurves/frenet.hpp"
#include "solcurves/integrator.hpp"
#include "solcurves/killing.hpp"
#include "solcurves/sol_geometry.hpp"
#include "solcurves/tension.hpp"

namespace py = pybind11;
using namespace solcurves;

namespace {

std::array<double, 3> vals(const FrameJet& v) {
    return {v.v1.value(), v.v2.value(), v.v3.value()};
}

std::array<double, 3> vals(const FrameVector& v) { return {v.v1, v.v2, v.v3}; }

KillingFieldId field_from_name(const std::string& name) {
    if (name == "V1") return KillingFieldId::V1;
    if (name == "V2") return KillingFieldId::V2;
    if (name == "V3") return KillingFieldId::V3;
    throw InvalidParams("unknown Killing field '" + name + "' (expected V1, V2 or V3)");
}

}  // namespace

PYBIND11_MODULE(_solcurves, m) {
    m.doc() =
        "Curves in Sol space: Frenet data, higher-order tension residuals, the "
        "proper-triharmonic-helix classification, and Killing-axis diagnostics.";

    py::register_exception<Error>(m, "SolCurvesError");

    py::class_<CurveSpec>(m, "CurveSpec",
                          "Closed-form curve: per coordinate const + linear*s + sum of "
                          "amplitude*exp(rate*s) terms.")
        .def_static("from_json", &parse_curve_json, py::arg("text"))
        .def("to_json", &curve_to_json_string)
        .def("__repr__",
             [](const CurveSpec& s) { return "CurveSpec(" + curve_to_json_string(s) + ")"; });

    m.def(
        "triharmonic_helix",
        [](double c2, int branch, double cx, double cy) {
            TriharmonicHelixParams p;
            p.c2 = c2;
            p.branch = branch;
            p.cx = cx;
            p.cy = cy;
            const double mag = 1.0 / std::sqrt(2.0);
            p.c1 = (branch == 1 || branch == 3) ? mag : -mag;
            return build_triharmonic_helix(p);
        },
        py::arg("c2") = 1.0, py::arg("branch") = 1, py::arg("cx") = 0.0, py::arg("cy") = 0.0,
        "A member of the classified proper triharmonic helix family.");

    m.def("constant_z", &constant_z_curve, py::arg("beta"), py::arg("c") = 0.0,
          py::arg("cx") = 0.0, py::arg("cy") = 0.0,
          "Unit-speed horizontal line at height c with direction angle beta.");

    m.def("vertical_line", &vertical_line_curve, "The vertical geodesic through the origin.");

    m.def(
        "frenet",
        [](const CurveSpec& spec, double s) {
            const CurveJet cj = eval_curve(spec, s, default_jet_order());
            const FrenetData f = frenet_frame(cj);
            py::dict d;
            d["position"] = std::array<double, 3>{cj.x.value(), cj.y.value(), cj.z.value()};
            d["T"] = vals(f.T);
            d["N"] = vals(f.N);
            d["B"] = vals(f.B);
            d["kappa"] = f.kappa.value();
            d["tau"] = f.tau.value();
            return d;
        },
        py::arg("spec"), py::arg("s"),
        "Position, Frenet frame (frame components), curvature and torsion at s.");

    m.def(
        "speed_deviation",
        [](const CurveSpec& spec, double s) { return speed_deviation(eval_curve(spec, s, 3)); },
        py::arg("spec"), py::arg("s"), "|<gamma', gamma'> - 1| at s.");

    m.def(
        "residual",
        [](const CurveSpec& spec, double s, int r) { return vals(r_tension(spec, s, r)); },
        py::arg("spec"), py::arg("s"), py::arg("r") = 3,
        "Order-r tension residual in frame components (direct covariant path).");

    m.def(
        "residual_frenet",
        [](const CurveSpec& spec, double s) {
            return vals(triharmonic_residual_frenet(spec, s));
        },
        py::arg("spec"), py::arg("s"),
        "Order-3 residual in Frenet components (res_T, res_N, res_B).");

    m.def(
        "classify",
        [](int samples) {
            const ClassificationResult cls = classify(samples);
            py::list roots;
            for (const ClassifiedRoot& r : cls.roots) {
                py::dict d;
                d["c1"] = r.c1;
                d["a"] = r.a;
                d["b"] = r.b;
                d["B3"] = r.b3;
                d["T3"] = r.t3;
                roots.append(d);
            }
            py::dict out;
            out["roots"] = roots;
            out["residual_at_root"] = cls.residual_at_root;
            return out;
        },
        py::arg("samples") = 10000,
        "Scan-and-polish classification of proper triharmonic helices.");

    m.def(
        "verify",
        [] { return theorem_report_json(verify_theorem()); },
        "Full verification run; returns the JSON report text.");

    m.def(
        "proposition_report",
        [](const std::string& field) {
            return proposition_report_json(proposition_check(field_from_name(field)));
        },
        py::arg("field"), "Killing-axis proposition checks for V1, V2 or V3; JSON text.");

    m.def(
        "killing_length",
        [](const CurveSpec& spec, const std::string& field, double s) {
            return killing_length_along(spec, field_from_name(field), s);
        },
        py::arg("spec"), py::arg("field"), py::arg("s"));

    m.def(
        "killing_angle",
        [](const CurveSpec& spec, const std::string& field, double s) {
            return killing_angle_with_tangent(spec, field_from_name(field), s);
        },
        py::arg("spec"), py::arg("field"), py::arg("s"));

    m.def(
        "integrate_helix",
        [](double a, double b, double step, double s_max) {
            TriharmonicHelixParams p;
            p.c1 = 1.0 / std::sqrt(2.0);
            const CurveSpec ref = build_triharmonic_helix(p);
            const CurveJet cj = eval_curve(ref, 0.0, default_jet_order());
            const FrenetData f = frenet_frame(cj);
            FrenetFrameState init;
            init.p = {cj.x.value(), cj.y.value(), cj.z.value()};
            init.T = {f.T.v1.value(), f.T.v2.value(), f.T.v3.value()};
            init.N = {f.N.v1.value(), f.N.v2.value(), f.N.v3.value()};
            init.B = {f.B.v1.value(), f.B.v2.value(), f.B.v3.value()};
            const IntegratedPath path = integrate_frenet_natural(a, b, init, step, s_max);
            py::list positions;
            for (const FrenetFrameState& st : path.states) {
                positions.append(std::array<double, 3>{st.p.x, st.p.y, st.p.z});
            }
            py::dict out;
            out["s"] = path.s;
            out["positions"] = positions;
            out["max_orthonormality_drift"] = path.max_orthonormality_drift;
            return out;
        },
        py::arg("kappa"), py::arg("tau"), py::arg("step"), py::arg("s_max"),
        "RK4 integration of the helix natural equations, starting from the "
        "closed-form frame at s = 0.");
}
