#pragma once

#include <string>
#include <vector>

#include "solcurves/curve_spec.hpp"
#include "solcurves/report.hpp"
#include "solcurves/sol_geometry.hpp"

namespace solcurves {

// Killing-axis measurements along a curve. A helix axis in the classical
// sense is a Killing field keeping both its length and its angle with the
// unit tangent constant along the curve; the flags certify that to 1e-9
// (max - min of the samples).
struct AxisReport {
    KillingFieldId field = KillingFieldId::V1;
    std::vector<double> length_samples;
    std::vector<double> angle_samples;  // radians, in [0, pi]
    bool is_constant_length = false;
    bool is_constant_angle = false;
};

// Samples |V_id| and the tangent angle at n uniform points of [s_lo, s_hi]
// (inclusive; n >= 2, else InvalidParams) and fills the constancy flags.
AxisReport axis_report(const CurveSpec& spec, KillingFieldId id, double s_lo, double s_hi,
                       int n);

// |V_id| at the curve point gamma(s).
double killing_length_along(const CurveSpec& spec, KillingFieldId id, double s);

// arccos(<T, V_id> / |V_id|) in [0, pi] at gamma(s). Throws ZeroField when
// the field length vanishes there (only V3 could in principle degenerate,
// and |V3|^2 = x^2 e^{2z} + y^2 e^{-2z} + 1 >= 1 keeps even that away; the
// gate stays for defense in depth).
double killing_angle_with_tangent(const CurveSpec& spec, KillingFieldId id, double s);

// The unit-speed horizontal line through height z = c with direction angle
// beta: (cos(beta) e^{-c} s + cx, sin(beta) e^{c} s + cy, c). Its curvature
// and torsion have the closed forms kappa = |cos 2 beta| and tau = sin 2
// beta, asserted on construction (FrameInconsistency beyond 1e-10). Throws
// GeodesicDegeneracy when |cos 2 beta| <= 1e-8: those angles give geodesics
// with no Frenet frame.
CurveSpec constant_z_curve(double beta, double c, double cx, double cy);

// One row of the horizontal-family sweep: the triharmonic residual in the
// Frenet basis at direction angle beta.
struct SweepSample {
    double beta = 0.0;
    double res_t = 0.0;
    double res_n = 0.0;
    double res_b = 0.0;
};

// Everything proposition_check measured. For the horizontal fields (V1, V2)
// the sweep rows and the two least-squares fits of res_n are filled: the
// cubic model res_n = f * kappa^3 (which the residual follows exactly) and
// the product model res_n = f * kappa (5 + cos 4 beta) (same zero set, not
// proportional — its misfit stays large by design). For V3 both fits are
// left at zero and the checks cover the integral-curve property instead.
struct PropositionReport {
    KillingFieldId field = KillingFieldId::V1;
    std::vector<CheckResult> checks;
    std::vector<SweepSample> sweep;
    double fitted_cubic_factor = 0.0;
    double fitted_cubic_misfit = 0.0;
    double fitted_product_factor = 0.0;
    double fitted_product_misfit = 0.0;
    bool all_pass = false;
};

// V1 or V2: sweeps the horizontal family over beta in {k pi/72 : k = 1..35}
// minus a radius-0.02 neighborhood of pi/4, checking that the tangential and
// binormal residuals vanish (<= 1e-9) while the normal residual stays above
// 5e-4; then classifies zeros of res_n on the fine grid beta = j pi/720
// (j = 1..359) and requires the zero set to be exactly { |cos 2 beta| <=
// 2e-3 }, counting geodesic-degenerate angles as zeros. Also certifies the
// axis-length/angle constancy of the field along a representative curve.
// V3: verifies |V3|^2 = 2, <T, V3> = sqrt(2), and T = V3/sqrt(2)
// componentwise (all to 1e-10) at 101 samples of the classified helix over
// s in [-5, 5], i.e. the curve is an integral curve of V3/sqrt(2).
PropositionReport proposition_check(KillingFieldId id);

// {"field": ..., "checks": [{name, pass, max_residual, tolerance}], ...}
std::string proposition_report_json(const PropositionReport& rep);

}  // namespace solcurves
