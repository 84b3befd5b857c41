#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solcurves/curve_spec.hpp"
#include "solcurves/report.hpp"

namespace solcurves {

// A helix datum: constant geodesic curvature a > 0 and constant torsion b.
struct HelixSpec {
    double a = 0.0;
    double b = 0.0;
};

// Integration constants selecting one closed-form triharmonic helix.
// c1 is the vertical tangent component (+1/sqrt(2) on branches 1 and 3,
// -1/sqrt(2) on branches 2 and 4), c2 > 0 scales the exponential pair,
// cx/cy translate the curve.
struct TriharmonicHelixParams {
    double c1 = 0.0;
    double c2 = 1.0;
    double cx = 0.0;
    double cy = 0.0;
    int branch = 1;
};

// One classified parameter point: the scan coordinate c1 and the helix data
// it induces, with b3/t3 the vertical binormal/tangent components recorded
// from the frame of the constructed curve.
struct ClassifiedRoot {
    double c1 = 0.0;
    double a = 0.0;
    double b = 0.0;
    double b3 = 0.0;
    double t3 = 0.0;
};

struct ClassificationResult {
    std::vector<ClassifiedRoot> roots;  // sorted by (c1, b)
    // Largest magnitude either algebraic equation residual attains at any
    // returned root.
    double residual_at_root = 0.0;
};

// The two algebraic obstructions for a helix with data (a, b) and vertical
// components (B3, T3), N3 fixed by the orthonormality complement:
//   first  = a [ a^4 + 2 a b B3 T3 + 2 a^2 w + b^2 w ],  w = 1 + b^2 - 2 B3^2
//   second = 2 a^2 B3 + b^2 B3 + a b T3
// The first is the full normal obstruction; the second is the factor whose
// vanishing the binormal obstruction 2 a N3 (second) requires when N3 != 0.
// The B3 T3 cross term carries the orientation that annihilates the
// classified helices (the same orientation as the tension-field assembly).
// Pure formulas: preconditions (a > 0, B3^2 <= 1, T3^2 <= 1) are documented,
// not gated.
std::pair<double, double> helix_algebraic_residuals(double a, double b, double b3, double t3);

// The T3-eliminated consequence of the normal obstruction:
//   4 a^2 b^2 B3^2 (B3^2 - 1) + ( a^4 + 2 a^2 w + b^2 w )^2,  w as above.
// Vanishes exactly where the normal obstruction admits a T3 on the unit
// circle T3^2 + B3^2 = 1.
double reduced_quartic_constraint(double a, double b, double b3);

// Scans c1 over (-1, 1) \ {0} with c1_samples midpoints (>= 1000, else
// InvalidParams), maps each c1 through the helix-existence relations
//   a^2 = c1^2 - c1^4,  |b| = 1 - c1^2,  T3 = c1,  B3 = -sign(b) sign(c1)
//   sqrt(1 - c1^2),
// for both torsion signs, brackets sign changes of the first algebraic
// residual, Newton-polishes them (central difference h = 1e-7, tolerance
// 1e-12, at most 50 iterations), dedupes within 1e-6 per torsion sign, and
// records B3/T3 from the frame of the constructed root curve. Throws
// NoRootsFound if the scan produces nothing (that would falsify the
// classification, and must fail loudly).
ClassificationResult classify(int c1_samples);

// The closed-form curve for the given integration constants. The four
// branches with c2 = 1, cx = cy = 0 and r = 1/sqrt(2):
//   1: ( -e^{-r s}/sqrt(2),  e^{ r s}/sqrt(2),  r s )
//   2: (  e^{ r s}/sqrt(2), -e^{-r s}/sqrt(2), -r s )
//   3: (  e^{-r s}/sqrt(2), -e^{ r s}/sqrt(2),  r s )
//   4: ( -e^{ r s}/sqrt(2),  e^{-r s}/sqrt(2), -r s )
// General c2 scales x by 1/sqrt(c2), y by sqrt(c2) and shifts z by
// (1/2) log c2; all four branches are isometric images (translations,
// the z-flow, reflections, parameter reversal) of branch 1 with c2 = 1.
// Throws InvalidParams unless c2 > 0, branch is 1..4, |c1| = 1/sqrt(2) to
// 1e-9, and sign(c1) matches the branch.
CurveSpec build_triharmonic_helix(const TriharmonicHelixParams& p);

// One sign-change cell of reduced_quartic_constraint along a constrained
// walk: torsion sign, vertical tangent sign, the bracketing |B3| interval
// (the constraint is even in B3) and the helix data at its midpoint.
struct QuarticScanCell {
    int b_sign = 1;
    int t3_sign = 1;
    double b3_lo = 0.0;
    double b3_hi = 0.0;
    double a_mid = 0.0;
    double b_mid = 0.0;
};

// Belt-and-braces sweep independent of the c1-scan: walks B3 over (0, 1) in
// the given step for each of the four (sign b, sign T3) combinations, with
// T3^2 = 1 - B3^2 and the helix-existence relations a = |T3 B3|, b = sign *
// B3^2 imposed, and collects the cells where reduced_quartic_constraint
// changes sign. The classification holds iff every returned cell brackets
// |B3| = 1/sqrt(2) (i.e. (a, b) -> (1/2, +-1/2)). Endpoints with |B3| or
// |T3| below 0.005 are skipped (degenerate helix data). Throws
// InvalidParams unless 0 < step <= 0.1.
std::vector<QuarticScanCell> quartic_constraint_scan(double step);

// Compares kappa and tau of the curve against the expected helix data at
// 101 samples of s in [-5, 5]; the check passes when the largest deviation
// is <= 1e-10. This is the hook for negative controls: feeding a slightly
// wrong expectation must flip pass to false.
CheckResult kappa_tau_check(const CurveSpec& spec, const HelixSpec& expected);

// The complete machine verification: classification scan, constraint scan,
// curvature/torsion of the built curve, both triharmonic residual paths,
// the r = 2 obstruction, the integrator cross-check with its convergence
// order, and the vertical-axis integral-curve characterization.
struct TheoremReport {
    std::vector<CheckResult> checks;
    ClassificationResult classification;
    std::vector<std::string> notes;
    bool all_pass = false;
};

TheoremReport verify_theorem();

// {"checks": [{name, pass, max_residual, tolerance}], "roots": [...],
//  "notes": [...], "all_pass": ...}
std::string theorem_report_json(const TheoremReport& rep);

}  // namespace solcurves
