#pragma once

#include <vector>

#include "solcurves/sol_geometry.hpp"
#include "solcurves/vec3.hpp"

namespace solcurves {

// Position plus Frenet frame, the 12-dimensional integration state.
struct FrenetFrameState {
    Point3 p;
    FrameVector T;
    FrameVector N;
    FrameVector B;
};

struct IntegratedPath {
    std::vector<double> s;
    std::vector<FrenetFrameState> states;
    double max_orthonormality_drift = 0.0;
};

// Integrates the natural equations of a helix with constant curvature a > 0
// and torsion b: coordinates follow x' = T1 e^{-z}, y' = T2 e^{z}, z' = T3,
// and each frame field V obeys
//   V1' = (nabla_T V)1 - T1 V3,
//   V2' = (nabla_T V)2 + T2 V3,
//   V3' = (nabla_T V)3 + T1 V1 - T2 V2,
// with nabla_T T = a N, nabla_T N = -a T + b B, nabla_T B = -b N.
// Classical fixed-step RK4 with compensated state accumulation; s_max is
// rounded to a whole number of steps and every step is sampled. The frame is
// monitored, never re-projected: orthonormality drift beyond 1e-6 raises
// FrameDrift instead of being hidden. init must be orthonormal to 1e-10.
IntegratedPath integrate_frenet_natural(double a, double b, const FrenetFrameState& init,
                                        double step, double s_max);

// Geodesic variant (nabla_T T = 0): only the tangent is transported; the
// returned states carry N = B = 0 and the drift is |<T,T> - 1|.
IntegratedPath integrate_geodesic(const Point3& p0, const FrameVector& t0, double step,
                                  double s_max);

}  // namespace solcurves
