#pragma once

#include <array>

#include "solcurves/curve_spec.hpp"
#include "solcurves/vec3.hpp"

namespace solcurves {

// Frame components that vary along the curve, carried as jets.
using FrameJet = Vec3<Jet>;

// Frame components of the velocity: (x' e^{z}, y' e^{-z}, z').
// Throws NotUnitSpeed when the speed deviates from 1 by more than 1e-8
// at the base point; unit speed is validated, never restored silently.
FrameJet unit_tangent(const CurveJet& cj);

// | <T,T> - 1 | at the base point, with no gate.
double speed_deviation(const CurveJet& cj);

// Covariant derivative along the curve, in frame components:
//   nabla_T V = (V1' + T1 V3, V2' - T2 V3, V3' - T1 V1 + T2 V2).
// The result order is one below V's. Throws OrderExhausted at order 0.
FrameJet covariant_derivative(const FrameJet& T, const FrameJet& V);

// nabla^k_T T at s, by k-fold application of covariant_derivative.
FrameVector iterated_covariant(const CurveSpec& spec, double s, int k);

// kappa^2(s) as a jet, from the explicit coordinate formula
//   e^{2z}(x''+2x'z')^2 + e^{-2z}(y''-2y'z')^2 + (z''-e^{2z}x'^2+e^{-2z}y'^2)^2.
// Independent of the covariant-derivative code path by construction.
Jet geodesic_curvature_sq(const CurveJet& cj);

// tau(s) as a jet, from the closed-form quotient of third-order coordinate
// polynomials. Throws TorsionUndefined when the denominator vanishes at the
// base point (degenerate Frenet data, e.g. geodesics).
Jet torsion(const CurveJet& cj);

struct FrenetData {
    FrameJet T;
    FrameJet N;
    FrameJet B;
    Jet kappa;
    Jet tau;
};

// Frenet frame along the curve: N = nabla_T T / kappa, B = T x N with the
// orientation of (E1, E2, E3); tau = -<nabla_T B, N>, cross-checked against
// the coordinate formula at the base point (FrameInconsistency beyond 1e-6).
// Throws GeodesicDegeneracy when kappa <= 1e-8 at the base point.
FrenetData frenet_frame(const CurveJet& cj);

// (T3, N3, B3) at the base point.
std::array<double, 3> vertical_components(const FrenetData& f);

// Same, from the curve; when the curve is a helix (kappa, tau constant)
// the closed-form component expressions
//   N3 = -(e^{2z}x'^2 - e^{-2z}y'^2 - z'')/kappa,
//   B3 = (-y'x'' + x'(-4y'z' + y''))/kappa
// are additionally verified against the frame values to 1e-8.
std::array<double, 3> vertical_components(const CurveJet& cj);

}  // namespace solcurves
