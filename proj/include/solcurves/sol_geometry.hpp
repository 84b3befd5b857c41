#pragma once

#include <array>
#include <vector>

#include "solcurves/errors.hpp"
#include "solcurves/vec3.hpp"

namespace solcurves {

// Cartesian coordinates on the underlying R^3 of Sol space, which carries
// the left-invariant metric  e^{2z} dx^2 + e^{-2z} dy^2 + dz^2.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// The five generators of the isometry group acting on coordinates:
//   translate_x: (x, y, z) -> (x + c, y, z)
//   translate_y: (x, y, z) -> (x, y + c, z)
//   flow_z:      (x, y, z) -> (e^{-c} x, e^{c} y, z + c)
//   reflect_x:   (x, y, z) -> (-x, y, z)
//   reflect_y:   (x, y, z) -> (x, -y, z)
enum class IsometryKind { translate_x, translate_y, flow_z, reflect_x, reflect_y };

struct IsometrySpec {
    IsometryKind kind = IsometryKind::translate_x;
    double c = 0.0;  // parameter; ignored by the reflections
};

// The three-element base of the Killing fields, in frame components:
//   V1 = e^{z} E1,  V2 = e^{-z} E2,  V3 = -x e^{z} E1 + y e^{-z} E2 + E3.
// V3 generates the flow_z isometry family.
enum class KillingFieldId { V1, V2, V3 };

// Diagonal metric coefficients (e^{2z}, e^{-2z}, 1) at p.
std::array<double, 3> metric_components(const Point3& p);

// Levi-Civita connection on the orthonormal frame: nabla_{E_i} E_j.
// Nonzero entries: (1,1) -> -E3, (1,3) -> E1, (2,2) -> E3, (2,3) -> -E2.
FrameVector frame_connection(int i, int j);

// Structure constants: [E1,E2] = 0, [E1,E3] = E1, [E2,E3] = -E2.
FrameVector lie_bracket(int i, int j);

// R(X,Y)Z, trilinear extension of the frame table
//   R(E1,E2)E1 = -E2, R(E1,E2)E2 = E1,
//   R(E1,E3)E1 =  E3, R(E1,E3)E3 = -E1,
//   R(E2,E3)E2 =  E3, R(E2,E3)E3 = -E2,
// with R(Y,X)Z = -R(X,Y)Z and all remaining frame entries zero.
FrameVector curvature_operator(const FrameVector& X, const FrameVector& Y,
                               const FrameVector& Z);

// <R(X,Y)W, Z>; in frame indices the generators are R_1212 = 1,
// R_1313 = R_2323 = -1.
double curvature_4tensor(const FrameVector& X, const FrameVector& Y,
                         const FrameVector& Z, const FrameVector& W);

Point3 apply_isometry(const IsometrySpec& iso, const Point3& p);

// Applies the list left-to-right: first element acts first.
Point3 apply_isometries(const std::vector<IsometrySpec>& isos, const Point3& p);

FrameVector killing_field(KillingFieldId id, const Point3& p);

// Change of basis for tangent vectors at p between coordinate components
// (coefficients of d/dx, d/dy, d/dz) and frame components.
FrameVector frame_from_coordinate(const Point3& p, double dx, double dy, double dz);
std::array<double, 3> coordinate_from_frame(const Point3& p, const FrameVector& v);

}  // namespace solcurves
