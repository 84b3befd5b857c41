#include "solcurves/sol_geometry.hpp"

#include <cmath>
#include <string>

namespace solcurves {

namespace {

void check_frame_index(int i) {
    if (i < 1 || i > 3) {
        throw InvalidParams("frame index must be 1, 2 or 3, got " + std::to_string(i));
    }
}

}  // namespace

std::array<double, 3> metric_components(const Point3& p) {
    return {std::exp(2.0 * p.z), std::exp(-2.0 * p.z), 1.0};
}

FrameVector frame_connection(int i, int j) {
    check_frame_index(i);
    check_frame_index(j);
    if (i == 1 && j == 1) return {0.0, 0.0, -1.0};
    if (i == 1 && j == 3) return {1.0, 0.0, 0.0};
    if (i == 2 && j == 2) return {0.0, 0.0, 1.0};
    if (i == 2 && j == 3) return {0.0, -1.0, 0.0};
    return {0.0, 0.0, 0.0};
}

FrameVector lie_bracket(int i, int j) {
    check_frame_index(i);
    check_frame_index(j);
    if (i == j) return {0.0, 0.0, 0.0};
    if (i == 1 && j == 3) return {1.0, 0.0, 0.0};
    if (i == 3 && j == 1) return {-1.0, 0.0, 0.0};
    if (i == 2 && j == 3) return {0.0, -1.0, 0.0};
    if (i == 3 && j == 2) return {0.0, 1.0, 0.0};
    return {0.0, 0.0, 0.0};  // [E1, E2] = 0
}

FrameVector curvature_operator(const FrameVector& X, const FrameVector& Y,
                               const FrameVector& Z) {
    // Expand over the three basis 2-planes; w_ij are the components of X ^ Y.
    const double w12 = X.v1 * Y.v2 - X.v2 * Y.v1;
    const double w13 = X.v1 * Y.v3 - X.v3 * Y.v1;
    const double w23 = X.v2 * Y.v3 - X.v3 * Y.v2;
    // R(E1,E2)Z = (Z2, -Z1, 0); R(E1,E3)Z = (-Z3, 0, Z1); R(E2,E3)Z = (0, -Z3, Z2).
    return {w12 * Z.v2 - w13 * Z.v3,
            -w12 * Z.v1 - w23 * Z.v3,
            w13 * Z.v1 + w23 * Z.v2};
}

double curvature_4tensor(const FrameVector& X, const FrameVector& Y,
                         const FrameVector& Z, const FrameVector& W) {
    return dot(Z, curvature_operator(X, Y, W));
}

Point3 apply_isometry(const IsometrySpec& iso, const Point3& p) {
    switch (iso.kind) {
        case IsometryKind::translate_x:
            return {p.x + iso.c, p.y, p.z};
        case IsometryKind::translate_y:
            return {p.x, p.y + iso.c, p.z};
        case IsometryKind::flow_z:
            return {std::exp(-iso.c) * p.x, std::exp(iso.c) * p.y, p.z + iso.c};
        case IsometryKind::reflect_x:
            return {-p.x, p.y, p.z};
        case IsometryKind::reflect_y:
            return {p.x, -p.y, p.z};
    }
    throw InvalidParams("unknown isometry kind");
}

Point3 apply_isometries(const std::vector<IsometrySpec>& isos, const Point3& p) {
    Point3 q = p;
    for (const IsometrySpec& iso : isos) {
        q = apply_isometry(iso, q);
    }
    return q;
}

FrameVector killing_field(KillingFieldId id, const Point3& p) {
    const double ez = std::exp(p.z);
    switch (id) {
        case KillingFieldId::V1:
            return {ez, 0.0, 0.0};
        case KillingFieldId::V2:
            return {0.0, 1.0 / ez, 0.0};
        case KillingFieldId::V3:
            return {-p.x * ez, p.y / ez, 1.0};
    }
    throw InvalidParams("unknown Killing field id");
}

FrameVector frame_from_coordinate(const Point3& p, double dx, double dy, double dz) {
    // E1 = e^{-z} d/dx, so d/dx = e^{z} E1; similarly for the others.
    const double ez = std::exp(p.z);
    return {dx * ez, dy / ez, dz};
}

std::array<double, 3> coordinate_from_frame(const Point3& p, const FrameVector& v) {
    const double ez = std::exp(p.z);
    return {v.v1 / ez, v.v2 * ez, v.v3};
}

}  // namespace solcurves
