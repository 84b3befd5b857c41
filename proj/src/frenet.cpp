#include "solcurves/frenet.hpp"

#include <cmath>
#include <string>

namespace solcurves {

namespace {

// Coordinate derivatives and metric exponentials shared by the closed-form
// curvature and torsion expressions.
struct CurveDerivatives {
    Jet x1, x2, x3;
    Jet y1, y2, y3;
    Jet z1, z2, z3;
    Jet e2z, e4z, e6z, e8z;
    Jet em2z;  // e^{-2z}

    CurveDerivatives(const CurveJet& cj, int need_order)
        : x1(cj.x.differentiate()),
          x2(x1.differentiate()),
          x3(need_order >= 3 ? x2.differentiate() : x2),
          y1(cj.y.differentiate()),
          y2(y1.differentiate()),
          y3(need_order >= 3 ? y2.differentiate() : y2),
          z1(cj.z.differentiate()),
          z2(z1.differentiate()),
          z3(need_order >= 3 ? z2.differentiate() : z2),
          e2z(exp(2.0 * cj.z)),
          e4z(exp(4.0 * cj.z)),
          e6z(exp(6.0 * cj.z)),
          e8z(exp(8.0 * cj.z)),
          em2z(exp(-2.0 * cj.z)) {}
};

void require_order(const CurveJet& cj, int min_order, const char* what) {
    if (cj.x.order() < min_order) {
        throw OrderExhausted(std::string(what) + " needs curve jets of order >= " +
                             std::to_string(min_order) + ", got " +
                             std::to_string(cj.x.order()));
    }
}

}  // namespace

FrameJet unit_tangent(const CurveJet& cj) {
    require_order(cj, 1, "unit_tangent");
    Jet x1 = cj.x.differentiate();
    Jet y1 = cj.y.differentiate();
    Jet z1 = cj.z.differentiate();
    FrameJet T{x1 * exp(cj.z), y1 * exp(-cj.z), z1};
    double dev = std::abs(norm_sq(T).value() - 1.0);
    if (dev > 1e-8) {
        throw NotUnitSpeed("curve is not parametrized by arc length: | |T|^2 - 1 | = " +
                           std::to_string(dev));
    }
    return T;
}

double speed_deviation(const CurveJet& cj) {
    require_order(cj, 1, "speed_deviation");
    Jet x1 = cj.x.differentiate();
    Jet y1 = cj.y.differentiate();
    Jet z1 = cj.z.differentiate();
    Jet n = x1 * x1 * exp(2.0 * cj.z) + y1 * y1 * exp(-2.0 * cj.z) + z1 * z1;
    return std::abs(n.value() - 1.0);
}

FrameJet covariant_derivative(const FrameJet& T, const FrameJet& V) {
    // differentiate() throws OrderExhausted when V carries no derivative slot.
    return {V.v1.differentiate() + T.v1 * V.v3,
            V.v2.differentiate() - T.v2 * V.v3,
            V.v3.differentiate() - T.v1 * V.v1 + T.v2 * V.v2};
}

FrameVector iterated_covariant(const CurveSpec& spec, double s, int k) {
    if (k < 1) {
        throw InvalidParams("iterated covariant derivative needs k >= 1");
    }
    CurveJet cj = eval_curve(spec, s, default_jet_order());
    FrameJet T = unit_tangent(cj);
    FrameJet V = T;
    for (int i = 0; i < k; ++i) {
        V = covariant_derivative(T, V);
    }
    return {V.v1.value(), V.v2.value(), V.v3.value()};
}

Jet geodesic_curvature_sq(const CurveJet& cj) {
    require_order(cj, 2, "geodesic_curvature_sq");
    CurveDerivatives d(cj, 2);
    Jet u = d.x2 + 2.0 * d.x1 * d.z1;
    Jet v = d.y2 - 2.0 * d.y1 * d.z1;
    Jet w = d.z2 - d.e2z * d.x1 * d.x1 + d.em2z * d.y1 * d.y1;
    return d.e2z * u * u + d.em2z * v * v + w * w;
}

Jet torsion(const CurveJet& cj) {
    require_order(cj, 3, "torsion");
    CurveDerivatives d(cj, 3);
    const Jet &x1 = d.x1, &x2 = d.x2, &x3 = d.x3;
    const Jet &y1 = d.y1, &y2 = d.y2, &y3 = d.y3;
    const Jet &z1 = d.z1, &z2 = d.z2, &z3 = d.z3;

    Jet a8 = 2.0 * x1 * x1 * x1 * x1 * x1 * y1;
    Jet a0 = 2.0 * x1 * y1 * y1 * y1 * y1 * y1;
    Jet a6 = x1 * (3.0 * x2 * x2 * y1 +
                   x1 * x1 * (y3 - 6.0 * y2 * z1 + 8.0 * y1 * (2.0 * z1 * z1 - z2)) +
                   x1 * (y1 * (14.0 * x2 * z1 - x3) - 3.0 * x2 * y2));
    Jet a2 = y1 * (x1 * (3.0 * y2 * y2 + 8.0 * y1 * y1 * (z2 + 2.0 * z1 * z1) -
                         y1 * (y3 + 14.0 * y2 * z1)) +
                   y1 * (y1 * (x3 + 6.0 * x2 * z1) - 3.0 * x2 * y2));
    Jet a4 = -4.0 * x1 * x1 * x1 * y1 * y1 * y1 +
             x1 * (-y3 * z2 + 2.0 * y3 * z1 * z1 + z3 * y2 - 8.0 * y2 * z1 * z1 * z1 +
                   y1 * (6.0 * z2 * z2 + 8.0 * z1 * z1 * z1 * z1 - 4.0 * z3 * z1)) +
             y1 * (x3 * z2 + 2.0 * x3 * z1 * z1 - z3 * x2 + 8.0 * x2 * z1 * z1 * z1) +
             z1 * (y3 * x2 - y2 * (x3 + 6.0 * x2 * z1));
    Jet numerator = d.e8z * a8 + a0 + d.e6z * a6 + d.e2z * a2 + d.e4z * a4;

    Jet bu = x2 + 2.0 * x1 * z1;
    Jet bv = y2 - 2.0 * y1 * z1;
    Jet denominator = d.e4z * (z2 * z2 - 2.0 * x1 * x1 * y1 * y1) + d.e8z * x1 * x1 * x1 * x1 +
                      d.e6z * (bu * bu - 2.0 * x1 * x1 * z2) + y1 * y1 * y1 * y1 +
                      d.e2z * (2.0 * y1 * y1 * z2 + bv * bv);

    if (denominator.value() == 0.0) {
        throw TorsionUndefined("torsion denominator vanishes at the base point");
    }
    return numerator / denominator;
}

FrenetData frenet_frame(const CurveJet& cj) {
    require_order(cj, 4, "frenet_frame");
    FrameJet T = unit_tangent(cj);

    Jet kappa_sq = geodesic_curvature_sq(cj);
    if (kappa_sq.value() <= 1e-16) {
        throw GeodesicDegeneracy("geodesic curvature <= 1e-8: Frenet frame undefined");
    }
    Jet kappa = sqrt(kappa_sq);

    FrameJet dT = covariant_derivative(T, T);
    Jet inv_kappa = 1.0 / kappa;
    FrameJet N{dT.v1 * inv_kappa, dT.v2 * inv_kappa, dT.v3 * inv_kappa};
    FrameJet B = cross(T, N);

    // tau from the frame definition; the coordinate closed form must agree.
    FrameJet dB = covariant_derivative(T, B);
    Jet tau = -dot(dB, N);
    double tau_coord = torsion(cj).value();
    if (std::abs(tau.value() - tau_coord) > 1e-6) {
        throw FrameInconsistency("frame torsion " + std::to_string(tau.value()) +
                                 " disagrees with the coordinate formula " +
                                 std::to_string(tau_coord));
    }

    // Orthonormality at the base point.
    auto base = [](const FrameJet& v) {
        return FrameVector{v.v1.value(), v.v2.value(), v.v3.value()};
    };
    FrameVector t0 = base(T), n0 = base(N), b0 = base(B);
    double worst = 0.0;
    for (double r : {norm_sq(t0) - 1.0, norm_sq(n0) - 1.0, norm_sq(b0) - 1.0, dot(t0, n0),
                     dot(t0, b0), dot(n0, b0), t0.v3 * t0.v3 + n0.v3 * n0.v3 + b0.v3 * b0.v3 - 1.0}) {
        worst = std::max(worst, std::abs(r));
    }
    if (worst > 1e-10) {
        throw FrameInconsistency("Frenet frame lost orthonormality: residual " +
                                 std::to_string(worst));
    }

    return {T, N, B, kappa, tau};
}

std::array<double, 3> vertical_components(const FrenetData& f) {
    return {f.T.v3.value(), f.N.v3.value(), f.B.v3.value()};
}

std::array<double, 3> vertical_components(const CurveJet& cj) {
    FrenetData f = frenet_frame(cj);
    auto result = vertical_components(f);

    double kappa0 = f.kappa.value();
    bool is_helix = std::abs(f.kappa[1]) <= 1e-8 * (1.0 + kappa0) &&
                    std::abs(f.tau[1]) <= 1e-8 * (1.0 + std::abs(f.tau.value()));
    if (is_helix) {
        CurveDerivatives d(cj, 2);
        double x1 = d.x1.value(), x2 = d.x2.value();
        double y1 = d.y1.value(), y2 = d.y2.value();
        double z1 = d.z1.value(), z2 = d.z2.value();
        double e2z = d.e2z.value(), em2z = d.em2z.value();
        double n3 = -(e2z * x1 * x1 - em2z * y1 * y1 - z2) / kappa0;
        double b3 = (-y1 * x2 + x1 * (-4.0 * y1 * z1 + y2)) / kappa0;
        if (std::abs(n3 - result[1]) > 1e-8 || std::abs(b3 - result[2]) > 1e-8) {
            throw FrameInconsistency(
                "helix vertical components disagree with the frame values");
        }
    }
    return result;
}

}  // namespace solcurves
