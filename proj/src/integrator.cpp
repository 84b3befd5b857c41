#include "solcurves/integrator.hpp"

#include <array>
#include <cmath>
#include <cstddef>

#include "solcurves/errors.hpp"

namespace solcurves {

namespace {

// State layout: x, y, z, T1..T3, N1..N3, B1..B3.
using State = std::array<double, 12>;

FrameVector slot(const State& y, int base) {
    return {y[static_cast<std::size_t>(base)], y[static_cast<std::size_t>(base + 1)],
            y[static_cast<std::size_t>(base + 2)]};
}

// Derivative of the frame components of V along the curve, given the
// covariant derivative W = nabla_T V.
FrameVector frame_rate(const FrameVector& T, const FrameVector& V, const FrameVector& W) {
    return {W.v1 - T.v1 * V.v3, W.v2 + T.v2 * V.v3, W.v3 + T.v1 * V.v1 - T.v2 * V.v2};
}

State helix_rhs(double a, double b, const State& y) {
    const double z = y[2];
    const FrameVector T = slot(y, 3);
    const FrameVector N = slot(y, 6);
    const FrameVector B = slot(y, 9);
    const FrameVector dT = frame_rate(T, T, a * N);
    const FrameVector dN = frame_rate(T, N, -a * T + b * B);
    const FrameVector dB = frame_rate(T, B, (-b) * N);
    return {T.v1 * std::exp(-z), T.v2 * std::exp(z), T.v3, dT.v1, dT.v2, dT.v3,
            dN.v1,               dN.v2,              dN.v3, dB.v1, dB.v2, dB.v3};
}

double orthonormality_error(const State& y) {
    const FrameVector v[3] = {slot(y, 3), slot(y, 6), slot(y, 9)};
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            err = std::max(err, std::abs(dot(v[i], v[j]) - target));
        }
    }
    return err;
}

FrenetFrameState to_frame_state(const State& y) {
    return {{y[0], y[1], y[2]}, slot(y, 3), slot(y, 6), slot(y, 9)};
}

template <class StateT, class Rhs>
void rk4_step(const Rhs& rhs, double h, StateT& y, StateT& comp) {
    const StateT k1 = rhs(y);
    StateT probe;
    for (std::size_t i = 0; i < y.size(); ++i) probe[i] = y[i] + 0.5 * h * k1[i];
    const StateT k2 = rhs(probe);
    for (std::size_t i = 0; i < y.size(); ++i) probe[i] = y[i] + 0.5 * h * k2[i];
    const StateT k3 = rhs(probe);
    for (std::size_t i = 0; i < y.size(); ++i) probe[i] = y[i] + h * k3[i];
    const StateT k4 = rhs(probe);
    // Compensated accumulation keeps the per-step rounding error from
    // swamping the O(h^4) truncation error in convergence measurements.
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double inc = (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        const double t = inc - comp[i];
        const double s = y[i] + t;
        comp[i] = (s - y[i]) - t;
        y[i] = s;
    }
}

long step_count(double step, double s_max) {
    if (!(step > 0.0)) {
        throw InvalidParams("integrate: step must be positive");
    }
    if (!(s_max > 0.0)) {
        throw InvalidParams("integrate: s_max must be positive");
    }
    return std::lround(s_max / step);
}

}  // namespace

IntegratedPath integrate_frenet_natural(double a, double b, const FrenetFrameState& init,
                                        double step, double s_max) {
    if (!(a > 0.0)) {
        throw InvalidParams("integrate_frenet_natural: curvature must be positive");
    }
    const long n = step_count(step, s_max);

    State y = {init.p.x,  init.p.y,  init.p.z,  init.T.v1, init.T.v2, init.T.v3,
               init.N.v1, init.N.v2, init.N.v3, init.B.v1, init.B.v2, init.B.v3};
    if (orthonormality_error(y) > 1e-10) {
        throw InvalidParams("integrate_frenet_natural: initial frame is not orthonormal");
    }
    State comp{};

    IntegratedPath path;
    path.s.reserve(static_cast<std::size_t>(n) + 1);
    path.states.reserve(static_cast<std::size_t>(n) + 1);
    path.s.push_back(0.0);
    path.states.push_back(to_frame_state(y));

    const auto rhs = [a, b](const State& s) { return helix_rhs(a, b, s); };
    for (long i = 1; i <= n; ++i) {
        rk4_step(rhs, step, y, comp);
        const double drift = orthonormality_error(y);
        path.max_orthonormality_drift = std::max(path.max_orthonormality_drift, drift);
        if (drift > 1e-6) {
            throw FrameDrift("integrate_frenet_natural: frame orthonormality drift exceeds 1e-6");
        }
        path.s.push_back(static_cast<double>(i) * step);
        path.states.push_back(to_frame_state(y));
    }
    return path;
}

IntegratedPath integrate_geodesic(const Point3& p0, const FrameVector& t0, double step,
                                  double s_max) {
    const long n = step_count(step, s_max);
    if (std::abs(dot(t0, t0) - 1.0) > 1e-10) {
        throw InvalidParams("integrate_geodesic: initial tangent must be unit");
    }

    // Six-dimensional sub-problem of the helix system with nabla_T T = 0.
    using GState = std::array<double, 6>;
    GState y = {p0.x, p0.y, p0.z, t0.v1, t0.v2, t0.v3};
    GState comp{};
    const auto rhs = [](const GState& s) -> GState {
        const double z = s[2];
        const FrameVector T{s[3], s[4], s[5]};
        const FrameVector dT = frame_rate(T, T, {0.0, 0.0, 0.0});
        return {T.v1 * std::exp(-z), T.v2 * std::exp(z), T.v3, dT.v1, dT.v2, dT.v3};
    };

    IntegratedPath path;
    path.s.reserve(static_cast<std::size_t>(n) + 1);
    path.states.reserve(static_cast<std::size_t>(n) + 1);
    auto record = [&path](double s, const GState& g) {
        path.s.push_back(s);
        path.states.push_back(
            {{g[0], g[1], g[2]}, {g[3], g[4], g[5]}, {0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}});
    };
    record(0.0, y);
    for (long i = 1; i <= n; ++i) {
        rk4_step(rhs, step, y, comp);
        const double drift = std::abs(y[3] * y[3] + y[4] * y[4] + y[5] * y[5] - 1.0);
        path.max_orthonormality_drift = std::max(path.max_orthonormality_drift, drift);
        if (drift > 1e-6) {
            throw FrameDrift("integrate_geodesic: tangent norm drift exceeds 1e-6");
        }
        record(static_cast<double>(i) * step, y);
    }
    return path;
}

}  // namespace solcurves
