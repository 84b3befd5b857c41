#include <cmath>
#include <vector>

#include "doctest.h"
#include "solcurves/curve_spec.hpp"
#include "solcurves/errors.hpp"
#include "solcurves/frenet.hpp"
#include "solcurves/sol_geometry.hpp"
#include "solcurves/tension.hpp"
#include "support/curve_generators.hpp"
#include "support/test_support.hpp"

using namespace solcurves;
using namespace solcurves::testing;

namespace {

FrameVector base(const FrameJet& v) {
    return {v.v1.value(), v.v2.value(), v.v3.value()};
}

Jet from_coeffs(const std::vector<double>& c) {
    const int order = static_cast<int>(c.size()) - 1;
    const Jet x = Jet::variable(0.0, order);
    Jet acc = Jet::constant(c.back(), order);
    for (int i = order - 1; i >= 0; --i) acc = acc * x + c[i];
    return acc;
}

Jet random_jet(Rng& rng, double lo0, double hi0) {
    std::vector<double> c(10);
    c[0] = rng.uniform(lo0, hi0);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = rng.uniform(-0.6, 0.6);
    return from_coeffs(c);
}

// A curve-free model of the Frenet system: v = (f, g, h) are the components
// of a field along (T, N, B), and
//   nabla_T v = (f' - g kappa, g' + f kappa - h tau, h' + g tau).
struct FormalVec {
    Jet t, n, b;
};

FormalVec formal_covariant(const Jet& kappa, const Jet& tau, const FormalVec& v) {
    return {v.t.differentiate() - v.n * kappa,
            v.n.differentiate() + v.t * kappa - v.b * tau,
            v.b.differentiate() + v.n * tau};
}

FrameVector random_unit_vector(Rng& rng) {
    while (true) {
        const FrameVector v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double n = norm(v);
        if (n > 1e-2) return (1.0 / n) * v;
    }
}

// Oriented orthonormal triple (t, n, b = t x n) with no preferred axis.
void random_frame(Rng& rng, FrameVector& t, FrameVector& n, FrameVector& b) {
    while (true) {
        t = random_unit_vector(rng);
        const FrameVector u = random_unit_vector(rng);
        const FrameVector w = u - dot(u, t) * t;
        const double wn = norm(w);
        if (wn < 1e-2) continue;
        n = (1.0 / wn) * w;
        b = cross(t, n);
        return;
    }
}

}  // namespace

TEST_CASE("nabla power polynomials match the formal Frenet system") {
    Rng rng(611);
    for (int trial = 0; trial < 30; ++trial) {
        const Jet kappa = random_jet(rng, 0.3, 2.0);
        const Jet tau = random_jet(rng, -1.5, 1.5);

        FormalVec v{Jet::constant(1.0, 10), Jet::constant(0.0, 10), Jet::constant(0.0, 10)};
        std::vector<FormalVec> pow;  // pow[l] = nabla^l_T T in Frenet components
        pow.push_back(v);
        for (int l = 1; l <= 5; ++l) {
            v = formal_covariant(kappa, tau, v);
            pow.push_back(v);
        }

        for (int k : {1, 2, 3, 5}) {
            const FrameVector poly = nabla_powers_frenet(kappa, tau, k);
            const FormalVec& ref = pow[static_cast<std::size_t>(k)];
            CHECK(std::abs(poly.v1 - ref.t.value()) <= 1e-9 * (1.0 + std::abs(ref.t.value())));
            CHECK(std::abs(poly.v2 - ref.n.value()) <= 1e-9 * (1.0 + std::abs(ref.n.value())));
            CHECK(std::abs(poly.v3 - ref.b.value()) <= 1e-9 * (1.0 + std::abs(ref.b.value())));
        }
    }
}

TEST_CASE("Frenet-component residual matches the formal covariant assembly") {
    // The closed-form core sees only the kappa/tau jets and (T3, N3, B3);
    // the reference value is assembled from the formal Frenet system and the
    // curvature operator acting on a random oriented orthonormal triple.
    // This exercises every derivative term and every curvature coupling with
    // generic data, which no unit-speed member of the curve family can do
    // (those all have constant kappa and tau).
    Rng rng(612);
    for (int trial = 0; trial < 30; ++trial) {
        const Jet kappa = random_jet(rng, 0.3, 2.0);
        const Jet tau = random_jet(rng, -1.5, 1.5);
        FrameVector t, n, b;
        random_frame(rng, t, n, b);

        FormalVec v{Jet::constant(1.0, 10), Jet::constant(0.0, 10), Jet::constant(0.0, 10)};
        std::vector<FormalVec> pow;
        pow.push_back(v);
        for (int l = 1; l <= 5; ++l) {
            v = formal_covariant(kappa, tau, v);
            pow.push_back(v);
        }
        auto to_frame = [&](const FormalVec& fv) {
            return fv.t.value() * t + fv.n.value() * n + fv.b.value() * b;
        };
        const FrameVector expect = to_frame(pow[5]) -
                                   curvature_operator(to_frame(pow[3]), t, t) +
                                   curvature_operator(to_frame(pow[2]), to_frame(pow[1]), t);

        const FrameVector res = triharmonic_frenet_components(kappa, tau, t.v3, n.v3, b.v3);
        const FrameVector got = res.v1 * t + res.v2 * n + res.v3 * b;
        CHECK(norm(got - expect) <= 1e-9 * (1.0 + norm(expect)));
    }
}

TEST_CASE("nabla powers for constant curvature and torsion") {
    const FrameVector n1 = nabla_powers_frenet(0.7, -0.3, 1);
    CHECK(n1.v1 == 0.0);
    CHECK(n1.v2 == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(n1.v3 == 0.0);

    const FrameVector n2 = nabla_powers_frenet(0.5, 0.5, 2);
    CHECK(n2.v1 == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(n2.v2 == 0.0);
    CHECK(n2.v3 == doctest::Approx(0.25).epsilon(1e-14));

    const FrameVector n3 = nabla_powers_frenet(0.5, 0.5, 3);
    CHECK(n3.v1 == 0.0);
    CHECK(n3.v2 == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(n3.v3 == 0.0);

    // All tangential terms of the fifth power carry derivatives of kappa or
    // tau, so they drop for a helix.
    const FrameVector n5 = nabla_powers_frenet(0.5, 0.5, 5);
    CHECK(n5.v1 == 0.0);
    CHECK(n5.v2 == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(n5.v3 == 0.0);

    CHECK_THROWS_AS((void)nabla_powers_frenet(0.5, 0.5, 4), InvalidParams);
    CHECK_THROWS_AS((void)nabla_powers_frenet(0.0, 0.5, 1), InvalidParams);
    CHECK_THROWS_AS((void)nabla_powers_frenet(-1.0, 0.5, 2), InvalidParams);
}

TEST_CASE("order gate of r_tension") {
    const CurveSpec spec = reference_helix_spec();
    CHECK_THROWS_AS((void)r_tension(spec, 0.0, 1), InvalidParams);
    CHECK_THROWS_AS((void)r_tension(spec, 0.0, 5), InvalidParams);
}

TEST_CASE("geodesics have vanishing tension residual at every order") {
    const CurveSpec line = vertical_line_curve();
    for (int r : {2, 3, 4}) {
        for (double s : {-1.5, 0.0, 2.0}) {
            const FrameVector res = r_tension(line, s, r);
            CHECK(res.v1 == 0.0);
            CHECK(res.v2 == 0.0);
            CHECK(res.v3 == 0.0);
        }
    }
    // Horizontal geodesic: beta = pi/4 makes the constant-z curve a geodesic.
    const CurveSpec diag = constant_z_spec(std::acos(-1.0) / 4.0, 0.3);
    const FrameVector res = r_tension(diag, 0.7, 3);
    CHECK(norm(res) <= 1e-12);
    CHECK(norm(triharmonic_residual_direct(diag, 0.7)) <= 1e-12);
}

TEST_CASE("the classified helix is triharmonic on both paths") {
    const CurveSpec spec = reference_helix_spec();
    for (double s : {-2.0, 0.0, 1.7}) {
        const FrameVector rt = r_tension(spec, s, 3);
        CHECK(norm(rt) <= 1e-9);
        const FrameVector direct = triharmonic_residual_direct(spec, s);
        CHECK(norm(direct) <= 1e-9);
        const FrameVector fren = triharmonic_residual_frenet(spec, s);
        CHECK(norm(fren) <= 1e-9);
    }
}

TEST_CASE("the classified helix is not biharmonic") {
    const CurveSpec spec = reference_helix_spec();
    for (double s : {-1.0, 0.0, 0.9}) {
        const FrameVector res = r_tension(spec, s, 2);
        CHECK(std::abs(norm(res) - 0.25) <= 1e-12);

        // The residual is -(1/4) N: N = (1/sqrt2, -1/sqrt2, 0) along the
        // whole curve.
        const double c = 0.25 / std::sqrt(2.0);
        CHECK(std::abs(res.v1 + c) <= 1e-12);
        CHECK(std::abs(res.v2 - c) <= 1e-12);
        CHECK(std::abs(res.v3) <= 1e-12);
    }
}

TEST_CASE("constant-z residual concentrates on the normal direction") {
    // On the constant-z family the residual lies along N with res_N =
    // -kappa^3, so its zero set is exactly the geodesic locus cos(2beta) = 0.
    const double pi = std::acos(-1.0);
    const CurveSpec spec = constant_z_spec(pi / 6.0, 0.0);
    for (double s : {-0.8, 0.0, 1.3}) {
        // kappa = cos(pi/3) = 1/2 and N = (0, 0, -1) at beta = pi/6.
        const FrameVector fren = triharmonic_residual_frenet(spec, s);
        CHECK(std::abs(fren.v1) <= 1e-12);
        CHECK(std::abs(fren.v2 + 0.125) <= 1e-12);
        CHECK(std::abs(fren.v3) <= 1e-12);

        const FrameVector direct = triharmonic_residual_direct(spec, s);
        CHECK(std::abs(direct.v1) <= 1e-12);
        CHECK(std::abs(direct.v2) <= 1e-12);
        CHECK(std::abs(direct.v3 - 0.125) <= 1e-12);
    }

    // Past the geodesic angle the normal flips to (0, 0, 1); res_N keeps the
    // closed form -kappa^3.
    const double beta = 2.0 * pi / 5.0;
    const double kappa = std::abs(std::cos(2.0 * beta));
    const CurveSpec steep = constant_z_spec(beta, -0.4);
    const FrameVector fren = triharmonic_residual_frenet(steep, 0.6);
    CHECK(std::abs(fren.v1) <= 1e-12);
    CHECK(std::abs(fren.v2 + kappa * kappa * kappa) <= 1e-12);
    CHECK(std::abs(fren.v3) <= 1e-12);
    const FrameVector direct = triharmonic_residual_direct(steep, 0.6);
    CHECK(std::abs(direct.v3 + kappa * kappa * kappa) <= 1e-12);
}

TEST_CASE("direct and Frenet paths agree on random curves") {
    Rng rng(613);
    for (int trial = 0; trial < 50; ++trial) {
        const CurveSpec spec = random_unit_speed_curve(rng);
        const double s = rng.uniform(-1.0, 1.0);
        const FrameVector direct = triharmonic_residual_direct(spec, s);
        const FrameVector fren = triharmonic_residual_frenet(spec, s);

        const CurveJet cj = eval_curve(spec, s, default_jet_order());
        const FrenetData f = frenet_frame(cj);
        const FrameVector recon =
            fren.v1 * base(f.T) + fren.v2 * base(f.N) + fren.v3 * base(f.B);
        CHECK(norm(recon - direct) <= 1e-7 * (1.0 + norm(direct)));
    }
}

TEST_CASE("r_tension at order three equals the direct path") {
    Rng rng(614);
    for (int trial = 0; trial < 20; ++trial) {
        const CurveSpec spec = random_unit_speed_curve(rng);
        const double s = rng.uniform(-1.0, 1.0);
        const FrameVector a = r_tension(spec, s, 3);
        const FrameVector b = triharmonic_residual_direct(spec, s);
        CHECK(std::abs(a.v1 - b.v1) <= 1e-12 * (1.0 + std::abs(b.v1)));
        CHECK(std::abs(a.v2 - b.v2) <= 1e-12 * (1.0 + std::abs(b.v2)));
        CHECK(std::abs(a.v3 - b.v3) <= 1e-12 * (1.0 + std::abs(b.v3)));
    }
}

TEST_CASE("iterated covariant derivatives of helices match the closed forms") {
    Rng rng(615);
    for (int trial = 0; trial < 25; ++trial) {
        const CurveSpec spec = random_unit_speed_curve(rng);
        const double s = rng.uniform(-0.5, 0.5);
        const CurveJet cj = eval_curve(spec, s, default_jet_order());
        const FrenetData f = frenet_frame(cj);
        const double a = f.kappa.value();
        const double b = f.tau.value();
        for (int k : {1, 2, 3, 5}) {
            const FrameVector cov = iterated_covariant(spec, s, k);
            const FrameVector in_frenet{dot(cov, base(f.T)), dot(cov, base(f.N)),
                                        dot(cov, base(f.B))};
            const FrameVector expect = nabla_powers_frenet(a, b, k);
            CHECK(std::abs(in_frenet.v1 - expect.v1) <= 1e-9 * (1.0 + std::abs(expect.v1)));
            CHECK(std::abs(in_frenet.v2 - expect.v2) <= 1e-9 * (1.0 + std::abs(expect.v2)));
            CHECK(std::abs(in_frenet.v3 - expect.v3) <= 1e-9 * (1.0 + std::abs(expect.v3)));
        }
    }
}

TEST_CASE("biharmonic residual of helices in the Frenet basis") {
    // For a helix, nabla^3_T T = (0, -a^3 - a b^2, 0), so the order-2
    // residual has Frenet components
    //   (0, -a^3 - a b^2 - a R(T,N,T,N), -a R(T,N,T,B)).
    Rng rng(616);
    for (int trial = 0; trial < 15; ++trial) {
        const CurveSpec spec = random_unit_speed_curve(rng);
        const double s = rng.uniform(-0.5, 0.5);
        const CurveJet cj = eval_curve(spec, s, default_jet_order());
        const FrenetData f = frenet_frame(cj);
        const FrenetCurvatureIdentities ids = frenet_curvature_identities(f);
        const double a = f.kappa.value();
        const double b = f.tau.value();

        const FrameVector res = r_tension(spec, s, 2);
        const FrameVector in_frenet{dot(res, base(f.T)), dot(res, base(f.N)),
                                    dot(res, base(f.B))};
        const double expect_n = -a * a * a - a * b * b - a * ids.r_tntn;
        const double expect_b = -a * ids.r_tntb;
        CHECK(std::abs(in_frenet.v1) <= 1e-9);
        CHECK(std::abs(in_frenet.v2 - expect_n) <= 1e-9 * (1.0 + std::abs(expect_n)));
        CHECK(std::abs(in_frenet.v3 - expect_b) <= 1e-9 * (1.0 + std::abs(expect_b)));
    }
}

TEST_CASE("curvature pairings of the Frenet frame") {
    const CurveSpec helix = reference_helix_spec();
    const FrenetData fh = frenet_frame(eval_curve(helix, 0.4, default_jet_order()));
    const FrenetCurvatureIdentities ih = frenet_curvature_identities(fh);
    // B3^2 = 1/2 and N3 = 0 along the classified helix.
    CHECK(std::abs(ih.r_tntn) <= 1e-12);
    CHECK(std::abs(ih.r_tntb) <= 1e-12);
    CHECK(std::abs(ih.r_btbt + 1.0) <= 1e-12);
    CHECK(std::abs(ih.r_bnnt + 1.0) <= 1e-12);
    CHECK(std::abs(ih.r_bnbt) <= 1e-12);

    const CurveSpec flat = constant_z_spec(std::acos(-1.0) / 6.0, 0.2);
    const FrenetData ff = frenet_frame(eval_curve(flat, -0.3, default_jet_order()));
    const FrenetCurvatureIdentities idsf = frenet_curvature_identities(ff);
    // T3 = B3 = 0 and N3 = -1 on the constant-z family.
    CHECK(std::abs(idsf.r_tntn + 1.0) <= 1e-12);
    CHECK(std::abs(idsf.r_tntb) <= 1e-12);
    CHECK(std::abs(idsf.r_btbt - 1.0) <= 1e-12);
    CHECK(std::abs(idsf.r_bnnt) <= 1e-12);
    CHECK(std::abs(idsf.r_bnbt) <= 1e-12);

    Rng rng(617);
    for (int trial = 0; trial < 25; ++trial) {
        const CurveSpec spec = random_unit_speed_curve(rng);
        const FrenetData f = frenet_frame(eval_curve(spec, 0.1, default_jet_order()));
        CHECK_NOTHROW((void)frenet_curvature_identities(f));
    }
}

TEST_CASE("residual norm is invariant under the isometry generators") {
    Rng rng(618);
    const std::vector<IsometrySpec> gens = {
        {IsometryKind::translate_x, 0.8},  {IsometryKind::translate_y, -1.1},
        {IsometryKind::flow_z, 0.6},       {IsometryKind::reflect_x, 0.0},
        {IsometryKind::reflect_y, 0.0},
    };
    for (int trial = 0; trial < 10; ++trial) {
        const CurveSpec spec = random_unit_speed_curve(rng);
        const double s = rng.uniform(-0.5, 0.5);
        const double ref_norm = norm(triharmonic_residual_direct(spec, s));
        for (const auto& g : gens) {
            const CurveSpec moved = transform_curve(g, spec);
            const double moved_norm = norm(triharmonic_residual_direct(moved, s));
            CHECK(std::abs(moved_norm - ref_norm) <= 1e-9 * (1.0 + ref_norm));
        }
    }
}

TEST_CASE("tension residual carries both bases") {
    const CurveSpec spec = reference_helix_spec();
    const TensionResidual r2 = tension_residual(spec, 0.0, 2);
    CHECK(r2.r == 2);
    CHECK(std::abs(norm(r2.frame_vec) - 0.25) <= 1e-12);
    CHECK(std::abs(r2.frenet_vec.v1) <= 1e-12);
    CHECK(std::abs(r2.frenet_vec.v2 + 0.25) <= 1e-12);
    CHECK(std::abs(r2.frenet_vec.v3) <= 1e-12);

    const TensionResidual r3 = tension_residual(spec, 0.0, 3);
    CHECK(r3.r == 3);
    CHECK(norm(r3.frame_vec) <= 1e-9);
    CHECK(norm(r3.frenet_vec) <= 1e-9);

    Rng rng(619);
    for (int trial = 0; trial < 10; ++trial) {
        const CurveSpec random_spec = random_unit_speed_curve(rng);
        const TensionResidual tr = tension_residual(random_spec, 0.2, 3);
        CHECK(std::abs(norm(tr.frame_vec) - norm(tr.frenet_vec)) <=
              1e-8 * (1.0 + norm(tr.frame_vec)));
    }
}

TEST_CASE("degenerate inputs of the closed-form core") {
    CHECK_THROWS_AS((void)triharmonic_frenet_components(Jet::constant(1e-9, 6),
                                                        Jet::constant(0.5, 6), 0.0, 1.0, 0.0),
                    GeodesicDegeneracy);
    CHECK_THROWS_AS((void)triharmonic_frenet_components(Jet::constant(0.5, 6),
                                                        Jet::constant(0.5, 6), 1.0, 1.0, 0.0),
                    InvalidParams);
    // Geodesics reach the Frenet path only through frenet_frame, which
    // rejects them before any assembly runs.
    CHECK_THROWS_AS((void)triharmonic_residual_frenet(vertical_line_curve(), 0.0),
                    GeodesicDegeneracy);
}
