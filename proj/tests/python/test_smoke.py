"""Smoke tests for the Python bindings: construction, Frenet data, residuals,
classification, integration, Killing diagnostics, and error mapping."""

import json
import math

import solcurves as sc

ROOT2 = math.sqrt(2.0)


def test_helix_frenet_data():
    helix = sc.triharmonic_helix()
    for i in range(11):
        s = -5.0 + i
        f = sc.frenet(helix, s)
        assert abs(f["kappa"] - 0.5) <= 1e-10
        assert abs(f["tau"] - 0.5) <= 1e-10
        assert abs(sc.speed_deviation(helix, s)) <= 1e-12
    f0 = sc.frenet(helix, 0.0)
    assert abs(f0["position"][0] + 1 / ROOT2) <= 1e-15
    assert abs(f0["T"][2] - 1 / ROOT2) <= 1e-15


def test_residuals():
    helix = sc.triharmonic_helix(c2=4.0, branch=3)
    for s in (-2.0, 0.0, 1.5):
        assert max(abs(v) for v in sc.residual(helix, s)) <= 1e-9
        assert max(abs(v) for v in sc.residual_frenet(helix, s)) <= 1e-9
    # Second-order obstruction: norm 1/4.
    r2 = sc.residual(helix, 0.0, r=2)
    assert abs(math.hypot(*r2) - 0.25) <= 1e-9
    # Vertical geodesic: identically zero on the direct path.
    line = sc.vertical_line()
    assert max(abs(v) for v in sc.residual(line, 0.3)) == 0.0


def test_classification():
    out = sc.classify(samples=2000)
    assert len(out["roots"]) == 4
    assert out["residual_at_root"] <= 1e-10
    for root in out["roots"]:
        assert abs(abs(root["c1"]) - 1 / ROOT2) <= 1e-10
        assert abs(root["a"] - 0.5) <= 1e-10
        assert abs(abs(root["b"]) - 0.5) <= 1e-10


def test_verify_report():
    report = json.loads(sc.verify())
    assert report["all_pass"] is True
    assert len(report["roots"]) == 4
    assert all(check["pass"] for check in report["checks"])
    v1 = json.loads(sc.proposition_report("V1"))
    assert v1["all_pass"] is True
    assert v1["field"] == "V1"


def test_killing_axis():
    helix = sc.triharmonic_helix()
    for s in (-1.0, 0.0, 2.0):
        assert abs(sc.killing_length(helix, "V3", s) - ROOT2) <= 1e-12
        assert abs(sc.killing_angle(helix, "V3", s)) <= 1e-6
    line = sc.constant_z(beta=0.5, c=0.3)
    assert abs(sc.killing_length(line, "V1", 0.0) - math.exp(0.3)) <= 1e-12
    assert abs(sc.killing_angle(line, "V1", 0.0) - 0.5) <= 1e-12


def test_integration():
    out = sc.integrate_helix(kappa=0.5, tau=0.5, step=1e-2, s_max=1.0)
    assert len(out["s"]) == 101
    assert out["max_orthonormality_drift"] <= 1e-10
    helix = sc.triharmonic_helix()
    end = sc.frenet(helix, 1.0)["position"]
    got = out["positions"][-1]
    assert max(abs(a - b) for a, b in zip(got, end)) <= 1e-9


def test_json_round_trip():
    helix = sc.triharmonic_helix(c2=2.0, cx=0.5)
    text = helix.to_json()
    again = sc.CurveSpec.from_json(text)
    assert again.to_json() == text
    f1, f2 = sc.frenet(helix, 0.7), sc.frenet(again, 0.7)
    assert f1["position"] == f2["position"]


def test_errors_map_to_python():
    try:
        sc.classify(samples=10)
    except sc.SolCurvesError:
        pass
    else:
        raise AssertionError("expected SolCurvesError")
    try:
        sc.CurveSpec.from_json("{\"w\": 1}")
    except sc.SolCurvesError:
        pass
    else:
        raise AssertionError("expected SolCurvesError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
    print("smoke tests passed")
