"""Curves in Sol space: Frenet data, tension residuals, and the
proper-triharmonic-helix classification, backed by the C++ core."""

from ._solcurves import (
    CurveSpec,
    SolCurvesError,
    classify,
    constant_z,
    frenet,
    integrate_helix,
    killing_angle,
    killing_length,
    proposition_report,
    residual,
    residual_frenet,
    speed_deviation,
    triharmonic_helix,
    verify,
    vertical_line,
)

__all__ = [
    "CurveSpec",
    "SolCurvesError",
    "classify",
    "constant_z",
    "frenet",
    "integrate_helix",
    "killing_angle",
    "killing_length",
    "proposition_report",
    "residual",
    "residual_frenet",
    "speed_deviation",
    "triharmonic_helix",
    "verify",
    "vertical_line",
]
