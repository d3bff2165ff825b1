"""Chord and tangent constructions on strictly convex plane curves."""

from ._core import (
    ChordLawFit,
    ConicCoefficients,
    Curve,
    Error,
    FamilyDeviation,
    Figure,
    LimitEstimate,
    LocalGraph,
    Measures,
    OdeReport,
    PointCloud,
    RatioRow,
    RatioTable,
    Reconstruction,
    ScaledLimit,
    SmallHReport,
    Verdict,
    apex_for_chord,
    chord_law_fit,
    cli_run,
    default_heights,
    detect_parabola,
    figure,
    fit_local_model,
    interior_params,
    length_derivative_residual,
    limit_estimate,
    load_points,
    load_points_text,
    make_circle,
    make_convex_graph,
    make_ellipse,
    make_parabola,
    make_transformed,
    measures,
    ode_residuals,
    power_law_fit,
    ratio_profile,
    reconstruct,
    sector_area,
    small_h_laws,
)

__version__ = "0.1.0"

__all__ = [
    "ChordLawFit",
    "ConicCoefficients",
    "Curve",
    "Error",
    "FamilyDeviation",
    "Figure",
    "LimitEstimate",
    "LocalGraph",
    "Measures",
    "OdeReport",
    "PointCloud",
    "RatioRow",
    "RatioTable",
    "Reconstruction",
    "ScaledLimit",
    "SmallHReport",
    "Verdict",
    "apex_for_chord",
    "chord_law_fit",
    "cli_run",
    "default_heights",
    "detect_parabola",
    "figure",
    "fit_local_model",
    "interior_params",
    "length_derivative_residual",
    "limit_estimate",
    "load_points",
    "load_points_text",
    "make_circle",
    "make_convex_graph",
    "make_ellipse",
    "make_parabola",
    "make_transformed",
    "measures",
    "ode_residuals",
    "power_law_fit",
    "ratio_profile",
    "reconstruct",
    "sector_area",
    "small_h_laws",
]
