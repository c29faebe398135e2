"""Fractional Laplacian of radial profiles and supersolution certification."""

from _fraclap import (  # noqa: F401
    Annulus,
    Boundaries,
    Certificate,
    FracLapResult,
    FraclapError,
    ProblemParams,
    RadialProfile,
    RecursionTrace,
    Tolerance,
    __version__,
    boundaries,
    Threshold,
    certify_subsolution_homogeneous,
    certify_supersolution,
    check_exponent_claim,
    classify,
    critical_p,
    curve_a,
    curve_b,
    estimate_R0_threshold,
    estimate_lambda0,
    eval_power_exact,
    eval_radial,
    eval_radial_direct,
    fit_decay_exponent,
    gamma_sigma,
    iterate_doubling,
    min_annulus,
    normalization_constant,
    q1_threshold,
    q2_threshold,
    residual,
    search_amplitude,
    solve_pointwise,
    validate_params,
)
