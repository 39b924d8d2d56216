"""Numerical laboratory for the quasilinear equation

    div(|grad u|^(p-2) grad u) + a * u^sigma = 0

on model spaces (Euclidean, or hyperbolic realizing Ric = -(n-1)K):
closed-form regime thresholds, a flux-form radial shooting solver,
inequality checkers for the gradient/Harnack estimates and their proof
machinery, and existence sweeps over (p, sigma) grids.
"""

from .errors import ParameterError, RegimeError, SolutionFormatError
from .geometry import (
    ModelSpace,
    ball_volume,
    radial_L_coefficient,
    radial_p_laplacian,
    unit_sphere_area,
    warp,
    warp_log_derivative,
)
from .solver import (
    LogSolution,
    RadialSolution,
    ShootingConfig,
    Termination,
    first_zero,
    flux_residual,
    pde_residual,
    read_solution_csv,
    solve_radial,
    to_log_solution,
    write_solution_csv,
)
from .sweep import (
    ExistenceCell,
    RegionComparison,
    SweepGrid,
    SweepTable,
    classify_existence,
    compare_with_theory,
    sweep,
    write_sweep_csv,
)
from .thresholds import (
    EquationParams,
    MoserExponents,
    RegimeReport,
    alpha,
    beta,
    classify_regime,
    compare_thresholds,
    discriminant,
    moser_exponents,
    sigma1,
    sigma2,
    sigma_midpoint,
    thm2_condition,
    thm2_threshold,
)
from .verify import (
    BochnerReport,
    CaccioppoliConfig,
    CaccioppoliReport,
    GradientCheckReport,
    HarnackReport,
    ScaleInvarianceReport,
    SobolevRatioReport,
    caccioppoli_b_min,
    check_bochner_lemma,
    check_bochner_thm2,
    check_caccioppoli,
    check_gradient_estimate,
    check_gradient_scale_invariance,
    check_harnack,
    cutoff_eta,
    measure_sobolev_ratio,
)

__version__ = "0.1.0"

__all__ = [
    "ParameterError",
    "RegimeError",
    "SolutionFormatError",
    "ModelSpace",
    "warp",
    "warp_log_derivative",
    "unit_sphere_area",
    "ball_volume",
    "radial_p_laplacian",
    "radial_L_coefficient",
    "EquationParams",
    "RegimeReport",
    "MoserExponents",
    "alpha",
    "discriminant",
    "sigma1",
    "sigma2",
    "sigma_midpoint",
    "beta",
    "thm2_threshold",
    "thm2_condition",
    "compare_thresholds",
    "classify_regime",
    "moser_exponents",
    "ShootingConfig",
    "Termination",
    "RadialSolution",
    "LogSolution",
    "solve_radial",
    "pde_residual",
    "to_log_solution",
    "first_zero",
    "flux_residual",
    "write_solution_csv",
    "read_solution_csv",
    "GradientCheckReport",
    "HarnackReport",
    "BochnerReport",
    "CaccioppoliConfig",
    "CaccioppoliReport",
    "SobolevRatioReport",
    "ScaleInvarianceReport",
    "caccioppoli_b_min",
    "check_gradient_estimate",
    "check_harnack",
    "check_bochner_lemma",
    "check_bochner_thm2",
    "cutoff_eta",
    "check_caccioppoli",
    "measure_sobolev_ratio",
    "check_gradient_scale_invariance",
    "SweepGrid",
    "ExistenceCell",
    "SweepTable",
    "RegionComparison",
    "classify_existence",
    "sweep",
    "compare_with_theory",
    "write_sweep_csv",
]
