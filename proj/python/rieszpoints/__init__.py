"""Riesz energy minimizers on the sphere: energies, spectra, discrepancies."""

from ._core import (
    cap_area,
    cap_discrepancy,
    cap_multiplier,
    cap_multipliers,
    continuous_energy,
    discrete_energy,
    energy_gap,
    energy_gradient,
    fit_exponent,
    gegenbauer,
    harmonic_dimension,
    hyp3f2_terminating,
    mean_value_check,
    minimize_energy,
    pair_cap_energy,
    read_config,
    riesz_eigenvalue,
    riesz_eigenvalue_quadrature,
    sample_uniform,
    separation,
    set_workers,
    smoothing_defect,
    sobolev_discrepancy,
    stolarsky_decomposition_check,
    verify,
    write_config,
)

__all__ = [
    "cap_area",
    "cap_discrepancy",
    "cap_multiplier",
    "cap_multipliers",
    "continuous_energy",
    "discrete_energy",
    "energy_gap",
    "energy_gradient",
    "fit_exponent",
    "gegenbauer",
    "harmonic_dimension",
    "hyp3f2_terminating",
    "mean_value_check",
    "minimize_energy",
    "pair_cap_energy",
    "read_config",
    "riesz_eigenvalue",
    "riesz_eigenvalue_quadrature",
    "sample_uniform",
    "separation",
    "set_workers",
    "smoothing_defect",
    "sobolev_discrepancy",
    "stolarsky_decomposition_check",
    "verify",
    "write_config",
]
