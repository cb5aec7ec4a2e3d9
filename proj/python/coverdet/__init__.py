"""Determinant-line and characteristic-class checks for branched coverings.

The heavy lifting happens in the C++ extension; this package re-exports the
bound operations.
"""

from ._coverdet import (
    bernoulli,
    check_smoothness,
    chi_cover,
    compute_theorem,
    delta_matrix,
    fs_log_norm_integral,
    lefschetz_consistent,
    metric_rescale_probe,
    r_coefficients,
    riemann_hurwitz_genus,
    run_check_suite,
    section_identities,
    zeta_negative,
    zeta_prime_negative,
)

__all__ = [
    "bernoulli",
    "check_smoothness",
    "chi_cover",
    "compute_theorem",
    "delta_matrix",
    "fs_log_norm_integral",
    "lefschetz_consistent",
    "metric_rescale_probe",
    "r_coefficients",
    "riemann_hurwitz_genus",
    "run_check_suite",
    "section_identities",
    "zeta_negative",
    "zeta_prime_negative",
]
