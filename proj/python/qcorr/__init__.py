"""Multi-party correlation measures from the state cumulant.

The heavy lifting lives in the compiled extension; this package re-exports
its operations and adds a few numpy-friendly helpers.
"""

from fractions import Fraction

import numpy as np

from ._core import (  # noqa: F401
    DomainError,
    ParseFailure,
    ResourceError,
    __version__,
    c_coefficient,
    canonical_state,
    classical_correlated_state,
    condition_harness,
    correlation_measure,
    cumulant,
    ghz_state,
    ghz_table,
    load_state_json,
    lui_mcf,
    mutual_entropy_3,
    partial_trace,
    pseudo_state,
    relative_entropy_total,
    stabilizer_beta,
    stabilizer_dense,
    stabilizer_measure,
    stabilizer_reduced_measure,
    stabilizer_spectrum,
    product_law_harness,
    total_correlation,
    trace_distance,
    von_neumann_entropy,
)

__all__ = [
    "DomainError",
    "ParseFailure",
    "ResourceError",
    "c_coefficient",
    "c_coefficient_fraction",
    "canonical_state",
    "classical_correlated_state",
    "condition_harness",
    "correlation_measure",
    "cumulant",
    "density_from_pure",
    "ghz_state",
    "ghz_table",
    "load_state_json",
    "lui_mcf",
    "mutual_entropy_3",
    "partial_trace",
    "pseudo_state",
    "relative_entropy_total",
    "stabilizer_beta",
    "stabilizer_dense",
    "stabilizer_measure",
    "stabilizer_reduced_measure",
    "stabilizer_spectrum",
    "product_law_harness",
    "total_correlation",
    "trace_distance",
    "von_neumann_entropy",
]


def density_from_pure(amplitudes):
    """Density matrix |psi><psi| of an amplitude vector."""
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    return np.outer(psi, psi.conj())


def c_coefficient_fraction(n):
    """The classical-cumulant coefficient as an exact Fraction."""
    return Fraction(c_coefficient(n))
