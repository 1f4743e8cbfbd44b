"""Entanglement entropy of translation-invariant nonlocal lattice fermions."""

from ._core import (
    NlfConfigError,
    NlfNumericalError,
    __version__,
    crossover,
    dispersion,
    entropy,
    entropy_from_correlations,
    entropy_sweep,
    fit_curve,
    fit_metric,
    geodesic_length,
    holographic_entropy,
    random_toeplitz,
    verify,
)

__all__ = [
    "NlfConfigError",
    "NlfNumericalError",
    "__version__",
    "crossover",
    "dispersion",
    "entropy",
    "entropy_from_correlations",
    "entropy_sweep",
    "fit_curve",
    "fit_metric",
    "geodesic_length",
    "holographic_entropy",
    "random_toeplitz",
    "verify",
]
