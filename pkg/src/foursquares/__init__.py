"""Restricted four-square representations n = x^2+y^2+z^2+w^2 with ax+by a square."""

from .solver import (
    CoefficientPair,
    Decomposition,
    SolveOutcome,
    solve,
    solve_constructive,
    validate_pair,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientPair",
    "Decomposition",
    "SolveOutcome",
    "solve",
    "solve_constructive",
    "validate_pair",
    "verify",
    "__version__",
]
