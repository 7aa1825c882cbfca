"""Accuracy and tolerance policies used across the engine."""

from dataclasses import dataclass


@dataclass(frozen=True)
class AccuracyPolicy:
    """Controls truncation and step sizes for series and derivatives.

    rel_tol / abs_tol bound the acceptable truncation error, max_terms
    caps series length, and fd_step is the central-difference step used
    for parameter derivatives (zeta', zeta'', Stieltjes gamma_1, Phi').
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-15
    max_terms: int = 200_000
    fd_step: float = 1e-3

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError("rel_tol must be > 0")
        if self.abs_tol < 0:
            raise ValueError("abs_tol must be >= 0")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not self.fd_step > 0:
            raise ValueError("fd_step must be > 0")


DEFAULT_POLICY = AccuracyPolicy()


@dataclass(frozen=True)
class TolerancePolicy:
    """Comparison tolerances used by the identity verifier."""

    atol: float = 1e-9
    rtol: float = 1e-8
    derivative_rtol: float = 1e-6

    def __post_init__(self):
        for name in ("atol", "rtol", "derivative_rtol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")


DEFAULT_TOLERANCE = TolerancePolicy()
