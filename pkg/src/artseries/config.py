"""Library-wide numeric settings.

The zero/equality tolerance is held in a context variable so that threads and
async tasks can override it locally without affecting each other.
"""
from __future__ import annotations

import contextlib
import contextvars
from fractions import Fraction

DEFAULT_TOLERANCE = 1e-9
DEFAULT_WINDOW = Fraction(12)
# Coefficients are dropped only far below the comparison tolerance, otherwise
# the pruned mass alone could push an exact identity past tolerance.
PRUNE_FACTOR = 1e-3

_tolerance: contextvars.ContextVar[float] = contextvars.ContextVar(
    "artseries_tolerance", default=DEFAULT_TOLERANCE
)


def get_tolerance() -> float:
    return _tolerance.get()


def get_prune_threshold() -> float:
    """Magnitude at or below which a coefficient is treated as zero."""
    return _tolerance.get() * PRUNE_FACTOR


def set_tolerance(tol: float) -> None:
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    _tolerance.set(float(tol))


@contextlib.contextmanager
def tolerance(tol: float):
    """Temporarily use ``tol`` as the zero tolerance.

    >>> with tolerance(1e-12):
    ...     get_tolerance()
    1e-12
    """
    if not tol > 0:
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    token = _tolerance.set(float(tol))
    try:
        yield
    finally:
        _tolerance.reset(token)
