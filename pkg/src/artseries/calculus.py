"""The formal derivative ``D x^a = a x^(a-1)``."""
from __future__ import annotations

from .series import Series


def derivative(f: Series) -> Series:
    """Termwise derivative; the window bound moves down by one.

    No term of the result has exponent -1, since that would need ``a = 0``.
    """
    return f.like({a - 1: c * float(a) for a, c in f.terms if a != 0}, f.bound - 1)


D = derivative
