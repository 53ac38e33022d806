"""Exact exponents, complex coefficients and branch-indexed scalar powers.

Exponents are :class:`fractions.Fraction` values. Coefficients are Python
``complex`` numbers compared against the library tolerance.

A nonzero complex number ``z`` is written ``a * exp(i*theta)`` with ``a > 0``
and ``0 <= theta < 2*pi``; its ``n``-th value to the power ``t`` is
``a**t * exp(i*t*(theta + 2*n*pi))``.
"""
from __future__ import annotations

import cmath
import math
from collections import Counter
from fractions import Fraction
from numbers import Complex, Rational
from typing import Mapping, NamedTuple, Union

from .config import get_tolerance
from .errors import InvalidScalar, UndefinedPower

TWO_PI = 2.0 * math.pi

Exponent = Fraction
ExponentLike = Union[Fraction, int, str]


def exponent(value: ExponentLike) -> Fraction:
    """Coerce ``value`` to an exact exponent.

    Floats are rejected: a binary float silently turns ``0.1`` into a
    55-bit fraction, and exponent exactness matters for collision detection.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not exponents")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"exponents must be exact rationals, got {type(value).__name__}")


class Polar(NamedTuple):
    modulus: float
    argument: float


def _check_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidScalar(f"non-finite scalar {z!r}")
    return z


def is_zero(z: complex, tol: float | None = None) -> bool:
    return abs(z) <= (get_tolerance() if tol is None else tol)


def normalize_argument(theta: float, tol: float | None = None) -> float:
    """Reduce an angle into ``[0, 2*pi)``, snapping values within ``tol`` of 2*pi to 0."""
    tol = get_tolerance() if tol is None else tol
    theta = math.fmod(theta, TWO_PI)
    if theta < 0:
        theta += TWO_PI
    if theta >= TWO_PI - tol:
        theta = 0.0
    return theta


def to_polar(z: complex) -> Polar:
    """Modulus and argument of ``z``; zero maps to ``(0, 0)``.

    >>> to_polar(-4)
    Polar(modulus=4.0, argument=3.141592653589793)
    """
    z = _check_finite(z)
    if is_zero(z):
        return Polar(0.0, 0.0)
    return Polar(abs(z), normalize_argument(math.atan2(z.imag, z.real)))


def arg(z: complex) -> float:
    return to_polar(z).argument


def cpow(z: complex, t: ExponentLike, n: int = 0) -> complex:
    """The ``n``-th value of ``z`` to the power ``t``.

    >>> abs(cpow(-4, Fraction(1, 2), 0) - 2j) < 1e-12
    True
    >>> abs(cpow(-4, Fraction(1, 2), 1) + 2j) < 1e-12
    True
    """
    t = exponent(t)
    n = int(n)
    modulus, theta = to_polar(z)
    if modulus == 0.0:
        if t > 0:
            return 0j
        raise UndefinedPower(f"0 to the nonpositive power {t}")
    if t == 0:
        return 1 + 0j
    if t == 1:
        return complex(z)
    tf = float(t)
    return (modulus**tf) * cmath.exp(1j * tf * (theta + TWO_PI * n))


def product_branch(z1: complex, z2: complex, n: int, m: int) -> int:
    """Branch ``k`` with ``(z1*z2)^{t;k} = z1^{t;n} * z2^{t;m}`` for every ``t``."""
    if is_zero(_check_finite(z1)) or is_zero(_check_finite(z2)):
        raise InvalidScalar("product_branch needs nonzero arguments")
    return branch_for_argument_sum(arg(z1) + arg(z2), n, m)


def branch_for_argument_sum(theta_sum: float, n: int, m: int) -> int:
    # A sum within tol of 2*pi wraps the product argument to 0, so it counts as >= 2*pi.
    if theta_sum >= TWO_PI - get_tolerance():
        return n + m + 1
    return n + m


def iterate_branch(z: complex, s: ExponentLike, n: int) -> int:
    """Branch ``j`` with ``z^{s*t;n} = (z^{s;n})^{t;j}`` for every ``t``.

    ``z^{s;n}`` has argument ``s*(theta + 2*n*pi)`` reduced mod 2*pi, so the
    branch is ``floor(s*(theta + 2*n*pi) / 2*pi)``.  For ``n = 0`` this is
    ``floor(s*theta / 2*pi)``.
    """
    z = _check_finite(z)
    if is_zero(z):
        raise InvalidScalar("iterate_branch needs a nonzero argument")
    s = exponent(s)
    turns = float(s) * arg(z) / TWO_PI + s * n
    return _floor_with_tolerance(turns)


def _floor_with_tolerance(value) -> int:
    # A value a hair below an integer K yields an argument within tol of 2*pi,
    # which to_polar wraps to 0; floor must then report K as well.
    k = math.floor(value)
    if value - k >= 1 - get_tolerance():
        k += 1
    return int(k)


def falling_factorial(t, m: int):
    """``t (t-1) ... (t-m+1)``; exact for rational ``t``.

    >>> falling_factorial(Fraction(1, 2), 2)
    Fraction(-1, 4)
    """
    if m < 0:
        raise ValueError("falling_factorial needs m >= 0")
    if isinstance(t, (int, Fraction)) and not isinstance(t, bool):
        result = Fraction(1)
        t = Fraction(t)
    elif isinstance(t, Complex):
        result = 1 + 0j
    else:
        raise TypeError(f"unsupported falling_factorial argument {t!r}")
    for j in range(m):
        result *= t - j
    return result


def binomial(t, k: int):
    """Generalized binomial coefficient ``falling_factorial(t, k) / k!``."""
    return falling_factorial(t, k) / math.factorial(k)


def multiset_binomial(t, multiset: Mapping) -> Union[Fraction, complex]:
    """Multinomial coefficient of ``t`` over a finite multiset.

    ``multiset`` maps elements to positive multiplicities.

    >>> multiset_binomial(Fraction(1, 2), {"a": 2})
    Fraction(-1, 8)
    """
    counts = Counter(multiset)
    if any(v < 0 for v in counts.values()):
        raise ValueError("multiplicities must be nonnegative")
    size = sum(counts.values())
    denominator = 1
    for v in counts.values():
        denominator *= math.factorial(v)
    return falling_factorial(t, size) / denominator
