"""Composition ``f(g;n)``, compositional inverses and Lagrange inversion."""
from __future__ import annotations

import math
from fractions import Fraction

from .config import get_tolerance
from .errors import (
    NonPositiveDegree,
    NonPositiveLeading,
    OrientationMismatch,
    PrecisionExceeded,
    SeriesError,
)
from .calculus import derivative
from .power import pow
from .scalar import exponent
from .series import (
    NOETHERIAN,
    Series,
    add,
    coefficient_at,
    degree,
    invert,
    mul,
    scalar_mul,
    sub,
    truncate,
)

__all__ = [
    "compose",
    "associativity_defect",
    "comp_inverse",
    "lagrange_coefficient",
]


def _check_inner(g: Series) -> Fraction:
    if g.is_zero() or degree(g) <= 0:
        raise NonPositiveDegree(
            f"composition needs an inner series of positive degree, got {degree(g)}"
        )
    return degree(g)


def _tighter(f: Series, b1, b2):
    return min(b1, b2) if f.orientation is NOETHERIAN else max(b1, b2)


def compose(f: Series, g: Series, n: int = 0) -> Series:
    """``f(g;n) = sum_a c_a g^{a;n}`` for ``f = sum_a c_a x^a``.

    ``g`` must have positive degree in either orientation.  The result has
    degree ``deg f * deg g``.
    """
    if f.orientation is not g.orientation:
        raise OrientationMismatch("compose needs series of the same orientation")
    d = _check_inner(g)
    noeth = f.orientation is NOETHERIAN
    if f.is_zero():
        return f.like({}, f.bound * d)
    # Unseen terms of f start at f.bound; each power g^a with a != 0 keeps g's
    # relative precision, and g^0 = 1 is exact.
    bound = f.bound * d
    moving = [a for a, _ in f.terms if a != 0]
    if moving:
        a = moving[0] if noeth else moving[-1]
        bound = _tighter(f, bound, a * d + (g.bound - d))
    terms = f.terms if noeth else tuple(reversed(f.terms))
    acc = f.like({}, bound)
    for a, c in terms:
        if (noeth and a * d >= bound) or (not noeth and a * d <= bound):
            break
        if a == 0:
            acc = add(acc, f.like({Fraction(0): c}, bound))
        else:
            acc = add(acc, scalar_mul(c, truncate(pow(g, a, n), bound)))
    return acc


def associativity_defect(f: Series, g: Series, h: Series, m: int = 1) -> complex:
    """Constant ratio ``(f(g;m))(h;m) / f(g(h;m);m)``.

    Raises :class:`SeriesError` if the ratio is not a constant series.
    """
    left = compose(compose(f, g, m), h, m)
    right = compose(f, compose(g, h, m), m)
    ratio = mul(left, invert(right))
    if len(ratio.terms) != 1 or ratio.terms[0][0] != 0:
        raise SeriesError(f"compositions differ by a non-constant factor: {ratio}")
    return complex(ratio.terms[0][1])


def _positive_real(c, tol: float) -> bool:
    if isinstance(c, Series):
        return False
    c = complex(c)
    return c.real > tol and abs(c.imag) <= tol * max(1.0, abs(c))


def _leading_root(lead: complex, b: Fraction, n: int) -> complex:
    """A scalar ``c`` with ``c^{b;n} = 1/lead`` for positive real ``lead``."""
    # c = lead^(-1/b) e^{i theta} with b (theta + 2 pi n) a multiple of 2 pi.
    k = math.ceil(n * b)
    turns = Fraction(k) / b - n
    if not 0 <= turns < 1:
        raise SeriesError(f"no branch-{n} compositional inverse for degree {b}")
    theta = 2 * math.pi * float(turns)
    return complex(lead.real ** (-1 / float(b))) * complex(math.cos(theta), math.sin(theta))


MAX_NEWTON_STEPS = 200


def comp_inverse(f: Series, n: int = 0) -> Series:
    """A series ``g`` with ``f(g;n) = x``.

    ``f`` needs positive degree ``b`` and a positive real leading coefficient.
    The leading term ``c x^{1/b}`` of ``g`` solves ``lead * c^{b;n} = 1``;
    the rest comes from Newton steps ``g -= (f(g;n) - x) / f'(g;n)``, each of
    which at least doubles the number of correct terms.  The loop stops once
    every residual term that could still move a coefficient of ``g`` has
    vanished, so the returned window is certified by the last residual.
    """
    tol = get_tolerance()
    if f.is_zero() or degree(f) <= 0:
        raise NonPositiveDegree(f"comp_inverse needs positive degree, got {degree(f)}")
    b, lead = f.leading()
    if not _positive_real(lead, tol):
        raise NonPositiveLeading(f"leading coefficient {lead} is not a positive real")
    c0 = _leading_root(complex(lead), b, n)
    window = (f.bound - b + 1) / b
    x = f.like({Fraction(1): 1 + 0j}, f.bound / b)
    fprime = derivative(f)
    shift = 1 / b - 1
    g_terms = {1 / b: c0}
    previous = math.inf
    for _ in range(MAX_NEWTON_STEPS):
        g = f.like(dict(g_terms), window)
        residual = sub(compose(f, g, n), x)
        # A residual term at e moves the coefficient of x^(e + 1/b - 1).
        live = {e: r for e, r in residual.terms if g.in_window(e + shift)}
        if not live:
            return g
        size = max(abs(r) for r in live.values())
        if size < tol and size >= previous:
            # Stuck at rounding level.
            return g
        previous = size
        delta = mul(residual.like(live), invert(compose(fprime, g, n)))
        for a, c in delta.terms:
            if g.in_window(a):
                g_terms[a] = g_terms.get(a, 0j) - c
    raise PrecisionExceeded("compositional inverse did not converge")


def lagrange_coefficient(f: Series, a, b) -> complex:
    """``[x^a] (f^{(-1;0)})^{b;0}`` computed as ``(b/a) [x^{a-b}] (x/f)^{a;0}``.

    ``f`` must be a delta series with a positive real leading coefficient.
    """
    a = exponent(a)
    b = exponent(b)
    if a == 0:
        raise ValueError("lagrange_coefficient needs a nonzero exponent a")
    if f.is_zero() or degree(f) != 1:
        raise NonPositiveDegree(f"lagrange_coefficient needs a delta series, got degree {degree(f)}")
    if not _positive_real(f.leading_coefficient, get_tolerance()):
        raise NonPositiveLeading("leading coefficient is not a positive real")
    inv = invert(f)
    ratio = inv.like({e + 1: c for e, c in inv.terms}, inv.bound + 1)
    expansion = pow(ratio, a, 0)
    return complex(b / a) * complex(coefficient_at(expansion, a - b))
