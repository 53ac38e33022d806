"""Branch-indexed real powers of series.

``pow(g, t, n)`` factors out the leading term ``c x^d`` and expands
``(1 + u)^t``, so the branch choice only enters through the scalar
``c^{t;n}``.  The expansion uses the first-order recurrence satisfied by
``(1 + u)^t`` rather than summing binomial multiples of ``u^k``.
:func:`pow_multiset_oracle` evaluates the defining sum over multisets of
exponents directly and is kept as an independent check.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import UndefinedArgument, UndefinedPower
from .scalar import (
    arg as scalar_arg,
    branch_for_argument_sum,
    cpow,
    exponent,
    iterate_branch,
    multiset_binomial,
)
from .series import ARTINIAN, Series, coeff_inverse, dualize, lattice_below

__all__ = [
    "arg_of",
    "pow",
    "pow_multiset_oracle",
    "pow_product_branch",
    "pow_iterate_branch",
]


def _scalar_leading(f: Series) -> complex:
    c = f.leading_coefficient
    while isinstance(c, Series):
        c = c.leading_coefficient
    return c


def arg_of(f: Series) -> float:
    """Argument of the leading coefficient, recursing into nested coefficients."""
    if f.is_zero():
        raise UndefinedArgument("the zero series has no argument")
    return scalar_arg(_scalar_leading(f))


def _coeff_pow(c, t: Fraction, n: int):
    if isinstance(c, Series):
        return pow(c, t, n)
    return cpow(c, t, n)


def _zero_power(g: Series, t: Fraction) -> Series:
    if t <= 0:
        raise UndefinedPower(f"the zero series to the nonpositive power {t}")
    # Every candidate for the unseen series has degree beyond the bound.
    return g.like({}, g.bound * t)


def _normalized_tail(g: Series):
    """Split ``g = c x^d (1 + u)``; returns ``(d, c, u)`` with ``u`` Noetherian."""
    d, c = g.leading()
    inv_c = coeff_inverse(c)
    tail = {e - d: coef * inv_c for e, coef in g.terms if e != d}
    u = g.like(tail, g.bound - d)
    return d, c, u


def pow(g: Series, t, n: int = 0) -> Series:
    """The ``n``-th branch of ``g`` to the rational power ``t``.

    The result has degree ``t * deg(g)`` and the same relative precision
    ``bound - degree`` as ``g``.

    >>> from artseries.series import make
    >>> str(pow(make("noetherian", [(0, 1), (1, 1)], 3), Fraction(1, 2)))
    '1 + 0.5*x - 0.125*x^2 + O(x^3)'
    """
    t = exponent(t)
    n = int(n)
    if g.orientation is ARTINIAN:
        return dualize(pow(dualize(g), t, n))
    if g.is_zero():
        return _zero_power(g, t)
    d, c, u = _normalized_tail(g)
    precision = u.bound
    total = {Fraction(0): 1 + 0j}
    if not u.is_zero() and t != 0:
        # P = (1 + u)^t satisfies x P' (1 + u) = t x u' P; comparing the
        # coefficients of x^e gives e p_e = sum_a ((t + 1) a - e) u_a p_{e-a}.
        tail = u.terms
        for e in lattice_below([a for a, _ in tail], precision):
            if e == 0:
                continue
            acc = None
            for a, v in tail:
                if a > e:
                    break
                prev = total.get(e - a)
                weight = (t + 1) * a - e
                if prev is None or weight == 0:
                    continue
                term = v * prev * complex(weight)
                acc = term if acc is None else acc + term
            if acc is not None:
                total[e] = acc * complex(1 / e)
    lead = _coeff_pow(c, t, n)
    shift = d * t
    return g.like({e + shift: v * lead for e, v in total.items()}, precision + shift)


def _multisets(steps, limit):
    """Yield ``(counts, total)`` for multisets over ``steps`` with sum ``< limit``."""

    def rec(i, total, counts):
        if i == len(steps):
            yield counts, total
            return
        step = steps[i]
        m = 0
        while total + m * step < limit:
            yield from rec(i + 1, total + m * step, counts + ((step, m),) if m else counts)
            m += 1

    yield from rec(0, Fraction(0), ())


def pow_multiset_oracle(g: Series, t, n: int = 0) -> Series:
    """Direct evaluation of the multiset sum defining ``g^{t;n}``.

    Cost grows exponentially with the support size; intended for supports of
    at most a handful of terms and shallow windows.
    """
    t = exponent(t)
    n = int(n)
    if g.orientation is ARTINIAN:
        return dualize(pow_multiset_oracle(dualize(g), t, n))
    if g.is_zero():
        return _zero_power(g, t)
    d, c, u = _normalized_tail(g)
    ratios = dict(u.terms)
    steps = sorted(ratios)
    table: dict = {}
    for counts, total in _multisets(steps, u.bound):
        coef = complex(multiset_binomial(t, {s: m for s, m in counts}))
        if coef == 0:
            continue
        term = coef
        for s, m in counts:
            for _ in range(m):
                term = ratios[s] * term
        table[total] = table[total] + term if total in table else term
    lead = _coeff_pow(c, t, n)
    shift = d * t
    return g.like({e + shift: v * lead for e, v in table.items()}, u.bound + shift)


def pow_product_branch(f: Series, g: Series, j: int, k: int) -> int:
    """Branch ``n`` with ``(f g)^{t;n} = f^{t;j} g^{t;k}``."""
    return branch_for_argument_sum(arg_of(f) + arg_of(g), j, k)


def pow_iterate_branch(f: Series, s, n: int) -> int:
    """Offset ``k`` with ``f^{s t;n} = (f^{s;n})^{t;n+k}`` for every ``t``.

    For ``n = 0`` this is ``floor(s * arg f / 2 pi)``.
    """
    if f.is_zero():
        raise UndefinedArgument("the zero series has no argument")
    return iterate_branch(_scalar_leading(f), s, n) - n


def branch_quotient(g: Series, t, n: int, m: int) -> complex:
    """The unit-modulus constant ``g^{t;n} / g^{t;m}``."""
    lead = _scalar_leading(g)
    return cpow(lead, t, n) / cpow(lead, t, m)

