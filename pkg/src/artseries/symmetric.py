"""Symmetric series in finitely many variables over real partitions.

A :class:`SymSeries` is a finite combination of monomial symmetric series
``m_beta`` together with a degree cutoff: every partition of weight below the
cutoff is exact.  Products are computed on the flat monomial expansion and
collected back into the monomial basis.

Real powers of the generators ``e_k``, ``h_k`` and ``p_k`` go through the
nested multivariate representation (variables ``x1 > x2 > ... > xN``, each a
Noetherian series whose coefficients are series in the later variables).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .config import get_prune_threshold, get_tolerance
from .errors import (
    DivisionByZero,
    InvalidPartition,
    PrecisionExceeded,
    TooFewVariables,
    UnsupportedBasis,
    VariableMismatch,
)
from .power import pow as series_pow
from .scalar import exponent
from .series import NOETHERIAN, Series, mul

FAMILIES = ("e", "h", "p")


# -- partitions -------------------------------------------------------------


def partition(parts: Iterable) -> tuple:
    """Validate a real partition; zero parts are dropped.

    >>> partition(["3/2", "1/2", 0])
    (Fraction(3, 2), Fraction(1, 2))
    """
    values = tuple(exponent(p) for p in parts)
    if any(p < 0 for p in values):
        raise InvalidPartition(f"negative part in {values}")
    if any(a < b for a, b in zip(values, values[1:])):
        raise InvalidPartition(f"parts of {values} are not nonincreasing")
    return tuple(p for p in values if p != 0)


def weight(beta: Sequence) -> Fraction:
    return sum(beta, Fraction(0))


def is_integral_partition(beta: Sequence) -> bool:
    return all(Fraction(p).denominator == 1 for p in beta)


def integer_partitions(n: int, max_length: int | None = None, max_part: int | None = None):
    """Integer partitions of ``n`` in decreasing lexicographic order."""
    max_part = n if max_part is None else min(max_part, n)

    def rec(remaining, largest, length):
        if remaining == 0:
            yield ()
            return
        if max_length is not None and length >= max_length:
            return
        for part in range(min(largest, remaining), 0, -1):
            for rest in rec(remaining - part, part, length + 1):
                yield (Fraction(part),) + rest

    yield from rec(n, max_part, 0)


def lex_greater(a: Sequence, b: Sequence) -> bool:
    """Lexicographic comparison of partitions padded with zeros."""
    size = max(len(a), len(b))
    pa = tuple(a) + (0,) * (size - len(a))
    pb = tuple(b) + (0,) * (size - len(b))
    return pa > pb


# -- the series type ----------------------------------------------------------


@dataclass(frozen=True)
class SymSeries:
    """``sum_beta c_beta m_beta(x_1..x_N)``, exact for weights below ``cutoff``."""

    nvars: int
    coeffs: tuple
    cutoff: Fraction

    @classmethod
    def build(cls, nvars: int, coeffs: Mapping, cutoff) -> "SymSeries":
        cutoff = exponent(cutoff)
        tol = get_prune_threshold()
        kept = []
        for beta, c in coeffs.items():
            beta = partition(beta)
            if len(beta) > nvars:
                raise TooFewVariables(f"partition {beta} needs more than {nvars} variables")
            if weight(beta) >= cutoff or abs(c) <= tol:
                continue
            kept.append((beta, complex(c)))
        kept.sort(key=lambda item: (weight(item[0]), tuple(-p for p in item[0])))
        return cls(int(nvars), tuple(kept), cutoff)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def coefficient(self, beta) -> complex:
        return self.as_dict().get(partition(beta), 0j)

    def is_zero(self) -> bool:
        return not self.coeffs

    def weights(self) -> set:
        return {weight(beta) for beta, _ in self.coeffs}

    def homogeneous_part(self, w) -> "SymSeries":
        w = exponent(w)
        return SymSeries.build(
            self.nvars, {b: c for b, c in self.coeffs if weight(b) == w}, self.cutoff
        )

    def _same_space(self, other: "SymSeries") -> None:
        if self.nvars != other.nvars:
            raise VariableMismatch(f"{self.nvars} versus {other.nvars} variables")

    def __add__(self, other):
        if isinstance(other, SymSeries):
            self._same_space(other)
            table = self.as_dict()
            for b, c in other.coeffs:
                table[b] = table.get(b, 0j) + c
            return SymSeries.build(self.nvars, table, min(self.cutoff, other.cutoff))
        if isinstance(other, (int, float, complex, Fraction)):
            return self + constant(other, self.nvars, self.cutoff)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return SymSeries.build(self.nvars, {b: -c for b, c in self.coeffs}, self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymSeries):
            return sym_mul(self, other)
        if isinstance(other, (int, float, complex, Fraction)):
            z = complex(other)
            return SymSeries.build(self.nvars, {b: c * z for b, c in self.coeffs}, self.cutoff)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        return format_sym(self)


def constant(c, nvars: int, cutoff) -> SymSeries:
    return SymSeries.build(nvars, {(): c}, cutoff)


def monomial(beta, nvars: int, cutoff, c=1) -> SymSeries:
    """``c * m_beta`` as a :class:`SymSeries`."""
    beta = partition(beta)
    if len(beta) > nvars:
        raise TooFewVariables(f"partition {beta} needs more than {nvars} variables")
    return SymSeries.build(nvars, {beta: c}, cutoff)


def sym_approx_eq(f: SymSeries, g: SymSeries, tol: float | None = None) -> bool:
    """Coefficient comparison on weights below both cutoffs."""
    tol = get_tolerance() if tol is None else tol
    if f.nvars != g.nvars:
        return False
    cutoff = min(f.cutoff, g.cutoff)
    a, b = f.as_dict(), g.as_dict()
    return all(
        abs(a.get(beta, 0j) - b.get(beta, 0j)) <= tol
        for beta in set(a) | set(b)
        if weight(beta) < cutoff
    )


def format_sym(f: SymSeries, digits: int = 12) -> str:
    from .series import format_number

    pieces = []
    for beta, c in f.coeffs:
        label = "m[" + ",".join(str(p) for p in beta) + "]"
        coef = format_number(c, digits)
        if coef == "1":
            pieces.append(label)
        elif coef == "-1":
            pieces.append("-" + label)
        else:
            pieces.append(f"{coef}*{label}")
    pieces.append(f"O(deg {f.cutoff})")
    return " + ".join(pieces).replace("+ -", "- ")


# -- monomial expansion -------------------------------------------------------


def monomial_terms(beta, nvars: int) -> list:
    """Distinct permutations of ``beta`` padded with zeros to ``nvars`` slots."""
    beta = partition(beta)
    if len(beta) > nvars:
        raise TooFewVariables(f"partition {beta} needs more than {nvars} variables")
    padded = beta + (Fraction(0),) * (nvars - len(beta))
    return sorted(set(itertools.permutations(padded)), reverse=True)


def variables(nvars: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, nvars + 1))


def nested_from_flat(flat: Mapping, nvars: int, window) -> Series:
    """Build the nested series ``x1 > x2 > ... > xN`` from ``{exponent tuple: coeff}``.

    Every level gets the same window bound.
    """
    names = variables(nvars)
    window = exponent(window)

    def build(level, items):
        var, inner = names[level], names[level + 1 :]
        groups: dict = {}
        for key, c in items:
            groups.setdefault(key[level], []).append((key, c))
        if level == nvars - 1:
            table = {}
            for a, group in groups.items():
                table[a] = sum((complex(c) for _, c in group), 0j)
        else:
            table = {a: build(level + 1, group) for a, group in groups.items()}
        return Series(NOETHERIAN, table, window, var, inner)

    return build(0, list(flat.items()))


def flatten(nested: Series) -> dict:
    """``{exponent tuple: complex}`` for every stored term of a nested series."""
    out: dict = {}

    def walk(s, prefix):
        for a, c in s.terms:
            if isinstance(c, Series):
                walk(c, prefix + (a,))
            else:
                out[prefix + (a,)] = complex(c)

    walk(nested, ())
    return out


def monomial_expand(beta, nvars: int, window=None) -> Series:
    """``m_beta(x1..xN)`` as a nested series.

    >>> flatten(monomial_expand((1,), 2, 3)) == {(1, 0): 1, (0, 1): 1}
    True
    """
    beta = partition(beta)
    if window is None:
        window = weight(beta) + 1
    return nested_from_flat({key: 1 for key in monomial_terms(beta, nvars)}, nvars, window)


def _flat(f: SymSeries) -> dict:
    out: dict = {}
    for beta, c in f.coeffs:
        for key in monomial_terms(beta, f.nvars):
            out[key] = out.get(key, 0j) + c
    return out


def _collect(flat: Mapping, nvars: int, cutoff) -> SymSeries:
    table = {}
    for key, c in flat.items():
        if list(key) == sorted(key, reverse=True) and sum(key) < cutoff:
            table[tuple(p for p in key if p != 0)] = c
    return SymSeries.build(nvars, table, cutoff)


def sym_mul(f: SymSeries, g: SymSeries) -> SymSeries:
    """Product through the monomial expansion; the cutoff is the smaller one."""
    f._same_space(g)
    cutoff = min(f.cutoff, g.cutoff)
    a, b = _flat(f), _flat(g)
    out: dict = {}
    for ka, ca in a.items():
        wa = sum(ka)
        for kb, cb in b.items():
            if wa + sum(kb) >= cutoff:
                continue
            key = tuple(x + y for x, y in zip(ka, kb))
            out[key] = out.get(key, 0j) + ca * cb
    return _collect(out, f.nvars, cutoff)


def sym_invert(f: SymSeries) -> SymSeries:
    """Inverse of a series with nonzero constant term, as a geometric series."""
    c = f.coefficient(())
    if abs(c) <= get_tolerance():
        raise DivisionByZero("a symmetric series is invertible only with nonzero constant term")
    u = f * (1 / c) - constant(1, f.nvars, f.cutoff)
    result = constant(1, f.nvars, f.cutoff)
    if u.is_zero():
        return result * (1 / c)
    step = min(u.weights())
    term = constant(1, f.nvars, f.cutoff)
    k = 1
    while k * step < f.cutoff:
        term = sym_mul(term, -u)
        result = result + term
        k += 1
    return result * (1 / c)


# -- generators -------------------------------------------------------------


def elementary(n: int, nvars: int, cutoff) -> SymSeries:
    """``e_n = m_(1^n)``; zero when ``n`` exceeds the number of variables."""
    if n == 0:
        return constant(1, nvars, cutoff)
    if n > nvars:
        return SymSeries.build(nvars, {}, cutoff)
    return monomial((1,) * n, nvars, cutoff)


def complete(n: int, nvars: int, cutoff) -> SymSeries:
    """``h_n``: the sum of ``m_lambda`` over partitions of ``n`` with at most N parts."""
    if n == 0:
        return constant(1, nvars, cutoff)
    return SymSeries.build(
        nvars, {lam: 1 for lam in integer_partitions(n, max_length=nvars)}, cutoff
    )


def powersum(n: int, nvars: int, cutoff) -> SymSeries:
    """``p_n = m_(n)``."""
    if n == 0:
        return constant(nvars, nvars, cutoff)
    return monomial((n,), nvars, cutoff)


_GENERATORS = {"e": elementary, "h": complete, "p": powersum}


def generator(family: str, k: int, nvars: int, cutoff) -> SymSeries:
    if family not in _GENERATORS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return _GENERATORS[family](k, nvars, cutoff)


def to_nested(f: SymSeries, window=None) -> Series:
    return nested_from_flat(_flat(f), f.nvars, f.cutoff if window is None else window)


def exponent_differences(beta) -> tuple:
    """``beta_k - beta_{k+1}`` for ``k = 1..len(beta)``."""
    beta = partition(beta)
    padded = beta + (Fraction(0),)
    return tuple(padded[k] - padded[k + 1] for k in range(len(beta)))


def basis_power(family: str, exponents: Sequence, n: int, nvars: int, window) -> Series:
    """``prod_k g_k^{t_k;n}`` in the nested representation, ``g`` from ``family``.

    The generators are homogeneous polynomials, so they are stored exactly and
    every nesting level gets the same ``window``.
    """
    window = exponent(window)
    result = None
    for k, t in enumerate(exponents, start=1):
        t = exponent(t)
        if t == 0:
            continue
        g = to_nested(generator(family, k, nvars, k + 1), window)
        factor = series_pow(g, t, n)
        result = factor if result is None else mul(result, factor)
    if result is None:
        result = nested_from_flat({(Fraction(0),) * nvars: 1}, nvars, window)
    return result


def symmetry_diagnostic(nested: Series, nvars: int, cutoff) -> dict:
    """Report how far a nested series is from a nonnegative symmetric one.

    Only terms inside the exact region (nonnegative exponents, weight below
    ``cutoff``) are compared with their permuted partners.
    """
    cutoff = exponent(cutoff)
    flat = flatten(nested)
    negative = sum(1 for key in flat if any(a < 0 for a in key))
    asym = 0.0
    for key, c in flat.items():
        if any(a < 0 for a in key) or sum(key) >= cutoff:
            continue
        for perm in set(itertools.permutations(key)):
            asym = max(asym, abs(c - flat.get(perm, 0j)))
    return {"negative_exponent_terms": negative, "max_asymmetry": asym}


def _exact_below(nested: Series, cutoff: Fraction) -> bool:
    # Every term of weight < cutoff with nonnegative exponents must be exact.
    def walk(s, budget):
        if s.bound < budget:
            return False
        return all(
            walk(c, budget - a)
            for a, c in s.terms
            if isinstance(c, Series) and 0 <= a < budget
        )

    return walk(nested, cutoff)


def recollect(nested: Series, nvars: int, cutoff) -> SymSeries:
    """Collect a nested symmetric series into the monomial basis."""
    cutoff = exponent(cutoff)
    if not _exact_below(nested, cutoff):
        raise PrecisionExceeded(f"the nested expansion is not exact below weight {cutoff}")
    diag = symmetry_diagnostic(nested, nvars, cutoff)
    if diag["negative_exponent_terms"]:
        raise UnsupportedBasis(
            "the expansion has terms with negative exponents and is not a "
            f"combination of monomial symmetric series ({diag})"
        )
    if diag["max_asymmetry"] > get_tolerance():
        raise UnsupportedBasis(f"the expansion is not symmetric ({diag})")
    flat = {k: c for k, c in flatten(nested).items() if sum(k) < cutoff}
    return _collect(flat, nvars, cutoff)


MAX_WINDOW_FACTOR = 4


def basis_product(family: str, beta, n: int = 0, nvars: int = 3, cutoff=None) -> SymSeries:
    """``e_beta``, ``h_beta`` or ``p_beta``: ``prod_k g_k^{(beta_k - beta_{k+1});n}``.

    For integer ``beta`` this is the classical product indexed by the
    conjugate partition.  Real exponents are supported whenever the nested
    expansion is a nonnegative symmetric series (for instance powers of
    ``e_N``); otherwise :class:`UnsupportedBasis` is raised.

    The per-variable window starts at the cutoff and grows until every
    weight below the cutoff is exact.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    beta = partition(beta)
    if len(beta) > nvars:
        raise TooFewVariables(f"partition {beta} needs more than {nvars} variables")
    cutoff = weight(beta) + 1 if cutoff is None else exponent(cutoff)
    diffs = exponent_differences(beta)
    window = cutoff
    while True:
        nested = basis_power(family, diffs, n, nvars, window)
        if _exact_below(nested, cutoff) or window >= MAX_WINDOW_FACTOR * cutoff:
            return recollect(nested, nvars, cutoff)
        window += max(cutoff / 2, Fraction(1))


def triangularity_check(family: str, beta, nvars: int | None = None, cutoff=None) -> bool:
    """True iff ``basis_product(family, beta) = m_beta + sum_{gamma later} a m_gamma``.

    "Later" is with respect to reverse lexicographic order, i.e. ``gamma`` is
    lexicographically smaller than ``beta``.
    """
    beta = partition(beta)
    if not is_integral_partition(beta):
        raise UnsupportedBasis("triangularity_check needs an integer partition")
    nvars = max(len(beta), 1) if nvars is None else nvars
    product = basis_product(family, beta, 0, nvars, cutoff)
    tol = get_tolerance()
    if abs(product.coefficient(beta) - 1) > tol:
        return False
    return all(
        gamma == beta or not lex_greater(gamma, beta) for gamma, _ in product.coeffs
    )


# -- the omega involution ---------------------------------------------------
#
# omega does not descend to N variables once the weight exceeds N (e_n = 0 but
# h_n != 0 for n > N).  A series is lifted by reading its monomial
# coefficients in max(N, weight) variables, where the power sums of each
# weight form a basis, and the image is projected back to N variables.


@functools.lru_cache(maxsize=None)
def _power_sum_matrix(w: int):
    # Column lambda holds the monomial coefficients of p_lambda in w variables.
    parts = list(integer_partitions(w))
    matrix = np.zeros((len(parts), len(parts)), dtype=complex)
    for j, lam in enumerate(parts):
        prod = constant(1, w, w + 1)
        for part in lam:
            prod = sym_mul(prod, powersum(int(part), w, w + 1))
        for i, mu in enumerate(parts):
            matrix[i, j] = prod.coefficient(mu)
    return parts, matrix


def _integral_weights(f: SymSeries) -> list:
    for beta, _ in f.coeffs:
        if not is_integral_partition(beta):
            raise UnsupportedBasis(f"partition {beta} is not integral")
    return sorted(int(w) for w in f.weights())


def to_power_sum_basis(f: SymSeries) -> dict:
    """Coefficients on products ``p_lambda`` of the lift of ``f``.

    The lift has the same monomial coefficients as ``f`` and zero
    coefficients on partitions longer than ``f.nvars``.
    """
    out = {}
    table = f.as_dict()
    for w in _integral_weights(f):
        if w == 0:
            out[()] = table[()]
            continue
        parts, matrix = _power_sum_matrix(w)
        rhs = np.array([table.get(mu, 0j) for mu in parts], dtype=complex)
        for lam, v in zip(parts, np.linalg.solve(matrix, rhs)):
            if abs(v) > get_prune_threshold():
                out[lam] = complex(v)
    return out


def from_power_sum_basis(coeffs: Mapping, nvars: int, cutoff) -> SymSeries:
    """``sum c_lambda p_lambda`` projected to ``nvars`` variables."""
    table: dict = {}
    for lam, c in coeffs.items():
        w = int(weight(lam))
        if w == 0:
            table[()] = table.get((), 0j) + c
            continue
        parts, matrix = _power_sum_matrix(w)
        j = parts.index(tuple(Fraction(p) for p in lam))
        for i, mu in enumerate(parts):
            if len(mu) <= nvars and matrix[i, j] != 0:
                table[mu] = table.get(mu, 0j) + c * matrix[i, j]
    return SymSeries.build(nvars, table, cutoff)


def omega(f: SymSeries) -> SymSeries:
    """The involution ``p_lambda -> (-1)^{|lambda| - len(lambda)} p_lambda``.

    Defined on integer partitions only.  At weights above ``f.nvars`` the
    result is the projection of omega applied to the lift, so ``omega`` is an
    involution only on weights up to the number of variables.
    """
    coeffs = to_power_sum_basis(f)
    flipped = {
        lam: c * (-1) ** int(weight(lam) - len(lam)) for lam, c in coeffs.items()
    }
    return from_power_sum_basis(flipped, f.nvars, f.cutoff)
