"""Windowed Artinian and Noetherian series with rational exponents.

A :class:`Series` stores finitely many terms together with a window bound.
For a Noetherian series (power-series-like, degree = least exponent) every
coefficient with exponent ``< bound`` is exact and nothing is known at or
above the bound.  An Artinian series is the mirror image: exponents
``> bound`` are exact and the degree is the greatest exponent.

Every operation propagates the window so that a reported coefficient can
never be changed by terms that were truncated away.

Coefficients are ``complex`` or, for multivariate series, another
:class:`Series` in an inner variable.  ``var`` names the series variable and
``inner`` lists the variables of the coefficients, outermost first.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from numbers import Number
from typing import Iterable, Iterator, Mapping, Union

from .config import get_prune_threshold, get_tolerance
from .errors import (
    DivisionByZero,
    DuplicateExponent,
    NoExponentInverse,
    OrientationMismatch,
    PrecisionExceeded,
    WindowViolation,
)
from .scalar import exponent

__all__ = [
    "Orientation",
    "Series",
    "make",
    "monomial",
    "constant",
    "degree",
    "coefficient_at",
    "add",
    "sub",
    "neg",
    "scalar_mul",
    "mul",
    "invert",
    "dualize",
    "truncate",
    "approx_eq",
]

#: Cap on the number of exponents visited by the inversion recursion.
MAX_LATTICE_POINTS = 200_000


class Orientation(enum.Enum):
    NOETHERIAN = "noetherian"
    ARTINIAN = "artinian"

    @classmethod
    def coerce(cls, value) -> "Orientation":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown orientation {value!r}") from None

    def flip(self) -> "Orientation":
        if self is Orientation.NOETHERIAN:
            return Orientation.ARTINIAN
        return Orientation.NOETHERIAN


NOETHERIAN = Orientation.NOETHERIAN
ARTINIAN = Orientation.ARTINIAN


def coeff_is_zero(c, tol: float | None = None) -> bool:
    if isinstance(c, Series):
        return not c._terms
    return abs(c) <= (get_prune_threshold() if tol is None else tol)


def coeff_inverse(c):
    if isinstance(c, Series):
        return invert(c)
    if coeff_is_zero(c):
        raise DivisionByZero("inverse of a zero coefficient")
    return 1 / complex(c)


def _coeff(c):
    if isinstance(c, Series):
        return c
    if isinstance(c, Number) and not isinstance(c, bool):
        return complex(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class Series:
    """An immutable windowed series; build with :func:`make` or :func:`monomial`."""

    __slots__ = ("orientation", "bound", "var", "inner", "_terms", "_index")

    def __init__(self, orientation, terms: Mapping, bound, var: str = "x", inner=()):
        # Trusted constructor: drops zeros and out-of-window terms silently.
        orientation = Orientation.coerce(orientation)
        bound = exponent(bound)
        tol = get_prune_threshold()
        if orientation is NOETHERIAN:
            inside = lambda a: a < bound  # noqa: E731
        else:
            inside = lambda a: a > bound  # noqa: E731
        kept = sorted(
            (a, c) for a, c in terms.items() if inside(a) and not coeff_is_zero(c, tol)
        )
        object.__setattr__(self, "orientation", orientation)
        object.__setattr__(self, "bound", bound)
        object.__setattr__(self, "var", var)
        object.__setattr__(self, "inner", tuple(inner))
        object.__setattr__(self, "_terms", tuple(kept))
        object.__setattr__(self, "_index", dict(kept))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- basic queries -------------------------------------------------
    @property
    def terms(self) -> tuple:
        """``(exponent, coefficient)`` pairs in ascending exponent order."""
        return self._terms

    @property
    def support(self) -> tuple:
        return tuple(a for a, _ in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_noetherian(self) -> bool:
        return self.orientation is NOETHERIAN

    def in_window(self, a) -> bool:
        if self.orientation is NOETHERIAN:
            return a < self.bound
        return a > self.bound

    def degree(self):
        return degree(self)

    def leading(self):
        """``(degree, leading coefficient)`` of a nonzero series."""
        if not self._terms:
            raise ValueError("the zero series has no leading term")
        return self._terms[0] if self.orientation is NOETHERIAN else self._terms[-1]

    @property
    def leading_coefficient(self):
        return self.leading()[1]

    def effective_degree(self):
        # Smallest exponent that can still carry a nonzero coefficient.
        if self._terms:
            return self.leading()[0]
        return self.bound

    def __getitem__(self, a):
        return coefficient_at(self, a)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def like(self, terms: Mapping, bound=None, orientation=None) -> "Series":
        """A series in the same variable(s) as ``self``."""
        return Series(
            orientation or self.orientation,
            terms,
            self.bound if bound is None else bound,
            self.var,
            self.inner,
        )

    # -- equality --------------------------------------------------------
    def _key(self):
        return (self.orientation, self.bound, self.var, self.inner, self._terms)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    # -- operator plumbing ----------------------------------------------
    def _relation(self, other) -> str:
        if isinstance(other, Series):
            if other.var == self.var:
                return "ring"
            if other.var in self.inner:
                return "scalar"
            return "foreign"
        if isinstance(other, Number) and not isinstance(other, bool):
            return "scalar"
        return "foreign"

    def constant_like(self, c) -> "Series":
        return self.like({Fraction(0): _coeff(c)})

    def __add__(self, other):
        rel = self._relation(other)
        if rel == "ring":
            return add(self, other)
        if rel == "scalar":
            return add(self, self.constant_like(other))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return neg(self)

    def __sub__(self, other):
        rel = self._relation(other)
        if rel == "ring":
            return sub(self, other)
        if rel == "scalar":
            return add(self, self.constant_like(-other))
        return NotImplemented

    def __rsub__(self, other):
        if self._relation(other) == "scalar":
            return add(neg(self), self.constant_like(other))
        return NotImplemented

    def __mul__(self, other):
        rel = self._relation(other)
        if rel == "ring":
            return mul(self, other)
        if rel == "scalar":
            return scalar_mul(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        rel = self._relation(other)
        if rel == "ring":
            return mul(self, invert(other))
        if rel == "scalar":
            return scalar_mul(coeff_inverse(other), self)
        return NotImplemented

    def __rtruediv__(self, other):
        if self._relation(other) == "scalar":
            return scalar_mul(other, invert(self))
        return NotImplemented

    def __pow__(self, t):
        from .power import pow as series_pow

        return series_pow(self, t, 0)

    def __repr__(self):
        return f"Series({format_series(self)})"

    __str__ = lambda self: format_series(self)  # noqa: E731


SeriesLike = Union[Series, complex, float, int, Fraction]


# -- construction ---------------------------------------------------------


def make(orientation, terms: Iterable, window, var: str = "x", inner=()) -> Series:
    """Build a series from ``(exponent, coefficient)`` pairs.

    >>> str(make("noetherian", [(0, 1), (1, -1)], 10))
    '1 - x + O(x^10)'
    """
    orientation = Orientation.coerce(orientation)
    bound = exponent(window)
    table: dict = {}
    for a, c in terms:
        a = exponent(a)
        if a in table:
            raise DuplicateExponent(f"exponent {a} appears twice")
        if orientation is NOETHERIAN and not a < bound:
            raise WindowViolation(f"exponent {a} is not below the window bound {bound}")
        if orientation is ARTINIAN and not a > bound:
            raise WindowViolation(f"exponent {a} is not above the window bound {bound}")
        table[a] = _coeff(c)
    return Series(orientation, table, bound, var, inner)


def monomial(c, a, window, orientation=NOETHERIAN, var: str = "x", inner=()) -> Series:
    return make(orientation, [(a, c)], window, var, inner)


def constant(c, window, orientation=NOETHERIAN, var: str = "x", inner=()) -> Series:
    return make(orientation, [(0, c)], window, var, inner)


def zero(window, orientation=NOETHERIAN, var: str = "x", inner=()) -> Series:
    return Series(orientation, {}, window, var, inner)


# -- queries ----------------------------------------------------------------


def degree(f: Series):
    """Least exponent (Noetherian) or greatest exponent (Artinian).

    The zero series has degree ``+inf`` (Noetherian) or ``-inf`` (Artinian).
    """
    if f.is_zero():
        return math.inf if f.orientation is NOETHERIAN else -math.inf
    return f.leading()[0]


def coefficient_at(f: Series, a):
    a = exponent(a)
    if not f.in_window(a):
        raise PrecisionExceeded(
            f"coefficient of {f.var}^{a} lies outside the window (bound {f.bound})"
        )
    return f._index.get(a, 0j)


# -- ring operations --------------------------------------------------------


def _check_compatible(f: Series, g: Series) -> None:
    if f.orientation is not g.orientation:
        raise OrientationMismatch(
            f"cannot combine {f.orientation.value} and {g.orientation.value} series"
        )
    if f.var != g.var:
        raise ValueError(f"series in different variables {f.var!r} and {g.var!r}")


def _tighter(orientation: Orientation, b1, b2):
    return min(b1, b2) if orientation is NOETHERIAN else max(b1, b2)


def add(f: Series, g: Series) -> Series:
    _check_compatible(f, g)
    table = dict(f._index)
    for a, c in g._terms:
        table[a] = table[a] + c if a in table else c
    return f.like(table, _tighter(f.orientation, f.bound, g.bound))


def neg(f: Series) -> Series:
    return f.like({a: -c for a, c in f._terms})


def sub(f: Series, g: Series) -> Series:
    return add(f, neg(g))


def scalar_mul(z, f: Series) -> Series:
    """Multiply every coefficient of ``f`` by the scalar ``z``.

    ``z`` may be a number or a series in one of ``f``'s inner variables.
    """
    if not isinstance(z, Series):
        z = complex(z)
    return f.like({a: c * z for a, c in f._terms})


def mul(f: Series, g: Series) -> Series:
    """Convolution product with window propagation.

    A Noetherian product is exact below
    ``min(f.bound + deg g, g.bound + deg f)``; Artinian mirrors this.
    """
    _check_compatible(f, g)
    noeth = f.orientation is NOETHERIAN
    b1 = f.bound + g.effective_degree()
    b2 = g.bound + f.effective_degree()
    bound = _tighter(f.orientation, b1, b2)
    table: dict = {}
    gterms = g._terms if noeth else tuple(reversed(g._terms))
    for a, c in f._terms:
        for b, d in gterms:
            e = a + b
            if (noeth and e >= bound) or (not noeth and e <= bound):
                break
            p = c * d
            table[e] = table[e] + p if e in table else p
    return f.like(table, bound)


def lattice_below(generators: Iterable, limit) -> list:
    """All finite sums of positive ``generators`` that are ``< limit``, ascending."""
    gens = sorted(set(generators))
    if any(g <= 0 for g in gens):
        raise ValueError("lattice generators must be positive")
    seen = {Fraction(0)} if limit > 0 else set()
    frontier = list(seen)
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                s = e + g
                if s >= limit:
                    break
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        if len(seen) > MAX_LATTICE_POINTS:
            raise PrecisionExceeded(
                "exponent lattice too dense for the requested window; "
                "use a shallower window or coarser exponents"
            )
        frontier = nxt
    return sorted(seen)


def invert(f: Series, exponents: str = "Q") -> Series:
    """Multiplicative inverse.

    The coefficients come from the triangular recursion anchored at the
    leading term: with ``f = sum c_e x^e`` of degree ``a``,
    ``d_{-a} = 1/c_a`` and each later coefficient is ``-1/c_a`` times the
    already-known part of the convolution.

    ``exponents="N"`` restricts exponents to the naturals, where only series
    of degree 0 are invertible.
    """
    if f.is_zero():
        raise DivisionByZero("the zero series has no inverse")
    if exponents not in ("Q", "N"):
        raise ValueError("exponents must be 'Q' or 'N'")
    if exponents == "N" and degree(f) != 0:
        raise NoExponentInverse(
            f"degree {degree(f)} has no additive inverse among the natural numbers"
        )
    if f.orientation is ARTINIAN:
        return dualize(_invert_noetherian(dualize(f)))
    return _invert_noetherian(f)


def _invert_noetherian(f: Series) -> Series:
    a, lead = f.leading()
    precision = f.bound - a
    inv_lead = coeff_inverse(lead)
    shifted = {e - a: c for e, c in f._terms if e != a}
    steps = sorted(shifted)
    found: dict = {}
    for s in lattice_below(steps, precision):
        if s == 0:
            found[s] = inv_lead
            continue
        total = None
        for delta in steps:
            if delta > s:
                break
            prev = found.get(s - delta)
            if prev is None:
                continue
            p = prev * shifted[delta]
            total = p if total is None else total + p
        if total is None:
            continue
        found[s] = -(inv_lead * total)
    return f.like({s - a: c for s, c in found.items()}, precision - a)


def dualize(f: Series) -> Series:
    """The isomorphism ``x^a -> x^-a`` exchanging the two orientations."""
    return Series(
        f.orientation.flip(),
        {-a: c for a, c in f._terms},
        -f.bound,
        f.var,
        f.inner,
    )


def truncate(f: Series, new_bound) -> Series:
    new_bound = exponent(new_bound)
    looser = new_bound > f.bound if f.orientation is NOETHERIAN else new_bound < f.bound
    if looser:
        raise WindowViolation(f"cannot loosen window from {f.bound} to {new_bound}")
    return f.like(dict(f._terms), new_bound)


def _coeff_close(c1, c2, tol: float) -> bool:
    if isinstance(c1, Series) or isinstance(c2, Series):
        if not isinstance(c1, Series):
            c1, c2 = c2, c1
        if not isinstance(c2, Series):
            if coeff_is_zero(c2, tol):
                c2 = c1.like({})
            else:
                c2 = c1.constant_like(c2)
        return approx_eq(c1, c2, tol)
    return abs(c1 - c2) <= tol


def approx_eq(f: Series, g: Series, tol: float | None = None) -> bool:
    """Coefficientwise comparison on the intersection of the exact regions."""
    tol = get_tolerance() if tol is None else tol
    if f.orientation is not g.orientation or f.var != g.var:
        return False
    bound = _tighter(f.orientation, f.bound, g.bound)
    noeth = f.orientation is NOETHERIAN
    for a in set(f._index) | set(g._index):
        if (noeth and a >= bound) or (not noeth and a <= bound):
            continue
        if not _coeff_close(f._index.get(a, 0j), g._index.get(a, 0j), tol):
            return False
    return True


# -- display --------------------------------------------------------------


def format_number(c: complex, digits: int = 12) -> str:
    c = complex(c)
    tol = get_tolerance()
    re = 0.0 if abs(c.real) <= tol else c.real
    im = 0.0 if abs(c.imag) <= tol else c.imag
    fmt = lambda v: format(v, f".{digits}g")  # noqa: E731
    if im == 0.0:
        return fmt(re)
    if re == 0.0:
        return f"{fmt(im)}i"
    sign = "-" if im < 0 else "+"
    return f"({fmt(re)} {sign} {fmt(abs(im))}i)"


def _format_power(var: str, a: Fraction) -> str:
    if a == 1:
        return var
    if a.denominator == 1 and a > 0:
        return f"{var}^{a}"
    return f"{var}^({a})"


def format_series(f: Series, digits: int = 12) -> str:
    """Human-readable rendering, for example ``1 - x + 0.5*x^(1/2) + O(x^10)``."""
    pieces = []
    # degree first in either orientation
    ordered = f._terms if f.orientation is NOETHERIAN else reversed(f._terms)
    for a, c in ordered:
        if isinstance(c, Series):
            body = f"({format_series(c, digits)})"
            negative = False
        else:
            body = format_number(c, digits)
            negative = body.startswith("-")
            if negative:
                body = body[1:]
        if a != 0:
            power = _format_power(f.var, a)
            body = power if body == "1" else f"{body}*{power}"
        pieces.append(("-" if negative else "+", body))
    if f.orientation is NOETHERIAN:
        tail = f"O({_format_power(f.var, f.bound)})"
    else:
        tail = f"O_inf({_format_power(f.var, f.bound)})"
    pieces.append(("+", tail))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
