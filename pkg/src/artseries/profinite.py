"""Pseudointegers: compatible residue systems ``(k_n mod n)`` up to a bound."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import BoundMismatch


@dataclass(frozen=True)
class Pseudointeger:
    """Residues ``k_n`` for ``n = 1..bound`` with ``k_{nm} = k_n (mod n)``.

    ``residues[n - 1]`` holds ``k_n``.
    """

    bound: int
    residues: tuple

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("bound must be at least 1")
        if len(self.residues) != self.bound:
            raise ValueError("need exactly one residue per modulus")
        for n, k in enumerate(self.residues, start=1):
            if not 0 <= k < n:
                raise ValueError(f"residue {k} out of range for modulus {n}")

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.bound:
            raise IndexError(f"modulus {n} outside 1..{self.bound}")
        return self.residues[n - 1]

    def is_compatible(self) -> bool:
        return all(
            self[n * m] % n == self[n]
            for n in range(1, self.bound + 1)
            for m in range(2, self.bound // n + 1)
        )

    def __add__(self, other):
        return pi_add(self, other)

    def __mul__(self, other):
        return pi_mul(self, other)

    def __neg__(self):
        return Pseudointeger(self.bound, tuple((-k) % n for n, k in enumerate(self.residues, 1)))

    def __str__(self):
        body = ", ".join(f"k{n}={k}" for n, k in enumerate(self.residues, 1) if n > 1)
        return f"[{body}]" if body else "[]"


def embed(k: int, bound: int) -> Pseudointeger:
    """The residues of the integer ``k``."""
    return Pseudointeger(bound, tuple(k % n for n in range(1, bound + 1)))


def _check(a: Pseudointeger, b: Pseudointeger) -> None:
    if a.bound != b.bound:
        raise BoundMismatch(f"bounds {a.bound} and {b.bound} differ")


def pi_add(a: Pseudointeger, b: Pseudointeger) -> Pseudointeger:
    _check(a, b)
    return Pseudointeger(
        a.bound, tuple((x + y) % n for n, (x, y) in enumerate(zip(a.residues, b.residues), 1))
    )


def pi_mul(a: Pseudointeger, b: Pseudointeger) -> Pseudointeger:
    _check(a, b)
    return Pseudointeger(
        a.bound, tuple((x * y) % n for n, (x, y) in enumerate(zip(a.residues, b.residues), 1))
    )


def factorial_sum_element(bound: int) -> Pseudointeger:
    """``k_n = (1! + 2! + ... + n!) mod n``; compatible because ``n | j!`` for ``j >= n``."""
    residues = []
    for n in range(1, bound + 1):
        total, fact = 0, 1
        for j in range(1, n + 1):
            fact = fact * j % n
            total = (total + fact) % n
        residues.append(total)
    return Pseudointeger(bound, tuple(residues))


def is_integral(a: Pseudointeger) -> Optional[int]:
    """The integer whose residues ``a`` eventually equals, if visible by the bound.

    An embedded integer ``k`` has eventually constant residues: ``k_n = k`` once
    ``n > k >= 0`` and ``k_n = n + k`` once ``n > -k > 0``.  At bound ``M`` the
    only candidates are therefore ``k_M`` and ``k_M - M``; a candidate is
    accepted when it reproduces every residue.  Integers with ``|k| >= M`` are
    generally not recognised, and residue systems no integer produces give ``None``.
    """
    top = a[a.bound]
    candidates = sorted({top, top - a.bound}, key=lambda k: (abs(k), -k))
    for k in candidates:
        if all(k % n == r for n, r in enumerate(a.residues, 1)):
            return k
    return None


def lcm_upto(bound: int) -> int:
    return math.lcm(*range(1, bound + 1))
