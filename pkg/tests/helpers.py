"""Random instances and independent oracles shared by the test modules."""
from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from artseries.cli.syntax import BinOp, Call, Imag, Name, Neg, Num, Pow, Str
from artseries.series import ARTINIAN, NOETHERIAN, Series, make

DENOMS = (1, 2, 3)


def rand_exponents(rng, count, lo, hi, denoms=DENOMS):
    """``count`` distinct fractions in ``[lo, hi)`` with small denominators."""
    pool = sorted(
        {Fraction(p, q) for q in denoms for p in range(math.ceil(lo * q), math.ceil(hi * q))}
    )
    count = min(count, len(pool))
    picks = rng.choice(len(pool), size=count, replace=False)
    return sorted(pool[i] for i in picks)


def rand_coeff(rng, lo=0.2, hi=1.0):
    r = rng.uniform(lo, hi)
    theta = rng.uniform(0, 2 * math.pi)
    return complex(cmath.rect(r, theta))


def rand_series(
    rng,
    orientation=NOETHERIAN,
    max_terms=8,
    window=12,
    lo=-2,
    span=4,
    lead=None,
    denoms=DENOMS,
):
    """A random series whose leading coefficient dominates the others.

    The support sits in ``[d, d + span)`` for a random degree ``d >= lo``.
    A dominant leading term keeps inverses and powers well conditioned.
    """
    count = int(rng.integers(1, max_terms + 1))
    d = rand_exponents(rng, 1, lo, min(lo + 3, window - span), denoms)[0]
    exps = [d] + [e for e in rand_exponents(rng, count - 1, d + Fraction(1, 3), d + span, denoms)]
    coeffs = [lead if lead is not None else rand_coeff(rng, 1.0, 2.0)]
    coeffs += [rand_coeff(rng, 0.05, 0.5) for _ in exps[1:]]
    terms = list(zip(exps, coeffs))
    if orientation is ARTINIAN:
        return make(ARTINIAN, [(-a, c) for a, c in terms], -window)
    return make(NOETHERIAN, terms, window)


def rand_delta(rng, window=6, max_terms=4, positive=True, denoms=DENOMS, span=3):
    """Degree-one series; the leading coefficient is a positive real when asked."""
    lead = rng.uniform(0.5, 2.0) if positive else rand_coeff(rng, 0.5, 2.0)
    exps = [Fraction(1)] + rand_exponents(
        rng, int(rng.integers(0, max_terms)), Fraction(4, 3), 1 + span, denoms
    )
    coeffs = [complex(lead)] + [rand_coeff(rng, 0.05, 0.4) for _ in exps[1:]]
    return make(NOETHERIAN, list(zip(exps, coeffs)), window)


def series_max_error(f: Series, g: Series) -> float:
    """Largest coefficient difference on the common exact region."""
    noeth = f.orientation is NOETHERIAN
    bound = min(f.bound, g.bound) if noeth else max(f.bound, g.bound)
    a, b = dict(f.terms), dict(g.terms)
    worst = 0.0
    for e in set(a) | set(b):
        if (noeth and e >= bound) or (not noeth and e <= bound):
            continue
        worst = max(worst, abs(complex(a.get(e, 0)) - complex(b.get(e, 0))))
    return worst


# -- independent oracles --------------------------------------------------------


def binomial_fraction(t: Fraction, k: int) -> Fraction:
    """Generalized binomial coefficient by a direct product, no library code."""
    num = Fraction(1)
    for j in range(k):
        num *= t - j
    return num / math.factorial(k)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb)) if isinstance(ka, tuple) else ka + kb
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v != 0}


def poly_pow(a: dict, n: int, one) -> dict:
    out = {one: 1}
    for _ in range(n):
        out = poly_mul(out, a)
    return out


def brute_monomial(beta, nvars) -> dict:
    """``m_beta`` as ``{exponent tuple: 1}`` from raw permutations."""
    padded = tuple(beta) + (0,) * (nvars - len(beta))
    return {perm: 1 for perm in set(itertools.permutations(padded))}


def brute_elementary(n, nvars) -> dict:
    """``[y^n] prod_i (1 + x_i y)`` expanded directly."""
    out: dict = {}
    for subset in itertools.combinations(range(nvars), n):
        key = tuple(1 if i in subset else 0 for i in range(nvars))
        out[key] = out.get(key, 0) + 1
    return out


def brute_complete(n, nvars) -> dict:
    """``[y^n] prod_i 1/(1 - x_i y)``: every exponent vector of total degree n."""
    out = {}
    for key in itertools.product(range(n + 1), repeat=nvars):
        if sum(key) == n:
            out[key] = 1
    return out


def brute_powersum(n, nvars) -> dict:
    return {tuple(n if i == j else 0 for i in range(nvars)): 1 for j in range(nvars)}


def sym_to_poly(f) -> dict:
    """Flat expansion of a SymSeries through raw permutations."""
    out: dict = {}
    for beta, c in f.coeffs:
        for key in brute_monomial(beta, f.nvars):
            out[key] = out.get(key, 0) + c
    return out


def poly_close(a: dict, b: dict, tol=1e-9) -> bool:
    return all(abs(a.get(k, 0) - b.get(k, 0)) <= tol for k in set(a) | set(b))


def crt(residues: dict) -> tuple:
    """``(r, L)`` with ``r = k_n (mod n)`` for each entry, by pairwise merging."""
    r, L = 0, 1
    for n, k in residues.items():
        g = math.gcd(L, n)
        if (k - r) % g:
            raise ValueError("incompatible residues")
        step = ((k - r) // g) * pow(L // g, -1, n // g) % (n // g)
        r += L * step
        L = L * n // g
        r %= L
    return r, L


def fixed_rng(seed: int):
    return np.random.default_rng(seed)


# -- expression trees for the parser ---------------------------------------------

idents = st.from_regex(r"[a-z_][a-z0-9_]{0,4}", fullmatch=True).filter(lambda s: s != "i")
fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
leaves = st.one_of(
    st.builds(Num, fractions),
    st.builds(Imag, fractions),
    st.builds(Name, idents),
    st.builds(Str, st.text(st.characters(blacklist_characters="\n\r"), max_size=6)),
)


def _extend(children):
    return st.one_of(
        st.builds(Neg, children),
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        st.builds(Pow, children, fractions, st.none() | st.integers(-3, 3)),
        st.builds(
            Call,
            idents,
            st.lists(children, max_size=3).map(tuple),
            st.none() | st.integers(-3, 3),
        ),
    )


asts = st.recursive(leaves, _extend, max_leaves=12)
