import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from artseries.compose import associativity_defect, comp_inverse, compose, lagrange_coefficient
from artseries.errors import (
    NonPositiveDegree,
    NonPositiveLeading,
    OrientationMismatch,
    PrecisionExceeded,
    SeriesError,
)
from artseries.power import pow
from artseries.series import (
    invert,
    ARTINIAN,
    add,
    coefficient_at,
    constant,
    degree,
    make,
    mul,
)

from helpers import catalan, fixed_rng, rand_delta, rand_series, series_max_error

seeds = st.integers(0, 2**32 - 1)
branches = st.integers(-2, 2)


def N(terms, window=8):
    return make("noetherian", terms, window)


X = N([(1, 1)])


def test_identity_substitution():
    f = N([(0, 1), (Fraction(1, 2), 2), (3, -1)])
    assert series_max_error(compose(f, X), f) < 1e-12


def test_square_root_of_square():
    assert dict(compose(N([(Fraction(1, 2), 1)]), N([(2, 1)])).terms) == {1: 1}


def test_geometric_series_in_2x():
    geo = N([(k, 1) for k in range(6)], 6)
    got = compose(geo, N([(1, 2)], 6))
    assert {int(a): c for a, c in got.terms} == pytest.approx({k: 2**k for k in range(6)})


def test_compose_errors():
    with pytest.raises(NonPositiveDegree):
        compose(X, N([(0, 1), (1, 1)]))
    with pytest.raises(OrientationMismatch):
        compose(X, make("artinian", [(1, 1)], -4))


def test_artinian_composition_is_native():
    # Artinian: inner series of positive degree, result exact above the bound.
    f = make("artinian", [(2, 1), (0, 3), (-1, 1)], -3)
    g = make("artinian", [(1, 1), (0, 2)], -3)
    got = compose(f, g)
    assert degree(got) == 2
    g2 = mul(g, g)
    expected = add(add(g2, constant(3, -3, ARTINIAN)), pow(g, -1))
    assert series_max_error(got, expected) < 1e-9


@given(seeds, seeds, branches)
def test_composition_is_a_ring_map(s1, s2, n):
    rng = fixed_rng(s1)
    f1, f2 = rand_series(rng, window=6, lo=0), rand_series(rng, window=6, lo=0)
    g = rand_delta(fixed_rng(s2), window=6, positive=False)
    assert series_max_error(compose(add(f1, f2), g, n), add(compose(f1, g, n), compose(f2, g, n))) < 1e-9
    assert series_max_error(compose(mul(f1, f2), g, n), mul(compose(f1, g, n), compose(f2, g, n))) < 1e-9
    c = constant(2 - 1j, 6)
    assert series_max_error(compose(c, g, n), c) < 1e-12


@given(seeds, seeds, branches)
def test_degree_law(s1, s2, n):
    f = rand_series(fixed_rng(s1), window=6)
    g = rand_series(fixed_rng(s2), window=6, lo=Fraction(1, 3))
    assert degree(compose(f, g, n)) == degree(f) * degree(g)


@pytest.mark.parametrize("b, c", [(Fraction(1, 4), Fraction(1, 2)), (Fraction(1, 3), Fraction(1, 5))])
def test_monomial_triple_is_associative_under_branch_one(b, c):
    # f = x contributes g^{1;1} = g, so both sides are exp(2 pi i b) x^{bc}.
    defect = associativity_defect(X, N([(b, 1)]), N([(c, 1)]), 1)
    assert abs(defect - 1) < 1e-12


def test_associativity_can_fail_by_a_unimodular_constant():
    f, g, h = N([(Fraction(1, 2), 1)]), N([(Fraction(3, 2), 1)]), N([(Fraction(1, 2), 1)])
    defect = associativity_defect(f, g, h, 1)
    assert abs(defect - cmath.exp(2j * math.pi * Fraction(1, 2) * 1)) < 1e-12
    assert abs(defect + 1) < 1e-12


@given(seeds, seeds, st.fractions(-2, 2, max_denominator=4), branches)
def test_associativity_porism_for_monomials(s2, s3, a, m):
    f = N([(a, 1)], 4)
    g = rand_series(fixed_rng(s2), window=4, lo=Fraction(1, 2), span=2, max_terms=3)
    h = rand_series(fixed_rng(s3), window=4, lo=Fraction(1, 2), span=2, max_terms=3)
    ratio = mul(compose(compose(f, g, 0), h, m), invert(compose(f, compose(g, h, m), 0)))
    (e, q), *rest = ratio.terms
    assert e == 0 and all(abs(c) < 1e-9 for _, c in rest)
    assert abs(abs(q) - 1) < 1e-9


def test_porism_fails_for_two_term_f():
    # Each monomial of f picks up its own root of unity.
    f = N([(Fraction(1, 2), 1), (1, 1)], 4)
    g, h = N([(1, 1j)], 4), N([(1, -1)], 4)
    with pytest.raises(SeriesError):
        associativity_defect(f, g, h, 1)


def _delta_pair(rng):
    # delta series with arg g + arg h < 2 pi
    while True:
        g, h = rand_delta(rng, 5, positive=False), rand_delta(rng, 5, positive=False)
        args = sum(cmath.phase(s.leading_coefficient) % (2 * math.pi) for s in (g, h))
        if args < 2 * math.pi - 1e-6:
            return g, h


@given(seeds, seeds)
def test_delta_associativity_on_the_principal_branch(s1, s2):
    rng = fixed_rng(s1)
    f = rand_series(rng, window=5, lo=0, span=2, max_terms=4)
    g, h = _delta_pair(fixed_rng(s2))
    lhs = compose(compose(f, g, 0), h, 0)
    rhs = compose(f, compose(g, h, 0), 0)
    assert series_max_error(lhs, rhs) < 1e-9


@given(seeds, seeds, st.integers(-2, 2).filter(bool))
def test_delta_associativity_with_integer_exponents(s1, s2, m):
    f = rand_series(fixed_rng(s1), window=5, lo=0, span=3, max_terms=4, denoms=(1,))
    g, h = _delta_pair(fixed_rng(s2))
    lhs = compose(compose(f, g, 0), h, m)
    rhs = compose(f, compose(g, h, m), 0)
    assert series_max_error(lhs, rhs) < 1e-9


def test_delta_associativity_fails_off_branch_zero_for_fractional_f():
    f = N([(Fraction(1, 2), 1)], 5)
    g = N([(1, 1), (2, Fraction(1, 3))], 5)
    h = N([(1, 1), (2, Fraction(1, 5))], 5)
    lhs = compose(compose(f, g, 0), h, 1)
    rhs = compose(f, compose(g, h, 1), 0)
    ratio = lhs.leading_coefficient / rhs.leading_coefficient
    assert abs(ratio + 1) < 1e-12


def test_catalan_reversion():
    g = comp_inverse(N([(1, 1), (2, -1)], 8))
    for k in range(1, 8):
        assert g[k] == pytest.approx(catalan(k - 1), abs=1e-9)


def test_reversion_of_scaled_x():
    g = comp_inverse(N([(1, 4)]))
    assert dict(g.terms) == pytest.approx({1: 0.25})


def test_reversion_of_x_squared():
    g = comp_inverse(N([(2, 1)]))
    assert dict(g.terms) == pytest.approx({Fraction(1, 2): 1})


def test_reversion_without_a_suitable_branch():
    with pytest.raises(SeriesError):
        comp_inverse(N([(Fraction(1, 2), 1)]), 1)


def test_reversion_preconditions():
    with pytest.raises(NonPositiveLeading):
        comp_inverse(N([(1, -1)]))
    with pytest.raises(NonPositiveDegree):
        comp_inverse(N([(0, 1), (1, 1)]))


@given(seeds, branches)
def test_reversion_is_a_right_inverse(seed, n):
    rng = fixed_rng(seed)
    b = Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 3)))
    tail = [(b + Fraction(int(k), 2), complex(rng.uniform(-0.4, 0.4))) for k in range(1, 4)]
    # c^{b;n} must be able to reach the positive axis
    assume(0 <= Fraction(math.ceil(n * b)) / b - n < 1)
    f = N([(b, rng.uniform(0.5, 2.0))] + tail, 6)
    g = comp_inverse(f, n)
    assert series_max_error(compose(f, g, n), N([(1, 1)], 8)) < 1e-9


@given(seeds)
def test_delta_reversion_is_two_sided(seed):
    f = rand_delta(fixed_rng(seed), window=6)
    g = comp_inverse(f)
    assert series_max_error(compose(g, f, 0), N([(1, 1)], 8)) < 1e-9


def test_lagrange_catalan():
    f = N([(1, 1), (2, -1)], 8)
    assert lagrange_coefficient(f, 4, 1) == pytest.approx(5)
    assert lagrange_coefficient(f, 4, 2) == pytest.approx(5)
    g = comp_inverse(f)
    assert coefficient_at(mul(g, g), 4) == pytest.approx(5)


@pytest.mark.parametrize("a, b", [(1, 1), (3, 3), (3, 1), (Fraction(5, 2), Fraction(1, 2))])
def test_lagrange_identity_case(a, b):
    got = lagrange_coefficient(N([(1, 1)]), a, b)
    assert got == pytest.approx(1 if a == b else 0)


def test_lagrange_needs_enough_window():
    with pytest.raises(PrecisionExceeded):
        lagrange_coefficient(N([(1, 1), (2, -1)], 4), 9, 1)


@settings(max_examples=15)
@given(seeds)
def test_lagrange_agrees_with_reversion(seed):
    f = rand_delta(fixed_rng(seed), window=5)
    g = comp_inverse(f)
    for a, _ in g.terms[:6]:
        assert abs(lagrange_coefficient(f, a, 1) - coefficient_at(g, a)) < 1e-9
