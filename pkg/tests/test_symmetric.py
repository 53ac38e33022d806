import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from artseries.errors import (
    DivisionByZero,
    InvalidPartition,
    TooFewVariables,
    UnsupportedBasis,
    VariableMismatch,
)
from artseries.symmetric import (
    SymSeries,
    basis_product,
    complete,
    constant,
    elementary,
    flatten,
    format_sym,
    integer_partitions,
    monomial,
    monomial_expand,
    omega,
    partition,
    powersum,
    sym_approx_eq,
    sym_invert,
    sym_mul,
    triangularity_check,
    weight,
)

from helpers import (
    brute_complete,
    brute_elementary,
    brute_monomial,
    brute_powersum,
    fixed_rng,
    poly_close,
    poly_mul,
    rand_coeff,
    sym_to_poly,
)

N, CUT = 3, 5
half = Fraction(1, 2)


def m(*beta, c=1, nvars=N, cutoff=CUT):
    return monomial(beta, nvars, cutoff, c)


def rand_sym(rng, nvars=N, cutoff=CUT, max_weight=4, with_constant=True, halves=False):
    """Random symmetric series on small partitions."""
    pool = [lam for w in range(1, max_weight + 1) for lam in integer_partitions(w, nvars)]
    if halves:
        pool += [(Fraction(3, 2),), (half, half), (Fraction(3, 2), half)]
    picks = rng.choice(len(pool), size=int(rng.integers(1, 5)), replace=False)
    table = {pool[i]: rand_coeff(rng, 0.2, 1.0) for i in picks}
    if with_constant:
        table[()] = rand_coeff(rng, 1.0, 2.0)
    return SymSeries.build(nvars, table, cutoff)


# -- monomials and products ---------------------------------------------------


@pytest.mark.parametrize(
    "beta, nvars",
    [((1,), 2), ((1, 1), 3), ((Fraction(3, 2), half), 2), ((2, 1), 3), ((half,), 3)],
)
def test_monomial_expand_matches_permutations(beta, nvars):
    got = flatten(monomial_expand(beta, nvars))
    want = brute_monomial(tuple(Fraction(b) for b in beta), nvars)
    assert {k: complex(v) for k, v in got.items()} == {
        tuple(Fraction(a) for a in k): 1 for k in want
    }


def test_monomial_needs_enough_variables():
    with pytest.raises(TooFewVariables):
        monomial_expand((1, 1, 1), 2)


def test_partitions_are_validated():
    with pytest.raises(InvalidPartition):
        partition((1, 2))
    with pytest.raises(InvalidPartition):
        partition((1, -1))
    assert partition((2, 1, 0, 0)) == (2, 1)


def test_m1_squared():
    got = m(1) * m(1)
    assert sym_approx_eq(got, m(2) + m(1, 1, c=2))
    assert format_sym(got) == "m[2] + 2*m[1,1] + O(deg 5)"


def test_multiplicative_identity():
    f = m(2, 1) + m(half, c=3)
    assert sym_approx_eq(f * constant(1, N, CUT), f)


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        sym_mul(m(1), m(1, nvars=2))


@given(st.integers(0, 2**32 - 1), st.booleans())
def test_product_agrees_with_brute_expansion(seed, halves):
    rng = fixed_rng(seed)
    f, g = rand_sym(rng, halves=halves), rand_sym(rng, halves=halves)
    got = sym_to_poly(sym_mul(f, g))
    want = {k: c for k, c in poly_mul(sym_to_poly(f), sym_to_poly(g)).items() if sum(k) < CUT}
    assert poly_close(got, want)


@given(st.integers(0, 2**32 - 1))
def test_grading(seed):
    rng = fixed_rng(seed)
    f, g = rand_sym(rng, cutoff=7), rand_sym(rng, cutoff=7)
    for a in f.weights() - {0}:
        for b in g.weights() - {0}:
            prod = sym_mul(f.homogeneous_part(a), g.homogeneous_part(b))
            assert prod.weights() <= {a + b}


# -- generators -----------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 5))
def test_generators_match_generating_functions(n):
    assert poly_close(sym_to_poly(elementary(n, N, 6)), brute_elementary(n, N))
    assert poly_close(sym_to_poly(complete(n, N, 6)), brute_complete(n, N))
    assert poly_close(sym_to_poly(powersum(n, N, 6)), brute_powersum(n, N))


def test_generator_examples():
    assert sym_approx_eq(elementary(2, N, CUT), m(1, 1))
    assert sym_approx_eq(complete(2, N, CUT), m(2) + m(1, 1))
    assert sym_approx_eq(powersum(3, N, CUT), m(3))


def test_newton_identity():
    e1, e2 = elementary(1, N, CUT), elementary(2, N, CUT)
    assert sym_approx_eq(e1 * e1 - 2 * e2, powersum(2, N, CUT))


@pytest.mark.parametrize("nvars", [2, 3, 4])
def test_e_h_duality(nvars):
    # (sum e_n y^n)(sum (-1)^n h_n y^n) = 1, read off degree by degree
    for total in range(1, CUT):
        acc = constant(0, nvars, CUT)
        for k in range(total + 1):
            acc = acc + (-1) ** k * elementary(total - k, nvars, CUT) * complete(k, nvars, CUT)
        assert acc.is_zero() or sym_approx_eq(acc, constant(0, nvars, CUT))


# -- basis products ---------------------------------------------------------


def classical(family, beta, nvars=N, cutoff=CUT):
    # prod over the conjugate partition
    gen = {"e": elementary, "h": complete, "p": powersum}[family]
    out = constant(1, nvars, cutoff)
    conj = [sum(1 for b in beta if b > j) for j in range(int(max(beta, default=0)))]
    for k in conj:
        out = out * gen(k, nvars, cutoff)
    return out


def test_basis_product_examples():
    assert sym_approx_eq(basis_product("e", (1, 1), 0, N, CUT), elementary(2, N, CUT))
    assert sym_approx_eq(basis_product("h", (1,), 0, N, CUT), m(1))
    # p-family, single part: (x1 + x2 + x3)^3 by the multinomial theorem
    got = sym_to_poly(basis_product("p", (3,), 0, N, CUT))
    want = {
        k: math.factorial(3) // math.prod(math.factorial(a) for a in k)
        for k in itertools.product(range(4), repeat=N)
        if sum(k) == 3
    }
    assert poly_close(got, want)


@pytest.mark.parametrize("family", ["e", "h", "p"])
@pytest.mark.parametrize(
    "beta", [lam for w in range(1, 5) for lam in integer_partitions(w, N)]
)
def test_integer_basis_products_are_classical(family, beta):
    assert sym_approx_eq(basis_product(family, beta, 0, N, CUT), classical(family, beta))


@pytest.mark.parametrize("n, sign", [(0, 1), (1, -1), (2, 1)])
def test_real_power_of_the_top_elementary(n, sign):
    t = Fraction(3, 2)
    got = basis_product("e", (t, t, t), n, N, CUT)
    assert sym_approx_eq(got, m(t, t, t, c=sign))


def test_real_power_of_non_monomial_generator_is_unsupported():
    with pytest.raises(UnsupportedBasis):
        basis_product("e", (half,), 0, N, CUT)


@settings(max_examples=20)
@given(
    st.fractions(0, Fraction(2, 3), max_denominator=3),
    st.fractions(0, Fraction(2, 3), max_denominator=3),
    st.integers(-1, 1),
)
def test_exponential_ring_law_on_real_exponents(s, t, n):
    # e_N is a monomial, so every real power is a symmetric series
    a = basis_product("e", (s,) * N, n, N, CUT)
    b = basis_product("e", (t,) * N, n, N, CUT)
    assert sym_approx_eq(a * b, basis_product("e", (s + t,) * N, n, N, CUT))


@given(st.sampled_from(["e", "h", "p"]), st.data())
def test_exponential_ring_law_on_integer_partitions(family, data):
    pool = [()] + [lam for w in range(1, 3) for lam in integer_partitions(w, N)]
    beta, gamma = data.draw(st.sampled_from(pool)), data.draw(st.sampled_from(pool))
    summed = tuple(
        a + b for a, b in itertools.zip_longest(beta, gamma, fillvalue=Fraction(0))
    )
    lhs = basis_product(family, beta, 0, N, CUT) * basis_product(family, gamma, 0, N, CUT)
    assert sym_approx_eq(lhs, basis_product(family, summed, 0, N, CUT))


def test_triangularity_examples():
    assert triangularity_check("e", (1, 1))
    assert triangularity_check("h", (2,))
    assert triangularity_check("p", (2,))


@pytest.mark.parametrize("beta", [lam for w in range(1, 5) for lam in integer_partitions(w, N)])
def test_elementary_family_is_triangular(beta):
    assert triangularity_check("e", beta, N, CUT)


def test_complete_family_is_not_triangular_in_general():
    # h_{(2,1)} = h_2 h_1 contains m_(3), which is lexicographically larger
    assert not triangularity_check("h", (2, 1), N, CUT)


# -- symmetry and invertibility ---------------------------------------------------


@given(st.lists(st.fractions(Fraction(1, 3), 3, max_denominator=3), min_size=1, max_size=3))
def test_monomial_expansion_is_symmetric(parts):
    beta = sorted(parts, reverse=True)
    flat = flatten(monomial_expand(beta, N))
    for i, j in itertools.combinations(range(N), 2):
        swapped = {}
        for key, c in flat.items():
            key = list(key)
            key[i], key[j] = key[j], key[i]
            swapped[tuple(key)] = c
        assert swapped == flat


@given(st.integers(0, 2**32 - 1), st.booleans())
def test_invertible_iff_constant_term_nonzero(seed, halves):
    rng = fixed_rng(seed)
    f = rand_sym(rng, halves=halves)
    inv = sym_invert(f)
    assert sym_approx_eq(f * inv, constant(1, N, CUT))
    g = rand_sym(rng, with_constant=False, halves=halves)
    with pytest.raises(DivisionByZero):
        sym_invert(g)


# -- omega ----------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 6))
def test_omega_on_power_sums(n):
    p = powersum(n, N, 6)
    assert sym_approx_eq(omega(p), (-1) ** (n - 1) * p)


@pytest.mark.parametrize("n", range(1, N + 1))
def test_omega_exchanges_e_and_h(n):
    assert sym_approx_eq(omega(elementary(n, N, CUT)), complete(n, N, CUT))
    assert sym_approx_eq(omega(complete(n, N, CUT)), elementary(n, N, CUT))


def test_omega_via_newton_expansion():
    p1, p2 = powersum(1, N, CUT), powersum(2, N, CUT)
    e2 = (p1 * p1 - p2) * 0.5
    assert sym_approx_eq(e2, elementary(2, N, CUT))
    assert sym_approx_eq(omega(e2), (p1 * p1 + p2) * 0.5)
    assert sym_approx_eq(omega(e2), complete(2, N, CUT))


@given(st.integers(0, 2**32 - 1))
def test_omega_is_an_involution_up_to_n_variables(seed):
    f = rand_sym(fixed_rng(seed), max_weight=N, cutoff=N + 1)
    assert sym_approx_eq(omega(omega(f)), f)


@given(st.integers(0, 2**32 - 1))
def test_omega_is_multiplicative_up_to_n_variables(seed):
    rng = fixed_rng(seed)
    f, g = rand_sym(rng, max_weight=N, cutoff=N + 1), rand_sym(rng, max_weight=N, cutoff=N + 1)
    assert sym_approx_eq(omega(f * g), omega(f) * omega(g))


def test_omega_rejects_real_partitions():
    with pytest.raises(UnsupportedBasis):
        omega(m(half))


def test_weight():
    assert weight((Fraction(3, 2), half)) == 2
