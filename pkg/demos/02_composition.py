"""Composition f(g; n), reversion, and where associativity breaks."""
from fractions import Fraction

from artseries import approx_eq, associativity_defect, comp_inverse, compose, lagrange_coefficient, make

N = lambda terms, w=8: make("noetherian", terms, w)  # noqa: E731
x = N([(1, 1)])

# substitution sends x^a to g^{a;n}
f = N([(0, 1), (Fraction(1, 2), 1)])
g = N([(2, 1), (3, 1)])
print("f(g; 0) =", compose(f, g, 0))
print("f(g; 1) =", compose(f, g, 1))

# associativity can fail by a root of unity
sqrt = N([(Fraction(1, 2), 1)])
cube = N([(Fraction(3, 2), 1)])
print("defect for x^(1/2), x^(3/2), x^(1/2) on branch 1:", associativity_defect(sqrt, cube, sqrt, 1))

# with f = x the two sides agree on every branch
for b in (Fraction(1, 4), Fraction(1, 3), Fraction(1, 5)):
    print(f"defect for x, x^{b}, x^(1/2):", associativity_defect(x, N([(b, 1)]), sqrt, 1))

# delta series: 0-composition is associative when the args are small enough
p, q = N([(1, 1), (2, Fraction(1, 3))], 5), N([(1, 1), (2, Fraction(1, 5))], 5)
left = compose(compose(sqrt, p, 0), q, 0)
right = compose(sqrt, compose(p, q, 0), 0)
print("m = 0, equal within tolerance:", approx_eq(left, right))
left = compose(compose(sqrt, p, 0), q, 1)
right = compose(sqrt, compose(p, q, 1), 0)
print("m = 1, leading ratio:", left.leading_coefficient / right.leading_coefficient)

# reversion of x - x^2 gives the Catalan numbers
c = comp_inverse(N([(1, 1), (2, -1)], 9))
print("compositional inverse of x - x^2:", c)
print("Lagrange [x^4] of the inverse:", lagrange_coefficient(N([(1, 1), (2, -1)], 9), 4, 1))
