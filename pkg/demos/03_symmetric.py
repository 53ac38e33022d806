"""Symmetric series in three variables, up to weight 5."""
from fractions import Fraction

from artseries import basis_product, complete, elementary, omega, powersum
from artseries.symmetric import monomial, triangularity_check

N, CUT = 3, 5
m = lambda *beta: monomial(beta, N, CUT)  # noqa: E731

print("m[1]^2            =", m(1) * m(1))
print("e2, h2, p3        =", elementary(2, N, CUT), "|", complete(2, N, CUT), "|", powersum(3, N, CUT))
e1, e2 = elementary(1, N, CUT), elementary(2, N, CUT)
print("e1^2 - 2 e2       =", e1 * e1 - 2 * e2)

# omega swaps e and h and flips the sign of even power sums
print("omega(p2)         =", omega(powersum(2, N, CUT)))
print("omega(e2)         =", omega(e2))

# products indexed by partitions: e_(2,1) = e1 e2 etc.
print("e_(2,1)           =", basis_product("e", (2, 1), 0, N, CUT))
print("h_(2)             =", basis_product("h", (2,), 0, N, CUT))
print("triangular e_(2,1):", triangularity_check("e", (2, 1), N, CUT))
print("triangular h_(2,1):", triangularity_check("h", (2, 1), N, CUT))

# real exponents: e3 is a single monomial, so its powers stay symmetric
t = Fraction(3, 2)
for n in (0, 1):
    print(f"e_(3/2,3/2,3/2) on branch {n}:", basis_product("e", (t, t, t), n, N, CUT))
