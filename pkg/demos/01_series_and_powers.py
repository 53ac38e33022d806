"""Series with rational exponents, inverses, and branch-indexed powers."""
from fractions import Fraction

from artseries import cpow, invert, make, mul, pow
from artseries.power import pow_iterate_branch, pow_product_branch

half = Fraction(1, 2)

# a Noetherian series is exact below its window bound
f = make("noetherian", [(0, 1), (half, 2), (Fraction(3, 2), -1)], 6)
print("f          =", f)
print("1/f        =", invert(f))
print("f * (1/f)  =", mul(f, invert(f)))

# the Artinian mirror: exact above the bound, degree is the largest exponent
g = make("artinian", [(0, 1), (-1, -1)], -6)
print("1/(1 - 1/x) =", invert(g))

# scalar powers carry a branch index n: z^{t;n} = a^t e^{i t (theta + 2 n pi)}
print("cpow(-4, 1/2; 0) =", cpow(-4, half, 0))
print("cpow(-4, 1/2; 1) =", cpow(-4, half, 1))

# series powers only use the branch on the leading coefficient
one_plus_x = make("noetherian", [(0, 1), (1, 1)], 8)
r = pow(one_plus_x, half)
print("(1 + x)^(1/2)     =", r)
print("squared           =", mul(r, r))
print("(1 + x)^(1/2; 1)  =", pow(one_plus_x, half, 1))

# product of powers: which branch does (f g)^t live on?
a = make("noetherian", [(0, -1), (1, 1)], 6)
n = pow_product_branch(a, a, 0, 0)
print("(-1 + x)^2, branch for the product of two principal roots:", n)

# iterated powers: the outer branch depends on n as well as on arg f
k = pow_iterate_branch(one_plus_x, half, 1)
lhs = pow(one_plus_x, Fraction(1, 4), 1)
rhs = pow(pow(one_plus_x, half, 1), half, 1 + k)
print("f^{1/4;1} =", lhs)
print("(f^{1/2;1})^{1/2;1+k}, k =", k, ":", rhs)
print("with k = floor(s arg f / 2pi) = 0 instead:", pow(pow(one_plus_x, half, 1), half, 1))
