"""Compatible residue systems that do not come from an integer."""
from artseries import embed, factorial_sum_element, is_integral
from artseries.profinite import lcm_upto

M = 24
print("embed(5)  =", embed(5, M))
print("embed(-1) =", embed(-1, M))
print("(2) + (3) == (5):", embed(2, M) + embed(3, M) == embed(5, M))

# k_n = 1! + 2! + ... + n! mod n is consistent because n divides j! once j >= n
s = factorial_sum_element(M)
print("factorial sums =", s)
print("compatible:", s.is_compatible())
print("an integer?", is_integral(s))

# integers matching the residues for n <= 12 already start far beyond 12
r = next(k for k in range(lcm_upto(M)) if all(k % n == s[n] for n in range(2, 13)))
print("smallest k >= 0 matching n = 2..12:", r)
