"""
==========================================
The weight-six supercongruence, prime by prime
==========================================

The truncated sum of ``(1/2)_k^6 / k!^6`` up to ``k = p-1`` is compared with
the coefficient ``b(p)`` of the weight-6 newform of level 8.
"""

from supercong import fourier_b, lhs_wt6
from supercong.exact_arith import odd_primes

# one eta expansion covers every prime below the bound
b = fourier_b(60)

for p in odd_primes(3, 60):
    left = lhs_wt6(p, 5).value
    print(f"p = {p:>2}   sum mod p^5 = {left:>10}   b(p) mod p^5 = {b[p] % p**5:>10}")

# %%
# The terms with (p-1)/2 < k <= p-1 carry a factor p^6, so truncating at
# (p-1)/2 instead gives the same residue mod p^5.
from supercong.hypergeom import tail_valuations

print(min(tail_valuations(59)))
