"""
=========================
Apéry numbers modulo p^2
=========================

A((p-1)/2) agrees with the Apéry-like number C_6((p-1)/2) modulo p^2, and
with D((p-1)/2) only modulo p.
"""

from supercong import apery, c_ell, d_seq
from supercong.exact_arith import odd_primes

print([apery(n) for n in range(6)])
print([c_ell(6, n) for n in range(6)])

for p in odd_primes(3, 40):
    m = (p - 1) // 2
    a, c, d = apery(m), c_ell(6, m), d_seq(m)
    print(f"p = {p:>2}   A-C6 mod p^2: {(a - c) % p**2:>4}   A-D mod p: {(a - d) % p}"
          f"   A-D mod p^2: {(a - d) % p**2:>4}")
