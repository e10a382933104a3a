"""
=======================================
Greene's series and the coefficient b(p)
=======================================

p^5 6F5(1) and p^3 4F3(1) over F_p are integers, and a fixed combination of
them reproduces b(p) exactly.
"""

from supercong import fop_b, fourier_b, gauss_nFn
from supercong.exact_arith import odd_primes

b = fourier_b(100)
for p in odd_primes(3, 100):
    s5 = gauss_nFn(p, 5, 1)
    print(f"p = {p:>2}   p^5 6F5(1) = {s5.scaled:>12}   (float distance {s5.certificate:.1e})"
          f"   fop = {fop_b(p):>9}   b(p) = {b[p]:>9}")

# %%
# The same integer from exact cyclic convolution, no floating point at all.
print(gauss_nFn(59, 5, 1, backend="exact").scaled == gauss_nFn(59, 5, 1).scaled)
