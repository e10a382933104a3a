"""
===================================================
Harmonic-sum identities from partial fractions
===================================================

Decomposing R(t) = prod (t-j)^2 / prod (t+j)^2 and summing residues gives
sum_k (A_k - k B_k) = 1, an identity full of harmonic numbers.
"""

from supercong import pf_coeffs_R, pf_coeffs_Rhat, apery
from supercong.identities import evaluate, id1_sum, br_sum

pf = pf_coeffs_R(3)
for k, (A, B) in enumerate(pf.coeffs):
    print(f"pole t = -{k}:   A = {A}   B = {B}")

# the decomposition reproduces the function anywhere off the poles
print(pf(7), evaluate("R", 3, 7))

print([id1_sum(n) for n in range(8)])

# %%
# Half the sum of the t^-3 coefficients of Rhat is the Apéry number.
for n in range(6):
    print(n, sum(pf_coeffs_Rhat(n).column(1)) / 2, br_sum(n), apery(n))
