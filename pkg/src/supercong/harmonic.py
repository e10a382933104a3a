"""Harmonic numbers, binomials, rising factorials and their p-adic expansions.

The expansion checks compare binomial coefficients near ``m = (p-1)/2`` with
their first-order expansions in ``p``, modulo ``p**2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .exact_arith import PrimePowerModulus, is_prime, reduce_rational
from .report import Claim, CongruenceReport, compare, compare_each

__all__ = [
    "HarmonicTable",
    "harmonic",
    "harmonic_table",
    "harmonic_residues",
    "rising_factorial",
    "central_ratio",
    "binomial_row",
    "binomial_table",
    "EXPANSION_IDS",
    "expansion_sides",
    "check_expansion_congruence",
    "check_wolstenholme",
]


class HarmonicTable:
    """Exact values ``H_0^(r), ..., H_N^(r)``."""

    def __init__(self, N: int, r: int = 1):
        if r < 1:
            raise ValueError("order must be positive")
        self.order = r
        values = [Fraction(0)]
        acc = Fraction(0)
        for j in range(1, N + 1):
            acc += Fraction(1, j**r)
            values.append(acc)
        self.values = tuple(values)

    @property
    def N(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(n)
        return self.values[n]

    def __len__(self):
        return len(self.values)


@lru_cache(maxsize=64)
def _table(N: int, r: int) -> HarmonicTable:
    return HarmonicTable(N, r)


def harmonic_table(N: int, r: int = 1) -> HarmonicTable:
    """Memoized table; a request is served by the next power-of-two size."""
    size = 16
    while size < N:
        size *= 2
    return _table(size, r)


def harmonic(n: int, r: int = 1) -> Fraction:
    """``H_n^(r) = sum_{j=1}^n 1/j^r``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return harmonic_table(n, r)[n]


def harmonic_residues(N: int, r: int, modulus: int) -> list[int]:
    """``H_0^(r), ..., H_N^(r)`` reduced modulo ``modulus``.

    Requires every ``j <= N`` to be invertible modulo ``modulus``.
    """
    out = [0]
    acc = 0
    for j in range(1, N + 1):
        acc = (acc + pow(pow(j, r, modulus), -1, modulus)) % modulus
        out.append(acc)
    return out


def rising_factorial(a, k: int) -> Fraction:
    """Pochhammer symbol ``(a)_k = a (a+1) ... (a+k-1)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def central_ratio(k: int) -> Fraction:
    """``(1/2)_k / k! = binom(2k, k) / 4^k``."""
    return Fraction(comb(2 * k, k), 4**k)


def binomial_row(n: int) -> tuple[int, ...]:
    return tuple(comb(n, k) for k in range(n + 1))


def binomial_table(N: int) -> list[tuple[int, ...]]:
    """Rows 0..N of Pascal's triangle, built by the additive recurrence."""
    rows = [(1,)]
    for n in range(1, N + 1):
        prev = rows[-1]
        rows.append(
            (1,) + tuple(prev[k - 1] + prev[k] for k in range(1, n)) + (1,)
        )
    return rows


# Each expansion maps (p, m, k, H, H2) to the two sides of a congruence that is
# claimed to hold mod p^2; H and H2 are harmonic tables of order 1 and 2.
_Side = Callable[[int, int, int, HarmonicTable, HarmonicTable], tuple]


def _half_sum(k: int) -> Fraction:
    return sum((Fraction(2, 2 * j + 1) for j in range(k)), Fraction(0))


def _m1(p, m, k, H, H2):
    return comb(m + k, m), central_ratio(k) * (1 + Fraction(p, 2) * _half_sum(k))


def _m2(p, m, k, H, H2):
    return comb(m, k), (-1) ** k * central_ratio(k) * (1 - Fraction(p, 2) * _half_sum(k))


def _bm(p, m, k, H, H2):
    return comb(m, k), (-1) ** k * central_ratio(k) * (1 - Fraction(p, 2) * (H[m + k] - H[m]))


def _bm_k(p, m, k, H, H2):
    return comb(m + k, m), (-1) ** k * comb(m, k) * (1 + p * (H[m + k] - H[m]))


def _h2mk(p, m, k, H, H2):
    return H[2 * m - k], H[k] + p * H2[k]


def _h2k(p, m, k, H, H2):
    return H[m + k], H[m - k] + p * H2[m - k]


def _bm2(p, m, k, H, H2):
    return comb(2 * m - k, m), (-1) ** (m - k) * comb(m, k) * (1 + p * (H[k] - H[m]))


def _bm3(p, m, k, H, H2):
    return comb(3 * m + 1, m - k), comb(m, k) * (1 + p * (H[m] - H[k]))


_EXPANSIONS: dict[str, _Side] = {
    "m1": _m1,
    "m2": _m2,
    "bm": _bm,
    "bm+k": _bm_k,
    "H2mk": _h2mk,
    "H2k": _h2k,
    "bm2": _bm2,
    "bm3": _bm3,
}

EXPANSION_IDS = tuple(_EXPANSIONS)


def _odd_prime(p: int) -> int:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return (p - 1) // 2


def expansion_sides(ident: str, p: int, k: int) -> tuple[Fraction, Fraction]:
    """Exact left and right sides of expansion ``ident`` at ``k``."""
    m = _odd_prime(p)
    if not 0 <= k <= m:
        raise ValueError(f"k must lie in 0..{m}")
    H, H2 = harmonic_table(p, 1), harmonic_table(p, 2)
    left, right = _EXPANSIONS[ident](p, m, k, H, H2)
    return Fraction(left), Fraction(right)


def check_expansion_congruence(ident: str, p: int) -> CongruenceReport:
    """Verify expansion ``ident`` mod ``p**2`` for every ``k`` in ``0..m``.

    Entries of ``left``/``right`` are the residues for each ``k``.
    """
    if ident not in _EXPANSIONS:
        raise KeyError(f"unknown expansion {ident!r}; choose from {EXPANSION_IDS}")
    m = _odd_prime(p)
    mod = PrimePowerModulus(p, 2)
    H, H2 = harmonic_table(p, 1), harmonic_table(p, 2)
    fn = _EXPANSIONS[ident]
    lefts, rights = [], []
    for k in range(m + 1):
        left, right = fn(p, m, k, H, H2)
        lefts.append(reduce_rational(left, mod).value)
        rights.append(reduce_rational(right, mod).value)
    return compare_each(f"expansion:{ident}", p, lefts, rights, mod.modulus, str(mod))


def check_wolstenholme(p: int) -> CongruenceReport:
    """``H_{p-1} = 0 (mod p^2)``, expected for ``p >= 5`` only."""
    _odd_prime(p)
    mod = PrimePowerModulus(p, 2)
    value = reduce_rational(harmonic(p - 1), mod).value
    return compare(
        "wolstenholme", p, value, 0, mod.modulus, str(mod),
        claim=Claim.SANITY, negative_expected=(p == 3),
    )
