"""Apéry numbers and the Apéry-like sequences C_l(n) and D(n)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, lcm

from .exact_arith import PrimePowerModulus, is_prime
from .harmonic import harmonic_residues
from .report import CongruenceReport, compare

__all__ = [
    "IntegralityViolation",
    "SequenceTable",
    "apery",
    "c_ell",
    "c6_alt",
    "d_seq",
    "sequence_table",
    "apery_recurrence_residual",
    "check_apery_recurrence",
    "check_lemma_AC",
    "check_AD_mod_p",
    "check_prop_C6",
    "symmetry_defect",
]


class IntegralityViolation(ArithmeticError):
    """A sequence that should be integral produced a non-integer."""


def _row(n: int) -> list[int]:
    """``binom(n, k)`` for ``k = 0..n`` by multiplicative updates."""
    row = [1] * (n + 1)
    for k in range(n):
        row[k + 1] = row[k] * (n - k) // (k + 1)
    return row


def _shifted_row(n: int) -> list[int]:
    """``binom(n+k, k)`` for ``k = 0..n``."""
    row = [1] * (n + 1)
    for k in range(n):
        row[k + 1] = row[k] * (n + k + 1) // (k + 1)
    return row


@lru_cache(maxsize=4096)
def apery(n: int) -> int:
    """``A(n) = sum_k binom(n,k)^2 binom(n+k,k)^2``."""
    return sum((a * b) ** 2 for a, b in zip(_row(n), _shifted_row(n)))


@lru_cache(maxsize=256)
def _scaled_harmonics(n: int) -> tuple[int, tuple[int, ...]]:
    """``L = lcm(1..n)`` and the integers ``L * H_k`` for ``k = 0..n``."""
    L = lcm(*range(1, n + 1)) if n else 1
    out = [0]
    for j in range(1, n + 1):
        out.append(out[-1] + L // j)
    return L, tuple(out)


@lru_cache(maxsize=4096)
def c_ell(ell: int, n: int) -> int:
    """``C_l(n) = sum_k binom(n,k)^l (1 - l k (H_k - H_{n-k}))``.

    Evaluated exactly over the common denominator ``lcm(1..n)``; raises
    IntegralityViolation if the result is not an integer.
    """
    if ell < 1 or n < 0:
        raise ValueError("need ell >= 1 and n >= 0")
    L, hL = _scaled_harmonics(n)
    total = 0
    for k, b in enumerate(_row(n)):
        total += b**ell * (L - ell * k * (hL[k] - hL[n - k]))
    q, rem = divmod(total, L)
    if rem:
        raise IntegralityViolation(f"C_{ell}({n}) = {total}/{L} is not an integer")
    return q


def c6_alt(form: str, n: int) -> int:
    """The two binomial-sum representations of ``C_6(n)``.

    ``"signed_central"``: ``(-1)^n sum_k binom(n,k)^2 binom(n+k,k) binom(2k,n)``.
    ``"three_n_plus_one"``: ``sum_k (-1)^k binom(3n+1,n-k) binom(n+k,k)^3``.
    """
    if form == "signed_central":
        # binom(2k, n) vanishes for 2k < n
        k0 = (n + 1) // 2
        central = comb(2 * k0, n)
        s = 0
        row, shifted = _row(n), _shifted_row(n)
        for k in range(k0, n + 1):
            s += row[k] ** 2 * shifted[k] * central
            # binom(2k+2, n) from binom(2k, n)
            central = central * (2 * k + 1) * (2 * k + 2) // ((2 * k + 1 - n) * (2 * k + 2 - n))
        return -s if n % 2 else s
    if form == "three_n_plus_one":
        N = 3 * n + 1
        top = comb(N, n)  # binom(3n+1, n-k) at k = 0
        s = 0
        for k, b in enumerate(_shifted_row(n)):
            s += (-top if k % 2 else top) * b**3
            if k < n:
                top = top * (n - k) // (N - n + k + 1)
        return s
    raise ValueError(f"unknown form {form!r}")


@lru_cache(maxsize=4096)
def d_seq(n: int) -> int:
    """``D(n) = sum_k binom(n,k)^4``."""
    return sum(b**4 for b in _row(n))


class SequenceTable:
    """Values ``s(0), ..., s(N)`` of a named integer sequence."""

    _SOURCES = {
        "A": apery,
        "D": d_seq,
        "C6_alt1": lambda n: c6_alt("signed_central", n),
        "C6_alt2": lambda n: c6_alt("three_n_plus_one", n),
    }

    def __init__(self, name: str, N: int, ell: int | None = None):
        if name == "C":
            if ell is None:
                raise ValueError("C needs the parameter ell")
            fn = lambda n: c_ell(ell, n)  # noqa: E731
        elif name in self._SOURCES:
            fn = self._SOURCES[name]
        else:
            raise ValueError(f"unknown sequence {name!r}")
        self.name, self.ell = name, ell
        self.values = tuple(fn(n) for n in range(N + 1))

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        tag = f"C_{self.ell}" if self.name == "C" else self.name
        return f"SequenceTable({tag}, N={len(self) - 1})"


def sequence_table(name: str, N: int, ell: int | None = None) -> SequenceTable:
    return SequenceTable(name, N, ell)


def apery_recurrence_residual(n: int) -> int:
    """Left side of the three-term Apéry recurrence at ``n >= 1``."""
    return (
        (n + 1) ** 3 * apery(n + 1)
        - (2 * n + 1) * (17 * n * n + 17 * n + 5) * apery(n)
        + n**3 * apery(n - 1)
    )


def check_apery_recurrence(N: int) -> CongruenceReport:
    """The recurrence residual vanishes for ``1 <= n <= N-1``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    residuals = tuple(apery_recurrence_residual(n) for n in range(1, N))
    bad = [n for n, r in enumerate(residuals, start=1) if r]
    return compare(
        "apery_recurrence", N, residuals, (0,) * len(residuals), None,
        detail=f"failing n: {bad}" if bad else "",
    )


def _m(p: int) -> int:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return (p - 1) // 2


def check_lemma_AC(p: int) -> CongruenceReport:
    """``A(m) = C_6(m) (mod p^2)``, ``m = (p-1)/2``.

    Parts: the harmonic form of ``C_6(m)`` evaluated with residues mod
    ``p^2``, and the ``binom(3m+1, m-k)`` representation.
    """
    m = _m(p)
    M = p * p
    label = str(PrimePowerModulus(p, 2))
    a = apery(m)
    H = harmonic_residues(m, 1, M)
    harm = sum(
        pow(b, 6, M) * (1 - 6 * k * (H[k] - H[m - k])) for k, b in enumerate(_row(m))
    )
    parts = (
        compare("lemma_AC:harmonic", p, a, harm, M, label),
        compare("lemma_AC:alt2", p, a, c6_alt("three_n_plus_one", m), M, label),
    )
    return compare("lemma_AC", p, a, c_ell(6, m), M, label, parts=parts)


def check_AD_mod_p(p: int) -> CongruenceReport:
    """``A(m) = D(m) (mod p)``; the mod ``p^2`` statement is recorded as expected-negative."""
    m = _m(p)
    a, d = apery(m), d_seq(m)
    sq = compare(
        "AD_mod_p2", p, a, d, p * p, str(PrimePowerModulus(p, 2)),
        negative_expected=True,
    )
    return compare("AD_mod_p", p, a, d, p, str(p), parts=(sq,))


def check_prop_C6(n: int) -> CongruenceReport:
    """The three representations of ``C_6(n)`` agree exactly."""
    c = c_ell(6, n)
    alt1, alt2 = c6_alt("signed_central", n), c6_alt("three_n_plus_one", n)
    return compare(
        "prop_C6", n, c, alt1, None,
        parts=(compare("prop_C6:alt2", n, c, alt2, None),),
    )


def symmetry_defect(m: int) -> Fraction:
    """``sum_k binom(m,k)^4 (H_{m-k} - H_k)``; zero by ``k <-> m-k``."""
    L, hL = _scaled_harmonics(m)
    s = sum(b**4 * (hL[m - k] - hL[k]) for k, b in enumerate(_row(m)))
    return Fraction(s, L)
