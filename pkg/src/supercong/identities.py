"""Partial fractions of three rational functions and the harmonic-sum identities they yield.

The families, for an integer ``n >= 0``:

    R(t)     = prod_{j=1}^n (t-j)^2 / prod_{j=0}^n (t+j)^2
    Rtilde(t) = prod_{j=1}^n (t-j)^3 / prod_{j=0}^n (t+j)^3
    Rhat(t)  = n!^2 (2t+n) prod_{j=1}^n (t-j)(t+n+j) / prod_{j=0}^n (t+j)^4

Closed-form coefficients are checked against exact Laurent expansions at
each pole, and decompositions are certified by evaluation at more integer
points than the degree of the common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm

from .apery import apery
from .harmonic import harmonic_table
from .report import CongruenceReport, compare

__all__ = [
    "ReconstructionFailure",
    "PartialFractionDecomp",
    "FAMILIES",
    "evaluate",
    "laurent_coefficients",
    "pf_coeffs_R",
    "pf_coeffs_Rtilde",
    "pf_coeffs_Rhat",
    "reconstruct",
    "id1_sum",
    "res1_sum",
    "res3_sum",
    "br_summand",
    "br_sum",
    "check_id1",
    "check_res1_res3",
    "check_BR",
    "residue_relations",
    "identity_reports",
]

FAMILIES = ("R", "Rtilde", "Rhat")
_ORDER = {"R": 2, "Rtilde": 3, "Rhat": 4}


class ReconstructionFailure(ArithmeticError):
    """A partial fraction decomposition does not reproduce its function."""


def _factors(family: str, n: int) -> tuple[Fraction, list[tuple[int, int]], int]:
    """``(constant, numerator factors (a, b) for a t + b, pole order)``."""
    if family == "R":
        return Fraction(1), [(1, -j) for j in range(1, n + 1)] * 2, 2
    if family == "Rtilde":
        return Fraction(1), [(1, -j) for j in range(1, n + 1)] * 3, 3
    if family == "Rhat":
        num = [(2, n)] + [(1, -j) for j in range(1, n + 1)] + [(1, n + j) for j in range(1, n + 1)]
        return Fraction(factorial(n) ** 2), num, 4
    raise ValueError(f"unknown family {family!r}")


def evaluate(family: str, n: int, t) -> Fraction:
    """Exact value of the rational function at ``t`` (not a pole)."""
    const, num, e = _factors(family, n)
    t = Fraction(t)
    value = const
    for a, b in num:
        value *= a * t + b
    for j in range(n + 1):
        if t + j == 0:
            raise ZeroDivisionError(f"t = {t} is a pole")
        value /= (t + j) ** e
    return value


def _series_mul_linear(s: list[Fraction], a: Fraction, b: Fraction) -> list[Fraction]:
    """``s(x) * (b + a x)`` truncated to ``len(s)`` terms."""
    out = [b * c for c in s]
    for i in range(1, len(s)):
        out[i] += a * s[i - 1]
    return out


def _series_div_linear(s: list[Fraction], b: Fraction) -> list[Fraction]:
    """``s(x) / (b + x)`` truncated to ``len(s)`` terms."""
    out = []
    prev = Fraction(0)
    for c in s:
        prev = (c - prev) / b
        out.append(prev)
    return out


def laurent_coefficients(family: str, n: int, k: int) -> tuple[Fraction, ...]:
    """Coefficients of ``(t+k)^-e, ..., (t+k)^-1`` at the pole ``t = -k``.

    Obtained by expanding ``R(t) (t+k)^e`` in powers of ``s = t + k``.
    """
    const, num, e = _factors(family, n)
    s = [const] + [Fraction(0)] * (e - 1)
    for a, b in num:
        # a t + b = a (s - k) + b
        s = _series_mul_linear(s, Fraction(a), Fraction(b - a * k))
    for j in range(n + 1):
        if j != k:
            for _ in range(e):
                s = _series_div_linear(s, Fraction(j - k))
    return tuple(s)


@dataclass(frozen=True)
class PartialFractionDecomp:
    """``sum_k sum_i coeffs[k][i] / (t+k)^(e-i)``, highest pole order first."""

    family: str
    n: int
    coeffs: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        return _ORDER[self.family]

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        total = Fraction(0)
        for k, row in enumerate(self.coeffs):
            x = 1 / (t + k)
            acc = Fraction(0)
            for c in row:  # Horner in x, constant term last
                acc = (acc + c) * x
            total += acc
        return total

    def column(self, i: int) -> tuple[Fraction, ...]:
        return tuple(row[i] for row in self.coeffs)


def reconstruct(pf: PartialFractionDecomp) -> bool:
    """Check ``pf`` against its function at ``deg(denominator) + 1`` integer points.

    Both sides are multiplied by the common denominator ``D(t) = prod (t+j)^e``
    and by the lcm ``Q`` of the coefficient denominators, so the comparison is
    between integers. Agreement at that many points proves the identity.
    """
    n, e = pf.n, pf.order
    const, num, _ = _factors(pf.family, n)
    Q = lcm(*(c.denominator for row in pf.coeffs for c in row), const.denominator)
    scaled = [[int(c * Q) for c in row] for row in pf.coeffs]
    qc = int(const * Q)
    points = e * (n + 1) + 1
    for t in range(n + 1, n + 1 + points):
        lhs = qc
        for a, b in num:
            lhs *= a * t + b
        # D(t) / (t+k)^e via prefix and suffix products
        w = [(t + j) ** e for j in range(n + 1)]
        pre = [1] * (n + 2)
        for j in range(n + 1):
            pre[j + 1] = pre[j] * w[j]
        rhs, suf = 0, 1
        for k in range(n, -1, -1):
            rest = pre[k] * suf
            acc, x = 0, 1
            for c in scaled[k]:  # row[i] sits over (t+k)^(e-i)
                acc += c * x
                x *= t + k
            rhs += acc * rest
            suf *= w[k]
        if lhs != rhs:
            return False
    return True


def _checked(pf: PartialFractionDecomp) -> PartialFractionDecomp:
    if not reconstruct(pf):
        raise ReconstructionFailure(f"{pf.family} decomposition fails for n = {pf.n}")
    return pf


def pf_coeffs_R(n: int, verify: bool = True) -> PartialFractionDecomp:
    """``A_k = binom(n+k,k)^2 binom(n,k)^2``, ``B_k = 2 A_k (2 H_k - H_{n+k} - H_{n-k})``."""
    H = harmonic_table(2 * n)
    rows = []
    for k in range(n + 1):
        A = Fraction((comb(n + k, k) * comb(n, k)) ** 2)
        rows.append((A, 2 * A * ((H[k] - H[n + k]) + (H[k] - H[n - k]))))
    pf = PartialFractionDecomp("R", n, tuple(rows))
    return _checked(pf) if verify else pf


def pf_coeffs_Rtilde(n: int, verify: bool = True) -> PartialFractionDecomp:
    """Closed forms for the order-3 decomposition."""
    H, H2 = harmonic_table(2 * n, 1), harmonic_table(2 * n, 2)
    rows = []
    for k in range(n + 1):
        A = Fraction((-1) ** (n + k) * (comb(n + k, k) * comb(n, k)) ** 3)
        d = 2 * H[k] - H[n + k] - H[n - k]
        d2 = H2[n + k] - 2 * H2[k] - H2[n - k]
        rows.append((A, 3 * A * d, Fraction(9, 2) * A * d * d - Fraction(3, 2) * A * d2))
    pf = PartialFractionDecomp("Rtilde", n, tuple(rows))
    return _checked(pf) if verify else pf


def _rhat_closed(n: int, k: int, H) -> tuple[Fraction, Fraction]:
    base = (-1) ** n * comb(n + k, n) * comb(2 * n - k, n) * comb(n, k) ** 4
    A = Fraction(base * ((n - k) - k))
    B = base * (2 + (n - 2 * k) * (-(H[n + k] - H[k]) + (H[2 * n - k] - H[n - k])
                                   - 4 * (H[n - k] - H[k])))
    return A, B


def pf_coeffs_Rhat(n: int, verify: bool = True) -> PartialFractionDecomp:
    """Closed forms for the two leading coefficients; the remaining two from
    the Laurent expansion at each pole."""
    H = harmonic_table(2 * n)
    rows = []
    for k in range(n + 1):
        A, B = _rhat_closed(n, k, H)
        local = laurent_coefficients("Rhat", n, k)
        if (A, B) != local[:2]:
            raise ReconstructionFailure(f"Rhat closed form disagrees at n={n}, k={k}")
        rows.append((A, B, local[2], local[3]))
    pf = PartialFractionDecomp("Rhat", n, tuple(rows))
    return _checked(pf) if verify else pf


def id1_sum(n: int) -> Fraction:
    H = harmonic_table(2 * n)
    return sum(
        ((comb(n + k, k) * comb(n, k)) ** 2
         * (1 - 2 * k * (2 * H[k] - H[n + k] - H[n - k])) for k in range(n + 1)),
        Fraction(0),
    )


def _res_terms(n: int):
    H, H2 = harmonic_table(2 * n, 1), harmonic_table(2 * n, 2)
    for k in range(n + 1):
        w = (-1) ** k * (comb(n + k, k) * comb(n, k)) ** 3
        d = 2 * H[k] - H[n + k] - H[n - k]
        d2 = H2[n + k] - 2 * H2[k] - H2[n - k]
        yield k, w, d, d2


def res1_sum(n: int) -> Fraction:
    return sum((w * (3 * d * d - d2) for _, w, d, d2 in _res_terms(n)), Fraction(0))


def res3_sum(n: int) -> Fraction:
    return sum(
        (w * (1 - 6 * k * d + Fraction(9, 2) * k * k * d * d - Fraction(3, 2) * k * k * d2)
         for k, w, d, d2 in _res_terms(n)),
        Fraction(0),
    )


def br_summand(n: int, k: int) -> Fraction:
    """Summand of the Bailey-type double-binomial sum, sign ``(-1)^n`` included."""
    H = harmonic_table(2 * n)
    return ((-1) ** n * comb(n + k, n) * comb(2 * n - k, n) * comb(n, k) ** 4
            * (2 + (n - 2 * k) * (5 * H[k] - 5 * H[n - k] - H[n + k] + H[2 * n - k])))


def br_sum(n: int) -> Fraction:
    return sum((br_summand(n, k) for k in range(n + 1)), Fraction(0)) / 2


def check_id1(n: int) -> bool:
    return id1_sum(n) == 1


def check_res1_res3(n: int) -> bool:
    """Res1 = 0, Res3 = (-1)^n and the middle relation ``sum (B~_k - k C~_k) = 0``."""
    pf = pf_coeffs_Rtilde(n, verify=False)
    middle = sum((row[1] - k * row[2] for k, row in enumerate(pf.coeffs)), Fraction(0))
    return res1_sum(n) == 0 and res3_sum(n) == (-1) ** n and middle == 0


def check_BR(n: int) -> bool:
    return br_sum(n) == apery(n)


def residue_relations(n: int) -> dict[str, tuple[Fraction, int]]:
    """Residue sums fixed by the decay at infinity, as ``name: (value, expected)``."""
    R = pf_coeffs_R(n, verify=False).coeffs
    Rt = pf_coeffs_Rtilde(n, verify=False).coeffs
    z = Fraction(0)
    return {
        "R:sum B": (sum((B for _, B in R), z), 0),
        "R:sum A-kB": (sum((A - k * B for k, (A, B) in enumerate(R)), z), 1),
        "Rtilde:sum C": (sum((c for _, _, c in Rt), z), 0),
        "Rtilde:sum B-kC": (sum((b - k * c for k, (_, b, c) in enumerate(Rt)), z), 0),
        "Rtilde:sum A-2kB+k^2C": (
            sum((a - 2 * k * b + k * k * c for k, (a, b, c) in enumerate(Rt)), z), 1),
    }


def identity_reports(n: int, reconstruct_max: int = 50) -> list[CongruenceReport]:
    """Exact identity checks at ``n`` as report rows."""
    rows = [
        compare("id1", n, id1_sum(n), Fraction(1), None),
        compare("Res1", n, res1_sum(n), Fraction(0), None),
        compare("Res3", n, res3_sum(n), Fraction((-1) ** n), None),
        compare("BR", n, br_sum(n), Fraction(apery(n)), None),
    ]
    for name, (value, expected) in residue_relations(n).items():
        rows.append(compare(f"residues:{name}", n, value, Fraction(expected), None))
    sym = all(br_summand(n, k) == br_summand(n, n - k) for k in range(n + 1))
    rows.append(compare("BR:symmetry", n, sym, True, None))
    if n <= reconstruct_max:
        for build in (pf_coeffs_R, pf_coeffs_Rtilde, pf_coeffs_Rhat):
            pf = build(n, verify=False)
            try:
                ok = reconstruct(pf)
            except ReconstructionFailure:
                ok = False
            rows.append(compare(f"pf:{pf.family}", n, ok, True, None))
    return rows
