"""Truncated hypergeometric sums and the harmonic sums X_l, Y_l, Z_l.

Truncated sums are evaluated either exactly (then reduced) or in a streaming
mode that carries each term as ``p**v * u`` with ``u`` a unit modulo
``p**r``. The two routes agree whenever both are defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .apery import apery
from .exact_arith import (
    NonInvertibleDenominator,
    PrimePowerModulus,
    ResidueClass,
    is_prime,
    padic_valuation,
    reduce_rational,
    split_valuation,
)
from .harmonic import central_ratio, harmonic_residues, harmonic_table
from .report import CongruenceReport, compare, compare_each

__all__ = [
    "ZeroDenominator",
    "TruncatedHyperSpec",
    "truncated_pFq",
    "truncated_pFq_mod",
    "hyper_terms",
    "wt6_spec",
    "wt4_spec",
    "lhs_wt6",
    "lhs_wt4",
    "tail_valuations",
    "xyz",
    "xyz_mod",
    "lift",
    "check_lemma51",
    "check_lemma52",
    "check_osmain",
]

HALF = Fraction(1, 2)


class ZeroDenominator(ZeroDivisionError):
    """A retained term of a truncated series has a vanishing denominator."""


@dataclass(frozen=True)
class TruncatedHyperSpec:
    """``sum_{k=0}^{bound} prod (a_i)_k / prod (b_j)_k * z^k / k!``."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    z: Fraction = Fraction(1)
    bound: int = 0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        object.__setattr__(self, "z", Fraction(self.z))
        if self.bound < 0:
            raise ValueError("bound must be nonnegative")
        for b in self.lower:
            # (b)_k = 0 for k > -b when b is a nonpositive integer
            if b.denominator == 1 and b <= 0 and -b < self.bound:
                raise ZeroDenominator(f"lower parameter {b} vanishes within the bound")

    def ratio(self, k: int) -> Fraction:
        """``t_{k+1} / t_k``."""
        num = Fraction(1)
        for a in self.upper:
            num *= a + k
        den = Fraction(k + 1)
        for b in self.lower:
            den *= b + k
        return num * self.z / den


def hyper_terms(spec: TruncatedHyperSpec) -> list[Fraction]:
    """Exact terms ``t_0, ..., t_bound``."""
    terms = [Fraction(1)]
    for k in range(spec.bound):
        terms.append(terms[-1] * spec.ratio(k))
    return terms


def truncated_pFq(spec: TruncatedHyperSpec) -> Fraction:
    return sum(hyper_terms(spec), Fraction(0))


def truncated_pFq_mod(spec: TruncatedHyperSpec, m: PrimePowerModulus) -> ResidueClass:
    """Streaming reduction of the truncated sum modulo ``p**r``.

    Each term is held as ``(v, u)`` with ``term = p**v * u``; terms with
    ``v >= r`` drop out. Raises NonInvertibleDenominator if a retained term
    has negative valuation.
    """
    p, M, r = m.p, m.modulus, m.r
    v, u = 0, 1
    total = 1
    for k in range(spec.bound):
        q = spec.ratio(k)
        if q == 0:
            break
        vn, un = split_valuation(q.numerator, p)
        vd, ud = split_valuation(q.denominator, p)
        v += vn - vd
        u = u * un % M * pow(ud, -1, M) % M
        if v < 0:
            raise NonInvertibleDenominator(f"term {k + 1} has valuation {v}")
        if v < r:
            total += pow(p, v) * u
    return ResidueClass(total, m)


def wt6_spec(p: int, bound: int | None = None) -> TruncatedHyperSpec:
    return TruncatedHyperSpec((HALF,) * 6, (Fraction(1),) * 5, Fraction(1),
                              p - 1 if bound is None else bound)


def wt4_spec(p: int, bound: int | None = None) -> TruncatedHyperSpec:
    return TruncatedHyperSpec((HALF,) * 4, (Fraction(1),) * 3, Fraction(1),
                              p - 1 if bound is None else bound)


def lhs_wt6(p: int, r: int = 3, exact: bool = False) -> ResidueClass:
    """Truncated 6F5(1) with bound ``p-1``, modulo ``p**r``."""
    m = PrimePowerModulus(p, r)
    if exact:
        return reduce_rational(truncated_pFq(wt6_spec(p)), m)
    return truncated_pFq_mod(wt6_spec(p), m)


def lhs_wt4(p: int, r: int = 3, exact: bool = False) -> ResidueClass:
    """Truncated 4F3(1) with bound ``p-1``, modulo ``p**r``."""
    m = PrimePowerModulus(p, r)
    if exact:
        return reduce_rational(truncated_pFq(wt4_spec(p)), m)
    return truncated_pFq_mod(wt4_spec(p), m)


def tail_valuations(p: int, depth: int = 6) -> list[int]:
    """p-adic valuations of the terms ``(1/2)_k^depth / k!^depth``, ``m < k <= p-1``."""
    m = (p - 1) // 2
    return [padic_valuation(central_ratio(k) ** depth, p) for k in range(m + 1, p)]


def _check_prime(p: int) -> int:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return (p - 1) // 2


def _lam_int(lam: int, p: int) -> int:
    lam %= p
    if lam == 0:
        raise ValueError("lambda must be a nonzero residue mod p")
    return lam


_KINDS = ("X", "Y", "Z")


def xyz(kind: str, ell: int, p: int, lam: int = 1) -> Fraction:
    """Exact value of ``X_l``, ``Y_l`` or ``Z_l`` at ``(p, lambda)``.

    ``lambda`` enters through its integer representative in ``[1, p-1]``.
    For ``lambda != 1`` the powers ``lambda^(k p^2)`` make this expensive
    beyond small ``p``; use :func:`xyz_mod` for reductions.
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    if ell < 2:
        raise ValueError("ell must be at least 2")
    m = _check_prime(p)
    lam = _lam_int(lam, p)
    H, H2 = harmonic_table(p, 1), harmonic_table(p, 2)
    total = Fraction(0)
    for k in range(m + 1):
        if kind == "Z":
            term = central_ratio(k) ** (2 * ell)
            e = k * p * p
        else:
            base = (comb(m + k, k) * comb(m, k)) ** ell
            if ell * k % 2:
                base = -base
            d = H[m + k] - H[k]
            if kind == "X":
                poly = (1 + 4 * ell * k * d + 2 * ell * ell * k * k * d * d
                        - ell * k * k * (H2[m + k] - H2[k]))
                e = k
            else:
                poly = 1 + 2 * ell * k * d - ell * k * (H[m + k] - H[m - k])
                e = k * p
            term = base * poly
        total += term / Fraction(lam) ** e if lam != 1 else term
    return total * lam**m


def lift(lam: int, p: int, r: int, mode: str = "teichmuller") -> int:
    """Representative of ``lambda`` modulo ``p**r``.

    ``"teichmuller"``: the root of unity congruent to ``lambda`` mod ``p``;
    ``"integer"``: the integer in ``[1, p-1]``.
    """
    lam = _lam_int(lam, p)
    if mode == "integer":
        return lam
    if mode == "teichmuller":
        M = p**r
        return pow(lam, p ** (r - 1), M)
    raise ValueError(f"unknown lift {mode!r}")


def xyz_mod(kind: str, ell: int, p: int, lam: int = 1, r: int = 3,
            lift_mode: str = "teichmuller") -> ResidueClass:
    """``X_l``, ``Y_l`` or ``Z_l`` reduced modulo ``p**r``.

    Computed with residue arithmetic throughout; with ``lift_mode="integer"``
    this equals ``reduce_rational(xyz(...))``.
    """
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}")
    if ell < 2:
        raise ValueError("ell must be at least 2")
    m = _check_prime(p)
    mod = PrimePowerModulus(p, r)
    M = mod.modulus
    L = lift(lam, p, r, lift_mode)
    Linv = pow(L, -1, M)
    H = harmonic_residues(p - 1, 1, M)
    H2 = harmonic_residues(p - 1, 2, M)
    step = {"X": Linv, "Y": pow(Linv, p, M), "Z": pow(Linv, p * p, M)}[kind]
    inv16 = pow(16, -ell, M)
    total, w = 0, 1
    for k in range(m + 1):
        if kind == "Z":
            term = pow(comb(2 * k, k), 2 * ell, M) * pow(inv16, k, M)
        else:
            base = pow(comb(m + k, k) * comb(m, k), ell, M)
            if ell * k % 2:
                base = -base
            d = H[m + k] - H[k]
            if kind == "X":
                poly = (1 + 4 * ell * k * d + 2 * ell * ell * k * k * d * d
                        - ell * k * k * (H2[m + k] - H2[k]))
            else:
                poly = 1 + 2 * ell * k * d - ell * k * (H[m + k] - H[m - k])
            term = base * poly
        total = (total + term * w) % M
        w = w * step % M
    return ResidueClass(total * pow(L, m, M), mod)


def _res(x, p: int, r: int = 1) -> int:
    return reduce_rational(x, PrimePowerModulus(p, r)).value


def check_lemma51(p: int) -> CongruenceReport:
    """``X_3(p,1) - Y_2(p,1) = (-1)^m - 1 (mod p)``.

    Parts: ``Y_2(p,1) = 1`` exactly, and ``X_3(p,1) = (-1)^m (mod p)``.
    """
    m = _check_prime(p)
    x3, y2 = xyz("X", 3, p), xyz("Y", 2, p)
    sign = -1 if m % 2 else 1
    parts = (
        compare("lemma51:Y2", p, y2, Fraction(1), None),
        compare("lemma51:key", p, _res(x3, p), sign, p, str(p)),
    )
    return compare("lemma51", p, _res(x3 - y2, p), sign - 1, p, str(p), parts=parts)


def _der_sums(p: int) -> tuple[Fraction, Fraction, Fraction]:
    """The sums der1, der2 and the closing sum of the Y_3 - Z_2 computation."""
    m = (p - 1) // 2
    H, H2 = harmonic_table(p, 1), harmonic_table(p, 2)
    hm = H[m]
    d1 = d2 = fin = Fraction(0)
    for k in range(m + 1):
        b6 = comb(m, k) ** 6
        a, c = H[k], H[m - k]
        a2, c2 = H2[k], H2[m - k]
        w = m - 2 * k
        d1 += b6 * (2 * (a + c - 2 * hm) + 6 * w * (a * a - c * c)
                    - 12 * w * (a - c) * hm + w * (a2 - c2))
        d2 += b6 * (6 * (a - c) ** 2 + (a2 + c2))
        fin += b6 * ((a + c - 2 * hm) - 18 * m * a * c - 6 * w * (a - c) * hm
                     + (2 * m - k) * (6 * a * a + a2) + (m + k) * (6 * c * c + c2))
    return d1, d2, fin


def _b_summand(m: int, k: int, H) -> Fraction:
    return ((-1) ** m * comb(m + k, m) * comb(2 * m - k, m) * comb(m, k) ** 4
            * (2 + (m - 2 * k) * (5 * H[k] - 5 * H[m - k] - H[m + k] + H[2 * m - k])))


def _c_summand(m: int, k: int, H) -> Fraction:
    return ((-1) ** k * comb(m + k, k) ** 3 * comb(m, k) ** 3
            * (1 + 3 * k * (H[m + k] + H[m - k] - 2 * H[k])))


def check_lemma52(p: int) -> CongruenceReport:
    """``Y_3(p,1) = Z_2(p,1) (mod p^2)`` with its constituent congruences.

    Parts: ``Z_2(p,1) = A(m)`` (summed and termwise), the two mod-``p``
    vanishing sums der1/der2, the termwise expansions of ``b(m,k)`` and of the
    symmetrized ``c(m,k)``, the closing decomposition into der1/der2, and
    ``Y_3(p,1) = A(m) (mod p^2)``.
    """
    m = _check_prime(p)
    M = p * p
    lab2 = str(PrimePowerModulus(p, 2))
    H, H2 = harmonic_table(p, 1), harmonic_table(p, 2)
    y3, z2 = xyz("Y", 3, p), xyz("Z", 2, p)
    a = apery(m)

    ztoa_terms = compare_each(
        "lemma52:ztoa_terms", p,
        [_res(central_ratio(k) ** 2, p, 2) for k in range(m + 1)],
        [(-1) ** k * comb(m + k, m) * comb(m, k) for k in range(m + 1)],
        M, lab2,
    )
    d1, d2, fin = _der_sums(p)

    hm = H[m]
    bexp_l, bexp_r, cc_l, cc_r = [], [], [], []
    for k in range(m + 1):
        hk, hc = H[k], H[m - k]
        w = m - 2 * k
        bexp_l.append(_res(_b_summand(m, k, H), p, 2))
        bexp_r.append(_res(comb(m, k) ** 6 * (
            2 + 6 * w * (hk - hc) + 2 * p * (hk + hc - 2 * hm)
            + 6 * p * w * (hk * hk - hc * hc) - 12 * p * w * (hk - hc) * hm
            + p * w * (H2[k] - H2[m - k])), p, 2))
        cc_l.append(_res((_c_summand(m, k, H) + _c_summand(m, m - k, H)) / 2, p, 2))
        cc_r.append(_res(comb(m, k) ** 6 * (
            1 + 3 * w * (hk - hc) + Fraction(3, 2) * p * (hk + hc - 2 * hm)
            - 9 * p * m * hk * hc - 9 * p * w * (hk - hc) * hm
            + 9 * p * (m - k) * hk * hk + 9 * p * k * hc * hc
            + Fraction(3, 2) * p * (m - k) * H2[k] + Fraction(3, 2) * p * k * H2[m - k]), p, 2))

    parts = (
        compare("lemma52:ztoa", p, _res(z2, p, 2), a, M, lab2),
        ztoa_terms,
        compare("lemma52:der1", p, _res(d1, p), 0, p, str(p)),
        compare("lemma52:der2", p, _res(d2, p), 0, p, str(p)),
        compare_each("lemma52:bexp", p, bexp_l, bexp_r, M, lab2),
        compare_each("lemma52:c+c", p, cc_l, cc_r, M, lab2),
        compare("lemma52:closing", p, fin, d1 / 2 + Fraction(3 * m, 2) * d2, None),
        compare("lemma52:difference", p, _res(y3 - z2, p, 2), _res(Fraction(p, 2) * fin, p, 2),
                M, lab2),
        compare("cong_intro", p, _res(y3, p, 2), a, M, lab2),
    )
    return compare("lemma52", p, _res(y3, p, 2), _res(z2, p, 2), M, lab2, parts=parts)


def check_osmain(ell: int, p: int, lam: int = 1, backend: str = "float",
                 lift_mode: str = "teichmuller") -> CongruenceReport:
    """``p^(2l-1) * 2lF(2l-1)(lambda) = -(p^2 X + p Y + Z) (mod p^3)``."""
    from .gaussian import gauss_nFn

    if ell not in (2, 3):
        raise ValueError("ell must be 2 or 3")
    _check_prime(p)
    M = p**3
    left = gauss_nFn(p, 2 * ell - 1, lam, backend=backend).scaled
    x = xyz_mod("X", ell, p, lam, 3, lift_mode).value
    y = xyz_mod("Y", ell, p, lam, 3, lift_mode).value
    z = xyz_mod("Z", ell, p, lam, 3, lift_mode).value
    right = -(p * p * x + p * y + z)
    return compare(f"osmain:l={ell}:lam={lam % p}", p, left, right, M,
                   str(PrimePowerModulus(p, 3)))
