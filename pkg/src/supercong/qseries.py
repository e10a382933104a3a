"""Truncated integer q-series and eta quotients.

``eta(d tau)^e`` is handled as ``q^(d e / 24) * prod_n (1 - q^(d n))^e``; the
fractional q-power is tracked on :class:`EtaQuotient` and must be integral.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .exact_arith import primes_in_range
from .report import Claim, CongruenceReport, compare

__all__ = [
    "NegativeExponent",
    "QSeries",
    "EtaQuotient",
    "pentagonal_series",
    "eta_power_series",
    "EXPRESSIONS",
    "expression_series",
    "fourier_a",
    "fourier_b",
    "check_eta_consistency",
    "check_hecke_sanity",
    "write_table",
    "read_table",
    "cache_dir",
]

CACHE_ENV = "SUPERCONG_CACHE"
CACHE_VERSION = 1


class NegativeExponent(ValueError):
    """Eta quotients with negative exponents are not supported."""


_INT64_SAFE = 2**62


def _convolve(f: Sequence[int], g: Sequence[int], N: int) -> list[int]:
    """First ``N`` coefficients of the product of two integer series."""
    f, g = list(f[:N]), list(g[:N])
    if not f or not g:
        return [0] * N
    mf, mg = max(map(abs, f)), max(map(abs, g))
    if max(mf, mg) < _INT64_SAFE and mf * mg * min(len(f), len(g)) < _INT64_SAFE:
        out = np.convolve(np.array(f, dtype=np.int64), np.array(g, dtype=np.int64))
        out = [int(x) for x in out[:N]]
    else:
        out = [0] * N
        nz = [(j, c) for j, c in enumerate(g) if c]
        for i, a in enumerate(f):
            if a:
                for j, c in nz:
                    if i + j >= N:
                        break
                    out[i + j] += a * c
    return out + [0] * (N - len(out))


class QSeries:
    """``sum_{n < N} c_n q^n``, exact integer coefficients, truncated at ``q^N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int], N: int | None = None):
        c = [int(x) for x in coeffs]
        if N is not None:
            c = (c + [0] * N)[:N]
        if not c:
            raise ValueError("precision must be at least 1")
        self.coeffs = tuple(c)

    @property
    def N(self) -> int:
        return len(self.coeffs)

    @classmethod
    def one(cls, N: int) -> "QSeries":
        return cls([1], N)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.N

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "QSeries") -> "QSeries":
        N = min(self.N, other.N)
        return QSeries([a + b for a, b in zip(self.coeffs[:N], other.coeffs[:N])])

    def __sub__(self, other: "QSeries") -> "QSeries":
        N = min(self.N, other.N)
        return QSeries([a - b for a, b in zip(self.coeffs[:N], other.coeffs[:N])])

    def __neg__(self):
        return QSeries([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries([other * a for a in self.coeffs])
        if isinstance(other, QSeries):
            N = min(self.N, other.N)
            return QSeries(_convolve(self.coeffs, other.coeffs, N))
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, s: int) -> "QSeries":
        """Multiply by ``q^s`` (``s >= 0``), keeping the precision."""
        if s < 0:
            raise ValueError("shift must be nonnegative")
        return QSeries([0] * s + list(self.coeffs[: self.N - s]), self.N)

    def dilate(self, d: int) -> "QSeries":
        """Substitute ``q -> q^d``; precision becomes ``d * (N - 1) + 1``."""
        out = [0] * (d * (self.N - 1) + 1)
        out[::d] = self.coeffs
        return QSeries(out)

    def truncate(self, N: int) -> "QSeries":
        if N > self.N:
            raise ValueError("cannot extend precision")
        return QSeries(self.coeffs[:N])

    def __repr__(self):
        head = ", ".join(map(str, self.coeffs[:6]))
        return f"QSeries(N={self.N}, [{head}{', ...' if self.N > 6 else ''}])"


def pentagonal_series(N: int) -> list[int]:
    """``prod_{n>=1} (1 - q^n)`` to precision ``N`` via Euler's pentagonal theorem."""
    out = [0] * N
    k = 0
    while True:
        hit = False
        for g in ({k * (3 * k - 1) // 2, k * (3 * k + 1) // 2} if k else {0}):
            if g < N:
                out[g] = -1 if k % 2 else 1
                hit = True
        if not hit and k:
            break
        k += 1
    return out


def _power(g: list[int], e: int, N: int) -> list[int]:
    """``g^e`` for ``g_0 = 1`` by the J.C.P. Miller recurrence.

    ``n f_n = sum_{k=1}^n ((e+1) k - n) g_k f_{n-k}``.
    """
    f = [0] * N
    f[0] = 1
    nz = [(k, c) for k, c in enumerate(g[:N]) if c and k]
    for n in range(1, N):
        s = 0
        for k, c in nz:
            if k > n:
                break
            s += ((e + 1) * k - n) * c * f[n - k]
        q, r = divmod(s, n)
        if r:
            raise ArithmeticError("non-integral power series coefficient")
        f[n] = q
    return f


def _naive_eta(d: int, e: int, N: int) -> list[int]:
    c = [0] * N
    c[0] = 1
    n = 1
    while d * n < N:
        step = d * n
        for _ in range(e):
            for i in range(N - 1, step - 1, -1):
                c[i] -= c[i - step]
        n += 1
    return c


def eta_power_series(d: int, e: int, N: int, method: str = "pentagonal") -> QSeries:
    """``prod_{n>=1} (1 - q^(d n))^e`` truncated at ``q^N`` (no ``q^(de/24)`` factor).

    ``method="naive"`` multiplies the factors ``(1 - q^(dn))`` one at a time;
    ``"pentagonal"`` raises Euler's series to the ``e``-th power.
    """
    if N < 1 or d < 1:
        raise ValueError("need N >= 1 and d >= 1")
    if e < 0:
        raise NegativeExponent(f"exponent {e} < 0 is not supported")
    if e == 0:
        return QSeries.one(N)
    if method == "naive":
        return QSeries(_naive_eta(d, e, N))
    if method != "pentagonal":
        raise ValueError(f"unknown method {method!r}")
    n0 = (N - 1) // d + 1
    base = _power(pentagonal_series(n0), e, n0) if e > 1 else pentagonal_series(n0)
    # indices between d*(n0-1) and N-1 that are not multiples of d are zero
    return QSeries(QSeries(base).dilate(d).coeffs, N) if d > 1 else QSeries(base, N)


@dataclass(frozen=True)
class EtaQuotient:
    """``prod eta(d tau)^e`` over ``factors = ((d, e), ...)``."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(e < 0 for _, e in self.factors):
            raise NegativeExponent("negative eta exponents are not supported")
        if self.leading_power.denominator != 1 or self.leading_power < 0:
            raise ValueError(f"leading q-power {self.leading_power} is not a nonnegative integer")

    @property
    def leading_power(self) -> Fraction:
        return Fraction(sum(d * e for d, e in self.factors), 24)

    def series(self, N: int, method: str = "pentagonal") -> QSeries:
        """Coefficients of ``q^0 .. q^(N-1)`` including the leading power."""
        s = int(self.leading_power)
        if s >= N:
            return QSeries([0] * N)
        M = N - s
        out = QSeries.one(M)
        for d, e in self.factors:
            out = out * eta_power_series(d, e, M, method)
        return QSeries([0] * s + list(out.coeffs), N)


# Linear combinations sum c * EtaQuotient.
EXPRESSIONS: dict[str, tuple[tuple[int, EtaQuotient], ...]] = {
    "eta24": ((1, EtaQuotient(((2, 4), (4, 4)))),),
    "eta1_4": ((1, EtaQuotient(((1, 8), (4, 4)))), (8, EtaQuotient(((4, 12),)))),
    "eta2_8": ((1, EtaQuotient(((2, 12),))), (32, EtaQuotient(((2, 4), (8, 8))))),
}


def cache_dir(path: str | os.PathLike | None = None) -> Path | None:
    """Cache directory: explicit argument, else ``$SUPERCONG_CACHE``, else none."""
    if path is not None:
        return Path(path)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def write_table(path: str | os.PathLike, expr: str, coeffs: Sequence[int]) -> None:
    """Write ``(index, coefficient)`` pairs with a versioned header."""
    lines = [f"# supercong-qseries v{CACHE_VERSION} expr={expr} N={len(coeffs)}"]
    lines += [f"{i} {c}" for i, c in enumerate(coeffs)]
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    tmp.replace(path)


def read_table(path: str | os.PathLike) -> tuple[str, list[int]]:
    """Inverse of :func:`write_table`; returns ``(expr, coefficients)``."""
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 5 or header[:2] != ["#", "supercong-qseries"]:
            raise ValueError(f"{path}: not a q-series table")
        if header[2] != f"v{CACHE_VERSION}":
            raise ValueError(f"{path}: unsupported version {header[2]}")
        expr = header[3].removeprefix("expr=")
        N = int(header[4].removeprefix("N="))
        coeffs = [0] * N
        seen = 0
        for line in fh:
            i, c = line.split()
            coeffs[int(i)] = int(c)
            seen += 1
    if seen != N:
        raise ValueError(f"{path}: expected {N} rows, found {seen}")
    return expr, coeffs


def _cached_file(directory: Path, expr: str, N: int) -> Path | None:
    best = None
    for f in directory.glob(f"{expr}_*.txt"):
        try:
            n = int(f.stem.rsplit("_", 1)[1])
        except ValueError:
            continue
        if n >= N and (best is None or n < best[0]):
            best = (n, f)
    return best[1] if best else None


@lru_cache(maxsize=16)
def _expand(expr: str, N: int, method: str) -> tuple[int, ...]:
    total = QSeries([0] * N)
    for c, quotient in EXPRESSIONS[expr]:
        total = total + c * quotient.series(N, method)
    return total.coeffs


def expression_series(expr: str, N: int, cache: str | os.PathLike | None = None,
                      method: str = "pentagonal") -> QSeries:
    """Coefficients of ``q^0 .. q^(N-1)`` of a named eta expression.

    With a cache directory, tables are looked up (any stored precision
    ``>= N`` is reused) and written after a fresh expansion.
    """
    if expr not in EXPRESSIONS:
        raise KeyError(f"unknown expression {expr!r}")
    directory = cache_dir(cache)
    if directory is not None:
        hit = _cached_file(directory, expr, N)
        if hit is not None:
            stored, coeffs = read_table(hit)
            if stored == expr:
                return QSeries(coeffs[:N])
    coeffs = _expand(expr, N, method)
    if directory is not None:
        directory.mkdir(parents=True, exist_ok=True)
        write_table(directory / f"{expr}_{N}.txt", expr, coeffs)
    return QSeries(coeffs)


def fourier_a(N: int, cache=None) -> tuple[int, ...]:
    """``a(0..N)`` of ``eta(2 tau)^4 eta(4 tau)^4``; ``a(0) = 0``."""
    return expression_series("eta24", N + 1, cache).coeffs


def fourier_b(N: int, expression: str = "eta1_4", cache=None) -> tuple[int, ...]:
    """``b(0..N)`` of the weight-6 newform via either eta expression; ``b(0) = 0``."""
    if expression not in ("eta1_4", "eta2_8"):
        raise ValueError(f"unknown expression {expression!r}")
    return expression_series(expression, N + 1, cache).coeffs


def check_eta_consistency(N: int, cache=None) -> CongruenceReport:
    """Both weight-6 eta expressions agree through ``q^N``."""
    one = fourier_b(N, "eta1_4", cache)
    two = fourier_b(N, "eta2_8", cache)
    bad = [n for n in range(N + 1) if one[n] != two[n]]
    return compare(
        "eta_consistency", N, one[1:4], two[1:4], None,
        detail=f"first mismatch at q^{bad[0]}" if bad else "",
        parts=(compare("eta_consistency:all", N, one == two, True, None),),
    )


def _weil(coeffs, p: int, weight: int) -> bool:
    return coeffs[p] ** 2 < 4 * p ** (weight - 1)


def check_hecke_sanity(p_max: int, cache=None) -> list[CongruenceReport]:
    """Multiplicativity, the Hecke relation at ``p^2`` and Weil bounds.

    Weil bounds are checked for every prime ``p <= p_max``; ``b(p q)`` and
    ``b(p^2)`` relations for all pairs within the computed precision ``p_max``.
    """
    a = fourier_a(p_max, cache)
    b = fourier_b(p_max, cache=cache)
    primes = primes_in_range(2, p_max)
    reports = []
    for p in primes:
        reports.append(compare("weil:a", p, _weil(a, p, 4), True, None, claim=Claim.SANITY,
                               detail=f"a(p) = {a[p]}"))
        reports.append(compare("weil:b", p, _weil(b, p, 6), True, None, claim=Claim.SANITY,
                               detail=f"b(p) = {b[p]}"))
        if p > 2 and p * p <= p_max:
            reports.append(compare("hecke:b(p^2)", p, b[p * p], b[p] ** 2 - p**5, None,
                                   claim=Claim.SANITY))
            reports.append(compare("hecke:a(p^2)", p, a[p * p], a[p] ** 2 - p**3, None,
                                   claim=Claim.SANITY))
        for q in primes:
            if q > p and p * q <= p_max:
                pq = p * q
                reports.append(compare("hecke:b(pq)", pq, b[pq], b[p] * b[q], None,
                                       claim=Claim.SANITY))
                reports.append(compare("hecke:a(pq)", pq, a[pq], a[p] * a[q], None,
                                       claim=Claim.SANITY))
    return reports
