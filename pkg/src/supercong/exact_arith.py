"""Exact integers, rationals and residues modulo odd prime powers.

Python's ``int`` is the arbitrary-precision integer type and
``fractions.Fraction`` the exact rational type used throughout the package.
This module adds the prime-power modulus and residue-class types, rational
reduction and p-adic valuations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "NonInvertible",
    "NonInvertibleDenominator",
    "PrimePowerModulus",
    "ResidueClass",
    "is_prime",
    "primes_in_range",
    "odd_primes",
    "reduce_rational",
    "mod_inverse",
    "padic_valuation",
    "int_valuation",
    "split_valuation",
]

_TRIAL_LIMIT = 10**6
# Deterministic for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class NonInvertible(ArithmeticError):
    """Raised when inverting a residue divisible by p."""


class NonInvertibleDenominator(NonInvertible):
    """Raised when reducing a rational whose denominator is divisible by p."""


@lru_cache(maxsize=None)
def _small_primes() -> tuple[int, ...]:
    limit = 1000  # sqrt(_TRIAL_LIMIT)
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _miller_rabin(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division for ``n < 10**6``, fixed Miller-Rabin witnesses above.
    """
    if n < 2:
        return False
    if n < _TRIAL_LIMIT:
        for q in _small_primes():
            if q * q > n:
                return True
            if n % q == 0:
                return n == q
        return True
    if n >= 3_317_044_064_679_887_385_961_981:
        raise ValueError(f"no deterministic witness set for n = {n}")
    return all(_miller_rabin(n, a) for a in _MR_BASES)


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes ``p`` with ``lo <= p <= hi``."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def odd_primes(lo: int, hi: int) -> list[int]:
    return [p for p in primes_in_range(lo, hi) if p != 2]


@dataclass(frozen=True)
class PrimePowerModulus:
    """The modulus ``p**r`` for an odd prime ``p`` and ``r >= 1``."""

    p: int
    r: int = 1

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.r < 1:
            raise ValueError(f"exponent must be positive, got {self.r}")

    @property
    def modulus(self) -> int:
        return self.p**self.r

    def __str__(self):
        return f"{self.p}^{self.r}"

    def lower(self, r: int) -> "PrimePowerModulus":
        return PrimePowerModulus(self.p, r)


@dataclass(frozen=True)
class ResidueClass:
    """An integer residue in ``[0, p**r)``."""

    value: int
    modulus: PrimePowerModulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus.modulus)

    @classmethod
    def of(cls, x, modulus: PrimePowerModulus) -> "ResidueClass":
        """Residue of an int or rational ``x``."""
        if isinstance(x, ResidueClass):
            if x.modulus != modulus:
                raise ValueError(f"residue mod {x.modulus} is not mod {modulus}")
            return x
        if isinstance(x, int):
            return cls(x, modulus)
        return reduce_rational(Fraction(x), modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, ResidueClass):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"mixed moduli: {self.modulus} and {other.modulus}"
                )
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Rational):
            return reduce_rational(Fraction(other), self.modulus).value
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueClass(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueClass(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueClass(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return ResidueClass(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueClass(-self.value, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return mod_inverse(self) ** (-e)
        return ResidueClass(pow(self.value, e, self.modulus.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return v
        return self * mod_inverse(ResidueClass(v, self.modulus))

    def __eq__(self, other):
        if isinstance(other, ResidueClass):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (int, Rational)):
            try:
                return self.value == self._coerce(other) % self.modulus.modulus
            except NonInvertible:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def reduce(self, r: int) -> "ResidueClass":
        """Image under the projection to ``p**r`` for ``r <= self.modulus.r``."""
        if r > self.modulus.r:
            raise ValueError("cannot lift a residue to a higher power")
        return ResidueClass(self.value, self.modulus.lower(r))

    def is_unit(self) -> bool:
        return self.value % self.modulus.p != 0

    def __repr__(self):
        return f"ResidueClass({self.value} mod {self.modulus})"


def mod_inverse(a: ResidueClass) -> ResidueClass:
    if a.value % a.modulus.p == 0:
        raise NonInvertible(f"{a.value} is not invertible mod {a.modulus}")
    return ResidueClass(pow(a.value, -1, a.modulus.modulus), a.modulus)


def reduce_rational(x, m: PrimePowerModulus) -> ResidueClass:
    """Reduce ``x = a/b`` to ``a * b^-1 mod p**r``.

    Raises NonInvertibleDenominator if ``p`` divides ``b`` in lowest terms.
    """
    x = Fraction(x)
    if x.denominator % m.p == 0:
        raise NonInvertibleDenominator(
            f"denominator of {x} is divisible by {m.p}"
        )
    M = m.modulus
    return ResidueClass(x.numerator * pow(x.denominator, -1, M), m)


def int_valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in the nonzero integer ``n``."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    v = 0
    # Square-and-divide keeps this fast for large valuations.
    pk = [p]
    while n % pk[-1] == 0 and pk[-1] * pk[-1] <= n:
        pk.append(pk[-1] * pk[-1])
    for i in range(len(pk) - 1, -1, -1):
        if n % pk[i] == 0:
            n //= pk[i]
            v += 1 << i
    while n % p == 0:
        n //= p
        v += 1
    return v


def padic_valuation(x, p: int) -> int:
    """The integer ``v`` with ``x = p**v * u`` and ``u`` a p-adic unit."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def split_valuation(n: int, p: int) -> tuple[int, int]:
    """Return ``(v, u)`` with ``n = p**v * u`` and ``p`` not dividing ``u``."""
    v = int_valuation(n, p)
    return v, n // p**v
