from fractions import Fraction
from math import comb

import pytest

from supercong.exact_arith import PrimePowerModulus, odd_primes, reduce_rational
from supercong.harmonic import (
    EXPANSION_IDS,
    HarmonicTable,
    binomial_row,
    binomial_table,
    central_ratio,
    check_expansion_congruence,
    check_wolstenholme,
    expansion_sides,
    harmonic,
    harmonic_residues,
    harmonic_table,
    rising_factorial,
)
from supercong.report import Verdict


def test_harmonic_examples():
    assert harmonic(0, 1) == 0
    assert harmonic(3, 1) == Fraction(11, 6)
    assert harmonic(2, 2) == Fraction(5, 4)


def test_table_telescopes():
    for r in (1, 2, 3):
        t = HarmonicTable(60, r)
        assert t[0] == 0
        assert all(t[n] - t[n - 1] == Fraction(1, n**r) for n in range(1, 61))


def test_table_against_independent_build():
    # H_n = (sum_{j} n!/j) / n! built with integers only
    from math import factorial

    for n in range(40):
        F = factorial(n)
        assert harmonic(n) == Fraction(sum(F // j for j in range(1, n + 1)), F)


def test_memoized_table_serves_larger_size():
    t = harmonic_table(20)
    assert t.N >= 20 and t is harmonic_table(25)


def test_harmonic_residues_match_exact():
    M = 13**2
    res = harmonic_residues(12, 2, M)
    m = PrimePowerModulus(13, 2)
    assert res == [reduce_rational(harmonic(n, 2), m).value for n in range(13)]


def test_rising_factorial_examples():
    assert rising_factorial(Fraction(1, 2), 0) == 1
    assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    assert rising_factorial(Fraction(1, 2), 3) == Fraction(15, 8)


def test_central_ratio():
    from math import factorial

    for k in range(12):
        assert central_ratio(k) == rising_factorial(Fraction(1, 2), k) / factorial(k)


def test_binomial_table_pascal_and_symmetry():
    rows = binomial_table(40)
    for n, row in enumerate(rows):
        assert row == binomial_row(n)
        assert row == row[::-1]


def test_bm3_example_p5_k0():
    left, right = expansion_sides("bm3", 5, 0)
    assert left == comb(7, 2) == 21
    assert right == 1 + Fraction(15, 2)
    m = PrimePowerModulus(5, 2)
    assert reduce_rational(right, m).value == 21


def test_h2mk_example_p5_k1():
    m = PrimePowerModulus(5, 2)
    left, right = expansion_sides("H2mk", 5, 1)
    assert left == Fraction(11, 6)
    assert reduce_rational(left, m).value == reduce_rational(right, m).value == 6


@pytest.mark.parametrize("p", odd_primes(5, 60))
def test_h2mk_k0_for_p_at_least_5(p):
    # k = 0 compares H_{p-1} with 0, which is Wolstenholme's congruence
    left, right = expansion_sides("H2mk", p, 0)
    assert right == 0
    assert reduce_rational(left, PrimePowerModulus(p, 2)).value == 0


def test_h2mk_and_h2k_fail_at_3():
    # H_2 = 3/2 is not 0 mod 9: the expansion needs H_{p-1} = 0 (mod p^2)
    for ident in ("H2mk", "H2k"):
        rep = check_expansion_congruence(ident, 3)
        assert rep.verdict is Verdict.FAIL
        assert "failing k: [0, 1]" in rep.detail


@pytest.mark.parametrize("ident", EXPANSION_IDS)
def test_expansions_hold_for_p_from_5_to_200(ident):
    bad = [p for p in odd_primes(5, 200) if not check_expansion_congruence(ident, p).passed]
    assert bad == []


@pytest.mark.parametrize("ident", ["m1", "m2", "bm", "bm+k", "bm2", "bm3"])
def test_other_expansions_hold_at_3(ident):
    assert check_expansion_congruence(ident, 3).passed


def test_wolstenholme():
    assert all(check_wolstenholme(p).passed for p in odd_primes(5, 300))
    assert check_wolstenholme(3).verdict is Verdict.EXPECTED_NEGATIVE


def test_unknown_expansion():
    with pytest.raises(KeyError):
        check_expansion_congruence("m3", 5)
    with pytest.raises(ValueError):
        expansion_sides("m1", 5, 3)
