import cmath
from fractions import Fraction

import pytest

from supercong import gaussian
from supercong.exact_arith import odd_primes
from supercong.gaussian import (
    CharacterTable,
    PrecisionFailure,
    check_fop,
    fop_b,
    gauss_nFn,
    jacobi_sum,
    jacobi_sum_exact,
    primitive_root,
    primitive_roots,
)
from supercong.qseries import fourier_b


def legendre(x, p):
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def test_character_table_invariants():
    for p in (3, 5, 7, 11, 101):
        T = CharacterTable(p)
        assert all(pow(T.g, T.index(x), p) == x for x in range(1, p))
        assert T.chi(1, 0) == 0


def test_primitive_root_choice():
    assert primitive_root(7) == 3
    assert primitive_root(23) == 5
    assert primitive_roots(7) == [3, 5]
    with pytest.raises(ValueError):
        CharacterTable(7, 2)
    with pytest.raises(ValueError):
        primitive_root(9)


def direct_jacobi(p, j, k):
    T = CharacterTable(p)
    return sum(T.chi(j, t) * T.chi(k, 1 - t) for t in range(p))


def test_jacobi_trivial():
    for p in (5, 7, 13):
        assert jacobi_sum_exact(p, 0, 0)[0] == p - 2
        assert abs(jacobi_sum(p, 0, 0) - (p - 2)) < 1e-9


def test_jacobi_quadratic_p5():
    h = 2  # phi = chi_{(p-1)/2}
    assert abs(jacobi_sum(5, h, h) - (-1)) < 1e-9
    assert abs(direct_jacobi(5, h, h) - (-legendre(-1, 5))) < 1e-9


def test_jacobi_absolute_value_p7():
    p = 7
    for j in range(1, 6):
        for k in range(1, 6):
            if (j + k) % 6:
                assert abs(abs(jacobi_sum(p, j, k)) - p**0.5) < 1e-9
                assert abs(jacobi_sum(p, j, k) - direct_jacobi(p, j, k)) < 1e-9


def greene_direct(p, n, x):
    """p^n (n+1)F_n(x) from the definition with binomials of characters.

    binom(A, B) = B(-1)/p * J(A, conj B); upper characters phi, lower trivial.
    """
    T = CharacterTable(p)
    N = p - 1
    h = N // 2
    total = 0
    for j in range(N):
        binom = T.chi(j, -1) / p * direct_jacobi(p, (h + j) % N, (-j) % N)
        total += binom ** (n + 1) * T.chi(j, x)
    return total * p ** (n + 1) / N


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_gauss_series_against_definition(p, n):
    for x in range(1, p):
        ref = greene_direct(p, n, x)
        assert abs(ref.imag) < 1e-6
        assert gauss_nFn(p, n, x).scaled == round(ref.real)
        assert abs(ref.real - round(ref.real)) < 1e-6


def test_2f1_integral_representation():
    # p 2F1(phi, phi; eps | x) = phi(-1) sum_y phi(y) phi(1-y) phi(1-xy)
    for p in (5, 7, 11, 13):
        for x in range(1, p):
            brute = sum(legendre(t, p) * legendre(1 - t, p) * legendre(1 - x * t, p) for t in range(p))
            assert gauss_nFn(p, 1, x).scaled == legendre(-1, p) * brute


def test_zero_argument():
    assert gauss_nFn(7, 3, 0).scaled == 0


def test_value_is_fraction():
    v = gauss_nFn(5, 3, 1)
    assert v.value == Fraction(v.scaled, 125)


@pytest.mark.parametrize("p", odd_primes(3, 60))
def test_exact_and_float_backends_agree(p):
    for n in (3, 5):
        for x in (1, 2 % p or 1, p - 1):
            assert gauss_nFn(p, n, x, "exact").scaled == gauss_nFn(p, n, x, "float").scaled


@pytest.mark.parametrize("p", [11, 13])
def test_primitive_root_independence(p):
    for g in primitive_roots(p):
        T = CharacterTable(p, g)
        for n in (3, 5):
            for x in range(1, p):
                assert gauss_nFn(p, n, x, table=T).scaled == gauss_nFn(p, n, x).scaled


def test_fop_examples():
    b = fourier_b(200)
    assert fop_b(3) == 20
    s5 = gauss_nFn(3, 5, 1).scaled
    s3 = gauss_nFn(3, 3, 1).scaled
    assert -s5 + 3 * s3 == 2 == 20 - 2 * 9
    assert fop_b(5) == b[5]
    for p in (5, 13, 17):
        s5, s3 = gauss_nFn(p, 5, 1).scaled, gauss_nFn(p, 3, 1).scaled
        assert fop_b(p) == -s5 + p * s3


def test_fop_to_200():
    b = fourier_b(200)
    assert all(check_fop(p, b).passed for p in odd_primes(3, 200))


def test_precision_failure(monkeypatch):
    monkeypatch.setattr(gaussian, "CERTIFICATE_TOL", 0.0)
    with pytest.raises(PrecisionFailure):
        gauss_nFn(31, 5, 1)


def test_unknown_backend():
    with pytest.raises(ValueError):
        gauss_nFn(5, 3, 1, backend="gpu")
    with pytest.raises(ValueError):
        gauss_nFn(5, 0, 1)


def test_chi_values_are_roots_of_unity():
    T = CharacterTable(13)
    for j in range(12):
        for x in range(1, 13):
            assert abs(T.chi(j, x) ** 12 - 1) < 1e-9
    assert abs(T.chi(6, 2) - legendre(2, 13)) < 1e-12
    assert cmath.isclose(T.chi(1, T.g), cmath.exp(2j * cmath.pi / 12))
