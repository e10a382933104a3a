from fractions import Fraction

import pytest

from supercong.apery import apery
from supercong.identities import (
    PartialFractionDecomp,
    ReconstructionFailure,
    br_sum,
    br_summand,
    check_BR,
    check_id1,
    check_res1_res3,
    evaluate,
    id1_sum,
    identity_reports,
    laurent_coefficients,
    pf_coeffs_R,
    pf_coeffs_Rhat,
    pf_coeffs_Rtilde,
    reconstruct,
    res1_sum,
    res3_sum,
    residue_relations,
)

F = Fraction


def test_R_examples():
    assert pf_coeffs_R(0).coeffs == ((1, 0),)
    assert pf_coeffs_R(1).coeffs[1] == (4, 4)
    assert pf_coeffs_R(2).coeffs[1] == (36, -60)
    assert evaluate("R", 0, 3) == F(1, 9)


def test_Rtilde_examples():
    assert pf_coeffs_Rtilde(0).coeffs == ((1, 0, 0),)
    c = pf_coeffs_Rtilde(1).coeffs
    assert c[0][:2] == (-1, 6)
    assert c[1][:2] == (8, 12)


def test_Rhat_examples():
    assert pf_coeffs_Rhat(0).coeffs == ((0, 2, 0, 0),)
    # t^4 Rhat_1(t) at t = 0 is (1)(-1)(2) / 1 = -2
    assert pf_coeffs_Rhat(1).coeffs[0][0] == -2
    assert evaluate("Rhat", 0, 5) == F(2, 125)


def test_closed_forms_match_laurent_expansion():
    for n in range(12):
        for k in range(n + 1):
            assert pf_coeffs_R(n, verify=False).coeffs[k] == laurent_coefficients("R", n, k)
            assert pf_coeffs_Rtilde(n, verify=False).coeffs[k] == laurent_coefficients("Rtilde", n, k)


def laurent_by_limits(family, n, k, order):
    """Leading Laurent coefficient by exact limit along t = -k + 1/N for large N.

    Independent of the series arithmetic: (t+k)^order R(t) at t -> -k.
    """
    vals = []
    for N in (10**30, 2 * 10**30):
        t = -k + F(1, N)
        vals.append(evaluate(family, n, t) * (t + k) ** order)
    return vals


def test_leading_coefficient_by_limit():
    for fam, order in (("R", 2), ("Rtilde", 3), ("Rhat", 4)):
        for n in range(5):
            for k in range(n + 1):
                lead = laurent_coefficients(fam, n, k)[0]
                for v in laurent_by_limits(fam, n, k, order):
                    assert abs(v - lead) < F(1, 10**20)


def test_reconstruction_detects_errors():
    good = pf_coeffs_R(3, verify=False)
    rows = list(good.coeffs)
    rows[1] = (rows[1][0], rows[1][1] + 1)
    assert reconstruct(good)
    assert not reconstruct(PartialFractionDecomp("R", 3, tuple(rows)))


def test_reconstruction_failure_raised(monkeypatch):
    from supercong import identities

    monkeypatch.setattr(identities, "reconstruct", lambda pf: False)
    with pytest.raises(ReconstructionFailure):
        identities.pf_coeffs_R(2)


def test_rhat_reconstruction_at_next_point():
    for n in range(21):
        pf = pf_coeffs_Rhat(n)
        assert pf(n + 1) == evaluate("Rhat", n, n + 1)


def test_decomposition_evaluates_off_grid():
    pf = pf_coeffs_Rtilde(4)
    for t in (F(1, 3), F(-7, 2), F(11, 5)):
        assert pf(t) == evaluate("Rtilde", 4, t)


def test_pole_evaluation_rejected():
    with pytest.raises(ZeroDivisionError):
        evaluate("R", 3, -2)
    with pytest.raises(ValueError):
        evaluate("S", 3, 1)


def test_id1_examples():
    assert id1_sum(0) == 1
    assert id1_sum(1) == 1
    assert id1_sum(2) == 1
    assert all(check_id1(n) for n in range(60))


def test_res_examples():
    assert res1_sum(0) == 0 and res3_sum(0) == 1
    assert res3_sum(1) == -1
    assert res1_sum(2) == 0
    assert all(check_res1_res3(n) for n in range(40))


def test_br_examples():
    # printed summands are -5 each; br_summand carries the (-1)^n sign
    assert br_summand(1, 0) == br_summand(1, 1) == 5
    assert br_sum(1) == 5
    assert br_sum(0) == 1
    assert br_sum(3) == 1445 == apery(3)
    assert all(check_BR(n) for n in range(40))


def test_br_summand_symmetry():
    for n in range(40):
        assert all(br_summand(n, k) == br_summand(n, n - k) for k in range(n + 1))


def test_residue_relations():
    for n in range(30):
        for name, (value, expected) in residue_relations(n).items():
            assert value == expected, (n, name)


def test_br_is_half_sum_of_rhat_b():
    for n in range(15):
        pf = pf_coeffs_Rhat(n, verify=False)
        assert sum(pf.column(1)) / 2 == apery(n)


def test_identity_reports():
    rows = identity_reports(6)
    assert all(r.passed for r in rows)
    assert {r.check for r in rows} >= {"id1", "Res1", "Res3", "BR", "pf:R", "pf:Rtilde", "pf:Rhat"}
    assert not any(r.check.startswith("pf:") for r in identity_reports(6, reconstruct_max=5))
