import pytest

import shiftfam as sf


def test_semigroup_invariants():
    h = sf.NumericalSemigroup([40, 42, 43, 45])
    assert h.pseudo_frobenius == [359, 361]
    assert h.frobenius == 361
    assert h.ng_certificate()["vector"] == [361, 359, 361, 359]
    assert 40 in h and 41 not in h
    assert sf.NumericalSemigroup([10, 11, 13, 14]).is_almost_symmetric()
    assert sf.NumericalSemigroup([63, 65, 66, 70]).trace()["residue"] == 9
    assert sf.minimal_generators([2, 6, 7]) == [2, 7]
    assert sf.submonoid_frobenius([8, 12, 14]) == 18
    assert sf.min_fact_length(19, [2, 7, 11]) == 5
    assert sf.min_fact_length(1, [2, 7]) is None


def test_family_operations():
    spec = sf.ShiftSpec([2, 6, 7])
    assert (spec.d, spec.frobenius_s, spec.n0) == (1, 5, 84)
    profile = spec.p_profile(88)
    assert profile["p_prime"] == [(17, 4)]
    assert [i for i, _ in profile["p_double"]] == [85, 89, 93]
    assert spec.psi(88, 85) == 92
    assert spec.psi_wrong(88, 85) == 85
    assert spec.phi(88, 281) == 302
    assert spec.member(95).pseudo_frobenius == [302, 1327, 1331, 1430]

    ng = sf.ShiftSpec([2, 3, 5])
    assert ng.bound_n(40)["N"] == 36
    assert ng.ng_transport(40, 2) == [551, 549, 551, 549]

    rt = sf.ShiftSpec([2, 7, 11])
    assert rt.reduced_type_formula(14643, p=200) == 4
    assert [r for _, _, r in sf.ShiftSpec([2, 3, 7]).residue_scan(63, 0, 5)] == list(range(9, 15))


def test_thresholds_and_errors():
    spec = sf.ShiftSpec([2, 3, 7])
    with pytest.raises(sf.ShiftfamError) as err:
        spec.frobenius_closed_form(63, 1)
    assert err.value.kind == "BelowThreshold"
    assert spec.frobenius_closed_form(63, 1, observed=True) == 694 + 140 + 7
    with pytest.raises(sf.ShiftfamError) as err:
        sf.NumericalSemigroup([4, 6])
    assert err.value.kind == "NotNumerical"
    assert isinstance(err.value, ValueError)


def test_oracle_agrees():
    assert sf.brute_pf([88, 90, 94, 95]) == [281, 1141, 1145, 1237]
    reports = sf.brute_shift_check(sf.ShiftSpec([2, 7, 11]), 200, 1)
    assert reports and all(r["match"] for r in reports)
    wrong = sf.brute_shift_check(sf.ShiftSpec([2, 6, 7]), 88, 1, wrong_bijection=True)
    assert any(not r["match"] and r["subject"] == "psi" for r in wrong)
    assert sf.random_family(0, 12).shifts == sf.random_family(0, 12).shifts
