import pytest

from qcong.errors import VerificationError
from qcong.sturm import JOBS, TRUST_NOTE, SturmJob, build_F_check, verify_isolated


@pytest.mark.parametrize("which", [1, 2])
def test_isolated_congruences(which):
    rep = verify_isolated(JOBS[which])
    assert rep.ok and rep.checked == JOBS[which].bound + 1
    js = rep.to_json()
    assert set(js) >= {"job", "bound", "pass", "checked", "trust_note"}
    assert js["trust_note"] == TRUST_NOTE


def test_isolated_check_reports_failures():
    rep = verify_isolated(SturmJob(5, 49, 30, 7, 20))
    assert not rep.ok and rep.first_failure is not None and rep.residue


def test_job_validation():
    with pytest.raises(ValueError):
        SturmJob(5, 49, 49, 7, 10)
    with pytest.raises(ValueError):
        SturmJob(5, 49, 3, 7, 0)


@pytest.mark.parametrize("which, lead", [(1, 18), (2, 85)])
def test_F_identity_holds_mod_p_only(which, lead):
    rep = build_F_check(which)
    assert rep.leading_exponent == lead
    assert rep.congruent_mod_p
    assert rep.fp2_form_exact
    assert not rep.exact_equal
    # agreement with the isolated check: the difference vanishes mod p exactly when it passes
    assert rep.congruent_mod_p == verify_isolated(JOBS[which]).ok


def test_F_strict_mode_raises():
    with pytest.raises(VerificationError):
        build_F_check(1, strict=True)


def test_perturbed_prefactor_is_detected():
    rep = build_F_check(1, prefactor_power=8)
    assert not rep.fp2_form_exact and not rep.exact_equal


def test_F_check_rejects_unknown_job():
    with pytest.raises(ValueError):
        build_F_check(3)
