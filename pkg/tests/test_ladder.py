import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcong.errors import PrecisionError, VerificationError
from qcong.etaq import expand
from qcong.ladder import (
    PHI,
    LadderState,
    apply_u,
    build_L,
    check_family,
    extract_progression,
    gamma,
    ladder,
    odd_rung_form,
    phi_series,
    psi,
    required_precision,
)
from qcong.partitions import dp_oracle
from qcong.qseries import QSeries, atkin_u, congruent_zero, f_series


def test_gamma_and_psi_values():
    assert gamma(1) == 20 and gamma(2) == 495
    assert [psi(a) for a in (1, 2, 3)] == [5, 25, 130]
    with pytest.raises(ValueError):
        gamma(0)


def test_gamma_recursion():
    for a in range(1, 51):
        assert 5 ** (2 * a + 2) - 5 ** (2 * a + 1) - 5 ** (2 * a) + gamma(a) == gamma(a + 1)
        assert gamma(a + 1) == gamma(a) + 19 * 5 ** (2 * a)


def test_psi_recursions():
    for a in range(1, 50, 2):
        assert psi(a + 1) == 5 * psi(a)
        assert psi(a + 2) == 25 * psi(a) + 5


def test_phi_series():
    phi = phi_series(60)
    assert phi.valuation() == 5 and phi[5] == 1 and phi[6] == 1
    assert phi == expand(PHI, 60)
    with pytest.raises(ValueError):
        phi_series(5)


def test_apply_u_examples():
    assert apply_u(1, QSeries.monomial(5, 30)) == QSeries.monomial(1, 6)
    L1 = apply_u(0, QSeries.one(100))
    assert L1.valuation() == 1
    with pytest.raises(PrecisionError):
        apply_u(0, QSeries.one(4))
    with pytest.raises(ValueError):
        apply_u(2, QSeries.one(10))


@settings(max_examples=100)
@given(st.lists(st.integers(-9, 9), min_size=5, max_size=60), st.integers(-2, 4))
def test_apply_u0_matches_literal_definition(cs, lo):
    f = QSeries.from_coeffs(cs, lo)
    literal = atkin_u(phi_series(f.trunc + 10) * f, 5)
    got = apply_u(0, f)
    assert got.agrees_with(literal)
    assert got.trunc >= literal.trunc - 1


def test_ladder_precision_budget():
    states = ladder(3, 10)
    assert states[0].series == QSeries.one(required_precision(3, 10))
    assert [s.series.trunc >= 10 for s in states[1:]] == [True] * 3
    assert [s.alpha for s in states] == [0, 1, 2, 3]
    assert build_L(0, 5).series == QSeries.one(5)


def test_ladder_state_valuation_guard():
    with pytest.raises(VerificationError):
        LadderState(1, QSeries.one(5), 5)


def test_L2_progression():
    st2 = build_L(2, 40)
    table = dp_oracle(3, 25 * 39 + 20)
    q = extract_progression(st2, table)
    assert q[0] == table[20] and q[1] == table[45]
    assert congruent_zero(q, 5, 38).ok


def test_L4_constant_term():
    st4 = build_L(4, 3)
    q = extract_progression(st4, dp_oracle(3, 625 * 1 + 495))
    assert q[0] == dp_oracle(3, 495)[495]
    assert q[0] % 25 == 0


def test_extract_progression_rejects_odd_rungs():
    with pytest.raises(ValueError):
        extract_progression(build_L(1, 10))


def test_extract_progression_detects_tampering():
    st2 = build_L(2, 12)
    bumped = LadderState(2, st2.series + QSeries.monomial(3, st2.series.trunc), st2.precision)
    with pytest.raises(VerificationError):
        extract_progression(bumped)


@pytest.mark.parametrize("k, T", [(1, 30), (2, 8)])
def test_odd_rung_form(k, T):
    L = build_L(2 * k + 1, T).series
    assert L.truncate(T) == odd_rung_form(k, T)


def test_check_family_small():
    assert check_family(1, 300).ok
    assert check_family(2, 20).ok
    bad = check_family(1, 300, modulus=25)
    assert not bad.ok and bad.first_failure is not None
    assert check_family(1, 10).to_json() == {
        "alpha": 1, "modulus": 5, "n_max": 10, "pass": True, "first_failure": None,
    }


def test_L2_over_prefactor_is_divisible_by_5():
    st2 = build_L(2, 30)
    pref = (f_series(1, 30) * f_series(2, 30) ** 2).shift(1)
    inner = (st2.series * pref.shift(-1).invert()).shift(-1).truncate(29)
    assert congruent_zero(inner, 5, 28).ok
