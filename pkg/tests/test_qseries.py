from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rationals, series, small_ints, unit_series
from qcong.errors import NonIntegralError, NotInvertibleError, PrecisionError
from qcong.partitions import dp_oracle
from qcong.qseries import (
    EtaProductSpec,
    QSeries,
    arith,
    atkin_u,
    congruent_zero,
    eta_product,
    f_series,
    invert,
    power,
    substitute_power,
)

CASES = settings(max_examples=1000)


def poly(cs, T):
    return QSeries.polynomial(cs, T)


# -- arithmetic examples --------------------------------------------------------


def test_identity_product():
    a = poly([1, 1], 10)
    assert a * QSeries.one(10) == a


def test_telescoping_geometric():
    T = 40
    geo = poly([1] * T, T)
    assert (poly([1, -1], T) * geo) == QSeries.one(T)


def test_cubic_generating_product_is_one():
    T = 100
    f1, f2 = f_series(1, T), f_series(2, T)
    g = f1 * power(f2, 2)
    assert g * invert(g) == QSeries.one(T)


def test_mul_and_add_windows():
    a = QSeries(2, 10, [1])
    b = QSeries(-1, 5, [3])
    assert (a * b).min_exp == 1
    assert (a * b).trunc == min(10 - 1, 5 + 2)
    assert (a + b).trunc == 5 and (a + b).min_exp == -1


def test_arith_dispatch():
    a, b = poly([1, 2], 5), poly([3], 5)
    assert arith(a, b, "add") == a + b
    assert arith(a, b, "sub") == a - b
    assert arith(a, b, "mul") == a * b
    assert arith(a, b, "scale") == a * 3
    with pytest.raises(ValueError):
        arith(a, poly([0, 1], 5), "scale")
    with pytest.raises(ValueError):
        arith(a, b, "div")


def test_zero_length_series_is_an_error():
    with pytest.raises(PrecisionError):
        QSeries(4, 4)


def test_stored_window_below_is_known_zero():
    s = QSeries(0, 3, [1]) + QSeries(5, 9, [1])
    assert s == QSeries(0, 3, [1])


def test_coefficient_beyond_trunc_is_unknown():
    with pytest.raises(PrecisionError):
        poly([1, 2, 3], 3)[3]


# -- invert / power -----------------------------------------------------------


def test_invert_geometric():
    assert invert(poly([1, -1], 20)) == poly([1] * 20, 20)


def test_invert_f1_counts_partitions():
    assert invert(f_series(1, 10))[4] == 5


def test_invert_cubic_product_at_q2():
    T = 10
    g = f_series(1, T) * power(f_series(2, T), 2)
    assert invert(g)[2] == 4


def test_invert_zero_raises():
    with pytest.raises(NotInvertibleError):
        invert(QSeries.zero(5))


def test_invert_moves_valuation():
    a = QSeries.from_coeffs([2, 1], 3, 10)
    inv = invert(a)
    assert inv.min_exp == -3
    assert (a * inv) == QSeries.one(7)


def test_power_small_cases():
    assert power(poly([1, 1], 10), 2) == poly([1, 2, 1], 10)
    assert power(f_series(1, 10), 0) == QSeries.one(10)


def test_power_binary_matches_repeated():
    T = 50
    f1 = f_series(1, T)
    acc = QSeries.one(T)
    for _ in range(441):
        acc = acc * f1
    assert power(f1, 441) == acc


def test_negative_power():
    a = poly([1, 3, -2], 30)
    assert power(a, -3) * power(a, 3) == QSeries.one(30)


# -- substitution and U ---------------------------------------------------------


def test_substitute_power_examples():
    assert substitute_power(QSeries.monomial(1, 4), 5) == QSeries.monomial(5, 20)
    assert substitute_power(f_series(1, 40), 25) == f_series(25, 1000)
    assert substitute_power(poly([1, 1, 1], 3), 2) == poly([1, 0, 1, 0, 1], 6)


def test_atkin_u_examples():
    assert atkin_u(QSeries.monomial(5, 11), 5) == QSeries.monomial(1, 3)
    T = 500
    a3 = invert(f_series(1, T) * power(f_series(2, T), 2))
    u = atkin_u(a3, 5)
    table = dp_oracle(3, T)
    assert u.trunc == 100
    assert u.int_coeffs() == [table[5 * n] for n in range(100)]


def test_atkin_u_below_min_exp_gives_known_zero():
    assert atkin_u(QSeries(1, 2, [7]), 2) == QSeries(0, 1)


def test_atkin_u_rounds_trunc_up():
    assert atkin_u(poly(list(range(1, 12)), 11), 5).trunc == 3
    assert atkin_u(QSeries(-7, 4, [1]), 5).min_exp == -1


# -- eta products ---------------------------------------------------------------


def test_eta_product_examples():
    assert eta_product(EtaProductSpec.of({1: 1}), 5) == poly([1, -1, -1], 5)
    # (1 - q^2 - q^4)^2 truncated: the q^4 term is -2 + 1 = -1
    f2 = poly([1, 0, -1, 0, -1], 5)
    assert eta_product(EtaProductSpec.of({2: 2}), 5) == f2 * f2 == poly([1, 0, -2, 0, -1], 5)
    g = eta_product(EtaProductSpec.of({1: 1, 2: 2}), 60)
    assert g * invert(g) == QSeries.one(60)


def test_eta_product_rejects_bad_factor():
    with pytest.raises(ValueError):
        EtaProductSpec(((0, 1),))


def test_f_series_against_direct_product():
    T = 60
    direct = QSeries.one(T)
    for n in range(1, T):
        direct = direct * QSeries.polynomial([1] + [0] * (n - 1) + [-1], T)
    assert f_series(1, T) == direct


# -- congruent_zero -------------------------------------------------------------


def test_congruent_zero_examples():
    assert congruent_zero(poly([0, 5, 10], 3), 5, 2).ok
    res = congruent_zero(poly([0, 5, 1], 3), 5, 2)
    assert not res.ok and res.first_failure == 2 and res.residue == 1


def test_congruent_zero_progression():
    top = 25 * 500 + 20
    a3 = invert(f_series(1, top + 1) * power(f_series(2, top + 1), 2)).int_coeffs()
    assert congruent_zero(QSeries(0, 501, a3[20::25]), 5, 500).ok


def test_congruent_zero_needs_integers():
    with pytest.raises(NonIntegralError):
        congruent_zero(QSeries.from_coeffs([Fraction(1, 2)]), 5, 0)


def test_json_round_trip():
    a = QSeries.from_coeffs([Fraction(1, 3), 0, -2], -1, 4)
    assert QSeries.from_json(a.to_json()) == a


# -- properties -------------------------------------------------------------------


@CASES
@given(series(), series())
def test_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@CASES
@given(series(), series(), series())
def test_associative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert ((a * b) * c).agrees_with(a * (b * c))


@CASES
@given(series(), series(), series())
def test_distributive(a, b, c):
    assert (a * (b + c)).agrees_with(a * b + a * c)


@CASES
@given(series(), series())
def test_mul_precision_rule(a, b):
    p = a * b
    assert p.min_exp == a.min_exp + b.min_exp
    assert p.trunc == min(a.trunc + b.min_exp, b.trunc + a.min_exp)
    with pytest.raises(PrecisionError):
        p[p.trunc]


@CASES
@given(unit_series())
def test_inverse_two_sided(a):
    inv = invert(a)
    one = QSeries.one(a.trunc - a.valuation())
    assert (a * inv).agrees_with(one)
    assert (inv * a).agrees_with(one)


@CASES
@given(series(), series(), st.integers(min_value=1, max_value=7))
def test_atkin_u_linear(a, b, d):
    lhs = atkin_u(a + b, d)
    assert lhs == atkin_u(a, d) + atkin_u(b, d)
    assert lhs.trunc == -((-(a + b).trunc) // d)


@CASES
@given(
    st.lists(small_ints, min_size=1, max_size=31),
    st.lists(small_ints, min_size=1, max_size=31),
    st.integers(min_value=2, max_value=7),
    st.integers(min_value=31, max_value=120),
)
def test_product_rule(F, G, d, T):
    """U_d(F(q^d) G(q)) = F(q) U_d(G(q)) for polynomials F, G of degree <= 30."""
    Fs = poly(F, T)
    Gs = poly(G, d * T)
    lhs = atkin_u(substitute_power(Fs, d) * Gs, d)
    rhs = Fs * atkin_u(Gs, d)
    assert lhs == rhs


@settings(max_examples=200)
@given(series(), st.integers(min_value=-3, max_value=4))
def test_power_matches_repeated(a, k):
    if k < 0 and a.is_zero():
        return
    if k < 0:
        a = a + QSeries.monomial(a.min_exp, a.trunc, 1 - a[a.min_exp])
    base = a if k >= 0 else invert(a)
    acc = None
    for _ in range(abs(k)):
        acc = base if acc is None else acc * base
    got = power(a, k)
    if acc is None:
        assert got == QSeries.one(a.trunc - a.min_exp)
    else:
        assert got == acc


@settings(max_examples=300)
@given(series(), rationals)
def test_scale_matches_constant_mul(a, c):
    assert (a * c).agrees_with(a * QSeries.monomial(0, 100, c))
