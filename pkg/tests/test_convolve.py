from hypothesis import given, settings
from hypothesis import strategies as st

from qcong._convolve import kronecker, mul_trunc, schoolbook

big = st.integers(min_value=-(10**40), max_value=10**40)


@settings(max_examples=300)
@given(st.lists(big, min_size=1, max_size=80), st.lists(big, min_size=1, max_size=80), st.integers(1, 170))
def test_kronecker_matches_schoolbook(a, b, n):
    assert kronecker(a, b, n) == schoolbook(a, b, n)


@settings(max_examples=300)
@given(st.lists(st.integers(-3, 3), min_size=1, max_size=300), st.lists(st.integers(-3, 3), min_size=1, max_size=300))
def test_mul_trunc_matches_schoolbook(a, b):
    n = len(a) + len(b) - 1
    assert mul_trunc(a, b, n) == schoolbook(a, b, n)


def test_zero_and_padding():
    assert mul_trunc([0, 0], [5], 4) == [0, 0, 0, 0]
    assert mul_trunc([1, 2], [3, 4], 5) == [3, 10, 8, 0, 0]
    assert kronecker([-1], [-1], 1) == [1]


def test_large_dense_product():
    a = [(-1) ** i * (i * 7919 + 1) ** 9 for i in range(3000)]
    b = [(i * 104729 + 3) ** 7 - 10**20 for i in range(2500)]
    n = 4000
    ref = schoolbook(a[:n], b[:n], n)
    assert mul_trunc(a, b, n) == ref
