from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import colored_partitions
from walg.errors import DimensionMismatch, NonUnitConstantTerm
from walg.qseries import QSeries, euler_product

N = 8
series = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=N + 1, max_size=N + 1).map(
    lambda c: QSeries(c, N)
)


def test_geometric():
    one_minus_q = QSeries([1, -1], 6)
    geo = QSeries([1] * 7, 6)
    assert one_minus_q * geo == QSeries.one(6)
    assert list(one_minus_q.inv()) == [1] * 7
    s = QSeries([3, 1, 4, 1, 5], 4)
    assert s + (-s) == QSeries([0], 4)


def test_inv_needs_unit():
    with pytest.raises(NonUnitConstantTerm):
        QSeries([0, 1], 3).inv()


def test_orders_must_match():
    with pytest.raises(DimensionMismatch):
        QSeries([1], 2) + QSeries([1], 3)


def test_euler_examples():
    assert list(euler_product(1, 6)) == [1, 1, 2, 3, 5, 7, 11]
    assert list(euler_product(2, 5)) == [1, 2, 5, 10, 20, 36]
    assert list(euler_product(0, 4)) == [1, 0, 0, 0, 0]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_euler_counts_colored_partitions(r):
    assert list(euler_product(r, 9)) == [colored_partitions(r, d) for d in range(10)]


@pytest.mark.parametrize("r", [0, 1, 2, 3, 4])
def test_euler_power(r):
    assert euler_product(r, 10) == euler_product(1, 10) ** r


@given(series, series, series)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series)
def test_inverse(a):
    if a[0] == 0:
        return
    assert a * a.inv() == QSeries.one(N)


def test_truncation_never_reads_past_order():
    a = QSeries([1, 1, 1], 2)
    assert (a * a).coeffs == (1, 2, 3)
    assert a.truncate(1) == QSeries([1, 1], 1)
    assert QSeries.monomial(5, 3) == QSeries([0], 3)
    assert QSeries([Fraction(1, 2)], 0)[0] == Fraction(1, 2)
