from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poch_verify.errors import SingularParameters
from poch_verify.pochhammer import (
    StirlingKind,
    binomial,
    double_factorial,
    falling,
    gamma_ratio,
    rising,
    stirling_table,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)
orders = st.integers(min_value=0, max_value=7)


def test_rising_half():
    assert rising(Fraction(1, 2), 3) == Fraction(15, 8)
    assert rising(Fraction(1, 2), 4) == Fraction(double_factorial(7), 2**4)


def test_empty_products():
    assert rising(Fraction(5, 3), 0) == 1
    assert falling(Fraction(5, 3), 0) == 1


def test_falling():
    assert falling(5, 2) == 20
    assert falling(3, 4) == 0


def test_binomial_outside_range():
    assert binomial(4, 2) == 6
    assert binomial(4, 5) == 0
    assert binomial(4, -1) == 0


@given(fractions, orders, orders)
def test_rising_splits(x, m, n):
    assert rising(x, m + n) == rising(x, m) * rising(x + m, n)


@given(fractions, orders)
def test_falling_is_reflected_rising(x, n):
    assert falling(x, n) == (-1) ** n * rising(-x, n)


@given(fractions, fractions, orders)
def test_vandermonde_rising(x, y, n):
    assert rising(x + y, n) == sum(binomial(n, k) * rising(x, k) * rising(y, n - k) for k in range(n + 1))


@given(fractions, fractions, orders)
def test_vandermonde_falling(x, y, n):
    assert falling(x + y, n) == sum(binomial(n, k) * falling(x, k) * falling(y, n - k) for k in range(n + 1))


def test_stirling_rows():
    assert stirling_table(StirlingKind.FIRST_UNSIGNED, 4).row(4) == (0, 6, 11, 6, 1)
    assert stirling_table(StirlingKind.SECOND, 4).row(4) == (0, 1, 7, 6, 1)
    assert stirling_table(StirlingKind.SECOND, 4).entry(4, 7) == 0


@given(fractions, st.integers(min_value=0, max_value=6))
def test_stirling_connects_powers_and_factorials(x, n):
    first = stirling_table(StirlingKind.FIRST_UNSIGNED, n)
    second = stirling_table(StirlingKind.SECOND, n)
    assert rising(x, n) == sum(first.entry(n, j) * x**j for j in range(n + 1))
    assert x**n == sum(second.entry(n, j) * falling(x, j) for j in range(n + 1))


def test_double_factorial():
    assert double_factorial(7) == 105
    assert double_factorial(0) == 1
    assert double_factorial(-1) == 1


def test_gamma_ratio():
    assert gamma_ratio(Fraction(1, 2), 2) == Fraction(3, 4)
    assert gamma_ratio(Fraction(1, 2), -1) == -2


def test_gamma_ratio_pole():
    with pytest.raises(SingularParameters):
        gamma_ratio(1, -1)
