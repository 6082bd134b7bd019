from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from poch_verify.errors import ConvergenceBudgetExceeded, DivergentParameterDomain, SingularParameters
from poch_verify.numerics import PrecisionContext
from poch_verify.qkernel import (
    euler_finite,
    kernel_factorization,
    kernel_l,
    kernel_v,
    kernel_w,
    q_binomial,
    q_factorial,
    q_number,
    q_poch,
    q_poch_inf,
    q_poch_inf_multi,
    q_poch_multi,
    q_poch_scaled,
    q_shift_check,
    shift_sides,
    unit_circle_point,
)

fractions = st.fractions(min_value=-3, max_value=3, max_denominator=10)
orders = st.integers(min_value=0, max_value=6)


def test_q_numbers():
    assert q_number(3, 2) == 7
    assert q_factorial(3, 2) == 21
    assert q_number(0, Fraction(1, 2)) == 0


def test_q_binomial():
    assert q_binomial(4, 2, 2) == 35
    assert q_binomial(5, 6, Fraction(1, 3)) == 0
    assert q_binomial(4, 2, 1) == 6


def test_q_poch():
    assert q_poch(Fraction(1, 2), Fraction(1, 3), 2) == Fraction(5, 12)
    assert q_poch(Fraction(7, 3), Fraction(1, 3), 0) == 1


def test_q_poch_scaled_without_pole():
    assert q_poch_scaled(0, 2, Fraction(1, 2), 2) == 2
    c, a, q = Fraction(2, 3), Fraction(1, 5), Fraction(-1, 2)
    assert q_poch_scaled(c, a, q, 3) == c**3 * q_poch(a / c, q, 3)


@given(fractions, fractions, orders)
def test_euler_finite_expansion(t, q, n):
    assert euler_finite(t, q, n) == q_poch(t, q, n)


@given(fractions, orders, orders)
def test_q_binomial_symmetry(q, n, k):
    assert q_binomial(n + k, k, q) == q_binomial(n + k, n, q)


@given(fractions, fractions, st.integers(min_value=1, max_value=5))
def test_shift_laws(a, q, n):
    for name in ("s1", "s3", "s4"):
        lhs, rhs = shift_sides(name, a, q, n, k=n // 2)
        assert lhs == rhs


@given(fractions, fractions, st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=5))
def test_knk_shift_laws(a, q, n, k):
    assume(k <= n and q != 0)
    for name in ("s2", "knk1", "knk2"):
        try:
            lhs, rhs = shift_sides(name, a, q, n, k)
        except ZeroDivisionError:
            continue
        assert lhs == rhs


def test_q_shift_check():
    assert q_shift_check("s1", {"a": Fraction(1, 3), "q": Fraction(2, 5), "n": 4, "k": 2})
    assert q_shift_check("s3", {"a": Fraction(1, 3), "q": Fraction(1, 2)})
    assert q_shift_check("s4", {"a": Fraction(-3, 5), "q": Fraction(7, 10)})


def test_q_shift_check_singular_sample():
    with pytest.raises(SingularParameters, match="singular sample"):
        q_shift_check("s2", {"a": 1, "q": Fraction(1, 2), "n": 2, "k": 1})


def test_q_poch_inf():
    ctx = PrecisionContext()
    assert q_poch_inf(0, Fraction(1, 2), ctx) == 1
    a, q = Fraction(1, 3), Fraction(1, 2)
    ratio = q_poch_inf(a, q, ctx) / q_poch_inf(a * q, q, ctx)
    assert abs(ratio - (1 - ctx.mp.mpf(1) / 3)) < ctx.tolerance
    assert ctx.mp.nstr(q_poch_inf(q, q, ctx), 15) == "0.288788095086602"


def test_q_poch_inf_divergent():
    with pytest.raises(DivergentParameterDomain, match="divergent parameter domain"):
        q_poch_inf(Fraction(1, 2), Fraction(3, 2), PrecisionContext())


def test_q_poch_inf_budget():
    with pytest.raises(ConvergenceBudgetExceeded, match="convergence budget exceeded"):
        q_poch_inf(Fraction(1, 2), Fraction(1, 2), PrecisionContext(max_product_factors=5))


def test_kernels():
    assert kernel_v(Fraction(1, 2), Fraction(1, 3)) == Fraction(7, 9)
    assert kernel_l(0, Fraction(1, 2)) == Fraction(9, 4)
    assert kernel_w(0, 0, Fraction(1, 2)) == Fraction(9, 16)


def test_unit_circle_point():
    cosine, sine = unit_circle_point(Fraction(1, 2))
    assert (cosine, sine) == (Fraction(3, 5), Fraction(4, 5))
    assert cosine**2 + sine**2 == 1


@given(fractions, fractions, fractions, st.integers(min_value=0, max_value=4))
def test_kernel_factorizations(t, a, q, n):
    for name in ("rozklv", "rozkll"):
        lhs, rhs = kernel_factorization(name, n, t, a, q)
        assert lhs == rhs
    lhs, rhs = kernel_factorization("rozklw", n, t, a, q, u=Fraction(1, 3))
    assert lhs == rhs


def test_q_poch_multi():
    a, b, q = Fraction(1, 2), Fraction(-2, 3), Fraction(1, 3)
    assert q_poch_multi([a, b], q, 3) == q_poch(a, q, 3) * q_poch(b, q, 3)
    assert q_poch_multi([], q, 3) == 1
    assert q_poch_multi([a, q], q, 0) == 1


def test_q_poch_inf_multi():
    ctx = PrecisionContext()
    a, b, q = Fraction(1, 3), Fraction(-1, 4), Fraction(1, 2)
    product = q_poch_inf(a, q, ctx) * q_poch_inf(b, q, ctx)
    assert abs(q_poch_inf_multi([a, b], q, ctx) - product) < ctx.tolerance


def test_q_poch_partial_products_are_consistent():
    a, q = Fraction(3, 2), Fraction(-2, 3)
    assert q_poch(a, q, 5) == q_poch(a, q, 2) * q_poch(a * q**2, q, 3)
    assert q_poch(a, q, 3) == (1 - a) * (1 - a * q) * (1 - a * q * q)
    assert q_poch(a, q, -1) == 1
