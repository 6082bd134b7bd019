from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poch_verify.errors import OutsideConvergenceDomain, UnsupportedParameterOffset
from poch_verify.jacobi import (
    CCON_CASES,
    CONVENTIONS,
    ConnectionMatrix,
    JacobiParams,
    beta_moment,
    beta_ratio,
    ccon_closed,
    ccon_generic,
    chebyshev_T,
    chebyshev_U,
    conn_coeff,
    conn_matrix,
    density_expansion_terms,
    density_ratio,
    density_ratio_expansion_check,
    density_tail_ratio,
    e_matrix,
    etilde_coeff,
    etilde_coeff_alt,
    etilde_matrix,
    gegenbauer_eval,
    jacobi_coefficients,
    jacobi_eval,
    jacobi_norm,
    legendre_eval,
)
from poch_verify.numerics import DIVERGENCE_WINDOW, PrecisionContext, sum_until_converged, to_real

P = JacobiParams(Fraction(1, 3), Fraction(2, 5))
R = JacobiParams(Fraction(3, 4), Fraction(5, 2))
S = JacobiParams(Fraction(7, 3), Fraction(1, 6))

points = st.fractions(min_value=-1, max_value=1, max_denominator=16)


def test_jacobi_first_degree():
    assert jacobi_eval(0, Fraction(1, 4), JacobiParams(1, 2)) == 1
    assert jacobi_eval(1, Fraction(1, 4), JacobiParams(1, 2)) == Fraction(7, 8)


@given(points, st.integers(min_value=0, max_value=6))
def test_power_basis_coefficients(x, n):
    coefficients = jacobi_coefficients(n, P)
    assert sum(c * x**k for k, c in enumerate(coefficients)) == jacobi_eval(n, x, P)


def test_e_and_etilde_are_inverse():
    assert (e_matrix(8, P) @ etilde_matrix(8, P)).is_identity()
    assert (etilde_matrix(8, P) @ e_matrix(8, P)).is_identity()


def test_etilde_closed_forms_agree():
    for n in range(6):
        for m in range(n + 1):
            assert etilde_coeff(n, m, P) == etilde_coeff_alt(n, m, P)


def test_connection_matrices_invert_and_compose():
    assert (conn_matrix(12, P, R) @ conn_matrix(12, R, P)).is_identity()
    assert conn_matrix(12, P, R) @ conn_matrix(12, R, S) == conn_matrix(12, P, S)
    assert conn_matrix(6, P, P).is_identity()


def test_connection_matrix_product_size_mismatch():
    with pytest.raises(ValueError):
        ConnectionMatrix.identity(3) @ ConnectionMatrix.identity(4)


def test_connection_expands_polynomials():
    x = Fraction(2, 7)
    matrix = conn_matrix(5, P, R)
    for n in range(6):
        expansion = sum(matrix.entry(n, j) * jacobi_eval(j, x, R) for j in range(n + 1))
        assert expansion == jacobi_eval(n, x, P)


def test_closed_forms_match_generic_sums():
    params = {"a": Fraction(7, 3), "b": Fraction(5, 4)}
    for case in CCON_CASES:
        for n in range(5):
            for j in range(n + 1):
                assert ccon_closed(case, n, j, params) == ccon_generic(case, n, j, params), (case, n, j)


def test_unknown_closed_form():
    with pytest.raises(ValueError):
        ccon_closed("nope", 1, 0, {"a": 1, "b": 1})


def test_chebyshev():
    x = Fraction(1, 3)
    assert chebyshev_T(3, x) == 4 * x**3 - 3 * x
    assert chebyshev_U(2, x) == 4 * x**2 - 1


def test_legendre_and_gegenbauer():
    x = Fraction(2, 5)
    assert legendre_eval(2, x) == (3 * x**2 - 1) / 2
    assert gegenbauer_eval(2, x, 1) == chebyshev_U(2, x)
    assert gegenbauer_eval(3, x, Fraction(1, 2)) == legendre_eval(3, x)


def test_beta_moments_and_norm():
    symmetric = JacobiParams(2, 2)
    assert beta_moment(0, symmetric) == 1
    assert beta_moment(1, symmetric) == 0
    assert jacobi_norm(0, P) == 1


def test_orthogonality_from_moments():
    p = JacobiParams(Fraction(3, 2), Fraction(5, 2))
    for n in range(4):
        for m in range(4):
            first, second = jacobi_coefficients(n, p), jacobi_coefficients(m, p)
            integral = sum(
                a * b * beta_moment(i + j, p) for i, a in enumerate(first) for j, b in enumerate(second)
            )
            assert integral == (jacobi_norm(n, p) if n == m else 0)


def test_beta_and_density_ratios():
    assert beta_ratio(JacobiParams(1, 1), JacobiParams(2, 1)) == 2
    assert density_ratio(0, JacobiParams(1, 1), JacobiParams(1, 1)) == 1


def test_density_ratio_needs_integer_offsets():
    with pytest.raises(UnsupportedParameterOffset, match="unsupported parameter offset"):
        density_ratio(0, JacobiParams(1, 1), JacobiParams(Fraction(3, 2), 1))


def test_density_expansion_picks_one_coefficient_order():
    ctx = PrecisionContext(tolerance_exp=-60)
    result = density_ratio_expansion_check(JacobiParams(1, 1), JacobiParams(2, 3), Fraction(1, 5), ctx)
    assert result.convention == "ab_cd"
    assert result.converged == ("ab_cd",)
    assert result.terms_used <= 200


def test_density_expansion_domain():
    with pytest.raises(OutsideConvergenceDomain, match="outside convergence domain"):
        density_ratio_expansion_check(JacobiParams(1, 1), JacobiParams(2, 3), 1, PrecisionContext())


def test_density_tail_ratio():
    assert density_tail_ratio(JacobiParams(1, 1), JacobiParams(2, 3)) == 0
    assert density_tail_ratio(JacobiParams(3, 3), JacobiParams(2, 3)) == 1


def test_swapped_coefficient_order_is_given_up_early():
    ctx = PrecisionContext(tolerance_exp=-60)
    source, target, x = JacobiParams(1, 1), JacobiParams(2, 3), Fraction(1, 5)
    lhs = to_real(density_ratio(x, source, target), ctx)
    outcomes = [
        sum_until_converged(
            lhs,
            density_expansion_terms(x, source, target, convention, ctx),
            density_tail_ratio(source, target),
            ctx,
            abandon_window=DIVERGENCE_WINDOW,
        )
        for convention in CONVENTIONS
    ]
    assert [outcome.converged for outcome in outcomes] == [True, False]
    assert outcomes[0].terms_used == 4
    assert outcomes[1].terms_used < ctx.max_terms


def test_connection_coefficients_are_cached():
    source, target = JacobiParams(1, 1), JacobiParams(2, 3)
    density_ratio_expansion_check(source, target, Fraction(1, 5), PrecisionContext(tolerance_exp=-60))
    hits = conn_coeff.cache_info().hits
    density_ratio_expansion_check(source, target, Fraction(-2, 5), PrecisionContext(tolerance_exp=-60))
    assert conn_coeff.cache_info().hits > hits
