from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from poch_verify.awfamilies import (
    ASCParams,
    DensitySpec,
    asc_conn,
    asc_conn_inverse,
    asc_eval,
    aw_alpha_eval,
    aw_alpha_norm,
    aw_alpha_norm_literal,
    aw_conn,
    aw_conn_inverse,
    bpoly_eval,
    bpoly_literal_eval,
    chebu_in_qhermite,
    density_c2n_symmetric,
    density_eval,
    family_norm,
    g_eval,
    qhermite_eval,
    qhermite_in_chebu,
    rogers_conn,
    rogers_eval,
    rogers_scaled_eval,
)
from poch_verify.errors import OutsideSupport, SingularParameters
from poch_verify.jacobi import chebyshev_U
from poch_verify.numerics import PrecisionContext
from poch_verify.qkernel import q_binomial, q_poch

X, Y, Z = Fraction(1, 3), Fraction(-2, 5), Fraction(3, 7)
Q = Fraction(2, 5)

points = st.fractions(min_value=-1, max_value=1, max_denominator=12)
bases = st.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=10)


def test_galois_numbers():
    q = Fraction(1, 3)
    assert [qhermite_eval(n, 1, q) for n in range(3)] == [1, 2, q + 3]


def test_qhermite_at_q_one_is_hermite_like():
    assert qhermite_eval(2, X, 1) == 4 * X**2


def test_adopted_and_literal_b_differ_from_n_two():
    y, q = Fraction(1, 4), Fraction(1, 2)
    assert bpoly_eval(1, y, q) == bpoly_literal_eval(1, y, q) == -2 * y
    assert bpoly_eval(2, y, q) == 4 * y * y * q + 1 - q
    assert bpoly_literal_eval(2, y, q) != bpoly_eval(2, y, q)


def test_b_is_reflected_qhermite():
    y, q = Fraction(1, 4), Fraction(2, 3)
    for n in range(6):
        assert bpoly_eval(n, y, q) == (-1) ** n * q ** (n * (n - 1) // 2) * qhermite_eval(n, y, 1 / q)


@given(points, bases)
def test_qhermite_zero_sum(y, q):
    for n in range(1, 6):
        assert sum(q_binomial(n, j, q) * qhermite_eval(j, y, q) * bpoly_eval(n - j, y, q) for j in range(n + 1)) == 0


def test_rogers_at_beta_q_is_chebyshev_u():
    for n in range(9):
        assert rogers_eval(n, X, Q, Q) == chebyshev_U(n, X)


def test_rogers_at_beta_zero_is_scaled_qhermite():
    for n in range(6):
        assert rogers_eval(n, X, 0, Q) == qhermite_eval(n, X, Q) / q_poch(Q, Q, n)


def test_rogers_singular_q():
    with pytest.raises(SingularParameters, match="singular q"):
        rogers_eval(2, X, Fraction(1, 2), 1)


def test_scaled_rogers():
    s = Fraction(3, 2)
    for n in range(6):
        assert rogers_scaled_eval(n, X, s, Q) == s**n * rogers_eval(n, X, 1 / s, Q)
    assert rogers_scaled_eval(1, X, 0, Q) == -2 * X / (1 - Q)


def test_chebyshev_qhermite_change_of_base():
    for n in range(7):
        u_from_h = sum(chebu_in_qhermite(n, m, Q) * qhermite_eval(m, X, Q) for m in range(n + 1))
        h_from_u = sum(qhermite_in_chebu(n, m, Q) * chebyshev_U(m, X) for m in range(n + 1))
        assert u_from_h == chebyshev_U(n, X)
        assert h_from_u == qhermite_eval(n, X, Q)


def test_rogers_connection():
    gamma, beta = Fraction(1, 4), Fraction(-1, 3)
    for n in range(6):
        expansion = sum(rogers_conn(n, m, gamma, beta, Q) * rogers_eval(m, X, beta, Q) for m in range(n + 1))
        assert expansion == rogers_eval(n, X, gamma, Q)


def test_asc_at_rho_zero_is_qhermite():
    for n in range(6):
        assert asc_eval(n, X, ASCParams(Y, 0, Q)) == qhermite_eval(n, X, Q)


def test_asc_expansions():
    rho = Fraction(1, 2)
    params = ASCParams(Y, rho, Q)
    for n in range(6):
        p_from_h = sum(asc_conn(n, j, Y, rho, Q) * qhermite_eval(j, X, Q) for j in range(n + 1))
        h_from_p = sum(asc_conn_inverse(n, j, Y, rho, Q) * asc_eval(j, X, params) for j in range(n + 1))
        assert p_from_h == asc_eval(n, X, params)
        assert h_from_p == qhermite_eval(n, X, Q)


def test_g_is_reflected_asc():
    rho = Fraction(2, 3)
    for n in range(5):
        assert g_eval(n, X, Y, rho, Q) == rho**n * asc_eval(n, Y, ASCParams(X, 1 / rho, Q))


def test_aw_connection_matrices_are_inverse():
    rho1, rho2 = Fraction(1, 3), Fraction(1, 2)
    for n in range(4):
        for j in range(n + 1):
            product = sum(
                aw_conn(n, k, Y, rho1, Z, rho2, Q) * aw_conn_inverse(k, j, Y, rho1, Z, rho2, Q) for k in range(j, n + 1)
            )
            assert product == (1 if n == j else 0)


def test_aw_alpha_from_its_expansion():
    rho1, rho2 = Fraction(1, 3), Fraction(1, 2)
    params = ASCParams(Y, rho1, Q)
    for n in range(4):
        expansion = sum(aw_conn(n, j, Y, rho1, Z, rho2, Q) * asc_eval(j, X, params) for j in range(n + 1))
        assert aw_alpha_eval(n, X, Y, rho1, Z, rho2, Q) == expansion


def test_aw_norms():
    rho1, rho2 = Fraction(1, 3), Fraction(1, 2)
    assert aw_alpha_norm(0, Y, rho1, Z, rho2, Q) == 1
    assert aw_alpha_norm(2, Y, rho1, Z, rho2, Q) != aw_alpha_norm_literal(2, Y, rho1, Z, rho2, Q)
    assert family_norm("aw", 2, {"y": Y, "rho1": rho1, "z": Z, "rho2": rho2, "q": Q}) == aw_alpha_norm(
        2, Y, rho1, Z, rho2, Q
    )


def test_family_norms():
    assert family_norm("chebU", 3, {"q": Q}) == 1
    assert family_norm("qh", 2, {"q": Q}) == q_poch(Q, Q, 2)
    assert family_norm("asc", 1, {"q": Q, "rho": Fraction(1, 2)}) == (1 - Q) * Fraction(3, 4)
    with pytest.raises(ValueError):
        family_norm("nope", 1, {})


def test_qhermite_density_at_q_zero():
    ctx = PrecisionContext()
    value = density_eval(DensitySpec("f_h", {"q": 0}, ctx), Fraction(1, 2))
    assert abs(value - ctx.mp.sqrt(3) / ctx.mp.pi) < ctx.tolerance


def test_density_outside_support():
    with pytest.raises(OutsideSupport, match="outside support"):
        density_eval(DensitySpec("f_h", {"q": Fraction(1, 2)}), 1)


def test_composed_density_is_symmetric():
    ctx = PrecisionContext(precision_bits=128, tolerance_exp=-60)
    params = {
        "y": Fraction(1, 5),
        "rho1": Fraction(3, 10),
        "z": Fraction(2, 5),
        "rho2": Fraction(1, 2),
        "q": Fraction(3, 5),
    }
    spec = DensitySpec("f_C2N", params, ctx)
    x = Fraction(1, 10)
    assert abs(density_eval(spec, x) - density_c2n_symmetric(spec, x)) < ctx.tolerance
