"""Identities between the families of the Askey-Wilson scheme: q-Hermite, Chebyshev U, Rogers,
Al-Salam-Chihara and Askey-Wilson.

Finite identities come from composing a connection formula with its inverse; the infinite ones are
density ratios expanded in the orthogonal polynomials of the denominator density.
"""
from fractions import Fraction
from itertools import islice
from typing import Callable, Iterator, List, Tuple

from poch_verify.awfamilies import (
    DensityFamily,
    DensitySpec,
    asc_conn,
    asc_conn_inverse,
    asc_iter,
    asc_values,
    aw_alpha_iter,
    aw_alpha_norm,
    aw_alpha_values,
    aw_conn,
    aw_conn_inverse,
    bpoly_iter,
    bpoly_values,
    chebu_in_qhermite,
    density_c2n_symmetric,
    density_eval,
    g_values,
    qhermite_in_chebu,
    qhermite_iter,
    qhermite_values,
    rogers_conn,
    rogers_eval,
    rogers_iter,
    rogers_scaled_eval,
    rogers_values,
)
from poch_verify.catalog_q import midway
from poch_verify.jacobi import chebyshev_U_iter, chebyshev_values
from poch_verify.numerics import PrecisionContext, real_args
from poch_verify.qkernel import l_product, q_binomial, q_binomial_row, q_poch, q_poch_inf, q_poch_scaled, w_product
from poch_verify.registry import (
    IdentityRecord,
    exact_record,
    is_one,
    is_zero,
    outside_unit_interval,
    series_record,
    var,
)


def decay_bound(*values) -> Fraction:
    """Ratio bound for terms decaying like the largest of `values`; zero when they all vanish."""
    largest = max(abs(Fraction(value)) for value in values)
    return midway(largest) if largest else Fraction(0)


def _quadratic(linear: Tuple[int, int], quadratic: Tuple[int, int, int]) -> Callable[[int], Tuple[int, int]]:
    """Degree bounds (k n + c) for the first variable and (a n^2 + b n + c) for q."""
    return lambda n: (linear[0] * n + linear[1], quadratic[0] * n * n + quadratic[1] * n + quadratic[2])


def _delta_row(n: int) -> Tuple[int, ...]:
    return tuple(int(j == n) for j in range(n + 1))


def _inside(*names: str):
    def domain(p) -> bool:
        return all(abs(p[name]) < 1 for name in names)

    return domain


def _even(values: Iterator) -> Iterator:
    return islice(values, 0, None, 2)


def _expansion(coefficient: Callable[[int], object], polynomials: Iterator) -> Iterator:
    """Terms coefficient(n) P_n of an expansion in the polynomials P_0, P_1, ..."""
    return (coefficient(n) * value for n, value in enumerate(polynomials))


def _c2(n: int) -> int:
    return n * (n - 1) // 2


# q-Hermite and Chebyshev U


def _chebu_fin1(n, p):
    q = p["q"]
    return sum(
        (-1) ** j * q ** _c2(j) * q_binomial(n, n - j, q) * q_binomial(2 * n - j, n, q) / (1 - q ** (n - j + 1))
        for j in range(n + 1)
    )


def _chebu_fin2(n, p):
    q = p["q"]
    return sum(
        (-1) ** k * q ** _c2(k) * q_binomial(2 * n, n - k, q) * (1 - q ** (2 * k + 1))
        / (1 - q ** (n + k + 1))
        for k in range(n + 1)
    )


def _u_in_h(n, p):
    h = qhermite_values(n, p["x"], p["q"])
    return sum(chebu_in_qhermite(n, m, p["q"]) * h[m] for m in range(n + 1))


def _h_in_u(n, p):
    u = chebyshev_values(n, p["x"], second_kind=True)
    return sum(qhermite_in_chebu(n, m, p["q"]) * u[m] for m in range(n + 1))


def _chebu_cc_inverse(n, p):
    q = p["q"]
    return tuple(
        sum(chebu_in_qhermite(n, k, q) * qhermite_in_chebu(k, j, q) for k in range(j, n + 1)) for j in range(n + 1)
    )


def _inu_lhs(p, ctx: PrecisionContext):
    x, q = real_args(p, ctx, "x", "q")
    return q_poch_inf(q, q, ctx) * l_product(x, q, q, ctx)


def _inu_terms(p, ctx: PrecisionContext):
    x, q = real_args(p, ctx, "x", "q")
    return _expansion(lambda j: (-1) ** j * q ** (j * (j + 1) // 2), _even(chebyshev_U_iter(x)))


def _nah_coefficient(q):
    return lambda j: (1 - q) * q**j / (q_poch(q, q, j) ** 2 * (1 - q ** (j + 1)))


def _nah_lhs(p, ctx: PrecisionContext):
    return 1 / _inu_lhs(p, ctx)


def _nah_terms(p, ctx: PrecisionContext):
    x, q = real_args(p, ctx, "x", "q")
    return _expansion(_nah_coefficient(q), _even(qhermite_iter(x, q)))


def _x0_lhs(p, ctx: PrecisionContext):
    (q,) = real_args(p, ctx, "q")
    return 1 / (q_poch_inf(q * q, q * q, ctx) * q_poch_inf(-q, q, ctx))


def _x0_terms(p, ctx: PrecisionContext):
    (q,) = real_args(p, ctx, "q")
    n = 0
    while True:
        yield (-q) ** n * (1 - q) * q_poch(q, q * q, n) / (q_poch(q, q, n) ** 2 * (1 - q ** (n + 1)))
        n += 1


def _galois_lhs(p, ctx: PrecisionContext):
    return 1 / q_poch_inf(p["q"], p["q"], ctx) ** 3


def _galois_terms(p, ctx: PrecisionContext):
    (q,) = real_args(p, ctx, "q")
    return _expansion(_nah_coefficient(q), _even(qhermite_iter(ctx.mp.mpf(1), q)))


# Rogers with two parameters


def _rogers_fin(n, p):
    beta, gamma, q = p["beta"], p["gamma"], p["q"]
    row = q_binomial_row(n, q)
    return sum(
        row[j]
        * q_poch_scaled(gamma, beta, q, j)
        * q_poch_scaled(beta, gamma, q, n - j)
        * (1 - beta * q ** (2 * j))
        * q_poch(gamma * q ** (j + 1), q, n - 1)
        / q_poch(beta * q**j, q, n + 1)
        for j in range(n + 1)
    )


def _rogers_ratio_lhs(p, ctx: PrecisionContext):
    x, beta, gamma, q = real_args(p, ctx, "x", "beta", "gamma", "q")
    constants = q_poch_inf(beta * beta, q, ctx) * q_poch_inf(gamma, q, ctx) * q_poch_inf(gamma * q, q, ctx)
    constants /= q_poch_inf(beta, q, ctx) * q_poch_inf(beta * q, q, ctx) * q_poch_inf(gamma * gamma, q, ctx)
    return constants * l_product(x, gamma, q, ctx) / l_product(x, beta, q, ctx)


def _rogers_ratio_terms(p, ctx: PrecisionContext):
    x, beta, gamma, q = real_args(p, ctx, "x", "beta", "gamma", "q")

    def coefficient(n):
        numerator = q_poch_scaled(beta, gamma, q, n) * q_poch(gamma, q, n) * (1 - beta)
        numerator *= (1 - gamma * q ** (2 * n)) * q_poch(q, q, 2 * n)
        return numerator / (q_poch(q, q, n) * q_poch(beta, q, n + 1) * (1 - gamma) * q_poch(gamma * gamma, q, 2 * n))

    return _expansion(coefficient, _even(rogers_iter(x, gamma, q)))


def _rogers_cnac(n, p):
    x, gamma, beta, q = p["x"], p["gamma"], p["beta"], p["q"]
    c = rogers_values(n, x, beta, q)
    return sum(rogers_conn(n, m, gamma, beta, q) * c[m] for m in range(n + 1))


def _rogers_cc_inverse(n, p):
    gamma, beta, q = p["gamma"], p["beta"], p["q"]
    return tuple(
        sum(rogers_conn(n, k, gamma, beta, q) * rogers_conn(k, j, beta, gamma, q) for k in range(j, n + 1))
        for j in range(n + 1)
    )


# q-Hermite and Rogers


def _p1(n, p):
    beta, q = p["beta"], p["q"]
    return sum(
        (-1) ** k * q ** _c2(k) * q_binomial(n, k, q) * q_poch(beta * q ** (n - k), q, n - 1) for k in range(n + 1)
    )


def _p2(n, p):
    beta, q = p["beta"], p["q"]
    return sum(
        (-1) ** k * q ** _c2(k) * q_binomial(n, k, q) * (1 - beta * q ** (2 * k)) / q_poch(beta * q**k, q, n + 1)
        for k in range(n + 1)
    )


def _p3(n, p):
    beta, q = p["beta"], p["q"]
    return sum(q_binomial(n, j, q) * q_poch(beta, q, j) * q_poch_scaled(beta, 1, q, n - j) for j in range(n + 1))


def _pair_product(beta, q, ctx: PrecisionContext):
    # (beta, beta q)_inf (-beta)_inf^2 / (beta^2)_inf
    product = q_poch_inf(beta, q, ctx) * q_poch_inf(beta * q, q, ctx) * q_poch_inf(-beta, q, ctx) ** 2
    return product / q_poch_inf(beta * beta, q, ctx)


def _qh_rogers_series1_lhs(p, ctx: PrecisionContext):
    return _pair_product(*real_args(p, ctx, "beta", "q"), ctx)


def _qh_rogers_series1_terms(p, ctx: PrecisionContext):
    beta, q = real_args(p, ctx, "beta", "q")
    n = 0
    while True:
        numerator = beta**n * q ** _c2(n) * q_poch(beta, q, n) * (1 - beta * q ** (2 * n)) * q_poch(q, q, 2 * n)
        numerator *= q_poch(beta * beta, q * q, n)
        yield numerator / (q_poch(q, q, n) * q_poch(beta * beta, q, 2 * n) * (1 - beta) * q_poch(q * q, q * q, n))
        n += 1


def _qh_rogers_series2_lhs(p, ctx: PrecisionContext):
    return 1 / _qh_rogers_series1_lhs(p, ctx)


def _qh_rogers_series2_terms(p, ctx: PrecisionContext):
    beta, q = real_args(p, ctx, "beta", "q")
    n = 0
    while True:
        yield (-beta) ** n * (1 - beta) * q_poch(q, q * q, n) / (q_poch(q, q, n) * q_poch(beta, q, n + 1))
        n += 1


def _hc(n, p):
    x, beta, q = p["x"], p["beta"], p["q"]
    h, c = qhermite_values(n, x, q), rogers_values(n, x, beta, q)
    return sum(c[j] * beta ** (n - j) * h[n - j] / q_poch(q, q, n - j) for j in range(n + 1))


def _ch(n, p):
    x, beta, q = p["x"], p["beta"], p["q"]
    h, b = qhermite_values(n, x, q), bpoly_values(n, x, q)
    row = q_binomial_row(n, q)
    return sum(row[j] * h[j] * beta ** (n - j) * b[n - j] for j in range(n + 1))


def _simplified1(n, p):
    rho, q = p["rho"], p["q"]
    return sum(q_binomial(n, j, q) * q_poch(rho, q, j) * rho ** (n - j) for j in range(n + 1))


def _simplified2(n, p):
    rho, q = p["rho"], p["q"]
    return sum(q_binomial(n, j, q) * (-1) ** j * q ** _c2(j) * rho**j for j in range(n + 1))


def _rogers_cc(n, p):
    x, beta, q = p["x"], p["beta"], p["q"]
    c = rogers_values(n, x, beta, q)
    return sum(c[j] * rogers_scaled_eval(n - j, x, beta, q) for j in range(n + 1))


def _rogers_cc_qinv(n, p):
    x, beta, q = p["x"], p["beta"], p["q"]
    c, c_inverted = rogers_values(n, x, beta, q), rogers_values(n, x, beta, 1 / q)
    return sum(c[j] * q ** (j - n) * c_inverted[n - j] for j in range(n + 1))


def _fc_over_fh(p, ctx: PrecisionContext):
    x, beta, q = real_args(p, ctx, "x", "beta", "q")
    denominator = q_poch_inf(beta, q, ctx) * q_poch_inf(beta * q, q, ctx) * l_product(x, beta, q, ctx)
    return q_poch_inf(beta * beta, q, ctx) / denominator


def _fc_over_fh_terms(p, ctx: PrecisionContext):
    x, beta, q = real_args(p, ctx, "x", "beta", "q")
    return _expansion(
        lambda n: beta**n / (q_poch(q, q, n) * q_poch(beta * q, q, n)), _even(qhermite_iter(x, q))
    )


def _fh_over_fc_terms(p, ctx: PrecisionContext):
    x, beta, q = real_args(p, ctx, "x", "beta", "q")

    def coefficient(n):
        numerator = (-beta) ** n * q ** _c2(n) * q_poch(beta, q, n) * (1 - beta * q ** (2 * n)) * q_poch(q, q, 2 * n)
        return numerator / (q_poch(q, q, n) * q_poch(beta * beta, q, 2 * n) * (1 - beta))

    return _expansion(coefficient, _even(rogers_iter(x, beta, q)))


# Rogers and Chebyshev U


def _rogers_chebu_fin1(n, p):
    beta, q = p["beta"], p["q"]
    total = 0
    for k in range(n + 1):
        numerator = q_binomial(n, k, q) * q_binomial(n + k + 1, k + 1, q) * q**k * q_poch(beta / q, q, k)
        numerator *= q_poch_scaled(beta, q, q, n - k) * (1 - beta * q ** (2 * k))
        total += numerator / (q_poch(beta * q**k, q, n + 1) * (1 - q ** (n + k + 1)))
    return total


def _rogers_chebu_fin2(n, p):
    beta, q = p["beta"], p["q"]
    return sum(
        q_binomial(2 * n + 1, n - k, q)
        * q_poch_scaled(beta, q, q, k)
        * q_poch_scaled(q, beta, q, n - k)
        * (1 - q ** (2 * k + 1))
        * q_poch(beta * q ** (k + 1), q, n - 1)
        for k in range(n + 1)
    )


def _half_products(beta, q, ctx: PrecisionContext):
    # (q beta^2|q^2)_inf (-q)_inf (q^2|q^2)_inf / (beta^2|q^2)_inf
    square = q * q
    numerator = q_poch_inf(q * beta * beta, square, ctx) * q_poch_inf(-q, q, ctx) * q_poch_inf(square, square, ctx)
    return numerator / q_poch_inf(beta * beta, square, ctx)


def _rogers_chebu_series1_lhs(p, ctx: PrecisionContext):
    return _half_products(*real_args(p, ctx, "beta", "q"), ctx)


def _rogers_chebu_series1_terms(p, ctx: PrecisionContext):
    beta, q = real_args(p, ctx, "beta", "q")
    n = 0
    while True:
        yield (-1) ** n * q_poch_scaled(beta, q, q, n) / q_poch(beta, q, n + 1)
        n += 1


def _rogers_chebu_series2_lhs(p, ctx: PrecisionContext):
    beta, q = real_args(p, ctx, "beta", "q")
    return 1 / ((1 - q) * _half_products(beta, q, ctx))


def _rogers_chebu_series2_terms(p, ctx: PrecisionContext):
    beta, q = real_args(p, ctx, "beta", "q")
    n = 0
    while True:
        numerator = q_poch_scaled(q, beta, q, n) * q_poch(beta, q, n) * q_poch(q, q * q, n) * (1 - beta * q ** (2 * n))
        denominator = q_poch(q, q, n) * q_poch(q, q, n + 1) * q_poch(beta * beta * q, q * q, n)
        yield (-1) ** n * numerator / denominator
        n += 1


def _nice_lhs(p, ctx: PrecisionContext):
    beta, q = real_args(p, ctx, "beta", "q")
    return q_poch_inf(beta * beta, q, ctx) * q_poch_inf(q, q, ctx) ** 3 / q_poch_inf(beta, q, ctx) ** 4


def _nice_terms(p, ctx: PrecisionContext):
    beta, q = real_args(p, ctx, "beta", "q")
    n = 0
    while True:
        yield (2 * n + 1) * q_poch_scaled(beta, q, q, n) / q_poch(beta, q, n + 1)
        n += 1


def _fc_over_chebu_lhs(p, ctx: PrecisionContext):
    x, beta, q = real_args(p, ctx, "x", "beta", "q")
    constants = q_poch_inf(beta * beta, q, ctx) * q_poch_inf(q, q, ctx)
    constants /= q_poch_inf(beta, q, ctx) * q_poch_inf(beta * q, q, ctx)
    return constants * l_product(x, q, q, ctx) / l_product(x, beta, q, ctx)


def _fc_over_chebu_terms(p, ctx: PrecisionContext):
    x, beta, q = real_args(p, ctx, "x", "beta", "q")
    return _expansion(
        lambda n: q_poch_scaled(beta, q, q, n) * (1 - beta) / q_poch(beta, q, n + 1), _even(chebyshev_U_iter(x))
    )


# Al-Salam-Chihara and q-Hermite


def asc_zero_sum(bpoly):
    """Sum_j [n j]_q h_j(y) b_{n-j}(y) with `bpoly(m, y, q)` as the reading of b_m."""

    def evaluate(n, p):
        y, q = p["y"], p["q"]
        h = qhermite_values(n, y, q)
        row = q_binomial_row(n, q)
        return sum(row[j] * h[j] * bpoly(n - j, y, q) for j in range(n + 1))

    return evaluate


def _poisson_mehler_lhs(p, ctx: PrecisionContext):
    x, y, rho, q = real_args(p, ctx, "x", "y", "rho", "q")
    return q_poch_inf(rho * rho, q, ctx) / w_product(x, y, rho, q, ctx)


def _poisson_mehler_terms(p, ctx: PrecisionContext):
    x, y, rho, q = real_args(p, ctx, "x", "y", "rho", "q")
    pairs = zip(qhermite_iter(x, q), qhermite_iter(y, q))
    return (rho**j * hx * hy / q_poch(q, q, j) for j, (hx, hy) in enumerate(pairs))


def _asc_reciprocal_lhs(p, ctx: PrecisionContext):
    return 1 / _poisson_mehler_lhs(p, ctx)


def _asc_reciprocal_terms(p, ctx: PrecisionContext):
    x, y, rho, q = real_args(p, ctx, "x", "y", "rho", "q")
    pairs = zip(bpoly_iter(y, q), asc_iter(x, y, rho, q))
    return (rho**j * b * asc / (q_poch(q, q, j) * q_poch(rho * rho, q, j)) for j, (b, asc) in enumerate(pairs))


def _diagonal_lhs(p, ctx: PrecisionContext):
    x, rho, q = real_args(p, ctx, "x", "rho", "q")
    return q_poch_inf(rho * rho, q, ctx) / (q_poch_inf(rho, q, ctx) ** 2 * l_product(x, rho, q, ctx))


def _diagonal_terms(p, ctx: PrecisionContext):
    x, rho, q = real_args(p, ctx, "x", "rho", "q")
    return (rho**j * h * h / q_poch(q, q, j) for j, h in enumerate(qhermite_iter(x, q)))


def _diagonal_reciprocal_lhs(p, ctx: PrecisionContext):
    return 1 / _diagonal_lhs(p, ctx)


def _diagonal_reciprocal_terms(p, ctx: PrecisionContext):
    x, rho, q = real_args(p, ctx, "x", "rho", "q")
    pairs = zip(bpoly_iter(x, q), rogers_iter(x, rho, q))
    return (rho**j * b * c / q_poch(rho * rho, q, j) for j, (b, c) in enumerate(pairs))


def _expand_p(n, p):
    x, y, rho, q = p["x"], p["y"], p["rho"], p["q"]
    h = qhermite_values(n, x, q)
    return sum(asc_conn(n, j, y, rho, q) * h[j] for j in range(n + 1))


def _expand_h(n, p):
    x, y, rho, q = p["x"], p["y"], p["rho"], p["q"]
    asc = asc_values(n, x, y, rho, q)
    return sum(asc_conn_inverse(n, j, y, rho, q) * asc[j] for j in range(n + 1))


def _asc_cc_inverse(n, p):
    y, rho, q = p["y"], p["rho"], p["q"]
    return tuple(
        sum(asc_conn(n, k, y, rho, q) * asc_conn_inverse(k, j, y, rho, q) for k in range(j, n + 1))
        for j in range(n + 1)
    )


# Askey-Wilson and Al-Salam-Chihara


def _aw_args(p):
    return p["y"], p["rho1"], p["z"], p["rho2"], p["q"]


def _aw_fin1(n, p):
    z, y, beta, q = p["z"], p["y"], p["beta"], p["q"]
    asc, g = asc_values(n, z, y, beta, q), g_values(n, z, y, beta * q ** (n - 1), q)
    row = q_binomial_row(n, q)
    return sum(row[j] * q_poch(beta * beta * q**j, q, n - 1) * asc[j] * g[n - j] for j in range(n + 1))


def _aw_fin2(n, p):
    z, y, beta, q = p["z"], p["y"], p["beta"], p["q"]
    square = beta * beta
    total = 0
    for j in range(n + 1):
        asc = asc_values(n - j, z, y, beta * q**j, q)[n - j]
        g = g_values(j, z, y, beta * q ** (j - 1), q)[j]
        numerator = q_binomial(n, j, q) * asc * g * (1 - square * q ** (2 * j - 1))
        total += numerator / (q_poch(square * q ** (j - 1), q, n) * (1 - square * q ** (n + j - 1)))
    return total


def _aw_density_spec(p, ctx: PrecisionContext) -> DensitySpec:
    return DensitySpec(DensityFamily.F_C2N, {name: p[name] for name in ("y", "rho1", "z", "rho2", "q")}, ctx)


def _aw_ratio_lhs(p, ctx: PrecisionContext):
    # f_C2N(x) / f_CN(x|y,rho1)
    conditional = DensitySpec(DensityFamily.F_CN, {"y": p["y"], "rho": p["rho1"], "q": p["q"]}, ctx)
    return density_eval(_aw_density_spec(p, ctx), p["x"]) / density_eval(conditional, p["x"])


def _aw_ratio_terms(p, ctx: PrecisionContext):
    x, y, rho1, z, rho2, q = real_args(p, ctx, "x", "y", "rho1", "z", "rho2", "q")
    square = rho1 * rho1 * rho2 * rho2
    pairs = zip(asc_iter(z, y, rho1 * rho2, q), asc_iter(x, y, rho1, q))
    return (
        rho2**n * outer * inner / (q_poch(square, q, n) * q_poch(q, q, n)) for n, (outer, inner) in enumerate(pairs)
    )


def _aw_reciprocal_lhs(p, ctx: PrecisionContext):
    # f_CN(x|y,rho1) / f_C2N(x), with f_C2N composed in the second order
    conditional = DensitySpec(DensityFamily.F_CN, {"y": p["y"], "rho": p["rho1"], "q": p["q"]}, ctx)
    return density_eval(conditional, p["x"]) / density_c2n_symmetric(_aw_density_spec(p, ctx), p["x"])


def aw_reciprocal_terms(norm):
    """Terms c_{n,0} alpha_n(x) / norm(n) of the expansion of f_CN(x|y,rho1)/f_C2N(x)."""

    def terms(p, ctx: PrecisionContext):
        x, y, rho1, z, rho2, q = real_args(p, ctx, "x", "y", "rho1", "z", "rho2", "q")
        return _expansion(
            lambda n: aw_conn(n, 0, y, rho1, z, rho2, q) / norm(n, y, rho1, z, rho2, q),
            aw_alpha_iter(x, y, rho1, z, rho2, q),
        )

    return terms


def _aw_roundtrip(n, p):
    y, rho1, z, rho2, q = _aw_args(p)
    alphas = aw_alpha_values(n, p["x"], y, rho1, z, rho2, q)
    return sum(aw_conn_inverse(n, j, y, rho1, z, rho2, q) * alphas[j] for j in range(n + 1))


def _aw_cc_inverse(n, p):
    args = _aw_args(p)
    return tuple(
        sum(aw_conn(n, k, *args) * aw_conn_inverse(k, j, *args) for k in range(j, n + 1)) for j in range(n + 1)
    )


def _c1(n, p):
    x, rho, q = p["x"], p["rho"], p["q"]
    c = rogers_values(n, x, rho, q)
    return sum(
        q_poch(rho * rho * q**j, q, n - 1) * c[j] * rogers_scaled_eval(n - j, x, rho * q ** (n - 1), q)
        for j in range(n + 1)
    )


def _c2_sum(n, p):
    x, rho, q = p["x"], p["rho"], p["q"]
    square = rho * rho
    total = 0
    for j in range(n + 1):
        scaled = rogers_scaled_eval(j, x, rho * q ** (j - 1), q) / q_poch(square * q ** (j - 1), q, j)
        total += scaled * rogers_eval(n - j, x, rho * q**j, q) / q_poch(square * q ** (2 * j), q, n - j)
    return total


def _a1(n, p):
    a, q = p["a"], p["q"]
    row = q_binomial_row(n, q)
    signed = [(-1) ** k * row[k] * q ** _c2(n - k) for k in range(n + 1)]
    fractions = sum(signed[k] / (q_poch(a, q, k) * q_poch(a * q ** (n + k - 1), q, n - k)) for k in range(n + 1))
    products = sum(signed[k] * q_poch(a * q**k, q, n - 1) for k in range(n + 1)) / q_poch(a, q, 2 * n - 1)
    return fractions, products


def _a2(n, p):
    a, q = p["a"], p["q"]
    row = q_binomial_row(n, q)
    signed = [(-1) ** k * row[k] * q ** _c2(k) for k in range(n + 1)]
    fractions = sum(
        signed[k] / (q_poch(a * q ** (k - 1), q, k) * q_poch(a * q ** (2 * k), q, n - k)) for k in range(n + 1)
    )
    merged = sum(signed[k] * (1 - a * q ** (2 * k - 1)) / q_poch(a * q ** (k - 1), q, n + 1) for k in range(n + 1))
    return fractions, merged


def _zero(n, p):
    return 0


def _zero_pair(n, p):
    return 0, 0


ASC_POINTS = [
    {"x": Fraction(3, 10), "y": Fraction(3, 10), "rho": Fraction(2, 5), "q": Fraction(1, 2)},
    {"x": Fraction(3, 10), "y": Fraction(3, 10), "rho": 0, "q": Fraction(1, 2)},
    {"x": Fraction(-1, 2), "y": Fraction(1, 5), "rho": Fraction(-3, 10), "q": Fraction(3, 5)},
]
AW_POINTS = [
    {
        "x": Fraction(1, 10),
        "y": Fraction(1, 5),
        "rho1": Fraction(3, 10),
        "z": Fraction(2, 5),
        "rho2": Fraction(1, 2),
        "q": Fraction(3, 5),
    },
    {
        "x": Fraction(-1, 2),
        "y": Fraction(3, 10),
        "rho1": Fraction(-2, 5),
        "z": Fraction(1, 5),
        "rho2": Fraction(3, 10),
        "q": Fraction(1, 2),
    },
]
AW_RECIPROCAL_ANCHOR = (
    "f_CN(x|y,rho1)/f_C2N(x) = sum_n rho2^n g_n(z|y,rho1 rho2 q^{n-1}) (rho1^2 rho2^2)_{2n}"
    " alpha_n(x) / ((q,rho2^2)_n prod_{k<n} w(y,z|rho1 rho2 q^k))"
)


def _aw_series_variables():
    return [var(name, "(-1, 1)", outside_unit_interval) for name in ("x", "y", "rho1", "z", "rho2", "q")]


def records() -> List[IdentityRecord]:
    base = var("q", "|q| < 1", outside_unit_interval)
    point = var("x", "(-1, 1)", outside_unit_interval)
    beta = var("beta", "|beta| < 1", outside_unit_interval)
    nonzero_q = var("q", "q != 0", is_zero)
    beta_points = [{"beta": Fraction(3, 10), "q": Fraction(1, 2)}, {"beta": Fraction(-2, 5), "q": Fraction(3, 5)}]
    chebu_points = [{"beta": Fraction(3, 10), "q": Fraction(2, 5)}, {"beta": Fraction(-1, 2), "q": Fraction(1, 3)}]
    x_points = [
        {"x": 0, "q": Fraction(1, 2)},
        {"x": Fraction(3, 10), "q": Fraction(1, 2)},
        {"x": Fraction(-3, 5), "q": Fraction(-2, 5)},
    ]
    return [
        # q-Hermite and Chebyshev U
        exact_record(
            "qh.chebU.fin1",
            "sum_j (-1)^j q^C(j,2) [n n-j]_q [2n-j n]_q / (1 - q^{n-j+1}) = 0",
            [var("q")],
            _chebu_fin1,
            _zero,
            lambda n: (4 * n * n + 4,),
        ),
        exact_record(
            "qh.chebU.fin2",
            "sum_k (-1)^k q^C(k,2) [2n n-k]_q (1 - q^{2k+1}) / (1 - q^{n+k+1}) = 0",
            [var("q")],
            _chebu_fin2,
            _zero,
            lambda n: (4 * n * n + 4,),
        ),
        exact_record(
            "qh.chebU.expand_U",
            "U_n(x) = sum_j (-1)^j q^C(j+1,2) [n-j j]_q h_{n-2j}(x|q)",
            [var("x"), var("q")],
            _u_in_h,
            lambda n, p: chebyshev_values(n, p["x"], second_kind=True)[n],
            _quadratic((1, 1), (1, 1, 1)),
        ),
        exact_record(
            "qh.chebU.expand_h",
            "h_n(x|q) = sum_k q^k [n k]_q (1 - q^{n-2k+1}) / (1 - q^{n-k+1}) U_{n-2k}(x)",
            [var("x"), var("q")],
            _h_in_u,
            lambda n, p: qhermite_values(n, p["x"], p["q"])[n],
            _quadratic((1, 1), (2, 3, 2)),
        ),
        exact_record(
            "qh.chebU.cc_inverse",
            "sum_k c(U_n -> h_k) c(h_k -> U_j) = delta(n,j)",
            [var("q")],
            _chebu_cc_inverse,
            lambda n, p: _delta_row(n),
            lambda n: (2 * n * n + 3 * n + 3,),
        ),
        series_record(
            "qh.chebU.inU",
            "(q)_inf prod_{k>=1} l(x|q^k) = sum_j (-1)^j q^C(j+1,2) U_{2j}(x)",
            [point, base],
            _inu_lhs,
            _inu_terms,
            lambda p: decay_bound(p["q"]),
            x_points,
            domain=_inside("x", "q"),
        ),
        series_record(
            "qh.chebU.nah",
            "1/((q)_inf prod_{k>=1} l(x|q^k)) = sum_j (1-q) q^j h_{2j}(x|q) / ((q)_j^2 (1 - q^{j+1}))",
            [point, base],
            _nah_lhs,
            _nah_terms,
            lambda p: decay_bound(p["q"]),
            x_points,
            domain=_inside("x", "q"),
        ),
        series_record(
            "qh.chebU.x0",
            "1/((q^2|q^2)_inf (-q)_inf) = sum_j (-q)^j (1-q) (q|q^2)_j / ((q)_j^2 (1 - q^{j+1}))",
            [base],
            _x0_lhs,
            _x0_terms,
            lambda p: decay_bound(p["q"]),
            [{"q": Fraction(1, 2)}, {"q": Fraction(-2, 5)}],
            domain=_inside("q"),
        ),
        series_record(
            "qh.chebU.galois",
            "1/(q)_inf^3 = sum_j (1-q) q^j G_{2j}(q) / ((q)_j^2 (1 - q^{j+1})), G_n(q) = h_n(1|q)",
            [base],
            _galois_lhs,
            _galois_terms,
            lambda p: decay_bound(p["q"]),
            [{"q": Fraction(1, 2)}, {"q": Fraction(-1, 3)}],
            domain=_inside("q"),
        ),
        # Rogers with two parameters
        exact_record(
            "rogers.rogers.fin",
            "sum_j [n j]_q gamma^j (beta/gamma)_j beta^{n-j} (gamma/beta)_{n-j} (1 - beta q^{2j})"
            " (gamma q^{j+1})_{n-1} / (beta q^j)_{n+1} = 0",
            [var("beta"), var("gamma"), var("q")],
            _rogers_fin,
            _zero,
        ),
        series_record(
            "rogers.rogers.series",
            "f_C(x|beta)/f_C(x|gamma) = sum_n beta^n (gamma/beta)_n (gamma)_n (1 - gamma q^{2n}) (q)_{2n}"
            " C_{2n}(x|gamma) / ((q)_n (beta q)_n (1 - gamma) (gamma^2)_{2n})",
            [point, beta, var("gamma", "|gamma| < 1", outside_unit_interval), base],
            _rogers_ratio_lhs,
            _rogers_ratio_terms,
            lambda p: decay_bound(p["beta"], p["gamma"], p["q"]),
            [
                {"x": Fraction(3, 10), "beta": Fraction(3, 10), "gamma": Fraction(1, 2), "q": Fraction(2, 5)},
                {"x": Fraction(-1, 2), "beta": Fraction(-1, 5), "gamma": Fraction(3, 10), "q": Fraction(1, 2)},
            ],
            domain=_inside("x", "beta", "gamma", "q"),
        ),
        exact_record(
            "rogers.rogers.cnac",
            "C_n(x|gamma) = sum_k beta^k (gamma/beta)_k (gamma)_{n-k} (1 - beta q^{n-2k})"
            " / ((q)_k (beta q)_{n-k} (1 - beta)) C_{n-2k}(x|beta)",
            [var("x"), var("gamma"), var("beta"), var("q")],
            _rogers_cnac,
            lambda n, p: rogers_eval(n, p["x"], p["gamma"], p["q"]),
        ),
        exact_record(
            "rogers.rogers.cc_inverse",
            "sum_k c(gamma -> beta)_{n,k} c(beta -> gamma)_{k,j} = delta(n,j)",
            [var("gamma"), var("beta"), var("q")],
            _rogers_cc_inverse,
            lambda n, p: _delta_row(n),
        ),
        # q-Hermite and Rogers
        exact_record(
            "qh.rogers.p1",
            "sum_k (-1)^k q^C(k,2) [n k]_q (beta q^{n-k})_{n-1} = 0",
            [var("beta"), var("q")],
            _p1,
            _zero,
            _quadratic((1, 1), (2, 0, 1)),
        ),
        exact_record(
            "qh.rogers.p2",
            "sum_k (-1)^k q^C(k,2) [n k]_q (1 - beta q^{2k}) / (beta q^k)_{n+1} = 0",
            [var("beta"), var("q")],
            _p2,
            _zero,
            _quadratic((1, 2), (2, 2, 1)),
        ),
        exact_record(
            "qh.rogers.p3",
            "sum_j [n j]_q (beta)_j beta^{n-j} (1/beta)_{n-j} = 0",
            [var("beta"), var("q")],
            _p3,
            _zero,
            _quadratic((1, 1), (1, 0, 1)),
        ),
        series_record(
            "qh.rogers.series1",
            "(beta, beta q)_inf (-beta)_inf^2 / (beta^2)_inf = sum_n beta^n q^C(n,2) (beta)_n (1 - beta q^{2n})"
            " (q)_{2n} (beta^2|q^2)_n / ((q)_n (beta^2)_{2n} (1 - beta) (q^2|q^2)_n)",
            [beta, base],
            _qh_rogers_series1_lhs,
            _qh_rogers_series1_terms,
            lambda p: decay_bound(p["beta"]),
            beta_points,
            domain=_inside("beta", "q"),
        ),
        series_record(
            "qh.rogers.series2",
            "(beta^2)_inf / ((beta, beta q)_inf (-beta)_inf^2) = sum_n (-beta)^n (1 - beta) (q|q^2)_n"
            " / ((q)_n (beta)_{n+1})",
            [beta, base],
            _qh_rogers_series2_lhs,
            _qh_rogers_series2_terms,
            lambda p: decay_bound(p["beta"]),
            beta_points,
            domain=_inside("beta", "q"),
        ),
        exact_record(
            "qh.rogers.hC",
            "h_n(x)/(q)_n = sum_j C_j(x|beta) beta^{n-j} h_{n-j}(x) / (q)_{n-j}",
            [var("x"), var("beta"), var("q")],
            _hc,
            lambda n, p: qhermite_values(n, p["x"], p["q"])[n] / q_poch(p["q"], p["q"], n),
        ),
        exact_record(
            "qh.rogers.Ch",
            "(q)_n C_n(x|beta) = sum_j [n j]_q h_j(x) beta^{n-j} b_{n-j}(x)",
            [var("x"), var("beta"), var("q")],
            lambda n, p: q_poch(p["q"], p["q"], n) * rogers_eval(n, p["x"], p["beta"], p["q"]),
            _ch,
        ),
        exact_record(
            "qh.rogers.simplified1",
            "1 = sum_j [n j]_q (rho)_j rho^{n-j}",
            [var("rho"), var("q")],
            _simplified1,
            lambda n, p: 1,
            _quadratic((1, 1), (1, 0, 1)),
        ),
        exact_record(
            "qh.rogers.simplified2",
            "(rho)_n = sum_j [n j]_q (-1)^j q^C(j,2) rho^j",
            [var("rho"), var("q")],
            lambda n, p: q_poch(p["rho"], p["q"], n),
            _simplified2,
            _quadratic((1, 1), (1, 0, 1)),
        ),
        exact_record(
            "qh.rogers.cc",
            "sum_j C_j(x|beta) beta^{n-j} C_{n-j}(x|1/beta) = 0",
            [var("x"), var("beta"), var("q")],
            _rogers_cc,
            _zero,
        ),
        exact_record(
            "qh.rogers.cc_qinv",
            "sum_j C_j(x|beta,q) q^{j-n} C_{n-j}(x|beta,1/q) = 0",
            [var("x"), var("beta"), nonzero_q],
            _rogers_cc_qinv,
            _zero,
        ),
        series_record(
            "qh.rogers.density_fh_fC",
            "(beta^2)_inf / ((beta, beta q)_inf prod_j l(x|beta q^j)) = sum_n beta^n h_{2n}(x|q) / ((q)_n (beta q)_n)",
            [point, beta, base],
            _fc_over_fh,
            _fc_over_fh_terms,
            lambda p: decay_bound(p["beta"], p["q"]),
            [
                {"x": Fraction(3, 10), "beta": Fraction(3, 10), "q": Fraction(1, 2)},
                {"x": Fraction(-7, 10), "beta": Fraction(-2, 5), "q": Fraction(2, 5)},
            ],
            domain=_inside("x", "beta", "q"),
        ),
        series_record(
            "qh.rogers.density_fC_fh",
            "(beta, beta q)_inf prod_j l(x|beta q^j) / (beta^2)_inf = sum_n (-beta)^n q^C(n,2) (beta)_n"
            " (1 - beta q^{2n}) (q)_{2n} C_{2n}(x|beta) / ((q)_n (beta^2)_{2n} (1 - beta))",
            [point, beta, base],
            lambda p, ctx: 1 / _fc_over_fh(p, ctx),
            _fh_over_fc_terms,
            lambda p: decay_bound(p["beta"], p["q"]),
            [
                {"x": Fraction(3, 10), "beta": Fraction(3, 10), "q": Fraction(1, 2)},
                {"x": Fraction(-7, 10), "beta": Fraction(-2, 5), "q": Fraction(2, 5)},
            ],
            domain=_inside("x", "beta", "q"),
        ),
        # Rogers and Chebyshev U
        exact_record(
            "rogers.chebU.fin1",
            "sum_k [n k]_q [n+k+1 k+1]_q q^k beta^{n-k} (beta/q)_k (q/beta)_{n-k} (1 - beta q^{2k})"
            " / ((beta q^k)_{n+1} (1 - q^{n+k+1})) = 0",
            [var("beta", "beta != 1", is_one), nonzero_q],
            _rogers_chebu_fin1,
            _zero,
            _quadratic((2, 2), (5, 7, 3)),
            integer_points=True,
        ),
        exact_record(
            "rogers.chebU.fin2",
            "sum_k [2n+1 n-k]_q beta^k (q/beta)_k q^{n-k} (beta/q)_{n-k} (1 - q^{2k+1}) (beta q^{k+1})_{n-1} = 0",
            [var("beta"), var("q")],
            _rogers_chebu_fin2,
            _zero,
            _quadratic((2, 1), (3, 0, 3)),
            integer_points=True,
        ),
        series_record(
            "rogers.chebU.series1",
            "(q beta^2|q^2)_inf (-q)_inf (q^2|q^2)_inf / (beta^2|q^2)_inf = sum_n (-1)^n beta^n (q/beta)_n"
            " / (beta)_{n+1}",
            [beta, base],
            _rogers_chebu_series1_lhs,
            _rogers_chebu_series1_terms,
            lambda p: decay_bound(p["beta"], p["q"]),
            chebu_points,
            domain=_inside("beta", "q"),
        ),
        series_record(
            "rogers.chebU.series2",
            "(beta^2|q^2)_inf / ((1-q) (q beta^2|q^2)_inf (-q)_inf (q^2|q^2)_inf) = sum_n (-1)^n q^n (beta/q)_n"
            " (beta)_n (q|q^2)_n (1 - beta q^{2n}) / ((q)_n (q)_{n+1} (beta^2 q|q^2)_n)",
            [beta, base],
            _rogers_chebu_series2_lhs,
            _rogers_chebu_series2_terms,
            lambda p: decay_bound(p["beta"], p["q"]),
            chebu_points,
            domain=_inside("beta", "q"),
            notes="left side without the (1-beta)^2 factor of the displayed form",
        ),
        series_record(
            "rogers.chebU.nice",
            "(beta^2)_inf (q)_inf^3 / (beta)_inf^4 = sum_n (2n+1) beta^n (q/beta)_n / (beta)_{n+1}",
            [beta, base],
            _nice_lhs,
            _nice_terms,
            lambda p: decay_bound(p["beta"], p["q"]),
            chebu_points,
            domain=_inside("beta", "q"),
        ),
        exact_record(
            "rogers.chebU.u_is_c",
            "C_n(x|q,q) = U_n(x)",
            [var("x"), var("q")],
            lambda n, p: rogers_eval(n, p["x"], p["q"], p["q"]),
            lambda n, p: chebyshev_values(n, p["x"], second_kind=True)[n],
            _quadratic((1, 1), (1, 1, 2)),
        ),
        series_record(
            "rogers.chebU.density",
            "(beta^2)_inf (q)_inf prod_{k>=1} l(x|q^k) / ((beta, beta q)_inf prod_j l(x|beta q^j))"
            " = sum_n beta^n (q/beta)_n (1 - beta) U_{2n}(x) / (beta)_{n+1}",
            [point, beta, base],
            _fc_over_chebu_lhs,
            _fc_over_chebu_terms,
            lambda p: decay_bound(p["beta"], p["q"]),
            [
                {"x": Fraction(3, 10), "beta": Fraction(3, 10), "q": Fraction(2, 5)},
                {"x": Fraction(-1, 2), "beta": Fraction(1, 2), "q": Fraction(-1, 3)},
            ],
            domain=_inside("x", "beta", "q"),
        ),
        # Al-Salam-Chihara and q-Hermite
        exact_record(
            "asc.qh.fin",
            "sum_j [n j]_q h_j(y|q) b_{n-j}(y|q) = 0",
            [var("y"), var("q")],
            asc_zero_sum(lambda m, y, q: bpoly_values(m, y, q)[m]),
            _zero,
            _quadratic((1, 1), (1, 1, 1)),
        ),
        series_record(
            "asc.qh.pm",
            "(rho^2)_inf / prod_j w(x,y|rho q^j) = sum_j rho^j h_j(x|q) h_j(y|q) / (q)_j",
            [point, var("y", "(-1, 1)", outside_unit_interval), var("rho", "|rho| < 1", outside_unit_interval), base],
            _poisson_mehler_lhs,
            _poisson_mehler_terms,
            lambda p: decay_bound(p["rho"]),
            ASC_POINTS,
            domain=_inside("x", "y", "rho", "q"),
        ),
        series_record(
            "asc.qh.inv",
            "prod_j w(x,y|rho q^j) / (rho^2)_inf = sum_j rho^j b_j(y|q) p_j(x|y,rho,q) / (q, rho^2)_j",
            [point, var("y", "(-1, 1)", outside_unit_interval), var("rho", "|rho| < 1", outside_unit_interval), base],
            _asc_reciprocal_lhs,
            _asc_reciprocal_terms,
            lambda p: decay_bound(p["rho"]),
            ASC_POINTS,
            domain=_inside("x", "y", "rho", "q"),
        ),
        series_record(
            "asc.qh.diag1",
            "(rho^2)_inf / ((rho)_inf^2 prod_j l(x|rho q^j)) = sum_j rho^j h_j(x|q)^2 / (q)_j",
            [point, var("rho", "|rho| < 1", outside_unit_interval), base],
            _diagonal_lhs,
            _diagonal_terms,
            lambda p: decay_bound(p["rho"]),
            [
                {"x": Fraction(3, 10), "rho": Fraction(2, 5), "q": Fraction(1, 2)},
                {"x": Fraction(-1, 2), "rho": Fraction(-3, 10), "q": Fraction(3, 5)},
            ],
            domain=_inside("x", "rho", "q"),
        ),
        series_record(
            "asc.qh.diag2",
            "(rho)_inf^2 prod_j l(x|rho q^j) / (rho^2)_inf = sum_j rho^j b_j(x|q) C_j(x|rho,q) / (rho^2)_j",
            [point, var("rho", "|rho| < 1", outside_unit_interval), base],
            _diagonal_reciprocal_lhs,
            _diagonal_reciprocal_terms,
            lambda p: decay_bound(p["rho"]),
            [
                {"x": Fraction(3, 10), "rho": Fraction(2, 5), "q": Fraction(1, 2)},
                {"x": Fraction(-1, 2), "rho": Fraction(-3, 10), "q": Fraction(3, 5)},
            ],
            domain=_inside("x", "rho", "q"),
        ),
        exact_record(
            "asc.qh.expand_p",
            "p_n(x|y,rho,q) = sum_j [n j]_q rho^{n-j} b_{n-j}(y|q) h_j(x|q)",
            [var("x"), var("y"), var("rho"), var("q")],
            _expand_p,
            lambda n, p: asc_values(n, p["x"], p["y"], p["rho"], p["q"])[n],
        ),
        exact_record(
            "asc.qh.expand_h",
            "h_n(x|q) = sum_j [n j]_q rho^{n-j} h_{n-j}(y|q) p_j(x|y,rho,q)",
            [var("x"), var("y"), var("rho"), var("q")],
            _expand_h,
            lambda n, p: qhermite_values(n, p["x"], p["q"])[n],
        ),
        exact_record(
            "asc.qh.cc_inverse",
            "sum_k c_{n,k}(y,rho) cbar_{k,j}(y,rho) = delta(n,j)",
            [var("y"), var("rho"), var("q")],
            _asc_cc_inverse,
            lambda n, p: _delta_row(n),
        ),
        exact_record(
            "asc.rogers.pc",
            "p_n(x|x,rho,q) = (q)_n C_n(x|rho,q)",
            [var("x"), var("rho"), var("q")],
            lambda n, p: asc_values(n, p["x"], p["x"], p["rho"], p["q"])[n],
            lambda n, p: q_poch(p["q"], p["q"], n) * rogers_eval(n, p["x"], p["rho"], p["q"]),
        ),
        # Askey-Wilson and Al-Salam-Chihara
        exact_record(
            "aw.asc.fin1",
            "sum_j [n j]_q (beta^2 q^j)_{n-1} p_j(z|y,beta,q) g_{n-j}(z|y,beta q^{n-1},q) = 0",
            [var("z"), var("y"), var("beta"), var("q")],
            _aw_fin1,
            _zero,
        ),
        exact_record(
            "aw.asc.fin2",
            "sum_j [n j]_q p_{n-j}(z|y,beta q^j,q) g_j(z|y,beta q^{j-1},q) (1 - beta^2 q^{2j-1})"
            " / ((beta^2 q^{j-1})_n (1 - beta^2 q^{n+j-1})) = 0",
            [var("z"), var("y"), var("beta"), nonzero_q],
            _aw_fin2,
            _zero,
            notes="the base written a^{j-1} in the denominator is read as q^{j-1}",
        ),
        series_record(
            "aw.asc.series1",
            "f_C2N(x)/f_CN(x|y,rho1) = (rho2^2)_inf prod_j w(y,z|rho1 rho2 q^j) / ((rho1^2 rho2^2)_inf"
            " prod_j w(x,z|rho2 q^j)) = sum_n rho2^n p_n(z|y,rho1 rho2,q) p_n(x|y,rho1,q) / ((rho1^2 rho2^2)_n (q)_n)",
            _aw_series_variables(),
            _aw_ratio_lhs,
            _aw_ratio_terms,
            lambda p: decay_bound(p["rho2"]),
            AW_POINTS,
            domain=_inside("x", "y", "rho1", "z", "rho2", "q"),
            notes="the displayed left side f_CN(x|z,rho2)/f_CN(z|y,rho1 rho2) differs by the factor f_h(x)/f_h(z)",
        ),
        series_record(
            "aw.asc.series2",
            AW_RECIPROCAL_ANCHOR,
            _aw_series_variables(),
            _aw_reciprocal_lhs,
            aw_reciprocal_terms(aw_alpha_norm),
            lambda p: decay_bound(p["rho2"], p["q"]),
            AW_POINTS,
            domain=_inside("x", "y", "rho1", "z", "rho2", "q"),
        ),
        exact_record(
            "aw.asc.roundtrip",
            "p_n(x|y,rho1,q) = sum_j cbar_{n,j}(y,rho1,z,rho2) alpha_j(x|y,rho1,z,rho2,q)",
            [var("x"), var("y"), var("rho1"), var("z"), var("rho2"), var("q")],
            _aw_roundtrip,
            lambda n, p: asc_values(n, p["x"], p["y"], p["rho1"], p["q"])[n],
        ),
        exact_record(
            "aw.asc.cc_inverse",
            "sum_k c_{n,k}(y,rho1,z,rho2) cbar_{k,j}(y,rho1,z,rho2) = delta(n,j)",
            [var("y"), var("rho1"), var("z"), var("rho2"), var("q")],
            _aw_cc_inverse,
            lambda n, p: _delta_row(n),
        ),
        exact_record(
            "aw.asc.c1",
            "sum_j (rho q^{n-1})^{n-j} (rho^2 q^j)_{n-1} C_j(x|rho,q) C_{n-j}(x|rho^{-1} q^{-(n-1)},q) = 0",
            [var("x"), var("rho"), var("q")],
            _c1,
            _zero,
        ),
        exact_record(
            "aw.asc.c2",
            "sum_j (rho q^{j-1})^j C_j(x|rho^{-1} q^{-(j-1)},q) C_{n-j}(x|rho q^j,q)"
            " / ((rho^2 q^{j-1})_j (rho^2 q^{2j})_{n-j}) = 0",
            [var("x"), var("rho"), nonzero_q],
            _c2_sum,
            _zero,
        ),
        exact_record(
            "aw.asc.a1",
            "sum_k [n k]_q (-1)^k q^C(n-k,2) / ((a)_k (aq^{n+k-1})_{n-k})"
            " = sum_k [n k]_q (-1)^k q^C(n-k,2) (aq^k)_{n-1} / (a)_{2n-1} = 0",
            [var("a", "a != 1", is_one), var("q")],
            _a1,
            _zero_pair,
            _quadratic((2, 1), (4, 0, 4)),
            integer_points=True,
        ),
        exact_record(
            "aw.asc.a2",
            "sum_k [n k]_q (-1)^k q^C(k,2) / ((aq^{k-1})_k (aq^{2k})_{n-k})"
            " = sum_k [n k]_q (-1)^k q^C(k,2) (1 - aq^{2k-1}) / (aq^{k-1})_{n+1} = 0",
            [var("a", "a != 1", is_one), nonzero_q],
            _a2,
            _zero_pair,
            _quadratic((2, 2), (4, 4, 4)),
            integer_points=True,
        ),
    ]
