"""Jacobi polynomial identities: inverse triangles, connection coefficients, closed forms, specializations."""
from fractions import Fraction
from typing import Callable, List, Tuple

from poch_verify.jacobi import (
    CCON_CASES,
    CONVENTIONS,
    HALF,
    THREE_HALVES,
    JacobiParams,
    beta_moment,
    ccon_closed,
    ccon_generic,
    chebyshev_T,
    chebyshev_U,
    check_density_domain,
    conn_coeff,
    density_expansion_terms,
    density_ratio,
    density_tail_ratio,
    e_coeff,
    etilde_coeff,
    etilde_coeff_alt,
    gegenbauer_eval,
    jacobi_coefficients,
    jacobi_eval,
    jacobi_norm,
    jacobi_shifted_eval,
    legendre_eval,
)
from poch_verify.numerics import PrecisionContext, to_real
from poch_verify.pochhammer import binomial, factorial, rising
from poch_verify.registry import IdentityRecord, exact_record, is_nonpositive, outside_unit_interval, series_record, var


def _params(p, first: str = "a", second: str = "b") -> JacobiParams:
    return JacobiParams(p[first], p[second])


def _delta_row(n: int) -> Tuple[int, ...]:
    return tuple(int(j == n) for j in range(n + 1))


def _bounds(*factors: Tuple[int, int]) -> Callable[[int], Tuple[int, ...]]:
    """Per-variable degree bounds k*n + c."""
    return lambda n: tuple(k * n + c for k, c in factors)


def _odwr(n, p):
    params = _params(p)
    return tuple(sum(e_coeff(n, k, params) * etilde_coeff(k, m, params) for k in range(m, n + 1)) for m in range(n + 1))


def _odw2(n, p):
    params = _params(p)
    return tuple(sum(etilde_coeff(n, k, params) * e_coeff(k, m, params) for k in range(m, n + 1)) for m in range(n + 1))


def _compose(n, p):
    source, middle, target = _params(p), _params(p, "e", "f"), _params(p, "c", "d")
    first = [conn_coeff(n, k, source, middle) for k in range(n + 1)]
    return tuple(sum(first[k] * conn_coeff(k, j, middle, target) for k in range(j, n + 1)) for j in range(n + 1))


def _direct(n, p):
    source, target = _params(p), _params(p, "c", "d")
    return tuple(conn_coeff(n, j, source, target) for j in range(n + 1))


def _inverse(n, p):
    source, target = _params(p), _params(p, "c", "d")
    forward = [conn_coeff(n, k, source, target) for k in range(n + 1)]
    return tuple(sum(forward[k] * conn_coeff(k, j, target, source) for k in range(j, n + 1)) for j in range(n + 1))


def _odd_gaps(n: int) -> range:
    return range(n - 1, -1, -2)


def _parity(n, p):
    source, target = JacobiParams(p["a"], p["a"]), JacobiParams(p["b"], p["b"])
    return tuple(conn_coeff(n, j, source, target) for j in _odd_gaps(n))


def _reflect_lhs(n, p):
    return _direct(n, p)


def _reflect_rhs(n, p):
    source, target = JacobiParams(p["b"], p["a"]), JacobiParams(p["d"], p["c"])
    return tuple((-1) ** (n - j) * conn_coeff(n, j, source, target) for j in range(n + 1))


def _even_rhs(n, p):
    x, a = p["x"], p["a"]
    return factorial(n) * rising(a + n, n) / factorial(2 * n) * jacobi_eval(n, 2 * x * x - 1, JacobiParams(HALF, a))


def _odd_rhs(n, p):
    x, a = p["x"], p["a"]
    inner = jacobi_eval(n, 2 * x * x - 1, JacobiParams(THREE_HALVES, a))
    return factorial(n) * rising(a + n, n + 1) / factorial(2 * n + 1) * x * inner


def _chebyshev_t_rhs(n, p):
    scale = Fraction(4**n * factorial(n) ** 2, factorial(2 * n))
    return scale * jacobi_eval(n, p["x"], JacobiParams(HALF, HALF))


def _chebyshev_u_rhs(n, p):
    scale = Fraction(4**n * factorial(n) * factorial(n + 1), factorial(2 * n + 1))
    return scale * jacobi_eval(n, p["x"], JacobiParams(THREE_HALVES, THREE_HALVES))


def _gegenbauer_rhs(n, p):
    lam = p["lam"]
    shape = JacobiParams(lam + HALF, lam + HALF)
    return rising(2 * lam, n) / rising(lam + HALF, n) * jacobi_eval(n, p["x"], shape)


def _moment_gram(n, p):
    params = _params(p)
    moments = [beta_moment(k, params) for k in range(2 * n + 1)]
    top = jacobi_coefficients(n, params)
    row = []
    for m in range(n + 1):
        other = jacobi_coefficients(m, params)
        row.append(sum(other[i] * top[k] * moments[i + k] for i in range(m + 1) for k in range(n + 1)))
    return tuple(row)


def _moment_norms(n, p):
    return tuple(jacobi_norm(n, _params(p)) if m == n else 0 for m in range(n + 1))


CCON_VARIABLES = {"ebb": ("b",), "oebb": ("b",), "ea12": ("a",), "oea12": ("a",), "ea32": ("a",), "oea32": ("a",)}


def _ccon_record(case: str) -> IdentityRecord:
    names = CCON_VARIABLES.get(case, ("a", "b"))
    if len(names) == 1:
        bounds = _bounds((2, 4))
    elif case == "ba":
        bounds = _bounds((2, 2), (3, 2))
    else:
        bounds = _bounds((1, 1), (3, 2))
    return exact_record(
        f"jacobi.ccon.{case}",
        f"closed form {case} = generic sum_k e(n,k) e~(k,j), j = 0..n",
        [var(name) for name in names],
        lambda n, p: tuple(ccon_closed(case, n, j, p) for j in range(n + 1)),
        lambda n, p: tuple(ccon_generic(case, n, j, p) for j in range(n + 1)),
        bounds,
    )


def _x_y(n, p):
    x, y = p["x"], p["y"]
    return sum(
        (-1) ** (n - j)
        * binomial(n, j)
        * rising(x + y + n - 1, n - j)
        * rising(x + n - j, j)
        * rising(2 * y + n - j, j)
        * rising(y, n - j)
        for j in range(n + 1)
    )


def _y_x(n, p):
    x, y = p["x"], p["y"]
    return sum(
        (-1) ** j
        * binomial(n, j)
        * rising(2 * y + n - 1, j)
        * rising(y + j, n - j)
        * rising(x, j)
        * rising(x + y + j, n - j)
        for j in range(n + 1)
    )


def _i001(n, p):
    a, b = p["a"], p["b"]
    return sum(
        binomial(n, j)
        * rising(2 * b + n - 1, j)
        * rising(b - a, n - j)
        * rising(a - b, j)
        * (a + b + 2 * j - 1)
        / (rising(a + b + j - 1, n + 1) * rising(2 * b, j))
        for j in range(n + 1)
    )


def _i002(n, p):
    a, b = p["a"], p["b"]
    return sum(
        binomial(n, j)
        * rising(a + b + n - 1, j)
        * rising(a - b, n - j)
        * rising(b - a, j)
        * (2 * b + 2 * j - 1)
        / (rising(2 * b + j - 1, n + 1) * rising(a + b, j))
        for j in range(n + 1)
    )


def _dd1(n, p):
    x, y = p["x"], p["y"]
    return sum(
        (-1) ** j
        * binomial(2 * n, j)
        * rising(x + j, 2 * n - j)
        * rising(2 * x + 2 * n - 1, j)
        * rising(y, j)
        * rising(2 * y + j, 2 * n - j)
        for j in range(2 * n + 1)
    )


def _dd1_rhs(n, p):
    x, y = p["x"], p["y"]
    return Fraction(factorial(2 * n), factorial(n)) * rising(x - y, n) * rising(y, n) * rising(x + n, n)


def _dd2(n, p):
    x, y = p["x"], p["y"]
    return sum(
        (-1) ** j
        * binomial(2 * n + 1, j)
        * rising(2 * x + 2 * n, j)
        * rising(x + j, 2 * n + 1 - j)
        * rising(y, j)
        * rising(2 * y + j, 2 * n + 1 - j)
        for j in range(2 * n + 2)
    )


def _aaababaa(n, p):
    x, y = p["x"], p["y"]
    return sum(
        binomial(n, s)
        * rising(x - y, n - s)
        * rising(y - x, s)
        * rising(x + y + n - 1, s)
        / (rising(x + y, s) * rising(2 * y + s - 1, s) * rising(2 * y + 2 * s, n - s))
        for s in range(n + 1)
    )


def _aabbbbaa(n, p):
    x, y = p["x"], p["y"]
    return sum(
        binomial(n, s)
        * rising(y - x, s)
        * rising(x - y, n - s)
        * rising(x + n - HALF, s)
        / (rising(x + HALF, s) * rising(y + s - HALF, s) * rising(y + 2 * s + HALF, n - s))
        for s in range(n + 1)
    )


def _zero(n, p):
    return 0


def _density_domain(p) -> bool:
    check_density_domain(_params(p), _params(p, "c", "d"), p["x"])
    return True


def _density_lhs(p, ctx: PrecisionContext):
    return to_real(density_ratio(p["x"], _params(p), _params(p, "c", "d")), ctx)


def _density_tail(p):
    return density_tail_ratio(_params(p), _params(p, "c", "d"))


def _density_terms(convention: str):
    def terms(p, ctx: PrecisionContext):
        return density_expansion_terms(p["x"], _params(p), _params(p, "c", "d"), convention, ctx)

    return terms


def _legendre_density_lhs(p, ctx: PrecisionContext):
    return to_real(density_ratio(p["x"], JacobiParams(1, 1), _params(p, "c", "d")), ctx)


def _legendre_density_terms(p, ctx: PrecisionContext):
    uniform, target = JacobiParams(1, 1), _params(p, "c", "d")
    n = 0
    while True:
        yield to_real((2 * n + 1) * conn_coeff(n, 0, uniform, target) * legendre_eval(n, p["x"]), ctx)
        n += 1


def _legendre_density_tail(p):
    return density_tail_ratio(JacobiParams(1, 1), _params(p, "c", "d"))


def _legendre_domain(p) -> bool:
    check_density_domain(JacobiParams(1, 1), _params(p, "c", "d"), p["x"])
    return True


DENSITY_VARIABLES = [var("a"), var("b"), var("c"), var("d"), var("x", "(-1, 1)", outside_unit_interval)]
DENSITY_POINTS = [
    {"a": 1, "b": 1, "c": 2, "d": 3, "x": Fraction(-2, 5)},
    {"a": 1, "b": 1, "c": 2, "d": 3, "x": Fraction(1, 5)},
    {"a": 2, "b": 2, "c": 3, "d": 2, "x": Fraction(-2, 5)},
]
DENSITY_ANCHOR = "h(x|c,d)/h(x|a,b) = sum_n c_{n,0} J_n(x|a,b) / ||J_n||^2 for 2c > a, 2d > b"


def records() -> List[IdentityRecord]:
    positive = [var("a", "a > 0", is_nonpositive), var("b", "b > 0", is_nonpositive)]
    return [
        exact_record(
            "jacobi.inverse.odwr",
            "sum_k e(n,k) e~(k,m) = delta(n,m)",
            [var("a"), var("b")],
            _odwr,
            lambda n, p: _delta_row(n),
            _bounds((3, 1), (3, 1)),
        ),
        exact_record(
            "jacobi.inverse.odw2",
            "sum_k e~(n,k) e(k,m) = delta(n,m)",
            [var("a"), var("b")],
            _odw2,
            lambda n, p: _delta_row(n),
            _bounds((3, 1), (3, 1)),
        ),
        exact_record(
            "jacobi.inverse.dnj_forms",
            "e~(n,m) by (a+b+m-1)^(m)(a+b+2m)^(n-m) equals the (a+b+m-1)^(n+1) form",
            [var("a"), var("b")],
            lambda n, p: tuple(etilde_coeff(n, m, _params(p)) for m in range(n + 1)),
            lambda n, p: tuple(etilde_coeff_alt(n, m, _params(p)) for m in range(n + 1)),
            _bounds((2, 2), (2, 2)),
        ),
        exact_record(
            "jacobi.conn.compose",
            "C(a,b;e,f) C(e,f;c,d) = C(a,b;c,d)",
            [var(name) for name in "abcdef"],
            _compose,
            _direct,
        ),
        exact_record(
            "jacobi.conn.inverse",
            "C(a,b;c,d) C(c,d;a,b) = I",
            [var(name) for name in "abcd"],
            _inverse,
            lambda n, p: _delta_row(n),
        ),
        exact_record(
            "jacobi.conn.parity",
            "c_{n,j}(a,a;b,b) = 0 for n-j odd",
            [var("a"), var("b")],
            _parity,
            lambda n, p: tuple(0 for _ in _odd_gaps(n)),
            _bounds((3, 1), (3, 1)),
        ),
        exact_record(
            "jacobi.conn.reflect",
            "c_{n,j}(a,b;c,d) = (-1)^(n-j) c_{n,j}(b,a;d,c)",
            [var(name) for name in "abcd"],
            _reflect_lhs,
            _reflect_rhs,
        ),
        exact_record(
            "jacobi.reflect.kk",
            "(-1)^n J_n(x|a,b) = J_n(-x|b,a)",
            [var("x"), var("a"), var("b")],
            lambda n, p: (-1) ** n * jacobi_eval(n, p["x"], _params(p)),
            lambda n, p: jacobi_eval(n, -p["x"], _params(p).reflected()),
        ),
        exact_record(
            "jacobi.shifted.change",
            "K_n(x|a,b) = J_n(2x-1|a,b)",
            [var("x"), var("a"), var("b")],
            lambda n, p: jacobi_shifted_eval(n, p["x"], _params(p)),
            lambda n, p: jacobi_eval(n, 2 * p["x"] - 1, _params(p)),
        ),
        exact_record(
            "jacobi.lead.coefficient",
            "[x^n] J_n(x|a,b) = (a+b+n-1)^(n) / (n! 2^n)",
            [var("a"), var("b")],
            lambda n, p: jacobi_coefficients(n, _params(p))[n],
            lambda n, p: rising(p["a"] + p["b"] + n - 1, n) / (factorial(n) * 2**n),
            _bounds((1, 1), (1, 1)),
        ),
        exact_record(
            "jacobi.even.even",
            "J_2n(x|a,a) = n! (a+n)^(n) / (2n)! J_n(2x^2-1|1/2,a)",
            [var("x"), var("a")],
            lambda n, p: jacobi_eval(2 * n, p["x"], JacobiParams(p["a"], p["a"])),
            _even_rhs,
            _bounds((2, 2), (2, 2)),
        ),
        exact_record(
            "jacobi.even.odd",
            "J_2n+1(x|a,a) = n! (a+n)^(n+1) / (2n+1)! x J_n(2x^2-1|3/2,a)",
            [var("x"), var("a")],
            lambda n, p: jacobi_eval(2 * n + 1, p["x"], JacobiParams(p["a"], p["a"])),
            _odd_rhs,
            _bounds((2, 2), (2, 2)),
        ),
        exact_record(
            "jacobi.special.chebT",
            "T_n(x) = 2^(2n) (n!)^2 / (2n)! J_n(x|1/2,1/2)",
            [var("x")],
            lambda n, p: chebyshev_T(n, p["x"]),
            _chebyshev_t_rhs,
            _bounds((1, 1)),
        ),
        exact_record(
            "jacobi.special.chebU",
            "U_n(x) = 2^(2n) n! (n+1)! / (2n+1)! J_n(x|3/2,3/2)",
            [var("x")],
            lambda n, p: chebyshev_U(n, p["x"]),
            _chebyshev_u_rhs,
            _bounds((1, 1)),
        ),
        exact_record(
            "jacobi.special.legendre",
            "P_n(x) = J_n(x|1,1)",
            [var("x")],
            lambda n, p: legendre_eval(n, p["x"]),
            lambda n, p: jacobi_eval(n, p["x"], JacobiParams(1, 1)),
            _bounds((1, 1)),
        ),
        exact_record(
            "jacobi.special.gegenbauer",
            "C_n(x|lam) = (2 lam)^(n) / (lam+1/2)^(n) J_n(x|lam+1/2,lam+1/2)",
            [var("x"), var("lam")],
            lambda n, p: gegenbauer_eval(n, p["x"], p["lam"]),
            _gegenbauer_rhs,
            _bounds((1, 1), (3, 1)),
        ),
        exact_record(
            "jacobi.norm.moments",
            "int J_m J_n h(x|a,b) dx = delta(m,n) ||J_n||^2 from beta moments",
            positive,
            _moment_gram,
            _moment_norms,
            _bounds((4, 2), (4, 2)),
            max_n_cap=6,
        ),
        *[_ccon_record(case) for case in CCON_CASES],
        exact_record(
            "jacobi.upr.x_y",
            "sum_j (-1)^(n-j) C(n,j) (x+y+n-1)^(n-j) (x+n-j)^(j) (2y+n-j)^(j) (y)^(n-j) = (x-y)^(n) (y)^(n)",
            [var("x"), var("y")],
            _x_y,
            lambda n, p: rising(p["x"] - p["y"], n) * rising(p["y"], n),
            _bounds((1, 1), (2, 1)),
        ),
        exact_record(
            "jacobi.upr.y_x",
            "sum_j (-1)^j C(n,j) (2y+n-1)^(j) (y+j)^(n-j) (x)^(j) (x+y+j)^(n-j) = (y-x)^(n) (y)^(n)",
            [var("x"), var("y")],
            _y_x,
            lambda n, p: rising(p["y"] - p["x"], n) * rising(p["y"], n),
            _bounds((1, 1), (2, 1)),
        ),
        exact_record(
            "jacobi.upr.i001",
            "sum_j C(n,j) (2b+n-1)^(j) (b-a)^(n-j) (a-b)^(j) (a+b+2j-1) / ((a+b+j-1)^(n+1) (2b)^(j)) = 0",
            [var("a"), var("b")],
            _i001,
            _zero,
            _bounds((4, 2), (4, 2)),
        ),
        exact_record(
            "jacobi.upr.i002",
            "sum_j C(n,j) (a+b+n-1)^(j) (a-b)^(n-j) (b-a)^(j) (2b+2j-1) / ((2b+j-1)^(n+1) (a+b)^(j)) = 0",
            [var("a"), var("b")],
            _i002,
            _zero,
            _bounds((4, 2), (4, 2)),
        ),
        exact_record(
            "jacobi.upr.dd1",
            "sum_j (-1)^j C(2n,j) (x+j)^(2n-j) (2x+2n-1)^(j) (y)^(j) (2y+j)^(2n-j)"
            " = (2n)!/n! (x-y)^(n) (y)^(n) (x+n)^(n)",
            [var("x"), var("y")],
            _dd1,
            _dd1_rhs,
            _bounds((2, 1), (2, 1)),
        ),
        exact_record(
            "jacobi.upr.dd2",
            "sum_j (-1)^j C(2n+1,j) (2x+2n)^(j) (x+j)^(2n+1-j) (y)^(j) (2y+j)^(2n+1-j) = 0",
            [var("x"), var("y")],
            _dd2,
            _zero,
            _bounds((2, 2), (2, 2)),
        ),
        exact_record(
            "jacobi.upr.aaababaa",
            "sum_s C(n,s) (x-y)^(n-s) (y-x)^(s) (x+y+n-1)^(s) / ((x+y)^(s) (2y+s-1)^(s) (2y+2s)^(n-s)) = 0",
            [var("x"), var("y")],
            _aaababaa,
            _zero,
            _bounds((4, 2), (4, 2)),
        ),
        exact_record(
            "jacobi.upr.aabbbbaa",
            "sum_s C(n,s) (y-x)^(s) (x-y)^(n-s) (x+n-1/2)^(s) / ((x+1/2)^(s) (y+s-1/2)^(s) (y+2s+1/2)^(n-s)) = 0",
            [var("x"), var("y")],
            _aabbbbaa,
            _zero,
            _bounds((4, 2), (4, 2)),
        ),
        series_record(
            "jacobi.density.expansion",
            DENSITY_ANCHOR,
            DENSITY_VARIABLES,
            _density_lhs,
            None,
            _density_tail,
            DENSITY_POINTS,
            conventions=tuple((name, _density_terms(name)) for name in CONVENTIONS),
            domain=_density_domain,
            notes="both coefficient orders are summed; exactly one must converge",
        ),
        series_record(
            "jacobi.density.expansion.ab_cd",
            DENSITY_ANCHOR + ", coefficient c_{n,0}(a,b;c,d)",
            DENSITY_VARIABLES,
            _density_lhs,
            _density_terms("ab_cd"),
            _density_tail,
            DENSITY_POINTS,
            domain=_density_domain,
        ),
        series_record(
            "jacobi.density.expansion.cd_ab",
            DENSITY_ANCHOR + ", coefficient c_{n,0}(c,d;a,b)",
            DENSITY_VARIABLES,
            _density_lhs,
            None,
            _density_tail,
            DENSITY_POINTS,
            conventions=(("cd_ab", _density_terms("cd_ab")),),
            domain=_density_domain,
            control=True,
            notes="expected to fail: the coefficient order of the companion record",
        ),
        series_record(
            "jacobi.density.legendre",
            "h(x|c,d)/h(x|1,1) = sum_n (2n+1) c_{n,0}(1,1;c,d) P_n(x)",
            DENSITY_VARIABLES[2:],
            _legendre_density_lhs,
            _legendre_density_terms,
            _legendre_density_tail,
            [{"c": 2, "d": 3, "x": Fraction(1, 5)}, {"c": 3, "d": 2, "x": Fraction(-2, 5)}],
            domain=_legendre_domain,
        ),
    ]
