"""Jacobi polynomials on [-1, 1], their connection coefficients and the classical specializations.

J_n(x|a,b) is orthogonal with respect to the beta-type density h(x|a,b) proportional to
(1+x)^(a-1)(1-x)^(b-1). Connection coefficients c_{n,j}(a,b;c,d) express J_n(x|a,b) in the
J_j(x|c,d) basis and are assembled from the power-type coefficients e (forward) and e~ (inverse).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from poch_verify.errors import (
    InvalidShapeParameters,
    OutsideConvergenceDomain,
    SeriesDidNotConverge,
    SingularParameters,
    UnsupportedParameterOffset,
)
from poch_verify.numerics import (
    DIVERGENCE_WINDOW,
    PrecisionContext,
    lift,
    one_like,
    scalar,
    sum_until_converged,
    to_real,
)
from poch_verify.pochhammer import binomial, factorial, gamma_ratio, rising

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class JacobiParams:
    """Shape parameters (a, b) of the density h(x|a,b)."""

    a: Any
    b: Any

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", scalar(self.a))
        object.__setattr__(self, "b", scalar(self.b))

    def reflected(self) -> "JacobiParams":
        return JacobiParams(self.b, self.a)

    def require_positive(self) -> None:
        if not (self.a > 0 and self.b > 0):
            raise InvalidShapeParameters()


def _nonzero(value: Any) -> Any:
    if value == 0:
        raise SingularParameters()
    return value


def jacobi_eval(n: int, x: Any, p: JacobiParams) -> Any:
    """J_n(x|a,b) = (1/n!) sum_m C(n,m) (a+b+n-1)^(m) (b+m)^(n-m) ((x-1)/2)^m."""
    x = scalar(x)
    half_shift = (x - 1) / 2
    total = sum(
        binomial(n, m) * rising(p.a + p.b + n - 1, m) * rising(p.b + m, n - m) * half_shift**m for m in range(n + 1)
    )
    return total / factorial(n)


def jacobi_shifted_eval(n: int, x: Any, p: JacobiParams) -> Any:
    """K_n(x|a,b), the same sum in powers of (x-1); orthogonal on [0, 1]."""
    x = scalar(x)
    total = sum(
        binomial(n, m) * rising(p.a + p.b + n - 1, m) * rising(p.b + m, n - m) * (x - 1) ** m for m in range(n + 1)
    )
    return total / factorial(n)


def jacobi_coefficients(n: int, p: JacobiParams) -> List[Any]:
    """Power-basis coefficients [x^0, ..., x^n] of J_n(x|a,b)."""
    coefficients = [p.a * 0 for _ in range(n + 1)]
    for m in range(n + 1):
        weight = binomial(n, m) * rising(p.a + p.b + n - 1, m) * rising(p.b + m, n - m) / (factorial(n) * 2**m)
        for k in range(m + 1):
            coefficients[k] += weight * binomial(m, k) * (-1) ** (m - k)
    return coefficients


@lru_cache(maxsize=8192)
def e_coeff(n: int, m: int, p: JacobiParams) -> Any:
    """Coefficient of ((x-1)/2)^m in J_n(x|a,b)."""
    if m < 0 or m > n:
        return p.a * 0
    return binomial(n, m) * rising(p.a + p.b + n - 1, m) * rising(p.b + m, n - m) / factorial(n)


@lru_cache(maxsize=8192)
def etilde_coeff(n: int, m: int, p: JacobiParams) -> Any:
    """Coefficient of J_m(x|a,b) in ((x-1)/2)^n."""
    if m < 0 or m > n:
        return p.a * 0
    numerator = (-1) ** (n - m) * factorial(n) * rising(p.b + m, n - m)
    denominator = factorial(n - m) * rising(p.a + p.b + m - 1, m) * rising(p.a + p.b + 2 * m, n - m)
    return numerator / _nonzero(denominator)


def etilde_coeff_alt(n: int, m: int, p: JacobiParams) -> Any:
    """The second closed form of e~, with the single Pochhammer (a+b+m-1)^(n+1) below."""
    if m < 0 or m > n:
        return p.a * 0
    numerator = (-1) ** (n - m) * factorial(n) * rising(p.b + m, n - m) * (p.a + p.b + 2 * m - 1)
    return numerator / _nonzero(factorial(n - m) * rising(p.a + p.b + m - 1, n + 1))


@lru_cache(maxsize=8192)
def conn_coeff(n: int, j: int, source: JacobiParams, target: JacobiParams) -> Any:
    """c_{n,j}: J_n(x|source) = sum_j c_{n,j} J_j(x|target)."""
    if j < 0 or j > n:
        return source.a * 0
    return sum(e_coeff(n, k, source) * etilde_coeff(k, j, target) for k in range(j, n + 1))


@dataclass(frozen=True)
class ConnectionMatrix:
    """Lower-triangular (size x size) matrix; row n holds entries j = 0..n."""

    rows: Tuple[Tuple[Any, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    @staticmethod
    def from_function(size: int, entry: Callable[[int, int], Any]) -> "ConnectionMatrix":
        return ConnectionMatrix(tuple(tuple(entry(n, j) for j in range(n + 1)) for n in range(size)))

    @staticmethod
    def identity(size: int) -> "ConnectionMatrix":
        return ConnectionMatrix.from_function(size, lambda n, j: Fraction(int(n == j)))

    def entry(self, n: int, j: int) -> Any:
        if j > n:
            return 0
        return self.rows[n][j]

    def __matmul__(self, other: "ConnectionMatrix") -> "ConnectionMatrix":
        if self.size != other.size:
            raise ValueError("matrix sizes differ")
        return ConnectionMatrix.from_function(
            self.size, lambda n, j: sum(self.rows[n][k] * other.rows[k][j] for k in range(j, n + 1))
        )

    def is_identity(self) -> bool:
        return all(value == int(n == j) for n, row in enumerate(self.rows) for j, value in enumerate(row))


def conn_matrix(size: int, source: JacobiParams, target: JacobiParams) -> ConnectionMatrix:
    """c_{n,j}(source; target) for 0 <= j <= n <= size."""
    return ConnectionMatrix.from_function(size + 1, lambda n, j: conn_coeff(n, j, source, target))


def e_matrix(size: int, p: JacobiParams) -> ConnectionMatrix:
    return ConnectionMatrix.from_function(size + 1, lambda n, j: e_coeff(n, j, p))


def etilde_matrix(size: int, p: JacobiParams) -> ConnectionMatrix:
    return ConnectionMatrix.from_function(size + 1, lambda n, j: etilde_coeff(n, j, p))


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _ccon_ebb(n, j, v):
    b = v["b"]
    return binomial(n, j) * rising(2 * b + n - 1, j) * rising(b + j, n - j) / factorial(n)


def _ccon_oebb(n, j, v):
    b = v["b"]
    numerator = _sign(n - j) * factorial(n) * rising(b + j, n - j) * (2 * b + 2 * j - 1)
    return numerator / (factorial(n - j) * rising(2 * b + j - 1, n + 1))


def _ccon_ea(shift: Fraction) -> Callable:
    # e_{n,j}(a, b) with b = 1/2 or 3/2
    def closed(n, j, v):
        a = v["a"]
        return rising(a + shift + n, j) * rising(shift + 1, n) / (
            factorial(j) * factorial(n - j) * rising(shift + 1, j)
        )

    return closed


def _ccon_oea(shift: Fraction) -> Callable:
    def closed(n, j, v):
        a = v["a"]
        numerator = _sign(n - j) * (a + shift + 2 * j) * rising(shift + 1 + j, n - j) * factorial(n)
        return numerator / (factorial(n - j) * rising(a + shift + j, n + 1))

    return closed


def _ccon_a(shift: Fraction) -> Callable:
    # c_{n,j}(a, 1/2 + s; b, 1/2 + s) with s = 0 or 1
    def closed(n, j, v):
        a, b = v["a"], v["b"]
        half = shift + 1
        numerator = (
            _sign(n - j) * rising(half, n) * rising(a - b, n - j) * rising(a + shift + n, j) * (b + shift + 2 * j)
        )
        denominator = (
            factorial(n - j) * rising(half, j) * rising(b + shift + 1 + 2 * j, n - j) * rising(b + shift + j, j + 1)
        )
        return numerator / denominator

    return closed


def _ccon_ab(n, j, v):
    a, b = v["a"], v["b"]
    numerator = _sign(n - j) * rising(b + j, n - j) * rising(a - b, n - j) * rising(a + b + n - 1, j)
    return numerator * (2 * b + 2 * j - 1) / (factorial(n - j) * rising(2 * b + j - 1, n + 1))


def _ccon_ba(n, j, v):
    a, b = v["a"], v["b"]
    numerator = _sign(n - j) * rising(b + j, n - j) * rising(2 * b + n - 1, j) * rising(b - a, n - j)
    return numerator * (a + b + 2 * j - 1) / (factorial(n - j) * rising(a + b + j - 1, n + 1))


def _ccon_aabb(n, j, v):
    a, b = v["a"], v["b"]
    if (n - j) % 2:
        return a * 0
    h = (n - j) // 2
    numerator = (
        (2 * b + 2 * j - 1)
        * rising(2 * a + n - 1, j)
        * rising(a - b, h)
        * rising(b + j, h)
        * rising(a + Fraction(n + j, 2), h)
    )
    return numerator / (factorial(h) * rising(2 * b + j - 1, n + 1))


HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)

PairOf = Callable[[Mapping[str, Any]], Tuple[JacobiParams, JacobiParams]]

# Each closed form with the generic (source, target) pair it must reproduce.
CCON_CASES: Dict[str, Tuple[Callable, Optional[PairOf]]] = {
    "ebb": (_ccon_ebb, None),
    "oebb": (_ccon_oebb, None),
    "ea12": (_ccon_ea(-HALF), None),
    "oea12": (_ccon_oea(-HALF), None),
    "ea32": (_ccon_ea(HALF), None),
    "oea32": (_ccon_oea(HALF), None),
    "a12": (_ccon_a(-HALF), lambda v: (JacobiParams(v["a"], HALF), JacobiParams(v["b"], HALF))),
    "a32": (_ccon_a(HALF), lambda v: (JacobiParams(v["a"], THREE_HALVES), JacobiParams(v["b"], THREE_HALVES))),
    "ab": (_ccon_ab, lambda v: (JacobiParams(v["a"], v["b"]), JacobiParams(v["b"], v["b"]))),
    "ba": (_ccon_ba, lambda v: (JacobiParams(v["b"], v["b"]), JacobiParams(v["a"], v["b"]))),
    "aabb": (_ccon_aabb, lambda v: (JacobiParams(v["a"], v["a"]), JacobiParams(v["b"], v["b"]))),
}


def ccon_closed(case: str, n: int, j: int, params: Mapping[str, Any]) -> Any:
    """Closed forms of e, e~ and c for the symmetric and half-integer parameter cases."""
    if case not in CCON_CASES:
        raise ValueError(f"unknown closed form {case}")
    values = {name: scalar(value) for name, value in params.items()}
    try:
        return CCON_CASES[case][0](n, j, values)
    except ZeroDivisionError:
        raise SingularParameters()


def ccon_generic(case: str, n: int, j: int, params: Mapping[str, Any]) -> Any:
    """The same quantity as `ccon_closed` from the generic e/e~ sums."""
    values = {name: scalar(value) for name, value in params.items()}
    if case == "ebb":
        return e_coeff(n, j, JacobiParams(values["b"], values["b"]))
    if case == "oebb":
        return etilde_coeff(n, j, JacobiParams(values["b"], values["b"]))
    if case in ("ea12", "ea32"):
        return e_coeff(n, j, JacobiParams(values["a"], HALF if case == "ea12" else THREE_HALVES))
    if case in ("oea12", "oea32"):
        b = HALF if case == "oea12" else THREE_HALVES
        return etilde_coeff(n, j, JacobiParams(values["a"], b))
    source, target = CCON_CASES[case][1](values)
    return conn_coeff(n, j, source, target)


def beta_moment(k: int, p: JacobiParams) -> Any:
    """Integral of x^k h(x|a,b) over [-1, 1], from the moments of the beta law on [0, 1]."""
    p.require_positive()
    return sum(
        binomial(k, j) * 2**j * _sign(k - j) * rising(p.a, j) / rising(p.a + p.b, j) for j in range(k + 1)
    ) * one_like(p.a)


def jacobi_norm(n: int, p: JacobiParams) -> Any:
    """Integral of J_n^2 h(x|a,b)."""
    if n == 0:
        return one_like(p.a)
    numerator = rising(p.a, n) * rising(p.b, n)
    return numerator / _nonzero(factorial(n) * (p.a + p.b + 2 * n - 1) * rising(p.a + p.b, n - 1))


def chebyshev_values(n: int, x: Any, second_kind: bool = False) -> List[Any]:
    x = scalar(x)
    values = [one_like(x), 2 * x if second_kind else x]
    for _ in range(2, n + 1):
        values.append(2 * x * values[-1] - values[-2])
    return values[: n + 1]


def chebyshev_T(n: int, x: Any) -> Any:
    return chebyshev_values(n, x)[n]


def chebyshev_U(n: int, x: Any) -> Any:
    return chebyshev_values(n, x, second_kind=True)[n]


def chebyshev_U_iter(x: Any) -> Iterator[Any]:
    previous, current = 0 * x, one_like(x)
    while True:
        yield current
        previous, current = current, 2 * x * current - previous


def legendre_eval(n: int, x: Any) -> Any:
    """(m+1)P_{m+1} = (2m+1)xP_m - mP_{m-1}."""
    x = scalar(x)
    previous, current = one_like(x), x
    if n == 0:
        return previous
    for m in range(1, n):
        previous, current = current, ((2 * m + 1) * x * current - m * previous) / (m + 1)
    return current


def gegenbauer_eval(n: int, x: Any, lam: Any) -> Any:
    """mC_m = 2x(m+lam-1)C_{m-1} - (m+2lam-2)C_{m-2}, C_0 = 1, C_1 = 2 lam x."""
    x, lam = scalar(x), scalar(lam)
    previous, current = one_like(x), 2 * lam * x
    if n == 0:
        return previous
    for m in range(2, n + 1):
        previous, current = current, (2 * x * (m + lam - 1) * current - (m + 2 * lam - 2) * previous) / m
    return current


def _integer_offset(value: Any) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise UnsupportedParameterOffset()
    return value.numerator


def beta_ratio(source: JacobiParams, target: JacobiParams) -> Any:
    """B(a,b)/B(c,d) for integer c-a and d-b, as a ratio of Pochhammer symbols."""
    first, second = _integer_offset(target.a - source.a), _integer_offset(target.b - source.b)
    try:
        return gamma_ratio(source.a + source.b, first + second) / (
            gamma_ratio(source.a, first) * gamma_ratio(source.b, second)
        )
    except ZeroDivisionError:
        raise SingularParameters()


def density_ratio(x: Any, source: JacobiParams, target: JacobiParams) -> Any:
    """h(x|c,d)/h(x|a,b) for integer parameter offsets."""
    x = scalar(x)
    first, second = _integer_offset(target.a - source.a), _integer_offset(target.b - source.b)
    two = 2 * one_like(x)
    return lift(beta_ratio(source, target), x) * two ** (-(first + second)) * (1 + x) ** first * (1 - x) ** second


CONVENTIONS = ("ab_cd", "cd_ab")


def density_expansion_terms(
    x: Any, source: JacobiParams, target: JacobiParams, convention: str, ctx: PrecisionContext
) -> Iterator[Any]:
    """Terms c_{n,0} J_n(x|a,b) / ||J_n||^2 with c taken in the named argument order."""
    n = 0
    while True:
        if convention == "ab_cd":
            coefficient = conn_coeff(n, 0, source, target)
        else:
            coefficient = conn_coeff(n, 0, target, source)
        yield to_real(coefficient * jacobi_eval(n, x, source) / jacobi_norm(n, source), ctx)
        n += 1


@dataclass(frozen=True)
class DensityExpansionResult:
    convention: str
    residual: Any
    terms_used: int
    converged: Tuple[str, ...]


def check_density_domain(source: JacobiParams, target: JacobiParams, x: Any) -> None:
    _integer_offset(target.a - source.a)
    _integer_offset(target.b - source.b)
    if not (2 * target.a > source.a and 2 * target.b > source.b and -1 < x < 1):
        raise OutsideConvergenceDomain()


def density_tail_ratio(source: JacobiParams, target: JacobiParams) -> Fraction:
    """Geometric ratio bounding the tail of the density expansion.

    With nonnegative offsets h(x|c,d)/h(x|a,b) is a polynomial of degree (c-a)+(d-b), its expansion
    stops there and the tail is zero. Otherwise the ratio is singular at an endpoint, the terms decay
    at best algebraically and no geometric bound exists.
    """
    first, second = _integer_offset(target.a - source.a), _integer_offset(target.b - source.b)
    return Fraction(0) if first >= 0 and second >= 0 else Fraction(1)


def density_ratio_expansion_check(
    source: JacobiParams, target: JacobiParams, x: Any, ctx: PrecisionContext
) -> DensityExpansionResult:
    """Expand h(x|c,d)/h(x|a,b) in J_n(x|a,b) under both coefficient orders.

    Returns the convergent order; raises SeriesDidNotConverge when neither converges.
    """
    x = scalar(x)
    check_density_domain(source, target, x)
    lhs = to_real(density_ratio(x, source, target), ctx)
    outcomes = {
        convention: sum_until_converged(
            lhs,
            density_expansion_terms(x, source, target, convention, ctx),
            density_tail_ratio(source, target),
            ctx,
            abandon_window=DIVERGENCE_WINDOW,
        )
        for convention in CONVENTIONS
    }
    converged = tuple(name for name in CONVENTIONS if outcomes[name].converged)
    if not converged:
        raise SeriesDidNotConverge()
    if len(converged) > 1:
        log.warning(f"Both coefficient orders converge for {source} -> {target} at x={x}")
    chosen = outcomes[converged[0]]
    log.info(f"Density expansion {source} -> {target} at x={x} converges with order {converged[0]}")
    return DensityExpansionResult(converged[0], chosen.residual, chosen.terms_used, converged)
