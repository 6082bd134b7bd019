"""Polynomial families of the Askey-Wilson scheme on [-1, 1] and their densities.

Families, all evaluated by three-term recurrences:

* q-Hermite h_n(x|q) and the auxiliary b_n(x|q) = (-1)^n q^C(n,2) h_n(x|1/q);
* Rogers (continuous q-ultraspherical) C_n(x|beta,q) and the scaled D_n(x|s) = s^n C_n(x|1/s);
* Al-Salam-Chihara p_n(x|y,rho,q) and g_n(x|y,rho,q) = rho^n p_n(y|x,1/rho,q);
* Askey-Wilson alpha_n(x|y,rho1,z,rho2,q), defined by its expansion in the p_j.

The complex parameters of the usual parametrization (a = rho e^{i theta}, cos theta = y) are never
formed; everything is written in (y, rho).
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import islice
from typing import Any, Iterator, List, Mapping

from poch_verify.errors import OutsideSupport, SingularParameters
from poch_verify.numerics import PrecisionContext, one_like, scalar, to_real
from poch_verify.qkernel import (
    kernel_w,
    l_product,
    q_binomial,
    q_binomial_row,
    q_poch,
    q_poch_inf,
    q_poch_scaled,
    w_product,
)

log = logging.getLogger(__name__)


def _take(values: Iterator[Any], n: int) -> List[Any]:
    return list(islice(values, n + 1))


def _divide(numerator: Any, denominator: Any, message: str = "") -> Any:
    if denominator == 0:
        raise SingularParameters(message)
    return numerator / denominator


def qhermite_iter(x: Any, q: Any) -> Iterator[Any]:
    """h_0, h_1, ... with h_{m+1} = 2x h_m + (q^m - 1) h_{m-1}."""
    x, q = scalar(x), scalar(q)
    previous, current = one_like(x), 2 * x
    yield previous
    m = 1
    while True:
        yield current
        previous, current = current, 2 * x * current + (q**m - 1) * previous
        m += 1


def qhermite_values(n: int, x: Any, q: Any) -> List[Any]:
    return _take(qhermite_iter(x, q), n)


def qhermite_eval(n: int, x: Any, q: Any) -> Any:
    return qhermite_values(n, x, q)[n]


def bpoly_iter(x: Any, q: Any) -> Iterator[Any]:
    """b_0, b_1, ... with b_{m+1} = -2x q^m b_m + (q^(m-1) - q^(2m-1)) b_{m-1}; no division by q."""
    x, q = scalar(x), scalar(q)
    previous, current = one_like(x), -2 * x
    yield previous
    m = 1
    while True:
        yield current
        previous, current = current, -2 * x * q**m * current + (q ** (m - 1) - q ** (2 * m - 1)) * previous
        m += 1


def bpoly_values(n: int, x: Any, q: Any) -> List[Any]:
    return _take(bpoly_iter(x, q), n)


def bpoly_eval(n: int, x: Any, q: Any) -> Any:
    return bpoly_values(n, x, q)[n]


def bpoly_literal_eval(n: int, x: Any, q: Any) -> Any:
    """(-1)^n q^C(n,2) h_n(x|q), the base-q reading of b_n. It does not satisfy the zero-sum
    with the q-Hermite polynomials and only serves as a negative control."""
    q = scalar(q)
    return (-1) ** n * q ** (n * (n - 1) // 2) * qhermite_eval(n, x, q)


def rogers_iter(x: Any, beta: Any, q: Any) -> Iterator[Any]:
    """C_0, C_1, ... with (1-q^{m+1})C_{m+1} = 2x(1-beta q^m)C_m - (1-beta^2 q^{m-1})C_{m-1}."""
    x, beta, q = scalar(x), scalar(beta), scalar(q)
    previous = one_like(x)
    yield previous
    current = _divide(2 * x * (1 - beta), 1 - q, "singular q")
    m = 1
    while True:
        yield current
        step = 2 * x * (1 - beta * q**m) * current - (1 - beta * beta * q ** (m - 1)) * previous
        previous, current = current, _divide(step, 1 - q ** (m + 1), "singular q")
        m += 1


def rogers_values(n: int, x: Any, beta: Any, q: Any) -> List[Any]:
    return _take(rogers_iter(x, beta, q), n)


def rogers_eval(n: int, x: Any, beta: Any, q: Any) -> Any:
    return rogers_values(n, x, beta, q)[n]


def rogers_scaled_iter(x: Any, s: Any, q: Any) -> Iterator[Any]:
    """D_m = s^m C_m(x|1/s): (1-q^{m+1})D_{m+1} = 2x(s-q^m)D_m - (s^2-q^{m-1})D_{m-1}."""
    x, s, q = scalar(x), scalar(s), scalar(q)
    previous = one_like(x)
    yield previous
    current = _divide(2 * x * (s - 1), 1 - q, "singular q")
    m = 1
    while True:
        yield current
        step = 2 * x * (s - q**m) * current - (s * s - q ** (m - 1)) * previous
        previous, current = current, _divide(step, 1 - q ** (m + 1), "singular q")
        m += 1


def rogers_scaled_eval(n: int, x: Any, s: Any, q: Any) -> Any:
    return _take(rogers_scaled_iter(x, s, q), n)[n]


@dataclass(frozen=True)
class ASCParams:
    """Conditioning point y and correlation rho of the Al-Salam-Chihara family."""

    y: Any
    rho: Any
    q: Any


def asc_iter(x: Any, y: Any, rho: Any, q: Any) -> Iterator[Any]:
    """p_{m+1} = (2x - 2 rho y q^m) p_m - (1-q^m)(1-rho^2 q^{m-1}) p_{m-1}."""
    x, y, rho, q = scalar(x), scalar(y), scalar(rho), scalar(q)
    previous, current = one_like(x), 2 * x - 2 * rho * y
    yield previous
    m = 1
    while True:
        yield current
        step = (2 * x - 2 * rho * y * q**m) * current - (1 - q**m) * (1 - rho * rho * q ** (m - 1)) * previous
        previous, current = current, step
        m += 1


def asc_values(n: int, x: Any, y: Any, rho: Any, q: Any) -> List[Any]:
    return _take(asc_iter(x, y, rho, q), n)


def asc_eval(n: int, x: Any, p: ASCParams) -> Any:
    return asc_values(n, x, p.y, p.rho, p.q)[n]


def g_iter(x: Any, y: Any, rho: Any, q: Any) -> Iterator[Any]:
    """g_{m+1} = (2 rho y - 2x q^m) g_m - (1-q^m)(rho^2 - q^{m-1}) g_{m-1}; equals b_n at rho = 0."""
    x, y, rho, q = scalar(x), scalar(y), scalar(rho), scalar(q)
    previous, current = one_like(x), 2 * rho * y - 2 * x
    yield previous
    m = 1
    while True:
        yield current
        step = (2 * rho * y - 2 * x * q**m) * current - (1 - q**m) * (rho * rho - q ** (m - 1)) * previous
        previous, current = current, step
        m += 1


def g_values(n: int, x: Any, y: Any, rho: Any, q: Any) -> List[Any]:
    return _take(g_iter(x, y, rho, q), n)


def g_eval(n: int, x: Any, y: Any, rho: Any, q: Any) -> Any:
    return g_values(n, x, y, rho, q)[n]


def chebu_in_qhermite(n: int, m: int, q: Any) -> Any:
    """Coefficient of h_m(x|q) in U_n(x)."""
    q = scalar(q)
    if m > n or (n - m) % 2:
        return q * 0
    j = (n - m) // 2
    return (-1) ** j * q ** (j * (j + 1) // 2) * q_binomial(n - j, j, q)


def qhermite_in_chebu(n: int, m: int, q: Any) -> Any:
    """Coefficient of U_m(x) in h_n(x|q)."""
    q = scalar(q)
    if m > n or (n - m) % 2:
        return q * 0
    k = (n - m) // 2
    top = q ** (n - k + 1)
    return _divide((q**k - top) * q_binomial(n, k, q), 1 - top)


def rogers_conn(n: int, m: int, gamma: Any, beta: Any, q: Any) -> Any:
    """Coefficient of C_m(x|beta) in C_n(x|gamma)."""
    gamma, beta, q = scalar(gamma), scalar(beta), scalar(q)
    if m > n or (n - m) % 2:
        return q * 0
    k = (n - m) // 2
    numerator = q_poch_scaled(beta, gamma, q, k) * q_poch(gamma, q, n - k) * (1 - beta * q ** (n - 2 * k))
    return _divide(numerator, q_poch(q, q, k) * q_poch(beta * q, q, n - k) * (1 - beta))


def asc_conn(n: int, j: int, y: Any, rho: Any, q: Any) -> Any:
    """Coefficient of h_j(x|q) in p_n(x|y,rho,q)."""
    rho = scalar(rho)
    return q_binomial(n, j, q) * rho ** (n - j) * bpoly_eval(n - j, y, q)


def asc_conn_inverse(n: int, j: int, y: Any, rho: Any, q: Any) -> Any:
    """Coefficient of p_j(x|y,rho,q) in h_n(x|q)."""
    rho = scalar(rho)
    return q_binomial(n, j, q) * rho ** (n - j) * qhermite_eval(n - j, y, q)


def _aw_weight(n: int, j: int, rho1: Any, rho2: Any, q: Any, shift: int) -> Any:
    # rho2^{n-j} (rho1^2 q^j)_{n-j} / (rho1^2 rho2^2 q^shift)_{n-j}
    numerator = rho2 ** (n - j) * q_poch(rho1 * rho1 * q**j, q, n - j)
    return _divide(numerator, q_poch(rho1 * rho1 * rho2 * rho2 * q**shift, q, n - j))


def aw_conn(n: int, j: int, y: Any, rho1: Any, z: Any, rho2: Any, q: Any) -> Any:
    """Coefficient of p_j(x|y,rho1) in alpha_n(x)."""
    y, rho1, z, rho2, q = (scalar(v) for v in (y, rho1, z, rho2, q))
    if j > n:
        return q * 0
    if j == n:
        return one_like(q)
    sigma = rho1 * rho2 * q ** (n - 1)
    weight = _aw_weight(n, j, rho1, rho2, q, n + j - 1)
    return q_binomial(n, j, q) * weight * g_eval(n - j, z, y, sigma, q)


def aw_conn_inverse(n: int, j: int, y: Any, rho1: Any, z: Any, rho2: Any, q: Any) -> Any:
    """Coefficient of alpha_j(x) in p_n(x|y,rho1)."""
    y, rho1, z, rho2, q = (scalar(v) for v in (y, rho1, z, rho2, q))
    if j > n:
        return q * 0
    weight = _aw_weight(n, j, rho1, rho2, q, 2 * j)
    return q_binomial(n, j, q) * weight * asc_values(n - j, z, y, rho1 * rho2 * q**j, q)[n - j]


def aw_alpha_iter(x: Any, y: Any, rho1: Any, z: Any, rho2: Any, q: Any) -> Iterator[Any]:
    """alpha_0, alpha_1, ... at x, each from its expansion in p_j(x|y,rho1)."""
    x, y, rho1, z, rho2, q = (scalar(v) for v in (x, y, rho1, z, rho2, q))
    asc = asc_iter(x, y, rho1, q)
    p = [next(asc)]
    yield one_like(x)
    m = 1
    while True:
        p.append(next(asc))
        g = g_values(m, z, y, rho1 * rho2 * q ** (m - 1), q)
        row = q_binomial_row(m, q)
        yield sum(row[j] * p[j] * _aw_weight(m, j, rho1, rho2, q, m + j - 1) * g[m - j] for j in range(m + 1))
        m += 1


def aw_alpha_values(n: int, x: Any, y: Any, rho1: Any, z: Any, rho2: Any, q: Any) -> List[Any]:
    return _take(aw_alpha_iter(x, y, rho1, z, rho2, q), n)


def aw_alpha_eval(n: int, x: Any, y: Any, rho1: Any, z: Any, rho2: Any, q: Any) -> Any:
    return aw_alpha_values(n, x, y, rho1, z, rho2, q)[n]


def _w_finite(y: Any, z: Any, a: Any, q: Any, n: int) -> Any:
    result = one_like(a)
    for k in range(n):
        result *= kernel_w(y, z, a * q**k)
    return result


def aw_alpha_norm(n: int, y: Any, rho1: Any, z: Any, rho2: Any, q: Any) -> Any:
    """(q, rho1^2, rho2^2)_n prod_{k<n} w(y,z|rho1 rho2 q^k) / ((rho1^2 rho2^2 q^{n-1})_n (rho1^2 rho2^2)_{2n})."""
    y, rho1, z, rho2, q = (scalar(v) for v in (y, rho1, z, rho2, q))
    if n == 0:
        return one_like(q)
    r1, r2 = rho1 * rho1, rho2 * rho2
    numerator = q_poch(q, q, n) * q_poch(r1, q, n) * q_poch(r2, q, n) * _w_finite(y, z, rho1 * rho2, q, n)
    return _divide(numerator, q_poch(r1 * r2 * q ** (n - 1), q, n) * q_poch(r1 * r2, q, 2 * n))


def aw_alpha_norm_literal(n: int, y: Any, rho1: Any, z: Any, rho2: Any, q: Any) -> Any:
    """The squared norm with (rho1^2 rho2^2 q^{n-1})_n above the line instead of below it."""
    y, rho1, z, rho2, q = (scalar(v) for v in (y, rho1, z, rho2, q))
    if n == 0:
        return one_like(q)
    r1, r2 = rho1 * rho1, rho2 * rho2
    numerator = q_poch(q, q, n) * q_poch(r1, q, n) * q_poch(r2, q, n) * _w_finite(y, z, rho1 * rho2, q, n)
    return _divide(numerator * q_poch(r1 * r2 * q ** (n - 1), q, n), q_poch(r1 * r2, q, 2 * n))


FAMILIES = ("qh", "chebU", "rogers", "asc", "aw")


def family_norm(family: str, n: int, params: Mapping[str, Any]) -> Any:
    """Squared norm of the n-th polynomial with respect to the family's probability density."""
    q = scalar(params.get("q", 0))
    if family == "qh":
        return q_poch(q, q, n)
    if family == "chebU":
        return one_like(q)
    if family == "rogers":
        beta = scalar(params["beta"])
        return _divide(q_poch(beta * beta, q, n) * (1 - beta), (1 - beta * q**n) * q_poch(q, q, n))
    if family == "asc":
        rho = scalar(params["rho"])
        return q_poch(q, q, n) * q_poch(rho * rho, q, n)
    if family == "aw":
        return aw_alpha_norm(n, params["y"], params["rho1"], params["z"], params["rho2"], q)
    raise ValueError(f"unknown family {family}")


class DensityFamily(str, Enum):
    F_H = "f_h"
    F_C = "f_C"
    F_CN = "f_CN"
    F_C2N = "f_C2N"


@dataclass(frozen=True)
class DensitySpec:
    """A density of the scheme with its parameters, e.g. DensitySpec("f_CN", {"y": ..., "rho": ..., "q": ...})."""

    family: DensityFamily
    params: Mapping[str, Any]
    ctx: PrecisionContext = field(default_factory=PrecisionContext)


def _inside(*points: Any) -> None:
    if any(not -1 < point < 1 for point in points):
        raise OutsideSupport()


def _f_h(x, q, ctx: PrecisionContext):
    _inside(x)
    mp = ctx.mp
    return 2 * q_poch_inf(q, q, ctx) * mp.sqrt(1 - x * x) / mp.pi * l_product(x, q, q, ctx)


def _f_C(x, beta, q, ctx: PrecisionContext):
    normalizer = q_poch_inf(beta * beta, q, ctx) / (q_poch_inf(beta, q, ctx) * q_poch_inf(beta * q, q, ctx))
    return normalizer * _f_h(x, q, ctx) / l_product(x, beta, q, ctx)


def _f_CN(x, y, rho, q, ctx: PrecisionContext):
    _inside(x, y)
    return _f_h(x, q, ctx) * q_poch_inf(rho * rho, q, ctx) / w_product(x, y, rho, q, ctx)


def density_eval(spec: DensitySpec, x: Any) -> Any:
    """Value at x of the density named by `spec`, with every infinite product truncated under spec.ctx."""
    ctx = spec.ctx
    p = {name: to_real(value, ctx) for name, value in spec.params.items()}
    x = to_real(x, ctx)
    family = DensityFamily(spec.family)
    if family is DensityFamily.F_H:
        return _f_h(x, p["q"], ctx)
    if family is DensityFamily.F_C:
        return _f_C(x, p["beta"], p["q"], ctx)
    if family is DensityFamily.F_CN:
        return _f_CN(x, p["y"], p["rho"], p["q"], ctx)
    y, rho1, z, rho2, q = p["y"], p["rho1"], p["z"], p["rho2"], p["q"]
    _inside(x, y, z)
    return _f_CN(y, x, rho1, q, ctx) * _f_CN(x, z, rho2, q, ctx) / _f_CN(y, z, rho1 * rho2, q, ctx)


def density_c2n_symmetric(spec: DensitySpec, x: Any) -> Any:
    """f_C2N composed in the other order: f_CN(x|y,rho1) f_CN(z|x,rho2) / f_CN(z|y,rho1 rho2)."""
    ctx = spec.ctx
    y, rho1, z, rho2, q = (to_real(spec.params[name], ctx) for name in ("y", "rho1", "z", "rho2", "q"))
    x = to_real(x, ctx)
    _inside(x, y, z)
    return _f_CN(x, y, rho1, q, ctx) * _f_CN(z, x, rho2, q, ctx) / _f_CN(z, y, rho1 * rho2, q, ctx)
