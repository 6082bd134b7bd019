"""q-numbers, q-binomials, q-Pochhammer symbols, the Euler expansions and the v/l/w kernels.

Finite objects work over any scalar kind. Infinite products take a `PrecisionContext` and are
truncated with an explicit tail bound (`truncated_product`).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterator, Mapping, Sequence, Tuple

from poch_verify.errors import ConvergenceBudgetExceeded, DivergentParameterDomain, SingularParameters
from poch_verify.numerics import PrecisionContext, one_like, scalar, to_real

log = logging.getLogger(__name__)


def q_number(n: int, q: Any) -> Any:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    q = scalar(q)
    result = q * 0
    power = one_like(q)
    for _ in range(n):
        result += power
        power *= q
    return result


def q_factorial(n: int, q: Any) -> Any:
    q = scalar(q)
    result = one_like(q)
    for j in range(1, n + 1):
        result *= q_number(j, q)
    return result


@lru_cache(maxsize=8192, typed=True)
def q_binomial_row(n: int, q: Any) -> Tuple[Any, ...]:
    """Row n of the Gaussian triangle by the Pascal rule [n k] = [n-1 k-1] + q^k [n-1 k]."""
    one = one_like(q)
    if n == 0:
        return (one,)
    previous = q_binomial_row(n - 1, q)
    row = [one]
    power = one
    for k in range(1, n):
        power *= q
        row.append(previous[k - 1] + power * previous[k])
    row.append(one)
    return tuple(row)


def q_binomial(n: int, k: int, q: Any) -> Any:
    q = scalar(q)
    if k < 0 or k > n:
        return q * 0
    return q_binomial_row(n, q)[k]


class _PrefixProducts:
    """(a|q)_0, (a|q)_1, ... for one exact pair (a, q), extended on demand."""

    def __init__(self, a: Fraction, q: Fraction) -> None:
        self.values = [Fraction(1)]
        self.shifted = a
        self.q = q

    def upto(self, n: int) -> Fraction:
        while len(self.values) <= n:
            self.values.append(self.values[-1] * (1 - self.shifted))
            self.shifted *= self.q
        return self.values[n]


@lru_cache(maxsize=1024)
def _prefix_products(a: Fraction, q: Fraction) -> _PrefixProducts:
    return _PrefixProducts(a, q)


def q_poch(a: Any, q: Any, n: int) -> Any:
    """(a|q)_n = (1-a)(1-aq)...(1-aq^(n-1)); exact pairs share their partial products."""
    a, q = scalar(a), scalar(q)
    if isinstance(a, Fraction) and isinstance(q, Fraction):
        return _prefix_products(a, q).upto(max(n, 0))
    result = one_like(a)
    power = one_like(q)
    for _ in range(n):
        result *= 1 - a * power
        power *= q
    return result


def q_poch_multi(values: Sequence[Any], q: Any, n: int) -> Any:
    """(a_1, ..., a_k|q)_n, the product of the single symbols."""
    result = 1
    for a in values:
        result = q_poch(a, q, n) * result
    return result


def q_poch_scaled(c: Any, a: Any, q: Any, n: int) -> Any:
    """(c - a)(c - aq)...(c - aq^(n-1)), i.e. c^n (a/c|q)_n without dividing by c."""
    c, a, q = scalar(c), scalar(a), scalar(q)
    result = one_like(c)
    power = one_like(q)
    for _ in range(n):
        result *= c - a * power
        power *= q
    return result


@dataclass(frozen=True)
class QPochConfig:
    """Base and precision for infinite q-objects; the base must lie inside the unit disc."""

    q: Any
    ctx: PrecisionContext

    def real_base(self) -> Any:
        q = to_real(self.q, self.ctx)
        if abs(q) >= 1:
            raise DivergentParameterDomain()
        return q


def truncated_product(factor: Callable[[int], Any], bound: Any, ratio: Any, ctx: PrecisionContext) -> Any:
    """Product of factor(0), factor(1), ... truncated at the first K with
    2 * bound * ratio^K / (1 - ratio) below the product tolerance.

    `bound` must dominate |factor(j) - 1| / ratio^j for every j.
    """
    mp = ctx.mp
    ratio = abs(mp.mpf(ratio))
    if ratio >= 1:
        raise DivergentParameterDomain()
    bound = abs(mp.mpf(bound))
    limit = ctx.product_tolerance
    factors = 1
    while 2 * bound * ratio**factors / (1 - ratio) >= limit:
        factors += 1
        if factors > ctx.max_product_factors:
            raise ConvergenceBudgetExceeded()
    result = mp.mpf(1)
    for j in range(factors):
        result *= factor(j)
    return result


def q_poch_inf(a: Any, q: Any, ctx: PrecisionContext) -> Any:
    """(a|q)_inf at the context precision; |q| < 1."""
    q = QPochConfig(q, ctx).real_base()
    a = to_real(a, ctx)
    return truncated_product(lambda j: 1 - a * q**j, abs(a), abs(q), ctx)


def q_poch_inf_multi(values: Sequence[Any], q: Any, ctx: PrecisionContext) -> Any:
    result = ctx.mp.mpf(1)
    for a in values:
        result *= q_poch_inf(a, q, ctx)
    return result


def kernel_v(x: Any, a: Any) -> Any:
    """1 - 2ax + a^2."""
    x, a = scalar(x), scalar(a)
    return 1 - 2 * a * x + a * a


def kernel_l(x: Any, a: Any) -> Any:
    """(1 + a)^2 - 4x^2 a."""
    x, a = scalar(x), scalar(a)
    return (1 + a) ** 2 - 4 * x * x * a


def kernel_w(x: Any, y: Any, a: Any) -> Any:
    """(1 - a^2)^2 - 4xya(1 + a^2) + 4a^2(x^2 + y^2)."""
    x, y, a = scalar(x), scalar(y), scalar(a)
    return (1 - a * a) ** 2 - 4 * x * y * a * (1 + a * a) + 4 * a * a * (x * x + y * y)


def unit_circle_point(t: Any) -> Tuple[Any, Any]:
    """(cos theta, sin theta) for tan(theta/2) = t, rational in t."""
    t = scalar(t)
    denominator = 1 + t * t
    return (1 - t * t) / denominator, 2 * t / denominator


def _pair_factor(r: Any, cosine: Any, sine: Any) -> Any:
    # (1 - r e^{i theta})(1 - r e^{-i theta}) in real form
    return (1 - r * cosine) ** 2 + (r * sine) ** 2


def kernel_factorization(name: str, n: int, t: Any, a: Any, q: Any, u: Any = None) -> Tuple[Any, Any]:
    """Both sides of the kernel factorizations of paired q-Pochhammer symbols on the unit circle.

    rozklv: (ae^{it}, ae^{-it})_n = prod_{k<n} v(x|aq^k)
    rozkll: (ae^{2it}, ae^{-2it})_n = prod_{k<n} l(x|aq^k)
    rozklw: (ae^{i(t+u)}, ae^{i(t-u)}, ae^{-i(t+u)}, ae^{-i(t-u)})_n = prod_{k<n} w(x, y|aq^k)
    with x = cos t, y = cos u given by `unit_circle_point`.
    """
    a, q = scalar(a), scalar(q)
    cos_t, sin_t = unit_circle_point(t)
    if name == "rozklw":
        cos_u, sin_u = unit_circle_point(u)
        angles = [
            (cos_t * cos_u - sin_t * sin_u, sin_t * cos_u + cos_t * sin_u),
            (cos_t * cos_u + sin_t * sin_u, sin_t * cos_u - cos_t * sin_u),
        ]
    elif name == "rozkll":
        angles = [(cos_t * cos_t - sin_t * sin_t, 2 * sin_t * cos_t)]
    elif name == "rozklv":
        angles = [(cos_t, sin_t)]
    else:
        raise ValueError(f"unknown kernel factorization {name}")
    lhs, rhs = one_like(a), one_like(a)
    power = one_like(q)
    for _ in range(n):
        r = a * power
        for cosine, sine in angles:
            lhs *= _pair_factor(r, cosine, sine)
        if name == "rozklv":
            rhs *= kernel_v(cos_t, r)
        elif name == "rozkll":
            rhs *= kernel_l(cos_t, r)
        else:
            rhs *= kernel_w(cos_t, cos_u, r)
        power *= q
    return lhs, rhs


def l_product(x: Any, a: Any, q: Any, ctx: PrecisionContext) -> Any:
    """prod_{j>=0} l(x|a q^j)."""
    q = QPochConfig(q, ctx).real_base()
    x, a = to_real(x, ctx), to_real(a, ctx)
    return truncated_product(lambda j: kernel_l(x, a * q**j), abs(a) * (6 + abs(a)), abs(q), ctx)


def w_product(x: Any, y: Any, a: Any, q: Any, ctx: PrecisionContext) -> Any:
    """prod_{j>=0} w(x, y|a q^j) for x, y in [-1, 1]."""
    q = QPochConfig(q, ctx).real_base()
    x, y, a = to_real(x, ctx), to_real(y, ctx), to_real(a, ctx)
    return truncated_product(lambda j: kernel_w(x, y, a * q**j), 16 * abs(a), abs(q), ctx)


def q_poch_inverse_series(t: Any, q: Any) -> Iterator[Any]:
    """Terms t^k/(q)_k of 1/(t)_inf."""
    power = one_like(t)
    denominator = one_like(q)
    k = 0
    while True:
        yield power / denominator
        power *= t
        k += 1
        denominator *= 1 - q**k


def q_poch_series(t: Any, q: Any) -> Iterator[Any]:
    """Terms (-1)^k q^C(k,2) t^k/(q)_k of (t)_inf."""
    term = one_like(t)
    k = 0
    while True:
        yield term
        term = -term * t * q**k / (1 - q ** (k + 1))
        k += 1


def euler_finite(t: Any, q: Any, n: int) -> Any:
    """sum_j [n j]_q q^C(j,2) (-t)^j, which equals (t)_n."""
    t, q = scalar(t), scalar(q)
    return sum(q_binomial(n, j, q) * q ** (j * (j - 1) // 2) * (-t) ** j for j in range(n + 1))


SHIFT_LAWS = ("s1", "s2", "s3", "s4", "knk1", "knk2")


def shift_sides(name: str, a: Any, q: Any, n: int, k: int = 0) -> Tuple[Any, Any]:
    """Both sides of a finite shift law of the q-Pochhammer symbol.

    s1: (a)_{n+k} = (a)_n (aq^n)_k
    s2: (aq^n)_k/(aq^k)_n = (a)_k/(a)_n
    s3: (a^2|q^2)_n = (a)_n(-a)_n
    s4: (a)_{2n} = (a|q^2)_n (aq|q^2)_n
    knk1: (aq^{k-1})_k (aq^{2k})_{n-k} = (aq^{k-1})_n (1-aq^{n+k-1})/(1-aq^{2k-1})
    knk2: (a)_k (aq^{n+k-1})_{n-k} = (a)_{2n-1}/(aq^k)_{n-1}
    """
    a, q = scalar(a), scalar(q)
    if name == "s1":
        return q_poch(a, q, n + k), q_poch(a, q, n) * q_poch(a * q**n, q, k)
    if name == "s2":
        return q_poch(a * q**n, q, k) / q_poch(a * q**k, q, n), q_poch(a, q, k) / q_poch(a, q, n)
    if name == "s3":
        return q_poch(a * a, q * q, n), q_poch(a, q, n) * q_poch(-a, q, n)
    if name == "s4":
        return q_poch(a, q, 2 * n), q_poch(a, q * q, n) * q_poch(a * q, q * q, n)
    if not 0 <= k <= n:
        raise ValueError(f"{name} needs n >= k >= 0")
    if name == "knk1":
        shifted = a * q ** (k - 1)
        lhs = q_poch(shifted, q, k) * q_poch(a * q ** (2 * k), q, n - k)
        return lhs, q_poch(shifted, q, n) * (1 - a * q ** (n + k - 1)) / (1 - a * q ** (2 * k - 1))
    if name == "knk2":
        if n < 1:
            raise ValueError("knk2 needs n >= 1")
        lhs = q_poch(a, q, k) * q_poch(a * q ** (n + k - 1), q, n - k)
        return lhs, q_poch(a, q, 2 * n - 1) / q_poch(a * q**k, q, n - 1)
    raise ValueError(f"unknown shift law {name}")


def q_shift_check(name: str, params: Mapping[str, Any], ctx: PrecisionContext = None) -> bool:
    """True iff the named shift law holds at the given parameters.

    s3 and s4 without an `n` are checked in their infinite form, to the context tolerance.
    """
    a, q = params["a"], params["q"]
    if name in ("s3", "s4") and "n" not in params:
        ctx = ctx or PrecisionContext()
        if name == "s3":
            lhs = q_poch_inf(to_real(a, ctx) ** 2, to_real(q, ctx) ** 2, ctx)
            rhs = q_poch_inf(a, q, ctx) * q_poch_inf(-to_real(a, ctx), q, ctx)
        else:
            q_real = to_real(q, ctx)
            lhs = q_poch_inf(a, q, ctx)
            rhs = q_poch_inf(a, q_real**2, ctx) * q_poch_inf(to_real(a, ctx) * q_real, q_real**2, ctx)
        return abs(lhs - rhs) < ctx.tolerance
    try:
        lhs, rhs = shift_sides(name, a, q, int(params["n"]), int(params.get("k", 0)))
    except ZeroDivisionError:
        raise SingularParameters("singular sample")
    return lhs == rhs
