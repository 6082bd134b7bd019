"""q-series identities: Euler expansions, limits at q = 0 and 1, shift laws and kernel factorizations."""
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from poch_verify.numerics import PrecisionContext, real_args
from poch_verify.pochhammer import binomial, factorial
from poch_verify.qkernel import (
    euler_finite,
    kernel_factorization,
    q_binomial,
    q_factorial,
    q_number,
    q_poch,
    q_poch_inf,
    q_poch_inverse_series,
    q_poch_series,
    shift_sides,
)
from poch_verify.registry import (
    IdentityRecord,
    exact_record,
    is_one,
    is_zero,
    outside_unit_interval,
    series_record,
    var,
)

EULER_POINTS = [
    {"t": Fraction(1, 3), "q": Fraction(1, 2)},
    {"t": Fraction(-2, 5), "q": Fraction(7, 10)},
    {"t": Fraction(4, 5), "q": Fraction(-1, 2)},
]


def midway(value) -> Fraction:
    """A ratio bound strictly between |value| and 1."""
    return (1 + abs(Fraction(value))) / 2


@lru_cache(maxsize=4)
def _shift_sides_over_k(name: str, n: int, a: Fraction, q: Fraction) -> Tuple[Tuple, Tuple]:
    sides = [shift_sides(name, a, q, n, k) for k in range(n + 1)]
    return tuple(lhs for lhs, _ in sides), tuple(rhs for _, rhs in sides)


def _shift(name: str, side: int, over_k: bool = False):
    def evaluate(n, p):
        if over_k:
            return _shift_sides_over_k(name, n, p["a"], p["q"])[side]
        return shift_sides(name, p["a"], p["q"], n)[side]

    return evaluate


def _kernel(name: str, side: int):
    def evaluate(n, p):
        return kernel_factorization(name, n, p["t"], p["a"], p["q"], p.get("u"))[side]

    return evaluate


def _q1(n, p):
    one = Fraction(1)
    return (
        q_number(n, one),
        q_factorial(n, one),
        *(q_binomial(n, k, one) for k in range(n + 1)),
        q_poch(p["a"], one, n),
    )


def _q1_limits(n, p):
    return (n, factorial(n), *(binomial(n, k) for k in range(n + 1)), (1 - p["a"]) ** n)


def _q2(n, p):
    zero = Fraction(0)
    return (
        q_number(n, zero),
        q_factorial(n, zero),
        *(q_binomial(n, k, zero) for k in range(n + 1)),
        q_poch(p["a"], zero, n),
    )


def _q2_limits(n, p):
    return (1, 1, *(1 for _ in range(n + 1)), 1 - p["a"])


def _reciprocal_product(p, ctx: PrecisionContext):
    return 1 / q_poch_inf(p["t"], p["q"], ctx)


def _reciprocal_terms(p, ctx: PrecisionContext):
    return q_poch_inverse_series(*real_args(p, ctx, "t", "q"))


def _product(p, ctx: PrecisionContext):
    return q_poch_inf(p["t"], p["q"], ctx)


def _product_terms(p, ctx: PrecisionContext):
    return q_poch_series(*real_args(p, ctx, "t", "q"))


def _finite_reciprocal(p, ctx: PrecisionContext):
    t, q = real_args(p, ctx, "t", "q")
    return 1 / q_poch(t, q, int(p["n"]) + 1)


def _finite_reciprocal_terms(p, ctx: PrecisionContext):
    t, q = real_args(p, ctx, "t", "q")
    n = int(p["n"])
    power = ctx.mp.mpf(1)
    j = 0
    while True:
        yield q_binomial(n + j, j, q) * power
        power *= t
        j += 1


def _zero_sum_terms(p, ctx: PrecisionContext):
    (q,) = real_args(p, ctx, "q")
    return q_poch_series(ctx.mp.mpf(1), q)


def _square_product(p, ctx: PrecisionContext):
    a, q = real_args(p, ctx, "a", "q")
    return q_poch_inf(a * a, q * q, ctx)


def _split_sign_product(p, ctx: PrecisionContext):
    a, q = real_args(p, ctx, "a", "q")
    yield q_poch_inf(a, q, ctx) * q_poch_inf(-a, q, ctx)


def _single_product(p, ctx: PrecisionContext):
    return q_poch_inf(p["a"], p["q"], ctx)


def _split_parity_product(p, ctx: PrecisionContext):
    a, q = real_args(p, ctx, "a", "q")
    yield q_poch_inf(a, q * q, ctx) * q_poch_inf(a * q, q * q, ctx)


def _inside(*names: str):
    def domain(p) -> bool:
        return all(abs(p[name]) < 1 for name in names)

    return domain


def records() -> List[IdentityRecord]:
    base = var("q", "|q| < 1", outside_unit_interval)
    argument = var("t", "|t| < 1", outside_unit_interval)
    unit_excluded = var("a", "a != 1", is_one)
    return [
        exact_record(
            "q.euler.obinT_n",
            "(t)_n = sum_j [n j]_q q^C(j,2) (-t)^j",
            [var("t"), var("q")],
            lambda n, p: q_poch(p["t"], p["q"], n),
            lambda n, p: euler_finite(p["t"], p["q"], n),
            lambda n: (n + 1, n * (n - 1) // 2 + 1),
        ),
        exact_record(
            "q.euler.finite_zero",
            "0 = sum_j [n j]_q q^C(j,2) (-1)^j, n >= 1",
            [var("q")],
            lambda n, p: euler_finite(1, p["q"], n),
            lambda n, p: 0,
            lambda n: (n * (n - 1) // 2 + 1,),
        ),
        exact_record(
            "q.euler.qfactorial",
            "(q)_n = (1-q)^n [n]_q!",
            [var("q")],
            lambda n, p: q_poch(p["q"], p["q"], n),
            lambda n, p: (1 - p["q"]) ** n * q_factorial(n, p["q"]),
            lambda n: (n * (n + 1) // 2 + 1,),
        ),
        exact_record(
            "q.limits.q1",
            "[n]_1 = n, [n]_1! = n!, [n k]_1 = C(n,k), (a|1)_n = (1-a)^n",
            [var("a")],
            _q1,
            _q1_limits,
            lambda n: (n + 1,),
        ),
        exact_record(
            "q.limits.q2",
            "[n]_0 = 1, [n]_0! = 1, [n k]_0 = 1, (a|0)_n = 1-a for n >= 1",
            [var("a")],
            _q2,
            _q2_limits,
            lambda n: (2,),
        ),
        series_record(
            "q.euler.binT",
            "1/(t)_inf = sum_k t^k/(q)_k",
            [argument, base],
            _reciprocal_product,
            _reciprocal_terms,
            lambda p: midway(max(abs(p["t"]), abs(p["q"]))),
            EULER_POINTS,
            ratio_budget=True,
            domain=_inside("t", "q"),
        ),
        series_record(
            "q.euler.binT_n",
            "1/(t)_{n+1} = sum_j [n+j j]_q t^j",
            [argument, base, var("n", "n >= 0")],
            _finite_reciprocal,
            _finite_reciprocal_terms,
            lambda p: midway(max(abs(p["t"]), abs(p["q"]))),
            [{**point, "n": n} for point in EULER_POINTS for n in (0, 3)],
            ratio_budget=True,
            domain=_inside("t", "q"),
            notes="the bracket of the second display is read as [n+j j]_q",
        ),
        series_record(
            "q.euler.obinT",
            "(t)_inf = sum_k (-1)^k q^C(k,2) t^k/(q)_k",
            [argument, base],
            _product,
            _product_terms,
            lambda p: midway(p["t"]),
            EULER_POINTS,
            ratio_budget=True,
            domain=_inside("t", "q"),
        ),
        series_record(
            "q.euler.inf_zero",
            "0 = sum_j (-1)^j q^C(j,2)/(q)_j",
            [base],
            lambda p, ctx: ctx.mp.mpf(0),
            _zero_sum_terms,
            lambda p: midway(p["q"]),
            [{"q": Fraction(1, 2)}, {"q": Fraction(-3, 5)}],
            domain=_inside("q"),
        ),
        exact_record(
            "q.shift.s1",
            "(a)_{n+k} = (a)_n (aq^n)_k, k = 0..n",
            [var("a"), var("q")],
            _shift("s1", 0, over_k=True),
            _shift("s1", 1, over_k=True),
            lambda n: (2 * n + 1, n * (2 * n - 1) + 1),
            integer_points=True,
        ),
        exact_record(
            "q.shift.s2",
            "(aq^n)_k/(aq^k)_n = (a)_k/(a)_n, k = 0..n",
            [unit_excluded, var("q")],
            _shift("s2", 0, over_k=True),
            _shift("s2", 1, over_k=True),
            lambda n: (2 * n + 1, 2 * n * n),
            integer_points=True,
        ),
        exact_record(
            "q.shift.s3",
            "(a^2|q^2)_n = (a)_n (-a)_n",
            [var("a"), var("q")],
            _shift("s3", 0),
            _shift("s3", 1),
            lambda n: (2 * n + 1, n * n),
            integer_points=True,
        ),
        exact_record(
            "q.shift.s4",
            "(a)_{2n} = (a|q^2)_n (aq|q^2)_n",
            [var("a"), var("q")],
            _shift("s4", 0),
            _shift("s4", 1),
            lambda n: (2 * n + 1, 2 * n * n),
            integer_points=True,
        ),
        exact_record(
            "q.shift.knk1",
            "(aq^{k-1})_k (aq^{2k})_{n-k} = (aq^{k-1})_n (1-aq^{n+k-1})/(1-aq^{2k-1}), k = 0..n",
            [var("a"), var("q", "q != 0", is_zero)],
            _shift("knk1", 0, over_k=True),
            _shift("knk1", 1, over_k=True),
            lambda n: (n + 2, 2 * n * n + 2),
            integer_points=True,
        ),
        exact_record(
            "q.shift.knk2",
            "(a)_k (aq^{n+k-1})_{n-k} = (a)_{2n-1}/(aq^k)_{n-1}, k = 0..n",
            [unit_excluded, var("q")],
            _shift("knk2", 0, over_k=True),
            _shift("knk2", 1, over_k=True),
            lambda n: (2 * n, 2 * n * n + 1),
            integer_points=True,
        ),
        series_record(
            "q.shift.s3_inf",
            "(a^2|q^2)_inf = (a)_inf (-a)_inf",
            [var("a", "|a| < 1", outside_unit_interval), base],
            _square_product,
            _split_sign_product,
            lambda p: 0,
            [{"a": Fraction(1, 3), "q": Fraction(1, 2)}, {"a": Fraction(-3, 5), "q": Fraction(7, 10)}],
            domain=_inside("a", "q"),
        ),
        series_record(
            "q.shift.s4_inf",
            "(a)_inf = (a|q^2)_inf (aq|q^2)_inf",
            [var("a", "|a| < 1", outside_unit_interval), base],
            _single_product,
            _split_parity_product,
            lambda p: 0,
            [{"a": Fraction(1, 3), "q": Fraction(1, 2)}, {"a": Fraction(-3, 5), "q": Fraction(7, 10)}],
            domain=_inside("a", "q"),
        ),
        exact_record(
            "q.kernel.rozklv",
            "(ae^{it}, ae^{-it})_n = prod_{k<n} v(x|aq^k), x = cos t",
            [var("t"), var("a"), var("q")],
            _kernel("rozklv", 0),
            _kernel("rozklv", 1),
        ),
        exact_record(
            "q.kernel.rozkll",
            "(ae^{2it}, ae^{-2it})_n = prod_{k<n} l(x|aq^k), x = cos t",
            [var("t"), var("a"), var("q")],
            _kernel("rozkll", 0),
            _kernel("rozkll", 1),
        ),
        exact_record(
            "q.kernel.rozklw",
            "(ae^{i(t+u)}, ae^{i(t-u)}, ae^{-i(t-u)}, ae^{-i(t+u)})_n = prod_{k<n} w(x,y|aq^k)",
            [var("t"), var("u"), var("a"), var("q")],
            _kernel("rozklw", 0),
            _kernel("rozklw", 1),
        ),
    ]
