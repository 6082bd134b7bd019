"""Exact rationals, arbitrary-precision reals and reproducible rational sampling.

Two scalar kinds flow through the library: `fractions.Fraction` for exact identity proofs and
`mpmath` reals (`mpf`) for infinite series and products. Generic code only ever combines a scalar
with Python ints or with a scalar of the same kind; `lift` moves a Fraction into the precision
context of a real when the two have to meet.
"""
import logging
import random
import zlib
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Any, Callable, Iterable, List, Optional, Tuple, Union

import mpmath
from mpmath.libmp import from_rational

from poch_verify.errors import InvalidPrecisionContext, SampleSpaceExhausted, ZeroDenominator

log = logging.getLogger(__name__)

Scalar = Union[Fraction, Any]
Exclusion = Callable[[Fraction], bool]

EXACT_ZERO = "exact-zero"


def rat(n: int, d: int = 1) -> Fraction:
    """The canonical rational n/d."""
    if d == 0:
        raise ZeroDenominator()
    return Fraction(n, d)


def is_real(value: Any) -> bool:
    """True for mpmath reals."""
    return hasattr(value, "_mpf_")


def scalar(value: Any) -> Scalar:
    """Coerce ints (and strings like '1/3') to Fraction, leave Fractions and reals alone."""
    if is_real(value) or isinstance(value, Fraction):
        return value
    return Fraction(value)


def one_like(value: Any) -> Scalar:
    """The unit of the scalar kind of `value`."""
    if is_real(value):
        return value.context.mpf(1)
    if isinstance(value, Fraction):
        return Fraction(1)
    return 1


@dataclass(frozen=True)
class PrecisionContext:
    """Precision and convergence budget for every numeric path."""

    precision_bits: int = 256
    tolerance_exp: int = -80
    max_terms: int = 200
    max_product_factors: int = 400

    def __post_init__(self) -> None:
        if self.precision_bits < 64 or self.max_terms < 8 or self.max_product_factors < 1:
            raise InvalidPrecisionContext()

    @cached_property
    def mp(self):
        """A private mpmath context at `precision_bits`; never the global `mpmath.mp`."""
        context = mpmath.MPContext()
        context.prec = self.precision_bits
        return context

    @property
    def tolerance(self):
        return self.mp.ldexp(self.mp.mpf(1), self.tolerance_exp)

    @property
    def product_tolerance(self):
        """Relative accuracy demanded of truncated infinite products."""
        return self.mp.ldexp(self.mp.mpf(1), self.tolerance_exp - 16)


def to_real(r: Any, ctx: PrecisionContext):
    """Round a rational to the nearest real at the context precision (one rounding)."""
    if is_real(r):
        return ctx.mp.mpf(r)
    r = Fraction(r)
    return ctx.mp.make_mpf(from_rational(r.numerator, r.denominator, ctx.precision_bits, "n"))


def lift(value: Any, like: Any) -> Scalar:
    """Convert `value` to the scalar kind of `like`."""
    if is_real(like) and not is_real(value):
        value = Fraction(value)
        context = like.context
        return context.make_mpf(from_rational(value.numerator, value.denominator, context.prec, "n"))
    return value


def real_args(point: dict, ctx: PrecisionContext, *names: str) -> Tuple[Any, ...]:
    return tuple(to_real(point[name], ctx) for name in names)


def record_seed(record_id: str, seed: int) -> int:
    """Stable per-record seed, independent of the interpreter's hash randomization."""
    return (zlib.crc32(record_id.encode("utf-8")) ^ seed) & 0xFFFFFFFFFFFFFFFF


@lru_cache(maxsize=256)
def _base_pool(seed: int, numerator_bound: int, denominator_bound: int) -> Tuple[Fraction, ...]:
    values = sorted(
        {
            Fraction(p, d)
            for d in range(1, denominator_bound + 1)
            for p in range(-numerator_bound, numerator_bound + 1)
        }
    )
    random.Random(seed).shuffle(values)
    return tuple(values)


@dataclass(frozen=True)
class RationalSampler:
    """Deterministic source of small rationals p/d with |p| <= numerator_bound and 1 <= d <= denominator_bound."""

    seed: int
    numerator_bound: int = 12
    denominator_bound: int = 8
    exclusions: Tuple[Exclusion, ...] = field(default=())

    def pool(self) -> List[Fraction]:
        """All admissible values in sampling order."""
        return [
            value
            for value in _base_pool(self.seed, self.numerator_bound, self.denominator_bound)
            if not any(excluded(value) for excluded in self.exclusions)
        ]

    def widened(self) -> "RationalSampler":
        return replace(self, numerator_bound=2 * self.numerator_bound)

    def with_exclusions(self, exclusions: Iterable[Exclusion], seed: Optional[int] = None) -> "RationalSampler":
        return replace(self, exclusions=tuple(exclusions), seed=self.seed if seed is None else seed)


def sample_rationals(sampler: RationalSampler, count: int) -> List[Fraction]:
    """The first `count` admissible, pairwise distinct rationals of the sampler."""
    pool = sampler.pool()
    if count > len(pool):
        raise SampleSpaceExhausted()
    return pool[:count]


@dataclass(frozen=True)
class SeriesOutcome:
    converged: bool
    residual: Any
    terms_used: int
    trace: Tuple[Tuple[int, str], ...] = ()


TRACE_AT = (1, 2, 5, 10, 20, 50, 100, 150, 200)
# window for giving up on a series whose terms keep growing
DIVERGENCE_WINDOW = 10


def sum_until_converged(
    lhs,
    terms: Iterable,
    ratio,
    ctx: PrecisionContext,
    window: int = 3,
    abandon_window: Optional[int] = None,
    max_terms: Optional[int] = None,
) -> SeriesOutcome:
    """Add up `terms` until the partial sum matches `lhs` and the tail is provably small.

    Acceptance at N needs all of: |lhs - S_N| < tolerance; the geometric tail estimate
    max(last `window` |t|) * r / (1 - r) below tolerance / 10; and a non-increasing envelope,
    max of the last `window` magnitudes not above the max of the `window` before them.
    An exhausted (finite) generator has a zero tail.

    With `abandon_window` w the sum gives up unconverged as soon as the max of the last w
    magnitudes exceeds the max of the w before them. `max_terms` overrides the budget of `ctx`.
    """
    tolerance = ctx.tolerance
    budget = ctx.max_terms if max_terms is None else max_terms
    partial = ctx.mp.mpf(0)
    magnitudes: List[Any] = []
    trace: List[Tuple[int, str]] = []
    residual = abs(lhs - partial)
    ratio = abs(to_real(ratio, ctx))
    count = 0
    for term in terms:
        count += 1
        partial += term
        magnitudes.append(abs(term))
        residual = abs(lhs - partial)
        if count in TRACE_AT:
            trace.append((count, format_residual(residual, ctx)))
        if residual < tolerance and _tail_is_small(magnitudes, ratio, tolerance, window):
            if _envelope_decreasing(magnitudes, window):
                return SeriesOutcome(True, residual, count, tuple(trace))
        if abandon_window is not None and _envelope_growing(magnitudes, abandon_window):
            log.debug(f"envelope grows after {count} terms, giving up")
            return SeriesOutcome(False, residual, count, tuple(trace))
        if count >= budget:
            return SeriesOutcome(False, residual, count, tuple(trace))
    return SeriesOutcome(residual < tolerance, residual, count, tuple(trace))


def geometric_terms(ratio, ctx: PrecisionContext) -> int:
    """How many terms a geometric series of this ratio needs before its terms fall below the tolerance."""
    ratio = abs(to_real(ratio, ctx))
    if ratio == 0 or ratio >= 1:
        return ctx.max_terms
    return int(ctx.mp.ceil(ctx.tolerance_exp / ctx.mp.log(ratio, 2)))


def _tail_is_small(magnitudes: List[Any], ratio, tolerance, window: int) -> bool:
    if ratio >= 1:
        return False
    return max(magnitudes[-window:]) * ratio / (1 - ratio) < tolerance / 10


def _envelope_decreasing(magnitudes: List[Any], window: int) -> bool:
    if len(magnitudes) < 2 * window:
        return True
    return max(magnitudes[-window:]) <= max(magnitudes[-2 * window : -window])


def _envelope_growing(magnitudes: List[Any], window: int) -> bool:
    return len(magnitudes) >= 2 * window and not _envelope_decreasing(magnitudes, window)


def format_residual(value, ctx: PrecisionContext) -> str:
    """'1.2e-25 (~2^-83, 256 bits)' or 'exact-zero'."""
    if value == 0:
        return EXACT_ZERO
    exponent = int(ctx.mp.floor(ctx.mp.log(value, 2)))
    return f"{ctx.mp.nstr(value, 2)} (~2^{exponent}, {ctx.precision_bits} bits)"


def format_exact_residual(difference: Fraction) -> str:
    """An exact nonzero difference, with a short decimal in front."""
    if difference == 0:
        return EXACT_ZERO
    magnitude = abs(difference)
    return f"{mpmath.nstr(mpmath.mpf(magnitude.numerator) / magnitude.denominator, 3)} (exact {magnitude})"
