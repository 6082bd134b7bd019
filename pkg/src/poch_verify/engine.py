"""The two verification engines.

Exact records are evaluated at rational points with `Fraction` arithmetic. A polynomial identity of
degree at most d in a variable that holds at d+1 distinct values of that variable holds identically,
so with per-variable grids exceeding the declared degree bounds a passing run is a proof. Records with
three or more free variables fall back to random joint samples and are flagged probabilistic.

Series records are checked by partial sums at points inside their convergence domain.
"""
import logging
import math
import random
import time
from dataclasses import replace
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from poch_verify.errors import KindMismatch, OutsideConvergenceDomain
from poch_verify.numerics import (
    DIVERGENCE_WINDOW,
    EXACT_ZERO,
    PrecisionContext,
    RationalSampler,
    SeriesOutcome,
    format_exact_residual,
    format_residual,
    geometric_terms,
    record_seed,
    sum_until_converged,
    to_real,
)
from poch_verify.registry import IdentityRecord, Kind, Point, Variable, get
from poch_verify.storage import Status, VerificationReport

log = logging.getLogger(__name__)

MAX_WIDENINGS = 4
DEFAULT_TRIALS = 20


class _Failure(Exception):
    """Carries the witness of a nonzero difference out of the point loops."""

    def __init__(self, witness: Dict[str, Any], difference: Any) -> None:
        super().__init__(witness)
        self.witness = witness
        self.difference = difference


class _Uncovered(Exception):
    """Not enough nonsingular points for the degree bound of one n."""


def _components(value: Any) -> Tuple[Any, ...]:
    if isinstance(value, (tuple, list)):
        return tuple(value)
    return (value,)


def _exact_string(value: Any) -> str:
    return str(Fraction(value)) if isinstance(value, (int, Fraction)) else str(value)


def _compare(record: IdentityRecord, n: int, point: Point) -> None:
    """Evaluate both sides at (n, point); ZeroDivisionError propagates as a singular point."""
    lhs, rhs = _components(record.lhs(n, point)), _components(record.rhs(n, point))
    if len(lhs) != len(rhs):
        witness = _witness(point, n, None, f"{len(lhs)} components", f"{len(rhs)} components")
        raise _Failure(witness, None)
    for index, (left, right) in enumerate(zip(lhs, rhs)):
        difference = left - right
        if difference != 0:
            raise _Failure(_witness(point, n, index, _exact_string(left), _exact_string(right)), difference)


def _witness(point: Point, n: int, component: Optional[int], lhs: str, rhs: str) -> Dict[str, Any]:
    return {
        "parameters": {name: _exact_string(value) for name, value in point.items()},
        "n": n,
        "component": component,
        "lhs": lhs,
        "rhs": rhs,
    }


def _variable_sampler(record: IdentityRecord, variable: Variable, sampler: RationalSampler) -> RationalSampler:
    seed = record_seed(f"{record.id}:{variable.name}", sampler.seed)
    if record.integer_points:
        bound = sampler.numerator_bound * sampler.denominator_bound
        sampler = replace(sampler, numerator_bound=bound, denominator_bound=1)
    return sampler.with_exclusions(sampler.exclusions + variable.exclusions, seed=seed)


def _candidates(record: IdentityRecord, variable: Variable, sampler: RationalSampler, needed: int) -> Iterator[Any]:
    """Admissible values of one variable, widening the pool whenever it runs dry."""
    sampler = _variable_sampler(record, variable, sampler)
    seen = set()
    for attempt in range(MAX_WIDENINGS + 1):
        pool = sampler.pool()
        if attempt == 0 and len(pool) < needed:
            log.info(f"{record.id}: pool of {variable.name} holds {len(pool)} < {needed} values")
        for value in pool:
            if value not in seen:
                seen.add(value)
                yield value
        sampler = sampler.widened()
        log.info(f"{record.id}: widened the pool of {variable.name} to numerators up to {sampler.numerator_bound}")


def _take_successes(values: Iterator[Any], needed: int, attempt) -> List[Any]:
    """The first `needed` values at which `attempt(value)` is not singular."""
    found = []
    for value in values:
        try:
            attempt(value)
        except ZeroDivisionError:
            log.debug(f"singular point {value}, resampling")
            continue
        found.append(value)
        if len(found) == needed:
            return found
    raise _Uncovered()


class _ExactRun:
    """Point collection for one exact record, one n at a time."""

    def __init__(self, record: IdentityRecord, sampler: RationalSampler, trials: int) -> None:
        self.record = record
        self.sampler = sampler
        self.trials = trials
        self.points_tested = 0

    @property
    def probabilistic(self) -> bool:
        return len(self.record.variables) >= 3

    def check(self, point: Point, n: int) -> None:
        _compare(self.record, n, point)
        self.points_tested += 1
        log.debug(f"{self.record.id}: n={n} holds at {dict(point)}")

    def run(self, n: int) -> None:
        variables = self.record.variables
        if not variables:
            try:
                self.check({}, n)
            except ZeroDivisionError as error:
                raise _Uncovered() from error
        elif len(variables) == 1:
            (bound,) = self.record.degree_bound(n)
            (variable,) = variables
            values = _candidates(self.record, variable, self.sampler, bound + 1)
            _take_successes(values, bound + 1, lambda value: self.check({variable.name: value}, n))
        elif len(variables) == 2:
            self._grid(n)
        else:
            self._joint(n)

    def _grid(self, n: int) -> None:
        first, second = self.record.variables
        outer_bound, inner_bound = self.record.degree_bound(n)

        def inner(value: Any) -> None:
            try:
                _take_successes(
                    _candidates(self.record, second, self.sampler, inner_bound + 1),
                    inner_bound + 1,
                    lambda other: self.check({first.name: value, second.name: other}, n),
                )
            except _Uncovered as error:
                raise ZeroDivisionError(f"{first.name}={value} leaves too few values of {second.name}") from error

        _take_successes(_candidates(self.record, first, self.sampler, outer_bound + 1), outer_bound + 1, inner)

    def _joint(self, n: int) -> None:
        pools = [list(self._joint_pool(variable)) for variable in self.record.variables]
        rng = random.Random(record_seed(f"{self.record.id}:n={n}", self.sampler.seed))
        space = math.prod(len(pool) for pool in pools)
        successes = 0
        # distinct indices into the product of the pools, so no joint point is tested twice
        for index in rng.sample(range(space), min(space, 10 * self.trials)):
            point = _joint_point(self.record.variables, pools, index)
            try:
                self.check(point, n)
            except ZeroDivisionError:
                log.debug(f"{self.record.id}: singular sample {point}")
                continue
            successes += 1
            if successes == self.trials:
                return
        raise _Uncovered()

    def _joint_pool(self, variable: Variable) -> Sequence[Any]:
        return _variable_sampler(self.record, variable, self.sampler).pool()


def _joint_point(variables: Sequence[Variable], pools: Sequence[Sequence[Any]], index: int) -> Point:
    """Decode a mixed-radix index into one value per variable."""
    point = {}
    for variable, pool in zip(variables, pools):
        index, digit = divmod(index, len(pool))
        point[variable.name] = pool[digit]
    return point


def _resolve(record: Union[str, IdentityRecord]) -> IdentityRecord:
    return get(record) if isinstance(record, str) else record


def effective_max_n(record: IdentityRecord, max_n: int) -> int:
    """The largest n an exact run checks: the requested one unless the record caps it."""
    return max_n if record.max_n_cap is None else min(max_n, record.max_n_cap)


def _n_range(record: IdentityRecord, max_n: int) -> range:
    return range(record.min_n, effective_max_n(record, max_n) + 1)


def _notes(*parts: str) -> str:
    return "; ".join(part for part in parts if part)


def verify_exact(
    record: Union[str, IdentityRecord], sampler: RationalSampler, max_n: int, trials: int = DEFAULT_TRIALS
) -> VerificationReport:
    """Prove an exact record for every n in min_n..max_n; a record cap lowers max_n and is noted."""
    record = _resolve(record)
    if record.kind is not Kind.EXACT:
        raise KindMismatch()
    started = time.perf_counter()
    seed = record_seed(record.id, sampler.seed)
    run = _ExactRun(record, sampler, trials)
    top = effective_max_n(record, max_n)
    capped = f"n capped at {top}" if top < max_n else ""
    uncovered = []
    for n in _n_range(record, max_n):
        try:
            run.run(n)
        except _Uncovered:
            uncovered.append(n)
            log.warning(f"{record.id}: too few nonsingular points at n={n}")
        except _Failure as failure:
            log.error(f"{record.id}: failed at n={n}, witness {failure.witness}")
            residual = format_exact_residual(failure.difference) if failure.difference is not None else "mismatch"
            return VerificationReport(
                id=record.id,
                status=Status.FAILED.value,
                points_tested=run.points_tested,
                max_residual=residual,
                seed=seed,
                elapsed_ms=_elapsed(started),
                max_n=top,
                probabilistic=run.probabilistic,
                witness=failure.witness,
                notes=_notes(record.notes, capped),
            )
    status = Status.SKIPPED_SINGULAR if uncovered else Status.PROVED_EXACT
    skipped = f"singular at n={','.join(str(n) for n in uncovered)}" if uncovered else ""
    fallback = f"{trials} random joint samples per n" if run.probabilistic else ""
    return VerificationReport(
        id=record.id,
        status=status.value,
        points_tested=run.points_tested,
        max_residual=EXACT_ZERO,
        max_n=top,
        seed=seed,
        elapsed_ms=_elapsed(started),
        probabilistic=run.probabilistic,
        notes=_notes(record.notes, capped, fallback, skipped),
    )


def _series_point(record: IdentityRecord, point: Mapping[str, Any]) -> Point:
    point = {name: Fraction(value) for name, value in point.items()}
    if set(point) != set(record.variable_names):
        raise ValueError(f"{record.id}: expected parameters {', '.join(record.variable_names)}")
    if record.domain is not None and not record.domain(point):
        raise OutsideConvergenceDomain()
    return point


def _sum(record: IdentityRecord, terms, point: Point, ctx: PrecisionContext) -> SeriesOutcome:
    """Competing conventions are abandoned once their terms grow."""
    lhs = to_real(record.lhs(point, ctx), ctx)
    ratio = record.ratio(point)
    abandon = DIVERGENCE_WINDOW if record.conventions else None
    budget = max(ctx.max_terms, geometric_terms(ratio, ctx)) if record.ratio_budget else None
    return sum_until_converged(lhs, terms(point, ctx), ratio, ctx, abandon_window=abandon, max_terms=budget)


def _conventions(record: IdentityRecord) -> Sequence[Tuple[str, Any]]:
    if record.conventions:
        return record.conventions
    return (("", record.terms),)


def verify_series(
    record: Union[str, IdentityRecord], ctx: PrecisionContext, point: Optional[Mapping[str, Any]] = None
) -> VerificationReport:
    """Check a series record at `point`, or at its default points.

    With several coefficient conventions the record passes iff exactly one of them converges at every point.
    """
    record = _resolve(record)
    if record.kind is not Kind.SERIES:
        raise KindMismatch()
    started = time.perf_counter()
    points = [_series_point(record, point)] if point is not None else [_series_point(record, p) for p in record.points]
    conventions = _conventions(record)
    outcomes: Dict[str, List[Tuple[Point, SeriesOutcome]]] = {name: [] for name, _ in conventions}
    singular = []
    for current in points:
        try:
            for name, terms in conventions:
                outcomes[name].append((current, _sum(record, terms, current, ctx)))
        except ZeroDivisionError:
            log.warning(f"{record.id}: singular at {dict(current)}")
            singular.append(current)
            continue
        log.debug(f"{record.id}: summed at {dict(current)}")
    if len(singular) == len(points):
        return VerificationReport(
            id=record.id,
            status=Status.SKIPPED_SINGULAR.value,
            points_tested=0,
            max_residual="n/a",
            elapsed_ms=_elapsed(started),
            notes=_notes(record.notes, "every point is singular"),
        )
    converged = [name for name, _ in conventions if all(outcome.converged for _, outcome in outcomes[name])]
    if record.conventions:
        chosen = converged[0] if len(converged) == 1 else None
        log.warning(f"{record.id}: converging coefficient orders: {', '.join(converged) or 'none'}")
    else:
        chosen = "" if converged else None
    if chosen is None:
        return _failed_series(record, outcomes, ctx, started, converged)
    results = [outcome for _, outcome in outcomes[chosen]]
    note = f"converges with coefficient order {chosen}" if chosen else ""
    return VerificationReport(
        id=record.id,
        status=Status.PASSED_NUMERIC.value,
        points_tested=len(results),
        max_residual=format_residual(max(outcome.residual for outcome in results), ctx),
        terms_used=max(outcome.terms_used for outcome in results),
        elapsed_ms=_elapsed(started),
        notes=_notes(record.notes, note),
    )


def _failed_series(
    record: IdentityRecord,
    outcomes: Dict[str, List[Tuple[Point, SeriesOutcome]]],
    ctx: PrecisionContext,
    started: float,
    converged: List[str],
) -> VerificationReport:
    everything = [(name, current, outcome) for name, results in outcomes.items() for current, outcome in results]
    witness = {
        "points": [
            {
                "convention": name or None,
                "parameters": {key: str(value) for key, value in current.items()},
                "terms_used": outcome.terms_used,
                "trace": [list(step) for step in outcome.trace],
            }
            for name, current, outcome in everything
            if not outcome.converged or len(converged) > 1
        ]
    }
    log.error(f"{record.id}: failed, witness {witness}")
    reason = "several coefficient orders converge" if len(converged) > 1 else "series did not converge"
    return VerificationReport(
        id=record.id,
        status=Status.FAILED.value,
        points_tested=len({tuple(current.items()) for _, current, _ in everything}),
        max_residual=format_residual(max(outcome.residual for _, _, outcome in everything), ctx),
        terms_used=max(outcome.terms_used for _, _, outcome in everything),
        elapsed_ms=_elapsed(started),
        witness=witness,
        notes=_notes(record.notes, reason),
    )


def verify_record(
    record: IdentityRecord,
    sampler: RationalSampler,
    ctx: PrecisionContext,
    max_n: int,
    trials: int = DEFAULT_TRIALS,
) -> VerificationReport:
    """Run the engine that fits the record's kind."""
    log.info(f"Verifying {record.id}")
    if record.kind is Kind.EXACT:
        report = verify_exact(record, sampler, max_n, trials)
    else:
        report = verify_series(record, ctx)
    log.info(f"{record.id}: {report.status} ({report.points_tested} points, residual {report.max_residual})")
    return report


def _elapsed(started: float) -> float:
    return round((time.perf_counter() - started) * 1000, 3)
