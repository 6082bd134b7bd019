"""The identity catalog.

Every record is either an exact polynomial identity, proved by evaluation on a grid of rational
points larger than its degree, or a numeric series identity, checked by partial sums at a few
points inside its convergence domain.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple

from poch_verify.errors import UnknownIdentity
from poch_verify.numerics import Exclusion, PrecisionContext

log = logging.getLogger(__name__)

Point = Mapping[str, Fraction]
ExactSide = Callable[[int, Point], Any]
SeriesSide = Callable[[Point, PrecisionContext], Any]
SeriesTerms = Callable[[Point, PrecisionContext], Iterator[Any]]

CONTROL_PREFIX = "registry.selftest"


class Kind(str, Enum):
    EXACT = "exact_polynomial"
    SERIES = "numeric_series"


@dataclass(frozen=True)
class Variable:
    """A free parameter of an identity with the values the sampler must avoid."""

    name: str
    domain: str = "rational"
    exclusions: Tuple[Exclusion, ...] = ()

    def describe(self) -> str:
        return f"{self.name}: {self.domain}"


def var(name: str, domain: str = "rational", *exclusions: Exclusion) -> Variable:
    return Variable(name, domain, tuple(exclusions))


def is_zero(value: Fraction) -> bool:
    return value == 0


def is_one(value: Fraction) -> bool:
    return value == 1


def is_nonpositive(value: Fraction) -> bool:
    return value <= 0


def outside_unit_interval(value: Fraction) -> bool:
    return not -1 < value < 1


@dataclass(frozen=True)
class IdentityRecord:
    """One catalog entry.

    Exact records carry `lhs`/`rhs` evaluators of (n, point) returning a scalar or a tuple of
    scalars, and a per-variable `degree_bound(n)` (not needed with three or more variables).
    With `integer_points` their grids are drawn from the integers, which keeps exact heights small.
    A `max_n_cap` bounds n below the requested maximum and shows up in the report.
    Series records carry `lhs(point, ctx)`, `terms(point, ctx)` (or several `conventions`),
    the geometric `ratio(point)` of their terms and default evaluation `points`. With `ratio_budget`
    a point whose ratio needs more than max_terms terms to reach the tolerance gets that many.
    """

    id: str
    anchor: str
    kind: Kind
    variables: Tuple[Variable, ...]
    lhs: Callable[..., Any]
    rhs: Optional[ExactSide] = None
    degree_bound: Optional[Callable[[int], Tuple[int, ...]]] = None
    min_n: int = 1
    max_n_cap: Optional[int] = None
    integer_points: bool = False
    terms: Optional[SeriesTerms] = None
    conventions: Tuple[Tuple[str, SeriesTerms], ...] = ()
    ratio: Optional[Callable[[Point], Any]] = None
    ratio_budget: bool = False
    points: Tuple[Point, ...] = ()
    domain: Optional[Callable[[Point], bool]] = None
    notes: str = ""
    control: bool = False

    def __post_init__(self) -> None:
        if self.kind is Kind.EXACT:
            if self.rhs is None:
                raise ValueError(f"{self.id}: exact record without a right-hand side")
            if 0 < len(self.variables) <= 2 and self.degree_bound is None:
                raise ValueError(f"{self.id}: exact record without degree bounds")
        else:
            if self.ratio is None or not self.points or (self.terms is None and not self.conventions):
                raise ValueError(f"{self.id}: series record without terms, ratio or points")
            names = {variable.name for variable in self.variables}
            for point in self.points:
                if set(point) != names:
                    raise ValueError(f"{self.id}: point {dict(point)} does not match the variables")

    @property
    def variable_names(self) -> Tuple[str, ...]:
        return tuple(variable.name for variable in self.variables)

    def describe_variables(self) -> str:
        return ", ".join(variable.describe() for variable in self.variables) or "-"


def exact_record(
    id: str,
    anchor: str,
    variables: Sequence[Variable],
    lhs: ExactSide,
    rhs: ExactSide,
    degree_bound: Optional[Callable[[int], Tuple[int, ...]]] = None,
    **options: Any,
) -> IdentityRecord:
    return IdentityRecord(
        id=id,
        anchor=anchor,
        kind=Kind.EXACT,
        variables=tuple(variables),
        lhs=lhs,
        rhs=rhs,
        degree_bound=degree_bound,
        **options,
    )


def series_record(
    id: str,
    anchor: str,
    variables: Sequence[Variable],
    lhs: SeriesSide,
    terms: Optional[SeriesTerms],
    ratio: Callable[[Point], Any],
    points: Sequence[Mapping[str, Any]],
    **options: Any,
) -> IdentityRecord:
    exact_points = tuple({name: Fraction(value) for name, value in point.items()} for point in points)
    return IdentityRecord(
        id=id,
        anchor=anchor,
        kind=Kind.SERIES,
        variables=tuple(variables),
        lhs=lhs,
        terms=terms,
        ratio=ratio,
        points=exact_points,
        **options,
    )


@lru_cache(maxsize=1)
def catalog() -> Tuple[IdentityRecord, ...]:
    """All records, sorted by id."""
    from poch_verify import catalog_controls, catalog_families, catalog_jacobi, catalog_poch, catalog_q

    records: Dict[str, IdentityRecord] = {}
    for module in (catalog_poch, catalog_jacobi, catalog_q, catalog_families, catalog_controls):
        for record in module.records():
            if record.id in records:
                raise ValueError(f"duplicate identity id {record.id}")
            records[record.id] = record
    log.debug(f"Catalog holds {len(records)} records")
    return tuple(records[key] for key in sorted(records))


def get(identity_id: str) -> IdentityRecord:
    for record in catalog():
        if record.id == identity_id:
            return record
    raise UnknownIdentity(f"unknown identity {identity_id}")


def select(id_filter: str = "") -> Tuple[IdentityRecord, ...]:
    """Records whose id starts with `id_filter`.

    Control records (negative self-tests) only match when the filter starts with the control
    prefix or names the control exactly.
    """
    wants_controls = id_filter.startswith(CONTROL_PREFIX)
    return tuple(
        record
        for record in catalog()
        if record.id.startswith(id_filter) and (not record.control or wants_controls or record.id == id_filter)
    )
