"""Rising and falling factorials, binomials and Stirling numbers (the q=1 machinery)."""
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Tuple

from poch_verify.errors import SingularParameters
from poch_verify.numerics import one_like, scalar


def rising(x: Any, n: int) -> Any:
    """x(x+1)...(x+n-1); rising(x, 0) = 1."""
    x = scalar(x)
    result = one_like(x)
    for i in range(n):
        result *= x + i
    return result


def falling(x: Any, n: int) -> Any:
    """x(x-1)...(x-n+1); falling(x, 0) = 1."""
    x = scalar(x)
    result = one_like(x)
    for i in range(n):
        result *= x - i
    return result


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n(n-2)(n-4)...; (-1)!! = 0!! = 1."""
    result = 1
    for factor in range(n, 0, -2):
        result *= factor
    return result


def gamma_ratio(x: Any, k: int) -> Any:
    """Gamma(x+k)/Gamma(x) for integer k, as a Pochhammer quotient."""
    if k >= 0:
        return rising(x, k)
    denominator = rising(scalar(x) + k, -k)
    if denominator == 0:
        raise SingularParameters()
    return 1 / denominator


class StirlingKind(str, Enum):
    FIRST_UNSIGNED = "first_unsigned"
    SECOND = "second"


@dataclass(frozen=True)
class StirlingTable:
    """Triangle of Stirling numbers, row n holding entries j = 0..n."""

    kind: StirlingKind
    rows: Tuple[Tuple[int, ...], ...]

    def row(self, n: int) -> Tuple[int, ...]:
        return self.rows[n]

    def entry(self, n: int, j: int) -> int:
        if j < 0 or j > n:
            return 0
        return self.rows[n][j]


@lru_cache(maxsize=8)
def stirling_table(kind: StirlingKind, size: int) -> StirlingTable:
    """Rows 0..size built by the recurrences
    c(n,j) = c(n-1,j-1) + (n-1)c(n-1,j) and S(n,j) = S(n-1,j-1) + jS(n-1,j).
    """
    kind = StirlingKind(kind)
    rows = [(1,)]
    for n in range(1, size + 1):
        previous = rows[-1] + (0,)
        row = [0]
        for j in range(1, n + 1):
            weight = n - 1 if kind is StirlingKind.FIRST_UNSIGNED else j
            row.append(previous[j - 1] + weight * previous[j])
        rows.append(tuple(row))
    return StirlingTable(kind=kind, rows=tuple(rows))
