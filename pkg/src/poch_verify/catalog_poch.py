"""Rising/falling factorial identities: Vandermonde, Stirling expansions, shift laws."""
from fractions import Fraction
from typing import List, Tuple

from poch_verify.pochhammer import StirlingKind, binomial, double_factorial, falling, rising, stirling_table
from poch_verify.registry import IdentityRecord, exact_record, var


def _vandermonde(factorial_of):
    def rhs(n, p):
        return sum(binomial(n, k) * factorial_of(p["x"], k) * factorial_of(p["y"], n - k) for k in range(n + 1))

    return rhs


def _stirling_first(n, p):
    table = stirling_table(StirlingKind.FIRST_UNSIGNED, n)
    return sum((-1) ** (n - j) * table.entry(n, j) * p["x"] ** j for j in range(n + 1))


def _stirling_rising(n, p):
    table = stirling_table(StirlingKind.FIRST_UNSIGNED, n)
    return sum(table.entry(n, j) * p["x"] ** j for j in range(n + 1))


def _stirling_second(n, p):
    table = stirling_table(StirlingKind.SECOND, n)
    return sum(table.entry(n, j) * falling(p["x"], j) for j in range(n + 1))


def rozn_sum(n, p):
    a, b = p["a"], p["b"]
    return sum((-1) ** j * binomial(n, j) * rising(a, j) * rising(b + j, n - j) for j in range(n + 1))


def _rozn2(n, p):
    a, b = p["a"], p["b"]
    return sum((-1) ** (n - j) * binomial(n, j) * rising(b + n - 1, j) * rising(a + j, n - j) for j in range(n + 1))


def _rozn3(n, p):
    a, b = p["a"], p["b"]
    return sum((-1) ** j * binomial(n, j) * rising(b, n - j) * rising(a + 1 - j, j) for j in range(n + 1))


def rozn_rhs(n, p):
    return rising(p["b"] - p["a"], n)


def square(n: int) -> Tuple[int, int]:
    return n + 1, n + 1


def records() -> List[IdentityRecord]:
    return [
        exact_record(
            "poch.vandermonde.rising",
            "(x+y)^(n) = sum_k C(n,k) (x)^(k) (y)^(n-k)",
            [var("x"), var("y")],
            lambda n, p: rising(p["x"] + p["y"], n),
            _vandermonde(rising),
            square,
        ),
        exact_record(
            "poch.vandermonde.falling",
            "(x+y)_(n) = sum_k C(n,k) (x)_(k) (y)_(n-k)",
            [var("x"), var("y")],
            lambda n, p: falling(p["x"] + p["y"], n),
            _vandermonde(falling),
            square,
        ),
        exact_record(
            "poch.stirling.s1",
            "(x)_(n) = sum_j (-1)^(n-j) c(n,j) x^j",
            [var("x")],
            lambda n, p: falling(p["x"], n),
            _stirling_first,
            lambda n: (n + 1,),
        ),
        exact_record(
            "poch.stirling.srising",
            "(x)^(n) = sum_j c(n,j) x^j",
            [var("x")],
            lambda n, p: rising(p["x"], n),
            _stirling_rising,
            lambda n: (n + 1,),
        ),
        exact_record(
            "poch.stirling.s2",
            "x^n = sum_j S(n,j) (x)_(j)",
            [var("x")],
            lambda n, p: p["x"] ** n,
            _stirling_second,
            lambda n: (n + 1,),
        ),
        exact_record(
            "poch.lemma_ab.rozn",
            "sum_j (-1)^j C(n,j) (a)^(j) (b+j)^(n-j) = (b-a)^(n)",
            [var("a"), var("b")],
            rozn_sum,
            rozn_rhs,
            square,
        ),
        exact_record(
            "poch.lemma_ab.rozn2",
            "sum_j (-1)^(n-j) C(n,j) (b+n-1)^(j) (a+j)^(n-j) = (b-a)^(n)",
            [var("a"), var("b")],
            _rozn2,
            rozn_rhs,
            square,
        ),
        exact_record(
            "poch.lemma_ab.rozn3",
            "sum_j (-1)^j C(n,j) (b)^(n-j) (a+1-j)^(j) = (b-a)^(n)",
            [var("a"), var("b")],
            _rozn3,
            rozn_rhs,
            square,
        ),
        exact_record(
            "poch.shift.concat",
            "(x)^(j+n) = (x)^(j) (x+j)^(n), j = 0..n",
            [var("x")],
            lambda n, p: tuple(rising(p["x"], j + n) for j in range(n + 1)),
            lambda n, p: tuple(rising(p["x"], j) * rising(p["x"] + j, n) for j in range(n + 1)),
            lambda n: (2 * n + 1,),
        ),
        exact_record(
            "poch.shift.skip",
            "(x)^(j) (x+j+1)^(n-j) (x+j) = (x)^(n+1), j = 0..n",
            [var("x")],
            lambda n, p: tuple(rising(p["x"], j) * rising(p["x"] + j + 1, n - j) * (p["x"] + j) for j in range(n + 1)),
            lambda n, p: tuple(rising(p["x"], n + 1) for _ in range(n + 1)),
            lambda n: (n + 2,),
        ),
        exact_record(
            "poch.falling.reflect",
            "(a)^(n) = (-1)^n (-a)_(n)",
            [var("a")],
            lambda n, p: rising(p["a"], n),
            lambda n, p: (-1) ** n * falling(-p["a"], n),
            lambda n: (n + 1,),
        ),
        exact_record(
            "poch.special.half",
            "(1/2)^(n) = (2n-1)!!/2^n",
            [],
            lambda n, p: rising(Fraction(1, 2), n),
            lambda n, p: Fraction(double_factorial(2 * n - 1), 2**n),
            min_n=0,
        ),
    ]
