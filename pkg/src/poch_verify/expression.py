"""The `eval` command: a flat call syntax over the library's exported operations.

    name(arg, ...; key=value, ...)

Arguments are literals only: integers, decimals and fractions p/q, all read exactly.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

from poch_verify.awfamilies import ASCParams, asc_eval, bpoly_eval, qhermite_eval, rogers_eval
from poch_verify.errors import ExpressionError
from poch_verify.jacobi import (
    JacobiParams,
    chebyshev_T,
    chebyshev_U,
    conn_coeff,
    gegenbauer_eval,
    jacobi_eval,
    jacobi_norm,
    legendre_eval,
)
from poch_verify.numerics import PrecisionContext, is_real
from poch_verify.pochhammer import (
    StirlingKind,
    binomial,
    double_factorial,
    factorial,
    falling,
    gamma_ratio,
    rising,
    stirling_table,
)
from poch_verify.qkernel import q_binomial, q_factorial, q_number, q_poch, q_poch_inf

log = logging.getLogger(__name__)

TOKEN_SPEC = [
    ("NUMBER", r"\d+(?:\.\d*)?|\.\d+"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("PUNCT", r"[(),;=/+-]"),
    ("SKIP", r"\s+"),
]
TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_SPEC))


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(expression: str) -> List[Token]:
    """Split into tokens with 1-based positions; an END token closes the list."""
    tokens = []
    index = 0
    while index < len(expression):
        match = TOKEN_RE.match(expression, index)
        if match is None:
            raise ExpressionError(position=index + 1, detail=f"unexpected character {expression[index]!r}")
        if match.lastgroup != "SKIP":
            tokens.append(Token(match.lastgroup or "", match.group(), index + 1))
        index = match.end()
    tokens.append(Token("END", "", len(expression) + 1))
    return tokens


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple[Fraction, ...]
    kwargs: Tuple[Tuple[str, Fraction, int], ...]
    position: int
    end: int


class _Parser:
    def __init__(self, tokens: List[Token]) -> None:
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        if self.current.text != text or self.current.kind == "END":
            raise ExpressionError(position=self.current.position, detail=f"expected {text!r}")
        return self.advance()

    def name(self) -> Token:
        if self.current.kind != "NAME":
            raise ExpressionError(position=self.current.position, detail="expected a name")
        return self.advance()

    def number(self) -> Fraction:
        if self.current.kind != "NUMBER":
            raise ExpressionError(position=self.current.position, detail="expected a number")
        return Fraction(self.advance().text)

    def literal(self) -> Fraction:
        sign = 1
        if self.current.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        value = self.number()
        if self.current.text == "/":
            slash = self.advance()
            denominator = self.number()
            if denominator == 0:
                raise ExpressionError(position=slash.position + 1, detail="zero denominator")
            value /= denominator
        return sign * value

    def call(self) -> Call:
        name = self.name()
        self.expect("(")
        args: List[Fraction] = []
        kwargs: List[Tuple[str, Fraction, int]] = []
        if self.current.text not in (")", ";"):
            args.append(self.literal())
            while self.current.text == ",":
                self.advance()
                args.append(self.literal())
        if self.current.text == ";":
            self.advance()
            kwargs.append(self.keyword())
            while self.current.text == ",":
                self.advance()
                kwargs.append(self.keyword())
        end = self.expect(")")
        if self.current.kind != "END":
            raise ExpressionError(position=self.current.position, detail="expected the end of the expression")
        return Call(name.text, tuple(args), tuple(kwargs), name.position, end.position)

    def keyword(self) -> Tuple[str, Fraction, int]:
        key = self.name()
        self.expect("=")
        return key.text, self.literal(), key.position


def parse(expression: str) -> Call:
    return _Parser(tokenize(expression)).call()


@dataclass(frozen=True)
class Function:
    """An operation callable from `eval`. Parameters listed in `integers` must be whole numbers."""

    parameters: Tuple[str, ...]
    apply: Callable[..., Any]
    integers: Tuple[str, ...] = ()
    numeric: bool = False


def _stirling(kind: StirlingKind) -> Callable[..., Any]:
    return lambda n, k: stirling_table(kind, n).entry(n, k)


FUNCTIONS: Dict[str, Function] = {
    "rising": Function(("x", "n"), rising, ("n",)),
    "falling": Function(("x", "n"), falling, ("n",)),
    "binomial": Function(("n", "k"), binomial, ("n", "k")),
    "factorial": Function(("n",), factorial, ("n",)),
    "dfact": Function(("n",), double_factorial, ("n",)),
    "gammaratio": Function(("x", "k"), gamma_ratio, ("k",)),
    "stirling1": Function(("n", "k"), _stirling(StirlingKind.FIRST_UNSIGNED), ("n", "k")),
    "stirling2": Function(("n", "k"), _stirling(StirlingKind.SECOND), ("n", "k")),
    "qnum": Function(("n", "q"), q_number, ("n",)),
    "qfact": Function(("n", "q"), q_factorial, ("n",)),
    "qbinom": Function(("n", "k", "q"), q_binomial, ("n", "k")),
    "qpoch": Function(("a", "q", "n"), q_poch, ("n",)),
    "qpochinf": Function(("a", "q"), lambda a, q, ctx: q_poch_inf(a, q, ctx), numeric=True),
    "jacobi": Function(("n", "x", "a", "b"), lambda n, x, a, b: jacobi_eval(n, x, JacobiParams(a, b)), ("n",)),
    "jacobinorm": Function(("n", "a", "b"), lambda n, a, b: jacobi_norm(n, JacobiParams(a, b)), ("n",)),
    "conn": Function(
        ("n", "j", "a", "b", "c", "d"),
        lambda n, j, a, b, c, d: conn_coeff(n, j, JacobiParams(a, b), JacobiParams(c, d)),
        ("n", "j"),
    ),
    "chebT": Function(("n", "x"), chebyshev_T, ("n",)),
    "chebU": Function(("n", "x"), chebyshev_U, ("n",)),
    "legendre": Function(("n", "x"), legendre_eval, ("n",)),
    "gegenbauer": Function(("n", "x", "lam"), gegenbauer_eval, ("n",)),
    "qhermite": Function(("n", "x", "q"), qhermite_eval, ("n",)),
    "galois": Function(("n", "q"), lambda n, q: qhermite_eval(n, 1, q), ("n",)),
    "bpoly": Function(("n", "x", "q"), bpoly_eval, ("n",)),
    "rogers": Function(("n", "x", "beta", "q"), rogers_eval, ("n",)),
    "asc": Function(("n", "x", "y", "rho", "q"), lambda n, x, y, rho, q: asc_eval(n, x, ASCParams(y, rho, q)), ("n",)),
}


def _bind(call: Call, function: Function) -> Dict[str, Any]:
    if len(call.args) > len(function.parameters):
        raise ExpressionError(
            f"{call.name} takes {len(function.parameters)} arguments", detail=", ".join(function.parameters)
        )
    bound: Dict[str, Any] = dict(zip(function.parameters, call.args))
    for key, value, position in call.kwargs:
        if key not in function.parameters:
            raise ExpressionError(f"unknown argument {key}", position)
        if key in bound:
            raise ExpressionError(f"argument {key} given twice", position)
        bound[key] = value
    missing = [name for name in function.parameters if name not in bound]
    if missing:
        raise ExpressionError(f"missing argument {', '.join(missing)}", call.end)
    for name in function.integers:
        if bound[name].denominator != 1:
            raise ExpressionError(f"argument {name} must be an integer")
        bound[name] = int(bound[name])
    return bound


def evaluate(expression: str, ctx: Optional[PrecisionContext] = None) -> str:
    """Parse and evaluate one call; exact values print as fractions, numeric ones at the context precision."""
    ctx = ctx or PrecisionContext()
    call = parse(expression)
    function = FUNCTIONS.get(call.name)
    if function is None:
        raise ExpressionError(f"unknown function {call.name}", detail=f"known functions: {', '.join(FUNCTIONS)}")
    bound = _bind(call, function)
    log.debug(f"Evaluating {call.name} with {bound}")
    if function.numeric:
        value = function.apply(**bound, ctx=ctx)
    else:
        value = function.apply(**bound)
    if is_real(value):
        return ctx.mp.nstr(value, ctx.mp.dps)
    return str(Fraction(value))
