from fractions import Fraction

import pytest

from poch_verify.errors import ExpressionError
from poch_verify.expression import Call, evaluate, parse, tokenize


def test_tokenize_positions():
    tokens = tokenize("qpoch(1/2, 1/3, 2)")
    assert [(token.kind, token.text, token.position) for token in tokens[:4]] == [
        ("NAME", "qpoch", 1),
        ("PUNCT", "(", 6),
        ("NUMBER", "1", 7),
        ("PUNCT", "/", 8),
    ]
    assert tokens[-1].kind == "END"
    assert tokens[-1].position == 19


def test_tokenize_rejects_unknown_characters():
    with pytest.raises(ExpressionError, match="position 7"):
        tokenize("rising*(1, 2)")


def test_parse():
    call = parse("jacobi(3, 1/4; a=1, b=-2.5)")
    assert call == Call(
        "jacobi",
        (Fraction(3), Fraction(1, 4)),
        (("a", Fraction(1), 16), ("b", Fraction(-5, 2), 21)),
        1,
        27,
    )


def test_evaluate_exact():
    assert evaluate("rising(1/2, 3)") == "15/8"
    assert evaluate("falling(5, 2)") == "20"
    assert evaluate("qbinom(4, 2, 2)") == "35"
    assert evaluate("qpoch(1/2, 1/3, 2)") == "5/12"
    assert evaluate("jacobi(1, 1/4; a=1, b=2)") == "7/8"
    assert evaluate("stirling1(4, 2)") == "11"
    assert evaluate("galois(2, 1/3)") == "10/3"
    assert evaluate("chebU(2, 1/2)") == "0"


def test_evaluate_numeric():
    assert evaluate("qpochinf(1/2, 1/2)").startswith("0.28878809508660242")


def test_parse_error_position():
    with pytest.raises(ExpressionError) as error:
        evaluate("rising(1/2,)")
    assert str(error.value) == "parse error at position 12: expected a number"
    assert error.value.position == 12


def test_zero_denominator():
    with pytest.raises(ExpressionError, match="zero denominator"):
        evaluate("rising(1/0, 2)")


def test_unknown_function():
    with pytest.raises(ExpressionError, match="unknown function gamma: known functions: rising, falling"):
        evaluate("gamma(2)")


def test_arguments_are_checked():
    with pytest.raises(ExpressionError, match="argument n must be an integer"):
        evaluate("rising(1, 1/2)")
    with pytest.raises(ExpressionError, match="argument x given twice"):
        evaluate("rising(1, 2; x=3)")
    with pytest.raises(ExpressionError, match="unknown argument z at position 14"):
        evaluate("rising(1, 2; z=3)")
    with pytest.raises(ExpressionError, match="missing argument n"):
        evaluate("rising(1)")
    with pytest.raises(ExpressionError, match="rising takes 2 arguments"):
        evaluate("rising(1, 2, 3)")


def test_trailing_input():
    with pytest.raises(ExpressionError, match="expected the end of the expression"):
        parse("rising(1, 2) 3")
