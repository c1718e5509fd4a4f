from fractions import Fraction

import pytest

from sullivan_kit.algebra.generators import FreeAlgebra
from sullivan_kit.errors import ModelParseError


@pytest.fixture
def algebra() -> FreeAlgebra:
    return FreeAlgebra.of([("a", 2), ("b", 2), ("x'", 3)])


def test_rational_coefficients(algebra):
    p = algebra.parse("a^2 + a*b - 3/2*b^2")
    assert p.coefficient((0, 2, 0)) == Fraction(-3, 2)
    assert p.coefficient((1, 1, 0)) == 1


def test_primed_names_and_leading_sign(algebra):
    p = algebra.parse("-x'*a")
    assert p == -(algebra.generator("a") * algebra.generator("x'"))


def test_constants_and_zero_exponent(algebra):
    assert algebra.parse("2") == 2
    assert algebra.parse("a^0") == 1
    assert algebra.parse("a - a") == 0


@pytest.mark.parametrize(
    "text, column, message",
    [
        ("a + q", 5, "Unknown generator 'q'"),
        ("", 1, "Empty polynomial"),
        ("a b", 3, "Expected '+' or '-'"),
        ("a + #", 5, "Unexpected character"),
        ("a^b", 3, "Exponent must be"),
        ("1/0*a", 1, "Division by zero"),
    ],
)
def test_errors_carry_columns(algebra, text, column, message):
    with pytest.raises(ModelParseError) as error:
        algebra.parse(text)
    assert error.value.column == column
    assert message in error.value.message


def test_trailing_operator(algebra):
    with pytest.raises(ModelParseError) as error:
        algebra.parse("a +")
    assert error.value.message == "Unexpected end of input"
    assert error.value.column == 4
