"""Reading polynomials written as `a^2 + a*b - 3/2*b^2`."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from sullivan_kit.algebra.generators import FreeAlgebra
from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.errors import ModelParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+(?:\s*/\s*\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<op>[-+*^]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            rest = text[position:]
            if rest.strip() == "":
                break
            offset = len(rest) - len(rest.lstrip())
            raise ModelParseError(
                f"Unexpected character {rest.lstrip()[0]!r}",
                column=position + offset + 1,
            )
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind) + 1))
        position = match.end()
    return tokens


class _Parser:
    def __init__(self, algebra: FreeAlgebra, text: str) -> None:
        self.algebra = algebra
        self.text = text
        self.tokens = tokenize(text)
        self.position = 0

    def peek(self) -> Token | None:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return None

    def advance(self) -> Token:
        token = self.peek()
        if token is None:
            raise ModelParseError("Unexpected end of input", column=len(self.text) + 1)
        self.position += 1
        return token

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ModelParseError("Empty polynomial", column=1)
        result = self.algebra.zero()
        sign = 1
        first = True
        while True:
            token = self.peek()
            if token is not None and token.kind == "op" and token.text in "+-":
                self.advance()
                sign = -1 if token.text == "-" else 1
            elif not first:
                if token is None:
                    break
                raise ModelParseError(
                    f"Expected '+' or '-' before {token.text!r}", column=token.column
                )
            result = result + self.term() * sign
            first = False
            sign = 1
            if self.peek() is None:
                break
        return result

    def term(self) -> Polynomial:
        product = self.factor()
        while (token := self.peek()) is not None and token.text == "*":
            self.advance()
            product = product * self.factor()
        return product

    def factor(self) -> Polynomial:
        token = self.advance()
        if token.kind == "number":
            numerator, _, denominator = token.text.replace(" ", "").partition("/")
            if denominator and int(denominator) == 0:
                raise ModelParseError("Division by zero", column=token.column)
            value = Fraction(int(numerator), int(denominator or 1))
            return Polynomial.constant(self.algebra, value)
        if token.kind == "name":
            if token.text not in self.algebra:
                raise ModelParseError(
                    f"Unknown generator {token.text!r}", column=token.column
                )
            base = self.algebra.generator(token.text)
            exponent = 1
            if (caret := self.peek()) is not None and caret.text == "^":
                self.advance()
                power = self.advance()
                if power.kind != "number" or "/" in power.text:
                    raise ModelParseError(
                        "Exponent must be a non-negative integer", column=power.column
                    )
                exponent = int(power.text)
            return base**exponent
        raise ModelParseError(f"Unexpected {token.text!r}", column=token.column)


def parse_polynomial(algebra: FreeAlgebra, text: str) -> Polynomial:
    """Parse `text` as an element of `algebra`.

    Errors carry the 1-based column of the offending token.
    """
    return _Parser(algebra, text).parse()
