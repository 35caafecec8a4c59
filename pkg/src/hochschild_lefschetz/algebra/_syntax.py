# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

from __future__ import annotations

import re
from fractions import Fraction

import attrs

from hochschild_lefschetz.algebra.weyl import MonKey, WeylOp
from hochschild_lefschetz.exceptions import OperatorSyntaxError

DERIVATIVE_NAME = "d"

_TOKEN = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<matrix>E\[\s*(?P<row>\d+)\s*,\s*(?P<col>\d+)\s*\])"
    r"|(?P<number>\d+)"
    r"|(?P<name>[xyzwd])(?P<index>\d*)"
    r"|(?P<symbol>[-+*/^()])"
)


@attrs.frozen
class _Token:
    kind: str
    text: str
    position: int
    row: int = 0
    col: int = 0
    index: int = 0


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    position = 0

    while position < len(text):
        match = _TOKEN.match(text, position)

        if match is None:
            raise OperatorSyntaxError(
                f"Unexpected character {text[position]!r}", text, position
            )

        if match.group("matrix"):
            tokens.append(
                _Token(
                    "matrix",
                    match.group(0),
                    position,
                    row=int(match.group("row")),
                    col=int(match.group("col")),
                )
            )
        elif match.group("name"):
            index = match.group("index")
            tokens.append(
                _Token(
                    "name",
                    match.group("name"),
                    position,
                    index=int(index) if index else 0,
                )
            )
        elif match.group("number"):
            tokens.append(_Token("number", match.group(0), position))
        elif match.group("symbol"):
            tokens.append(_Token("symbol", match.group(0), position))

        position = match.end()

    return tokens


class _OperatorParser:
    def __init__(self, text: str, n: int, r: int, *, laurent: bool) -> None:
        self.text = text
        self.n = n
        self.r = r
        self.laurent = laurent
        self.tokens = _tokenize(text)
        self.cursor = 0

    def error(self, message: str) -> OperatorSyntaxError:
        position = (
            self.tokens[self.cursor].position
            if self.cursor < len(self.tokens)
            else len(self.text)
        )

        return OperatorSyntaxError(message, self.text, position)

    def peek(self) -> _Token | None:
        return self.tokens[self.cursor] if self.cursor < len(self.tokens) else None

    def accept(self, symbol: str) -> bool:
        token = self.peek()

        if token is not None and token.kind == "symbol" and token.text == symbol:
            self.cursor += 1
            return True

        return False

    def parse(self) -> WeylOp:
        if not self.tokens:
            raise self.error("Empty operator")

        result = self.expression()

        if self.peek() is not None:
            raise self.error("Unexpected token")

        return result

    def expression(self) -> WeylOp:
        negative = False

        if self.accept("-"):
            negative = True
        else:
            self.accept("+")

        result = self.term()

        if negative:
            result = -result

        while True:
            if self.accept("+"):
                result += self.term()
            elif self.accept("-"):
                result -= self.term()
            else:
                return result

    def starts_factor(self) -> bool:
        token = self.peek()

        if token is None:
            return False

        return token.kind != "symbol" or token.text == "("

    def term(self) -> WeylOp:
        result = self.factor()

        while True:
            if self.accept("*"):
                result *= self.factor()
            elif self.starts_factor():
                result *= self.factor()
            else:
                return result

    def exponent(self) -> int:
        sign = -1 if self.accept("-") else 1
        token = self.peek()

        if token is None or token.kind != "number":
            raise self.error("Expected an integer exponent")

        self.cursor += 1

        return sign * int(token.text)

    def factor(self) -> WeylOp:
        start = self.cursor
        base = self.atom()

        if not self.accept("^"):
            return base

        power = self.exponent()

        if power >= 0:
            return base**power

        inverse = self.invert(base, power)

        if inverse is None:
            self.cursor = start
            raise self.error("Only powers of a single Laurent variable have inverses")

        return inverse

    def invert(self, base: WeylOp, power: int) -> WeylOp | None:
        if not self.laurent or not base.terms:
            return None

        alpha = next(iter(base.terms)).alpha

        if sum(1 for a in alpha if a) != 1:
            return None

        zeros = (0,) * self.n
        pure = WeylOp(
            self.n,
            self.r,
            self.laurent,
            {MonKey(alpha, zeros, i, i): Fraction(1) for i in range(self.r)},
        )

        if base != pure:
            return None

        return WeylOp(
            self.n,
            self.r,
            self.laurent,
            {
                MonKey(tuple(a * power for a in alpha), zeros, i, i): Fraction(1)
                for i in range(self.r)
            },
        )

    def index(self, token: _Token) -> int:
        if token.index == 0 and self.n == 1:
            return 1

        if not 1 <= token.index <= self.n:
            raise OperatorSyntaxError(
                f"{token.text}{token.index or ''} is not one of {self.n} variables",
                self.text,
                token.position,
            )

        return token.index

    def atom(self) -> WeylOp:
        token = self.peek()

        if token is None:
            raise self.error("Unexpected end of operator")

        if token.kind == "symbol":
            if token.text != "(":
                raise self.error(f"Unexpected {token.text!r}")

            self.cursor += 1
            result = self.expression()

            if not self.accept(")"):
                raise self.error("Expected ')'")

            return result

        self.cursor += 1

        if token.kind == "number":
            value = Fraction(int(token.text))

            if self.accept("/"):
                denominator = self.peek()

                if denominator is None or denominator.kind != "number":
                    raise self.error("Expected a denominator")

                self.cursor += 1

                if int(denominator.text) == 0:
                    raise OperatorSyntaxError(
                        "Division by zero", self.text, denominator.position
                    )

                value /= int(denominator.text)

            return WeylOp.scalar(value, self.n, self.r, laurent=self.laurent)

        if token.kind == "matrix":
            if not (1 <= token.row <= self.r and 1 <= token.col <= self.r):
                raise OperatorSyntaxError(
                    f"{token.text} is not a unit of {self.r} x {self.r} matrices",
                    self.text,
                    token.position,
                )

            return WeylOp.matrix_unit(
                token.row, token.col, self.n, self.r, laurent=self.laurent
            )

        if token.text == DERIVATIVE_NAME:
            return WeylOp.derivative(
                self.index(token), self.n, r=self.r, laurent=self.laurent
            )

        return WeylOp.variable(
            self.index(token), self.n, r=self.r, laurent=self.laurent
        )


def parse_operator(
    text: str, n: int, r: int = 1, *, laurent: bool = False
) -> WeylOp:
    """Parse the textual form of an operator.

    Variables are written `y1, ..., yn` (or `x`, `z`, `w`), derivatives `d1, ..., dn`
    and matrix units `E[i,j]`. The index may be left out when there is one variable.
    Products are written with `*` or by juxtaposition and powers with `^`.

    Arguments:
        text: The operator, for example `y1^2*d1 - 3/2*E[1,2]*d2`.
        n: The number of variables.
        r: The matrix size.
        laurent: Whether negative powers of variables are allowed.

    Raises:
        OperatorSyntaxError: The text is not a well formed operator.

    Returns:
        The parsed operator.
    """
    return _OperatorParser(text, n, r, laurent=laurent).parse()


def _format_power(name: str, power: int) -> str:
    return name if power == 1 else f"{name}^{power}"


def format_monomial(
    key: MonKey, r: int, variable: str, derivative: str, *, indexed: bool
) -> str:
    factors: list[str] = []

    if r > 1:
        factors.append(f"E[{key.row + 1},{key.col + 1}]")

    for prefix, exponents in ((variable, key.alpha), (derivative, key.beta)):
        for k, power in enumerate(exponents, start=1):
            if power:
                name = f"{prefix}{k}" if indexed else prefix
                factors.append(_format_power(name, power))

    return "*".join(factors)


def format_operator(
    op: WeylOp,
    variable: str = "y",
    derivative: str = "d",
    *,
    indexed: bool | None = None,
) -> str:
    """Return the canonical textual form of an operator.

    Monomials are sorted, unit coefficients are omitted and the zero operator is `0`.
    The result parses back to the same operator with `parse_operator`.
    """
    if not op.terms:
        return "0"

    if indexed is None:
        indexed = op.n > 1

    parts: list[str] = []

    for key in sorted(op.terms):
        value = op.terms[key]
        monomial = format_monomial(
            key, op.r, variable, derivative, indexed=indexed
        )
        magnitude = abs(value)

        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"

        if not parts:
            parts.append(f"-{body}" if value < 0 else body)
        else:
            parts.append(f" - {body}" if value < 0 else f" + {body}")

    return "".join(parts)
