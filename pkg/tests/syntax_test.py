# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Tests for the textual form of operators and chains."""

import pytest

from hochschild_lefschetz.algebra._syntax import format_operator, parse_operator
from hochschild_lefschetz.algebra.weyl import WeylOp
from hochschild_lefschetz.exceptions import (
    DimensionMismatchError,
    OperatorSyntaxError,
)
from hochschild_lefschetz.homology._syntax import format_chain, parse_chain
from hochschild_lefschetz.homology.hochschild import Chain, generator_c2n


@pytest.mark.parametrize(
    ("text", "n", "r", "laurent", "canonical"),
    [
        ("3*y^2*d - d + 1/2", 1, 1, False, "1/2 - d + 3*y^2*d"),
        ("2y d", 1, 1, False, "2*y*d"),
        ("z*d - x*d", 1, 1, False, "0"),
        ("y1*d2 + d2*y1", 2, 1, False, "2*y1*d2"),
        ("-(y - d)^2", 1, 1, False, "1 - d^2 + 2*y*d - y^2"),
        ("E[1,2]*d - 2*E[2,2]", 1, 2, False, "-2*E[2,2] + E[1,2]*d"),
        ("y^-2*d + y^-1", 1, 1, True, "y^-2*d + y^-1"),
    ],
)
def test_operator_syntax(
    text: str, n: int, r: int, laurent: bool, canonical: str
) -> None:
    """Test parsing operators and printing their canonical form."""
    op = parse_operator(text, n, r, laurent=laurent)

    assert format_operator(op) == canonical
    assert parse_operator(canonical, n, r, laurent=laurent) == op


def test_operator_builders() -> None:
    """Test that the syntax agrees with the operator constructors."""
    assert parse_operator("y2", 2) == WeylOp.variable(2, 2)
    assert parse_operator("d1^3", 2) == WeylOp.derivative(1, 2, 3)
    assert parse_operator("E[2,1]", 1, 2) == WeylOp.matrix_unit(2, 1, 1, 2)
    assert parse_operator("y1*d1 + y2*d2", 2) == WeylOp.euler(2)
    assert format_operator(WeylOp.euler(1), "z") == "z*d"


@pytest.mark.parametrize(
    ("text", "n", "r", "laurent", "message", "position"),
    [
        ("", 1, 1, False, "Empty operator", 0),
        ("y + $", 1, 1, False, "Unexpected character", 4),
        ("y + * d", 1, 1, False, "Unexpected", 4),
        ("y3", 2, 1, False, "not one of 2 variables", 0),
        ("y", 2, 1, False, "not one of 2 variables", 0),
        ("y^-1", 1, 1, False, "Only powers of a single Laurent variable", 0),
        ("(y + d)^-1", 1, 1, True, "Only powers of a single Laurent variable", 0),
        ("1/0", 1, 1, False, "Division by zero", 2),
        ("E[3,1]", 1, 2, False, "is not a unit of 2 x 2 matrices", 0),
        ("(y + d", 1, 1, False, r"Expected '\)'", 6),
        ("y)", 1, 1, False, "Unexpected token", 1),
        ("y^", 1, 1, False, "Expected an integer exponent", 2),
    ],
)
def test_operator_syntax_errors(
    text: str, n: int, r: int, laurent: bool, message: str, position: int
) -> None:
    """Test that malformed operators report where they went wrong."""
    with pytest.raises(OperatorSyntaxError, match=message) as exc_info:
        parse_operator(text, n, r, laurent=laurent)

    assert exc_info.value.position == position
    assert exc_info.value.text == text


def test_chain_syntax() -> None:
    """Test parsing chains with both tensor signs."""
    generator = generator_c2n(1)

    assert parse_chain("1⊗d⊗y - 1⊗y⊗d", 1) == generator
    assert parse_chain("1(x)d(x)y - 1(x)y(x)d", 1) == generator
    assert format_chain(generator) == "1⊗d⊗y - 1⊗y⊗d"
    assert str(generator) == "1⊗d⊗y - 1⊗y⊗d"
    assert format_chain(Chain.zero(1, 2)) == "0"


@pytest.mark.parametrize(
    ("text", "n", "r", "laurent"),
    [
        ("2*y⊗d - 1⊗y^2 + 1/3*d^2⊗y", 1, 1, False),
        ("y^-1⊗y - 3*y^-2*d⊗y^2", 1, 1, True),
        ("E[1,2]⊗E[2,1]*d - E[1,1]⊗y", 1, 2, False),
        ("y1⊗d2⊗y2*d1", 2, 1, False),
        ("(y + d)⊗(y - d)", 1, 1, False),
    ],
)
def test_chain_round_trip(text: str, n: int, r: int, laurent: bool) -> None:
    """Test that the canonical form of a chain parses back to the same chain."""
    chain = parse_chain(text, n, r, laurent=laurent)

    assert parse_chain(format_chain(chain), n, r, laurent=laurent) == chain


def test_chain_syntax_errors() -> None:
    """Test rejecting malformed chains."""
    with pytest.raises(OperatorSyntaxError, match="Empty operator") as exc_info:
        parse_chain("1⊗y⊗", 1)

    assert exc_info.value.text == "1⊗y⊗"

    with pytest.raises(OperatorSyntaxError, match="Expected a term"):
        parse_chain("1⊗y -", 1)

    with pytest.raises(DimensionMismatchError):
        parse_chain("1⊗y + d", 1)
