# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

from __future__ import annotations

from hochschild_lefschetz.algebra._syntax import format_monomial, parse_operator
from hochschild_lefschetz.exceptions import OperatorSyntaxError
from hochschild_lefschetz.homology.hochschild import Chain

TENSOR = "⊗"
ASCII_TENSOR = "(x)"


def _split_terms(text: str) -> list[tuple[int, str, int]]:
    """Split at top level signs, returning the sign, the term and its position."""
    terms: list[tuple[int, str, int]] = []
    depth = 0
    sign = 1
    start = 0
    previous = ""

    for position, character in enumerate(text):
        if character in "([":
            depth += 1
        elif character in ")]":
            depth -= 1
        elif (
            character in "+-"
            and depth == 0
            and previous not in {"^", "*", "/", TENSOR}
        ):
            if text[start:position].strip():
                terms.append((sign, text[start:position], start))
            elif terms or position != 0 and text[:position].strip():
                raise OperatorSyntaxError("Unexpected sign", text, position)

            sign = -1 if character == "-" else 1
            start = position + 1

        if not character.isspace():
            previous = character

    if not text[start:].strip():
        raise OperatorSyntaxError("Expected a term", text, len(text))

    terms.append((sign, text[start:], start))

    return terms


def parse_chain(text: str, n: int, r: int = 1, *, laurent: bool = False) -> Chain:
    """Parse a chain such as `1⊗d1⊗y1 - 1⊗y1⊗d1`.

    Every slot is an operator in the syntax of `parse_operator` and is expanded
    multilinearly. `(x)` may be written instead of `⊗`.

    Raises:
        OperatorSyntaxError: The text is not a well formed chain.
        DimensionMismatchError: The words do not all have the same length.
    """
    text = text.replace(ASCII_TENSOR, TENSOR)
    words: list[Chain] = []

    for sign, term, offset in _split_terms(text):
        slots = term.split(TENSOR)

        try:
            ops = [parse_operator(slot, n, r, laurent=laurent) for slot in slots]
        except OperatorSyntaxError as e:
            raise OperatorSyntaxError(e.message, text, offset + e.position) from e

        words.append(Chain.from_ops(ops, sign))

    chain = words[0]

    for word in words[1:]:
        chain += word

    return chain


def format_chain(
    chain: Chain,
    variable: str = "y",
    derivative: str = "d",
    *,
    indexed: bool | None = None,
) -> str:
    """Return the canonical textual form of a chain, which `parse_chain` reads back."""
    if not chain.terms:
        return "0"

    if indexed is None:
        indexed = chain.n > 1

    parts: list[str] = []

    for word in sorted(chain.terms):
        value = chain.terms[word]
        body = TENSOR.join(
            format_monomial(key, chain.r, variable, derivative, indexed=indexed) or "1"
            for key in word
        )
        magnitude = abs(value)

        if magnitude != 1:
            body = f"{magnitude}*{body}"

        if not parts:
            parts.append(f"-{body}" if value < 0 else body)
        else:
            parts.append(f" - {body}" if value < 0 else f" + {body}")

    return "".join(parts)
