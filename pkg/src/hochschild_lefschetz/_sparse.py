# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

from __future__ import annotations

from collections.abc import Hashable, Mapping
from fractions import Fraction


def add_term[K: Hashable](
    vector: dict[K, Fraction], key: K, value: Fraction | int
) -> None:
    if not value:
        return

    total = vector.get(key, 0) + value

    if total:
        vector[key] = Fraction(total)
    else:
        vector.pop(key, None)


def add_scaled[K: Hashable](
    vector: dict[K, Fraction],
    other: Mapping[K, Fraction],
    scale: Fraction | int = 1,
) -> None:
    if not scale:
        return

    for key, value in other.items():
        add_term(vector, key, value * scale)


def scaled[K: Hashable](
    vector: Mapping[K, Fraction], scale: Fraction | int
) -> dict[K, Fraction]:
    if not scale:
        return {}

    return {key: value * scale for key, value in vector.items()}


def to_fraction(value: Fraction | int | str) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)
