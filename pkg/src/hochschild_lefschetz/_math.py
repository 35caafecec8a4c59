# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Functions to deal with combinatorial sign and counting operations."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations
from math import factorial


def permutation_sign(permutation: Sequence[int]) -> int:
    """Return the sign of a permutation of `0, ..., len(permutation) - 1`.

    Raises:
        ValueError: The sequence is not a permutation.
    """
    if sorted(permutation) != list(range(len(permutation))):
        raise ValueError(f"{tuple(permutation)} is not a permutation.")

    sign = 1
    seen = [False] * len(permutation)

    for start in range(len(permutation)):
        if seen[start]:
            continue

        length = 0
        current = start

        while not seen[current]:
            seen[current] = True
            current = permutation[current]
            length += 1

        if length % 2 == 0:
            sign = -sign

    return sign


def sort_with_sign(items: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort distinct items and return the sign of the sorting permutation.

    A sequence with a repeated item has sign 0.
    """
    if len(set(items)) != len(items):
        return tuple(sorted(items)), 0

    order = sorted(range(len(items)), key=items.__getitem__)

    return tuple(items[i] for i in order), permutation_sign(order)


def falling_factorial(x: int, k: int) -> int:
    """Return `x (x - 1) ... (x - k + 1)`, which is also defined for negative `x`."""
    result = 1

    for i in range(k):
        result *= x - i

    return result


def simplex_volume(dimension: int) -> float:
    """Return the volume `1 / p!` of the standard `p`-simplex."""
    return 1 / factorial(dimension)


def shuffles(p: int, q: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield the `(p, q)`-shuffles with their signs.

    A shuffle is given by the positions in `1, ..., p + q` taken by the first word. The
    sign is the sign of the permutation that interleaves the two words.
    """
    slots = range(1, p + q + 1)

    for positions in combinations(slots, p):
        # Each letter of the second word jumps over the letters of the first word
        # placed after it.
        inversions = sum(
            sum(1 for position in positions if position > other)
            for other in slots
            if other not in positions
        )

        yield positions, -1 if inversions % 2 else 1
