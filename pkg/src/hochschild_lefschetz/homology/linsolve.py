# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Exact sparse linear algebra over the rationals.

Columns are added one at a time and reduced against the pivots found so far with
fraction-free integer elimination. Every pivot remembers which combination of the
original columns it is, so membership in the column span comes with a solution.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Hashable, Iterable, Mapping
from fractions import Fraction
from typing import Any

import attrs

logger = logging.getLogger(__name__)


@attrs.frozen
class SolverStats:
    """The size of a linear system after elimination."""

    rows: int
    """The number of distinct row keys seen in the columns."""
    columns: int
    nnz: int
    """The number of non-zero entries of the columns."""
    rank: int

    def to_report(self) -> dict[str, int]:
        return {
            "rows": self.rows,
            "columns": self.columns,
            "nnz": self.nnz,
            "rank": self.rank,
        }


@attrs.frozen
class Reduction[R: Hashable, C: Hashable]:
    """The split `vector = sum solution[c] * column_c + residual`.

    The residual only has entries on non-pivot rows, which makes it unique and linear in
    the reduced vector.
    """

    residual: dict[R, Fraction]
    solution: dict[C, Fraction]

    @property
    def in_span(self) -> bool:
        return not self.residual


@attrs.frozen
class _Pivot[R: Hashable, C: Hashable]:
    vector: dict[R, int]
    combination: dict[C, Fraction]


def _integer_vector[R: Hashable](
    vector: Mapping[R, Fraction],
) -> tuple[dict[R, int], int]:
    scale = math.lcm(*(value.denominator for value in vector.values())) if vector else 1

    return {
        key: int(value * scale) for key, value in vector.items() if value
    }, scale


def _content(vector: Mapping[Any, int]) -> int:
    return math.gcd(*vector.values()) if vector else 1


@attrs.define
class SparseEliminator[R: Hashable, C: Hashable]:
    """An incremental echelon basis of the span of sparse columns.

    Pivots are chosen as the smallest row key of a reduced column, so the result only
    depends on the order in which columns are added.
    """

    _pivots: dict[R, _Pivot[R, C]] = attrs.field(factory=dict, init=False)
    _rows: set[R] = attrs.field(factory=set, init=False)
    _columns: int = attrs.field(default=0, init=False)
    _nnz: int = attrs.field(default=0, init=False)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def stats(self) -> SolverStats:
        return SolverStats(len(self._rows), self._columns, self._nnz, self.rank)

    def _reduce(
        self, vector: Mapping[R, Fraction]
    ) -> tuple[dict[R, int], dict[C, Fraction], Fraction]:
        """Return `(v, x, s)` with `v = s * vector - sum x_c column_c` fully reduced."""
        current, denominator = _integer_vector(vector)
        scale = Fraction(denominator)
        combination: dict[C, Fraction] = {}

        # Later pivots vanish on earlier pivot rows, so one pass in insertion order
        # clears every pivot row.
        for row, pivot in self._pivots.items():
            entry = current.get(row)

            if not entry:
                continue

            leading = pivot.vector[row]
            updated = {key: leading * value for key, value in current.items()}

            for key, value in pivot.vector.items():
                total = updated.get(key, 0) - entry * value

                if total:
                    updated[key] = total
                else:
                    updated.pop(key, None)

            for key in combination:
                combination[key] *= leading

            for key, value in pivot.combination.items():
                combination[key] = combination.get(key, Fraction(0)) + entry * value

            scale *= leading
            divisor = _content(updated)

            if divisor > 1:
                updated = {key: value // divisor for key, value in updated.items()}
                combination = {
                    key: value / divisor for key, value in combination.items()
                }
                scale /= divisor

            current = updated

        return current, combination, scale

    def reduce(self, vector: Mapping[R, Fraction]) -> Reduction[R, C]:
        """Split a vector into a combination of the columns and a canonical residual."""
        current, combination, scale = self._reduce(vector)

        return Reduction(
            {key: value / scale for key, value in current.items()},
            {key: value / scale for key, value in combination.items() if value},
        )

    def add_column(self, key: C, vector: Mapping[R, Fraction]) -> bool:
        """Add a column and return whether it increased the rank."""
        self._columns += 1
        self._nnz += sum(1 for value in vector.values() if value)
        self._rows.update(row for row, value in vector.items() if value)

        current, combination, scale = self._reduce(vector)

        if not current:
            return False

        row = min(current)  # pyright: ignore[reportArgumentType, reportCallIssue]
        pivot_combination = {column: -value for column, value in combination.items()}
        pivot_combination[key] = pivot_combination.get(key, Fraction(0)) + scale
        self._pivots[row] = _Pivot(current, pivot_combination)

        return True

    def add_columns(self, columns: Iterable[tuple[C, Mapping[R, Fraction]]]) -> None:
        for key, vector in columns:
            self.add_column(key, vector)

        logger.debug("Eliminated %s", self.stats())


def solve[R: Hashable, C: Hashable](
    columns: Iterable[tuple[C, Mapping[R, Fraction]]],
    target: Mapping[R, Fraction],
) -> tuple[dict[C, Fraction] | None, SolverStats]:
    """Solve `sum x_c column_c = target` exactly.

    Returns:
        The canonical solution, or `None` if the target is not in the span, together
        with the statistics of the system.
    """
    eliminator: SparseEliminator[R, C] = SparseEliminator()
    eliminator.add_columns(columns)
    reduction = eliminator.reduce(target)

    return (
        reduction.solution if reduction.in_span else None
    ), eliminator.stats()
