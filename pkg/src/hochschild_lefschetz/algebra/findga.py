# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Finite dimensional differential graded algebras given by structure tables.

A table lists the labelled basis with degrees, the non-zero products of basis elements
and the non-zero differentials. The JSON form of a table is:

```
{
    "basis": {"1": 0, "e11": 0, "t1": 1},
    "unit": "1",
    "products": {"e11": {"e11": {"e11": 1}, "t1": {"t11": 1}}},
    "differential": {"e11": {"t12": -1}}
}
```

Products with the unit are filled in automatically when the unit is a basis element.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Mapping
from fractions import Fraction
from typing import Any, TextIO

import attrs
from bidict import OrderedBidict

from hochschild_lefschetz._sparse import add_term, to_fraction
from hochschild_lefschetz.algebra.base import GradedAlgebra, check_axioms
from hochschild_lefschetz.algebra.grassmann import merge_sign
from hochschild_lefschetz.exceptions import DomainError, StructureError

type Table = Mapping[str, Mapping[str, Mapping[str, Fraction]]]


def _check_label(label: str, labels: Mapping[str, int]) -> None:
    if label not in labels:
        raise StructureError(f"{label!r} is not a basis element.")


def _vector(raw: Mapping[str, Any], labels: Mapping[str, int]) -> dict[str, Fraction]:
    vector: dict[str, Fraction] = {}

    for label, value in raw.items():
        _check_label(label, labels)
        add_term(vector, label, to_fraction(value))

    return vector


@attrs.frozen
class FinDGA(GradedAlgebra[str]):
    """A finite dimensional differential graded algebra over the rationals.

    The axioms are checked when the algebra is created.
    """

    labels: OrderedBidict[str, int]
    """The labels of the basis elements and their positions."""
    degrees: Mapping[str, int]
    """The degree of every basis element."""
    products: Table
    """The non-zero products `products[left][right]` of basis elements."""
    differentials: Mapping[str, Mapping[str, Fraction]]
    """The non-zero differentials of basis elements."""
    unit_element: Mapping[str, Fraction]
    """The unit as a linear combination of basis elements."""

    def __attrs_post_init__(self) -> None:
        problems = check_axioms(self, list(self.labels))

        if problems:
            raise StructureError(" ".join(problems))

    @classmethod
    def from_tables(
        cls,
        degrees: Mapping[str, int],
        products: Mapping[str, Mapping[str, Mapping[str, Any]]],
        differential: Mapping[str, Mapping[str, Any]],
        unit: str | Mapping[str, Any],
    ) -> FinDGA:
        """Create an algebra from plain tables, filling in products with the unit.

        Raises:
            StructureError: The tables reference unknown labels or violate an axiom.
        """
        labels: OrderedBidict[str, int] = OrderedBidict(
            (label, index) for index, label in enumerate(degrees)
        )

        unit_element = _vector({unit: 1} if isinstance(unit, str) else unit, labels)

        table: dict[str, dict[str, dict[str, Fraction]]] = {}

        for left, row in products.items():
            _check_label(left, labels)

            for right, product in row.items():
                _check_label(right, labels)
                vector = _vector(product, labels)

                if vector:
                    table.setdefault(left, {})[right] = vector

        if isinstance(unit, str):
            for label in labels:
                table.setdefault(unit, {})[label] = {label: Fraction(1)}
                table.setdefault(label, {})[unit] = {label: Fraction(1)}

        differentials = {
            label: vector
            for label, raw in differential.items()
            if (vector := _vector(raw, labels))
        }

        for label in differential:
            _check_label(label, labels)

        return cls(labels, dict(degrees), table, differentials, unit_element)

    @classmethod
    def load(cls, fp: TextIO) -> FinDGA:
        """Load an algebra from a JSON file-like object.

        Raises:
            StructureError: The file is not a valid structure table.
        """
        try:
            data = json.load(fp)
        except json.JSONDecodeError as e:
            raise StructureError(f"The algebra table is not valid JSON: {e}") from e

        missing = {"basis", "unit"} - set(data)

        if missing:
            raise StructureError(f"The algebra table is missing {sorted(missing)}.")

        return cls.from_tables(
            data["basis"],
            data.get("products", {}),
            data.get("differential", {}),
            data["unit"],
        )

    @classmethod
    def exterior_matrices(
        cls,
        generators: int,
        size: int,
        kappa: Mapping[tuple[tuple[int, ...], int, int], Fraction | int],
    ) -> FinDGA:
        """Build `Lambda[theta_1..theta_g] (x) T_size` with differential `[kappa, -]`.

        `T_size` are the upper triangular matrices. Basis labels look like `t12:e11`
        for `theta_1 theta_2 (x) E[1,1]`, and `e11` when there is no Grassmann part.

        Arguments:
            generators: The number of Grassmann generators.
            size: The matrix size.
            kappa:
                The odd inner element, mapping `(generator tuple, row, column)` with one
                based indices to coefficients.

        Raises:
            StructureError: `kappa` is not odd or does not square to zero.
        """
        keys = [
            (mask, row, col)
            for mask in range(1 << generators)
            for row in range(size)
            for col in range(row, size)
        ]

        def label(key: tuple[int, int, int]) -> str:
            mask, row, col = key
            unit = f"e{row + 1}{col + 1}"

            if not mask:
                return unit

            thetas = "".join(str(i + 1) for i in range(generators) if mask >> i & 1)

            return f"t{thetas}:{unit}"

        def multiply(
            left: tuple[int, int, int], right: tuple[int, int, int]
        ) -> tuple[tuple[int, int, int], int] | None:
            sign = merge_sign(left[0], right[0])

            if not sign or left[2] != right[1]:
                return None

            return (left[0] | right[0], left[1], right[2]), sign

        products: dict[str, dict[str, dict[str, Fraction]]] = {}

        for left, right in itertools.product(keys, repeat=2):
            if (result := multiply(left, right)) is not None:
                products.setdefault(label(left), {})[label(right)] = {
                    label(result[0]): Fraction(result[1])
                }

        inner: dict[tuple[int, int, int], Fraction] = {}

        for (thetas, row, col), value in kappa.items():
            if len(thetas) != 1 or not 1 <= row <= col <= size:
                raise StructureError(
                    f"{(thetas, row, col)} is not an odd basis element."
                )

            odd = (1 << (thetas[0] - 1), row - 1, col - 1)
            add_term(inner, odd, to_fraction(value))

        differential: dict[str, dict[str, Fraction]] = {}

        for key in keys:
            image: dict[str, Fraction] = {}
            sign = (-1) ** key[0].bit_count()

            for element, value in inner.items():
                if (result := multiply(element, key)) is not None:
                    add_term(image, label(result[0]), value * result[1])

                if (result := multiply(key, element)) is not None:
                    add_term(image, label(result[0]), -sign * value * result[1])

            if image:
                differential[label(key)] = image

        return cls.from_tables(
            {label(key): key[0].bit_count() for key in keys},
            products,
            differential,
            {label((0, i, i)): 1 for i in range(size)},
        )

    def degree(self, key: str) -> int:
        try:
            return self.degrees[key]
        except KeyError as e:
            raise DomainError(f"{key!r} is not a basis element.") from e

    def product(self, left: str, right: str) -> Mapping[str, Fraction]:
        return self.products.get(left, {}).get(right, {})

    def differential(self, key: str) -> Mapping[str, Fraction]:
        return self.differentials.get(key, {})

    def unit(self) -> Mapping[str, Fraction]:
        return self.unit_element

    def element(
        self, coefficients: Mapping[str, Fraction | int]
    ) -> dict[str, Fraction]:
        """Return a linear combination of basis elements given by label."""
        return _vector(coefficients, self.labels)

    def basis_of_degree(self, degree: int) -> list[str]:
        return [label for label in self.labels if self.degrees[label] == degree]

