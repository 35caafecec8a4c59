# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""A base class that defines what is required of a differential graded algebra."""

from __future__ import annotations

from abc import abstractmethod
from collections.abc import Hashable, Mapping
from fractions import Fraction
from typing import Protocol

from hochschild_lefschetz._sparse import add_scaled, add_term


class GradedAlgebra[K: Hashable](Protocol):
    """A differential graded algebra with a distinguished basis of homogeneous keys.

    Keys must be hashable and totally ordered so that chains have a canonical order.
    The differential has degree `+1` and satisfies the graded Leibniz rule.
    """

    @abstractmethod
    def degree(self, key: K) -> int:
        """Return the degree of a basis element."""
        raise NotImplementedError

    @abstractmethod
    def product(self, left: K, right: K) -> Mapping[K, Fraction]:
        """Return the product of two basis elements as a linear combination."""
        raise NotImplementedError

    @abstractmethod
    def differential(self, key: K) -> Mapping[K, Fraction]:
        """Return the differential of a basis element as a linear combination."""
        raise NotImplementedError

    @abstractmethod
    def unit(self) -> Mapping[K, Fraction]:
        """Return the unit of the algebra as a linear combination."""
        raise NotImplementedError

    def unit_key(self) -> K | None:
        """Return the unit if it is a single basis element, otherwise `None`."""
        unit = self.unit()

        if len(unit) == 1:
            ((key, value),) = unit.items()

            if value == 1:
                return key

        return None

    def multiply(
        self, left: Mapping[K, Fraction], right: Mapping[K, Fraction]
    ) -> dict[K, Fraction]:
        """Return the product of two linear combinations."""
        result: dict[K, Fraction] = {}

        for left_key, left_value in left.items():
            for right_key, right_value in right.items():
                add_scaled(
                    result,
                    self.product(left_key, right_key),
                    left_value * right_value,
                )

        return result

    def apply_differential(self, element: Mapping[K, Fraction]) -> dict[K, Fraction]:
        """Return the differential of a linear combination."""
        result: dict[K, Fraction] = {}

        for key, value in element.items():
            add_scaled(result, self.differential(key), value)

        return result

    def graded_commutator(
        self, left: Mapping[K, Fraction], right: Mapping[K, Fraction]
    ) -> dict[K, Fraction]:
        """Return `[x, y] = xy - (-1)^(|x||y|) yx` extended bilinearly."""
        result: dict[K, Fraction] = {}

        for left_key, left_value in left.items():
            for right_key, right_value in right.items():
                scale = left_value * right_value
                sign = (-1) ** (self.degree(left_key) * self.degree(right_key))
                add_scaled(result, self.product(left_key, right_key), scale)
                add_scaled(result, self.product(right_key, left_key), -sign * scale)

        return result

    def maurer_cartan_curvature(
        self, omega: Mapping[K, Fraction]
    ) -> dict[K, Fraction]:
        """Return `d(omega) + omega^2`, zero exactly on Maurer-Cartan elements."""
        curvature = self.apply_differential(omega)
        add_scaled(curvature, self.multiply(omega, omega))

        return curvature

    def homogeneous_degree(self, element: Mapping[K, Fraction]) -> int | None:
        """Return the common degree of the keys of an element, or `None` if mixed."""
        degrees = {self.degree(key) for key in element}

        if len(degrees) == 1:
            return degrees.pop()

        return None


def check_axioms[K: Hashable](
    algebra: GradedAlgebra[K], keys: list[K]
) -> list[str]:
    """Check the axioms of a differential graded algebra on the given basis keys.

    Returns:
        A description of every violated axiom, empty if all of them hold.
    """
    problems: list[str] = []
    unit = algebra.unit()

    for key in keys:
        single = {key: Fraction(1)}

        if algebra.multiply(unit, single) != single or algebra.multiply(
            single, unit
        ) != single:
            problems.append(f"The unit does not act trivially on {key!r}.")

        differential = algebra.differential(key)

        for image in differential:
            if algebra.degree(image) != algebra.degree(key) + 1:
                problems.append(f"The differential of {key!r} is not of degree 1.")
                break

        if algebra.apply_differential(differential):
            problems.append(f"The differential squares to a non-zero on {key!r}.")

    for left in keys:
        for right in keys:
            product = algebra.product(left, right)

            for image in product:
                if algebra.degree(image) != algebra.degree(left) + algebra.degree(
                    right
                ):
                    problems.append(f"The product {left!r} * {right!r} is not graded.")
                    break

            leibniz = dict(algebra.apply_differential(product))
            sign = (-1) ** algebra.degree(left)
            add_scaled(
                leibniz,
                algebra.multiply(algebra.differential(left), {right: Fraction(1)}),
                -1,
            )
            add_scaled(
                leibniz,
                algebra.multiply({left: Fraction(1)}, algebra.differential(right)),
                -sign,
            )

            if leibniz:
                problems.append(f"The Leibniz rule fails on {left!r}, {right!r}.")

            for third in keys:
                first = algebra.multiply(product, {third: Fraction(1)})
                second = algebra.multiply(
                    {left: Fraction(1)}, algebra.product(right, third)
                )

                for key, value in second.items():
                    add_term(first, key, -value)

                if first:
                    problems.append(
                        f"The product is not associative on {left!r}, {right!r}, "
                        f"{third!r}."
                    )

    return problems
