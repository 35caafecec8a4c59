# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Grassmann extensions of matrix valued Weyl algebras.

The algebra `Lambda[theta_1, ..., theta_m] (x) M_r(D_n)` is graded by the number of
Grassmann generators and carries the inner differential `d = [kappa, -]` of an odd
element `kappa` with `kappa^2 = 0`, by default `kappa = sum_i theta_i d_i`.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction

import attrs

from hochschild_lefschetz._sparse import add_term, to_fraction
from hochschild_lefschetz.algebra.base import GradedAlgebra
from hochschild_lefschetz.algebra.weyl import MonKey, WeylOp, monomial_product
from hochschild_lefschetz.exceptions import DomainError, StructureError

type GrassmannKey = tuple[int, MonKey]
"""A basis element `theta^mask (x) monomial`; bit `i` of the mask is `theta_i+1`."""


def merge_sign(left: int, right: int) -> int:
    """Return the sign of `theta^left * theta^right`, which is 0 if they overlap."""
    if left & right:
        return 0

    inversions = 0
    bit = 0

    while right >> bit:
        if right >> bit & 1:
            inversions += (left >> (bit + 1)).bit_count()

        bit += 1

    return -1 if inversions % 2 else 1


@attrs.frozen
class GrassmannWeyl(GradedAlgebra[GrassmannKey]):
    """The differential graded algebra `Lambda[theta_1..theta_m] (x) M_r(D_n)`."""

    m: int = attrs.field(validator=attrs.validators.ge(0))
    """The number of Grassmann generators."""
    n: int = attrs.field(validator=attrs.validators.ge(1))
    """The number of variables of the Weyl algebra."""
    r: int = attrs.field(default=1, validator=attrs.validators.ge(1))
    """The matrix size."""
    kappa: Mapping[GrassmannKey, Fraction] | None = None
    """The odd element whose graded commutator is the differential. `None` uses
    `sum_i theta_i d_i` over `i <= min(m, n)`."""
    _differentials: dict[GrassmannKey, dict[GrassmannKey, Fraction]] = attrs.field(
        factory=dict[GrassmannKey, dict[GrassmannKey, Fraction]],
        init=False,
        eq=False,
        repr=False,
    )

    def __attrs_post_init__(self) -> None:
        kappa = self.inner_element()

        for mask, key in kappa:
            if mask.bit_count() != 1:
                raise StructureError(
                    "The inner element of the differential is not odd."
                )

            if mask >> self.m or key.n != self.n:
                raise DomainError(f"{(mask, key)} is not an element of {self}.")

        if self.multiply(kappa, kappa):
            raise StructureError(
                "The inner element of the differential does not square to 0."
            )

    def inner_element(self) -> dict[GrassmannKey, Fraction]:
        if self.kappa is not None:
            return {
                key: to_fraction(value) for key, value in self.kappa.items() if value
            }

        terms: dict[GrassmannKey, Fraction] = {}

        for i in range(min(self.m, self.n)):
            beta = tuple(int(k == i) for k in range(self.n))

            for row in range(self.r):
                terms[1 << i, MonKey((0,) * self.n, beta, row, row)] = Fraction(1)

        return terms

    def degree(self, key: GrassmannKey) -> int:
        return key[0].bit_count()

    def product(
        self, left: GrassmannKey, right: GrassmannKey
    ) -> dict[GrassmannKey, Fraction]:
        sign = merge_sign(left[0], right[0])

        if not sign:
            return {}

        mask = left[0] | right[0]
        result: dict[GrassmannKey, Fraction] = {}

        for key, value in monomial_product(left[1], right[1]):
            add_term(result, (mask, key), sign * value)

        return result

    def differential(self, key: GrassmannKey) -> dict[GrassmannKey, Fraction]:
        if key not in self._differentials:
            self._differentials[key] = self.graded_commutator(
                self.inner_element(), {key: Fraction(1)}
            )

        return self._differentials[key]

    def unit(self) -> dict[GrassmannKey, Fraction]:
        return {(0, MonKey.constant(self.n, i, i)): Fraction(1) for i in range(self.r)}

    def element(
        self, components: Mapping[tuple[int, ...], WeylOp]
    ) -> dict[GrassmannKey, Fraction]:
        """Build `sum theta_I (x) op_I` from one based generator tuples `I`.

        Arguments:
            components:
                A mapping from increasing tuples of generator indices, for example
                `(1, 2)` for `theta_1 theta_2`, to operators with coefficients.

        Raises:
            DomainError: An index is out of range or the tuple is not increasing.
        """
        result: dict[GrassmannKey, Fraction] = {}

        for generators, op in components.items():
            if list(generators) != sorted(set(generators)) or any(
                not 1 <= g <= self.m for g in generators
            ):
                raise DomainError(
                    f"{generators} is not an increasing tuple of generators."
                )

            if (op.n, op.r) != (self.n, self.r) or op.laurent:
                raise DomainError(f"{op} is not an operator of {self}.")

            mask = sum(1 << (g - 1) for g in generators)

            for key, value in op.terms.items():
                add_term(result, (mask, key), value)

        return result

    def component(
        self, element: Mapping[GrassmannKey, Fraction], generators: tuple[int, ...]
    ) -> WeylOp:
        """Return the operator coefficient of `theta_I` in an element."""
        mask = sum(1 << (g - 1) for g in generators)

        return WeylOp(
            self.n,
            self.r,
            terms={key: value for (m, key), value in element.items() if m == mask},
        )

