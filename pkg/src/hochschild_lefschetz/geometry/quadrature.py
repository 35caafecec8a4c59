# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Quadrature on the standard simplex and integrals of partitions of unity.

Points are given in barycentric coordinates `t_0, ..., t_p` and integrals are taken
with respect to `dt_1 ... dt_p`, so the simplex has volume `1 / p!`.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Iterator
from fractions import Fraction
from functools import lru_cache

import attrs
import numpy as np

from hochschild_lefschetz.exceptions import DomainError
from hochschild_lefschetz.typing import ComplexArray, FloatArray, PartitionKind

DEFAULT_DEGREE = 7
"""The default polynomial degree integrated exactly by a rule."""


@attrs.frozen
class SimplexRule:
    """A quadrature rule on the standard `p`-simplex."""

    nodes: FloatArray = attrs.field(eq=False)
    """The barycentric coordinates of the nodes, one row per node."""
    weights: FloatArray = attrs.field(eq=False)
    degree: int
    """Polynomials up to this degree are integrated exactly."""

    @property
    def dimension(self) -> int:
        return self.nodes.shape[1] - 1

    def integrate(
        self, function: Callable[[FloatArray], FloatArray | ComplexArray]
    ) -> float | complex:
        """Integrate a real or complex function of the barycentric coordinates.

        The function receives all nodes at once and returns one value per node.
        """
        total = np.dot(self.weights, function(self.nodes))

        return complex(total) if np.iscomplexobj(total) else float(total)

    def subdivided(self, pieces: int) -> SimplexRule:
        """Return the rule applied on every simplex of a subdivision into `pieces^p`.

        Raises:
            DomainError: `pieces` is not positive.
        """
        if pieces < 1:
            raise DomainError("A simplex is subdivided into at least one piece.")

        if pieces == 1:
            return self

        vertices = list(kuhn_subdivision(self.dimension, pieces))
        nodes = np.concatenate([self.nodes @ corners for corners in vertices])
        weights = np.tile(self.weights / pieces**self.dimension, len(vertices))

        return SimplexRule(nodes, weights, self.degree)


@lru_cache(maxsize=64)
def grundmann_moller(dimension: int, degree: int = DEFAULT_DEGREE) -> SimplexRule:
    """Return the Grundmann-Moller rule of odd degree `2s + 1` on the `p`-simplex.

    Even degrees are rounded up. The rule has negative weights for `s >= 1`.

    Raises:
        DomainError: The dimension is not positive or the degree is negative.
    """
    if dimension < 1 or degree < 0:
        raise DomainError("The rule needs a positive dimension and degree >= 0.")

    s = degree // 2
    d = 2 * s + 1
    nodes: list[list[float]] = []
    weights: list[float] = []

    for i in range(s + 1):
        denominator = d + dimension - 2 * i
        weight = Fraction(
            (-1) ** i * denominator**d,
            4**s * math.factorial(i) * math.factorial(d + dimension - i),
        )

        for beta in _compositions(s - i, dimension + 1):
            nodes.append([(2 * b + 1) / denominator for b in beta])
            weights.append(float(weight))

    return SimplexRule(np.array(nodes), np.array(weights), d)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return

    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def kuhn_subdivision(dimension: int, pieces: int) -> Iterator[FloatArray]:
    """Yield the `pieces^p` simplices of the Kuhn subdivision of the standard simplex.

    Each simplex is a matrix whose rows are the barycentric coordinates of its vertices.
    The standard simplex is identified with `1 >= y_1 >= ... >= y_p >= 0` through
    `y_j = t_j + ... + t_p`. The small cubes with a non-increasing corner `a` are split
    along the permutations that keep `y` non-increasing inside them.
    """
    for corner in itertools.product(range(pieces), repeat=dimension):
        if any(corner[i] < corner[i + 1] for i in range(dimension - 1)):
            continue

        for permutation in itertools.permutations(range(dimension)):
            position = {axis: index for index, axis in enumerate(permutation)}

            if any(
                corner[i] == corner[i + 1] and position[i] > position[i + 1]
                for i in range(dimension - 1)
            ):
                continue

            point = list(corner)
            rows = [_order_to_barycentric(point, pieces)]

            for axis in permutation:
                point[axis] += 1
                rows.append(_order_to_barycentric(point, pieces))

            yield np.array(rows)


def _order_to_barycentric(point: list[int], pieces: int) -> list[float]:
    y = [value / pieces for value in point] + [0.0]

    return [1 - y[0], *(y[j] - y[j + 1] for j in range(len(point)))]


# Partitions of unity

CYCLIC_STRENGTH = 0.25
"""The size of the cyclic perturbation, small enough to keep the partition positive."""


def partition(kind: PartitionKind, t: FloatArray) -> tuple[FloatArray, FloatArray]:
    """Evaluate a partition of unity on the simplex and its derivatives.

    Every partition satisfies `rho_i = 0` where `t_i = 0` and `sum rho_i = 1`.

    Returns:
        The values `rho[n, i]` and the derivatives `d rho_i / d t_j` as
        `jacobian[n, i, j]`, treating the barycentric coordinates as independent.
    """
    count, size = t.shape
    identity = np.broadcast_to(np.eye(size), (count, size, size))

    match kind:
        case "barycentric":
            return t.copy(), identity.copy()
        case "cyclic":
            after = np.roll(t, -1, axis=1)
            before = np.roll(t, 1, axis=1)
            rho = t + CYCLIC_STRENGTH * t * (after - before)
            jacobian = identity * (1 + CYCLIC_STRENGTH * (after - before))[:, :, None]

            for i in range(size):
                jacobian[:, i, (i + 1) % size] += CYCLIC_STRENGTH * t[:, i]
                jacobian[:, i, (i - 1) % size] -= CYCLIC_STRENGTH * t[:, i]

            return rho, jacobian
        case "squared":
            norm = np.sum(t**2, axis=1)
            rho = t**2 / norm[:, None]
            jacobian = (
                2 * identity * (t / norm[:, None])[:, :, None]
                - 2 * (t**2)[:, :, None] * t[:, None, :] / (norm**2)[:, None, None]
            )

            return rho, jacobian


def simplex_integral(
    k: int,
    p: int,
    quadrature_order: int = DEFAULT_DEGREE,
    *,
    kind: PartitionKind = "barycentric",
    pieces: int = 1,
) -> float:
    """Return the integral of `rho_0^k d rho_1 ... d rho_p` over the `p`-simplex.

    The partition is pulled back along `t`, with `t_0 = 1 - t_1 - ... - t_p`, so the
    integrand is `rho_0^k` times the Jacobian determinant of `(rho_1, ..., rho_p)` in
    `(t_1, ..., t_p)`. The result does not depend on the partition and equals
    `k! / (p + k)!`.

    Arguments:
        k: The power of `rho_0`.
        p: The dimension of the simplex.
        quadrature_order: The degree of the Grundmann-Moller rule.
        kind: The partition of unity.
        pieces: The Kuhn subdivision used for non polynomial partitions.

    Raises:
        DomainError: `k` is negative or `p` is not positive.
    """
    if k < 0 or p < 1:
        raise DomainError("The simplex integral needs k >= 0 and p >= 1.")

    rule = grundmann_moller(p, quadrature_order).subdivided(pieces)

    def integrand(t: FloatArray) -> FloatArray:
        rho, jacobian = partition(kind, t)
        reduced = jacobian[:, 1:, 1:] - jacobian[:, 1:, :1]

        return rho[:, 0] ** k * np.linalg.det(reduced)

    return float(rule.integrate(integrand).real)


@lru_cache(maxsize=256)
def simplex_moment(k: int, p: int) -> Fraction:
    """Return the exact value `k! / (p + k)!` through the recursion on the dimension.

    `int rho_0^k d rho_1 ... d rho_p` is `1 / (k + 1)` times
    `int rho_0^(k + 1) d rho_1 ... d rho_(p-1)`.
    """
    if k < 0 or p < 0:
        raise DomainError("The simplex moment needs k >= 0 and p >= 0.")

    if p == 0:
        return Fraction(1)

    return simplex_moment(k + 1, p - 1) / (k + 1)


def time_simplex_integral(
    function: Callable[[FloatArray], FloatArray | ComplexArray],
    t: float,
    n: int,
    quadrature_order: int = DEFAULT_DEGREE,
    pieces: int = 1,
) -> float | complex:
    """Integrate over `t Delta_n = {s_0 + ... + s_n = t, s_i >= 0}` in `ds_1 ... ds_n`.

    The function receives the time tuples `s`, one row per node.

    Raises:
        DomainError: `t` is not positive or `n` is not positive.
    """
    if t <= 0 or n < 1:
        raise DomainError("The time simplex needs t > 0 and n >= 1.")

    rule = grundmann_moller(n, quadrature_order).subdivided(pieces)

    return t**n * rule.integrate(lambda nodes: function(t * nodes))
