# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Ordered triangulations of closed oriented manifolds and their dual cells.

A simplex `(a_0, ..., a_p)` is oriented by the order of its vertices, and changes sign
under a permutation of them. Chains store every simplex with sorted vertices and fold
the sign of the sorting permutation into the coefficient.

The dual cell `C(a_0, ..., a_p)` is the `(d - p)`-cell that meets the simplex in one
point. It is oriented so that its intersection index with the simplex is 1, which gives
`dC(a_0, ..., a_p) = (-1)^(d + p) sum_b C(b, a_0, ..., a_p)`. Dual cells are also
available as unions of simplices of the barycentric subdivision, which checks the sign
rule independently.

The JSON form of a complex is:

```
{
    "simplices": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
    "orientation": [-1, 1, -1, 1]
}
```

The orientation is optional and found by propagation across shared facets if missing.
"""

from __future__ import annotations

import itertools
import json
import logging
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from typing import Any, TextIO

import attrs

from hochschild_lefschetz._math import sort_with_sign
from hochschild_lefschetz.exceptions import DomainError, StructureError
from hochschild_lefschetz.typing import Simplex, Vertex

logger = logging.getLogger(__name__)

type SignedChain = dict[Simplex, int]
"""A chain of simplices or dual cells, keyed by sorted vertex tuples."""

type Flag = tuple[Simplex, ...]
"""A strictly increasing sequence of faces, a simplex of the barycentric subdivision."""


def add_signed(chain: SignedChain, simplex: Sequence[Vertex], value: int) -> None:
    """Add `value` times an ordered simplex to a chain of sorted simplices."""
    key, sign = sort_with_sign(simplex)

    if not sign or not value:
        return

    total = chain.get(key, 0) + sign * value

    if total:
        chain[key] = total
    else:
        chain.pop(key, None)


def simplex_boundary(simplex: Sequence[Vertex]) -> SignedChain:
    """Return `sum_j (-1)^j (a_0, ..., a_j omitted, ..., a_p)`.

    Raises:
        DomainError: The simplex is a single vertex.
    """
    if len(simplex) < 2:  # noqa: PLR2004
        raise DomainError(
            "The boundary is only defined on simplices of dimension >= 1."
        )

    chain: SignedChain = {}

    for j in range(len(simplex)):
        add_signed(chain, (*simplex[:j], *simplex[j + 1 :]), -1 if j % 2 else 1)

    return chain


def chain_boundary(chain: Mapping[Simplex, int]) -> SignedChain:
    result: SignedChain = {}

    for simplex, value in chain.items():
        for face, sign in simplex_boundary(simplex).items():
            add_signed(result, face, sign * value)

    return result


def intersection(dual: Mapping[Simplex, int], primal: Mapping[Simplex, int]) -> int:
    """Return the intersection number of a dual chain and a primal chain.

    `C(s) . s = 1` for every simplex `s` and dual cells only meet their own simplex.
    """
    return sum(value * primal.get(simplex, 0) for simplex, value in dual.items())


def _normalize_simplices(simplices: Iterable[Sequence[Vertex]]) -> tuple[Simplex, ...]:
    return tuple(tuple(sorted(simplex)) for simplex in simplices)


@attrs.frozen
class OrderedComplex:
    """A triangulation of a closed oriented combinatorial manifold.

    Vertices are integers ordered as integers. The complex is validated when it is
    created: it must be pure, every facet must bound exactly two top simplices, vertex
    links must be connected and the orientation must be coherent.
    """

    top: tuple[Simplex, ...] = attrs.field(converter=_normalize_simplices)
    """The top dimensional simplices with sorted vertices."""
    orientation: Mapping[Simplex, int]
    """The sign of every top simplex relative to the orientation of the manifold."""

    def __attrs_post_init__(self) -> None:
        self.validate()

    @classmethod
    def from_top(
        cls,
        simplices: Iterable[Sequence[Vertex]],
        orientation: Sequence[int] | None = None,
    ) -> OrderedComplex:
        """Create a complex, propagating the orientation if it is not given.

        Raises:
            StructureError: The complex is not a closed oriented manifold, or the given
                orientation is not coherent.
        """
        top = _normalize_simplices(simplices)

        if len(set(top)) != len(top):
            raise StructureError("A top simplex is listed twice.")

        if orientation is None:
            signs = _propagate_orientation(top)
        else:
            if len(orientation) != len(top) or not set(orientation) <= {1, -1}:
                raise StructureError("The orientation needs one sign per top simplex.")

            signs = dict(zip(top, orientation, strict=True))

        return cls(top, signs)

    @classmethod
    def load(cls, fp: TextIO) -> OrderedComplex:
        """Read a complex from its JSON form.

        Raises:
            StructureError: The file is not a valid complex.
        """
        try:
            data: dict[str, Any] = json.load(fp)
            simplices = [[int(v) for v in simplex] for simplex in data["simplices"]]
            orientation = data.get("orientation")
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
            raise StructureError(f"The complex file is malformed: {e}") from e

        return cls.from_top(
            simplices, None if orientation is None else [int(s) for s in orientation]
        )

    # Faces

    @property
    def dimension(self) -> int:
        return len(self.top[0]) - 1

    @property
    def vertices(self) -> tuple[Vertex, ...]:
        return tuple(sorted({v for simplex in self.top for v in simplex}))

    def faces(self, p: int | None = None) -> list[Simplex]:
        """Return the sorted faces of dimension `p`, or of every dimension."""
        dimensions = range(self.dimension + 1) if p is None else [p]
        faces = {
            face
            for simplex in self.top
            for q in dimensions
            for face in itertools.combinations(simplex, q + 1)
        }

        return sorted(faces, key=lambda face: (len(face), face))

    def cofaces(self, simplex: Sequence[Vertex]) -> list[Simplex]:
        """Return the faces with exactly one more vertex than `simplex`."""
        members = set(simplex)

        return [
            face
            for face in self.faces(len(members))
            if members <= set(face)
        ]

    def link(self, vertex: Vertex) -> list[Simplex]:
        return [
            tuple(v for v in simplex if v != vertex)
            for simplex in self.top
            if vertex in simplex
        ]

    # Validation

    def validate(self) -> None:
        """Check that the complex is a closed oriented combinatorial manifold.

        Raises:
            StructureError: A condition is violated.
        """
        if not self.top:
            raise StructureError("A complex needs at least one top simplex.")

        dimension = self.dimension

        if any(len(simplex) != dimension + 1 for simplex in self.top):
            raise StructureError("The complex is not pure.")

        if dimension < 1:
            raise StructureError("A closed manifold complex has dimension >= 1.")

        incidence = _facet_incidence(self.top)

        for facet, simplices in incidence.items():
            if len(simplices) != 2:  # noqa: PLR2004
                raise StructureError(
                    f"The facet {facet} bounds {len(simplices)} top simplices, not 2."
                )

        for vertex in self.vertices:
            if not _connected(self.link(vertex)):
                raise StructureError(f"The link of vertex {vertex} is not connected.")

        if set(self.orientation) != set(self.top):
            raise StructureError("The orientation does not match the top simplices.")

        for facet, (first, second) in incidence.items():
            if _induced(first, facet) * self.orientation[first] != -_induced(
                second, facet
            ) * self.orientation[second]:
                raise StructureError(f"The orientation is not coherent along {facet}.")

    # Orientation

    def orientation_sign(self, simplex: Sequence[Vertex]) -> int:
        """Return the sign of an ordered top simplex relative to the manifold.

        Raises:
            DomainError: The vertices do not span a top simplex.
        """
        key, sign = sort_with_sign(simplex)

        if key not in self.orientation:
            raise DomainError(f"{tuple(simplex)} is not a top simplex.")

        return sign * self.orientation[key]

    def oriented_sum(self, values: Mapping[Simplex, Fraction | int]) -> Fraction:
        """Return `sum values[s] * orientation_sign(s)` over ordered top simplices."""
        return sum(
            (
                Fraction(value) * self.orientation_sign(simplex)
                for simplex, value in values.items()
            ),
            Fraction(0),
        )

    def fundamental_class(self) -> SignedChain:
        """Return the sum of the top simplices with their orientation signs."""
        return dict(self.orientation)

    # Dual cells

    def dual_boundary(self, simplex: Sequence[Vertex]) -> SignedChain:
        """Return the boundary of the dual cell of an ordered simplex.

        `dC(a_0, ..., a_p) = (-1)^(d + p) sum_b C(b, a_0, ..., a_p)` over the vertices
        `b` for which `b, a_0, ..., a_p` span a simplex.

        Raises:
            DomainError: The vertices do not span a face of the complex.
        """
        self._check_face(simplex)
        p = len(simplex) - 1
        sign = -1 if (self.dimension + p) % 2 else 1
        chain: SignedChain = {}

        for coface in self.cofaces(simplex):
            (extra,) = set(coface) - set(simplex)
            add_signed(chain, (extra, *simplex), sign)

        return chain

    def dual_chain_boundary(self, chain: Mapping[Simplex, int]) -> SignedChain:
        result: SignedChain = {}

        for simplex, value in chain.items():
            for cell, sign in self.dual_boundary(simplex).items():
                add_signed(result, cell, sign * value)

        return result

    def dual_blocks(self, simplex: Sequence[Vertex]) -> dict[Flag, int]:
        """Return the dual cell of an ordered simplex in the barycentric subdivision.

        The blocks are the flags from the simplex up to a top simplex. A block is
        oriented so that the block followed by the simplex gives the orientation of
        the manifold.
        """
        self._check_face(simplex)
        start = tuple(sorted(simplex))
        p = len(start) - 1
        swap = -1 if p * (self.dimension - p) % 2 else 1
        blocks: dict[Flag, int] = {}

        for flag, added in self._flags_above(start):
            sign = swap * self.orientation_sign((*simplex, *added))
            blocks[flag] = blocks.get(flag, 0) + sign

        return blocks

    def _flags_above(
        self, start: Simplex
    ) -> list[tuple[Flag, tuple[Vertex, ...]]]:
        if len(start) == self.dimension + 1:
            return [((start,), ())]

        flags: list[tuple[Flag, tuple[Vertex, ...]]] = []

        for coface in self.cofaces(start):
            (extra,) = set(coface) - set(start)

            for rest, added in self._flags_above(coface):
                flags.append(((start, *rest), (extra, *added)))

        return flags

    def _check_face(self, simplex: Sequence[Vertex]) -> None:
        key, sign = sort_with_sign(simplex)

        if not sign or not any(set(key) <= set(top) for top in self.top):
            raise DomainError(f"{tuple(simplex)} is not a face of the complex.")


def barycentric_boundary(chain: Mapping[Flag, int]) -> dict[Flag, int]:
    """Return the boundary of a chain of barycentric simplices given by flags."""
    result: dict[Flag, int] = {}

    for flag, value in chain.items():
        for j in range(len(flag)):
            face = (*flag[:j], *flag[j + 1 :])
            total = result.get(face, 0) + (-value if j % 2 else value)

            if total:
                result[face] = total
            else:
                result.pop(face, None)

    return result


def dual_blocks_of_chain(
    complex_: OrderedComplex, chain: Mapping[Simplex, int]
) -> dict[Flag, int]:
    result: dict[Flag, int] = {}

    for simplex, value in chain.items():
        for flag, sign in complex_.dual_blocks(simplex).items():
            total = result.get(flag, 0) + sign * value

            if total:
                result[flag] = total
            else:
                result.pop(flag, None)

    return result


# Open star covers


def open_star_cover(complex_: OrderedComplex) -> dict[Vertex, frozenset[Simplex]]:
    """Return the open star of every vertex as the set of faces that contain it."""
    faces = complex_.faces()

    return {
        vertex: frozenset(face for face in faces if vertex in face)
        for vertex in complex_.vertices
    }


def nerve(
    cover: Mapping[Vertex, frozenset[Simplex]], max_size: int
) -> list[tuple[Vertex, ...]]:
    """Return the vertex sets of size at most `max_size` whose stars intersect."""
    vertices = sorted(cover)
    found: list[tuple[Vertex, ...]] = []

    for size in range(1, max_size + 1):
        for subset in itertools.combinations(vertices, size):
            if frozenset.intersection(*(cover[v] for v in subset)):
                found.append(subset)

    return found


# Builders


def tetrahedron_boundary() -> OrderedComplex:
    """Return the boundary of the 3-simplex, oriented as the boundary of `0123`."""
    chain = simplex_boundary((0, 1, 2, 3))

    return OrderedComplex(tuple(chain), chain)


def icosahedron() -> OrderedComplex:
    """Return the surface of the icosahedron with 12 vertices and 20 triangles."""
    upper = [1 + i for i in range(5)]
    lower = [6 + i for i in range(5)]
    triangles: list[tuple[int, ...]] = []

    for i in range(5):
        j = (i + 1) % 5
        triangles.append((0, upper[i], upper[j]))
        triangles.append((upper[i], upper[j], lower[i]))
        triangles.append((upper[j], lower[i], lower[j]))
        triangles.append((11, lower[i], lower[j]))

    return OrderedComplex.from_top(triangles)


def torus() -> OrderedComplex:
    """Return a 16 triangle torus.

    This is the 7 vertex torus with the triangle `(0, 1, 3)` subdivided at a new
    vertex 7.
    """
    triangles: list[tuple[int, ...]] = []

    for i in range(7):
        triangles.append((i, (i + 1) % 7, (i + 3) % 7))
        triangles.append((i, (i + 2) % 7, (i + 3) % 7))

    triangles.remove((0, 1, 3))
    triangles.extend([(0, 1, 7), (1, 3, 7), (0, 3, 7)])

    return OrderedComplex.from_top(triangles)


BUILDERS = {
    "tetrahedron": tetrahedron_boundary,
    "icosahedron": icosahedron,
    "torus": torus,
}
"""The built in complexes by name."""


# Helpers


def _facet_incidence(top: Sequence[Simplex]) -> dict[Simplex, list[Simplex]]:
    incidence: dict[Simplex, list[Simplex]] = {}

    for simplex in top:
        for facet in itertools.combinations(simplex, len(simplex) - 1):
            incidence.setdefault(facet, []).append(simplex)

    return incidence


def _induced(simplex: Simplex, facet: Simplex) -> int:
    """Return the sign of `facet` in the boundary of the sorted `simplex`."""
    (missing,) = set(simplex) - set(facet)

    return -1 if simplex.index(missing) % 2 else 1


def _connected(simplices: Sequence[Simplex]) -> bool:
    if not simplices:
        return False

    vertices = {v for simplex in simplices for v in simplex}

    if len(simplices[0]) == 1:
        # The link of a vertex of a closed curve is two points.
        return len(vertices) == 2  # noqa: PLR2004

    adjacency: dict[Vertex, set[Vertex]] = {v: set() for v in vertices}

    for simplex in simplices:
        for a, b in itertools.combinations(simplex, 2):
            adjacency[a].add(b)
            adjacency[b].add(a)

    start = next(iter(vertices))
    seen = {start}
    queue = deque([start])

    while queue:
        for neighbour in adjacency[queue.popleft()] - seen:
            seen.add(neighbour)
            queue.append(neighbour)

    return seen == vertices


def _propagate_orientation(top: Sequence[Simplex]) -> dict[Simplex, int]:
    incidence = _facet_incidence(top)
    signs: dict[Simplex, int] = {top[0]: 1}
    queue = deque([top[0]])

    while queue:
        simplex = queue.popleft()

        for facet in itertools.combinations(simplex, len(simplex) - 1):
            for other in incidence[facet]:
                if other == simplex:
                    continue

                wanted = -_induced(simplex, facet) * signs[simplex] * _induced(
                    other, facet
                )

                if other not in signs:
                    signs[other] = wanted
                    queue.append(other)
                elif signs[other] != wanted:
                    raise StructureError("The complex is not orientable.")

    if len(signs) != len(top):
        raise StructureError("The complex is not connected.")

    logger.debug("Propagated an orientation over %d simplices", len(signs))

    return signs
