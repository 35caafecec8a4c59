# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Tests for ordered triangulations and their dual cells."""

from fractions import Fraction
from pathlib import Path

import pytest

from hochschild_lefschetz.exceptions import DomainError, StructureError
from hochschild_lefschetz.geometry.simplicial import (
    BUILDERS,
    OrderedComplex,
    add_signed,
    barycentric_boundary,
    chain_boundary,
    dual_blocks_of_chain,
    intersection,
    nerve,
    open_star_cover,
    simplex_boundary,
    tetrahedron_boundary,
    torus,
)


def test_simplex_boundary() -> None:
    """Test the boundary of ordered simplices."""
    assert simplex_boundary((0, 1, 2)) == {(1, 2): 1, (0, 2): -1, (0, 1): 1}
    assert simplex_boundary((1, 0)) == {(0,): 1, (1,): -1}
    assert simplex_boundary((2, 0, 1)) == {(0, 1): 1, (1, 2): 1, (0, 2): -1}
    assert not chain_boundary(simplex_boundary((0, 1, 2, 3)))

    with pytest.raises(DomainError, match="dimension >= 1"):
        simplex_boundary((0,))


def test_add_signed() -> None:
    """Test storing ordered simplices with sorted vertices."""
    chain: dict[tuple[int, ...], int] = {}
    add_signed(chain, (2, 1), 3)

    assert chain == {(1, 2): -3}

    add_signed(chain, (1, 2), 3)
    add_signed(chain, (1, 1), 5)

    assert not chain


@pytest.mark.parametrize(
    ("name", "euler_characteristic", "top"),
    [("tetrahedron", 2, 4), ("icosahedron", 2, 20), ("torus", 0, 16)],
)
def test_builders(name: str, euler_characteristic: int, top: int) -> None:
    """Test the built in surfaces."""
    complex_ = BUILDERS[name]()

    assert complex_.dimension == 2
    assert len(complex_.top) == top
    assert (
        sum((-1) ** p * len(complex_.faces(p)) for p in range(3))
        == euler_characteristic
    )
    assert not chain_boundary(complex_.fundamental_class())


@pytest.mark.parametrize("name", list(BUILDERS))
def test_dual_cells(name: str) -> None:
    """Test the boundary of dual cells against the barycentric subdivision."""
    complex_ = BUILDERS[name]()
    d = complex_.dimension

    for face in complex_.faces():
        dual = complex_.dual_boundary(face)
        sign = -1 if (d + len(face) - 1) % 2 else 1

        assert not complex_.dual_chain_boundary(dual)

        if len(face) <= d:
            assert barycentric_boundary(
                complex_.dual_blocks(face)
            ) == dual_blocks_of_chain(complex_, dual)

        for coface in complex_.cofaces(face):
            assert intersection(dual, {coface: 1}) == sign * intersection(
                {face: 1}, simplex_boundary(coface)
            )


def test_dual_of_vertex() -> None:
    """Test the dual cell of a vertex of the tetrahedron."""
    complex_ = tetrahedron_boundary()

    assert complex_.dual_boundary((0,)) == {(0, 1): -1, (0, 2): -1, (0, 3): -1}
    assert complex_.dual_boundary((0, 1, 2)) == {}
    assert len(complex_.dual_blocks((0,))) == 6
    assert complex_.dual_blocks((1, 0)) == {
        flag: -sign for flag, sign in complex_.dual_blocks((0, 1)).items()
    }

    with pytest.raises(DomainError, match="not a face"):
        complex_.dual_boundary((0, 4))


def test_orientation() -> None:
    """Test signs of ordered top simplices."""
    complex_ = tetrahedron_boundary()
    values = {(1, 2, 3): 2, (0, 2, 1): Fraction(1, 2)}

    assert complex_.orientation_sign((1, 2, 3)) == 1
    assert complex_.orientation_sign((2, 1, 3)) == -1
    assert complex_.orientation_sign((0, 1, 2)) == -1
    assert complex_.oriented_sum(values) == Fraction(5, 2)

    with pytest.raises(DomainError, match="not a top simplex"):
        complex_.orientation_sign((0, 1))


def test_open_star_nerve() -> None:
    """Test that the nerve of the open star cover gives back the complex."""
    complex_ = torus()
    cover = open_star_cover(complex_)

    assert len(cover) == 8
    assert set(nerve(cover, 4)) == set(complex_.faces())
    assert cover[7] == frozenset(face for face in complex_.faces() if 7 in face)


def test_complex_load(lazy_datadir: Path) -> None:
    """Test loading a complex and propagating its orientation."""
    with (lazy_datadir / "octahedron.json").open(encoding="utf-8") as fp:
        complex_ = OrderedComplex.load(fp)

    assert complex_.vertices == (0, 1, 2, 3, 4, 5)
    assert complex_.orientation[0, 1, 2] == 1
    assert complex_.link(0) == [(1, 2), (2, 3), (3, 4), (1, 4)]
    assert complex_.cofaces((0, 1)) == [(0, 1, 2), (0, 1, 4)]
    assert not chain_boundary(complex_.fundamental_class())


@pytest.mark.parametrize(
    ("name", "message"),
    [
        ("projective_plane.json", "not orientable"),
        ("pinched.json", "link of vertex 0 is not connected"),
        ("malformed.json", "malformed"),
    ],
)
def test_complex_load_exceptions(lazy_datadir: Path, name: str, message: str) -> None:
    """Test rejecting files that are not closed oriented manifolds."""
    with (
        (lazy_datadir / name).open(encoding="utf-8") as fp,
        pytest.raises(StructureError, match=message),
    ):
        OrderedComplex.load(fp)


def test_complex_exceptions() -> None:
    """Test the validation of complexes built in code."""
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    with pytest.raises(StructureError, match="bounds 1 top simplices"):
        OrderedComplex.from_top(faces[:3])

    with pytest.raises(StructureError, match="not coherent"):
        OrderedComplex.from_top(faces, [1, 1, 1, 1])

    with pytest.raises(StructureError, match="one sign per top simplex"):
        OrderedComplex.from_top(faces, [1, -1])

    with pytest.raises(StructureError, match="listed twice"):
        OrderedComplex.from_top([*faces, (2, 1, 0)])

    with pytest.raises(StructureError, match="not pure"):
        OrderedComplex.from_top([*faces, (4, 5)], [1, -1, 1, -1, 1])
