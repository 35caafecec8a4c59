# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Tests for finite dimensional differential graded algebras given by tables."""

import math
from fractions import Fraction
from pathlib import Path

import pytest

from hochschild_lefschetz.algebra.base import check_axioms
from hochschild_lefschetz.algebra.findga import FinDGA
from hochschild_lefschetz.exceptions import DomainError, StructureError
from hochschild_lefschetz.homology.twist import (
    GradedChain,
    MCElement,
    graded_boundary,
    omega_power,
    shuffle,
    total_differential,
    twisted_total_differential,
)


def test_findga_load(lazy_datadir: Path) -> None:
    """Test loading a table and filling in the products with the unit."""
    with (lazy_datadir / "dual_numbers.json").open(encoding="utf-8") as fp:
        algebra = FinDGA.load(fp)

    assert list(algebra.labels) == ["1", "x", "e"]
    assert algebra.labels.inverse[2] == "e"
    assert algebra.degree("e") == 1
    assert algebra.basis_of_degree(0) == ["1", "x"]
    assert algebra.unit_key() == "1"
    assert algebra.product("1", "e") == {"e": Fraction(1)}
    assert algebra.product("x", "x") == {}
    assert algebra.differential("x") == {"e": Fraction(1)}
    assert algebra.element({"x": 2, "e": 0}) == {"x": Fraction(2)}

    with pytest.raises(DomainError, match="not a basis element"):
        algebra.degree("y")


@pytest.mark.parametrize(
    ("table", "message"),
    [
        ("ungraded.json", "not graded"),
        ("no_leibniz.json", "Leibniz rule fails"),
        ("unknown_label.json", "'f' is not a basis element"),
        ("no_unit.json", r"missing \['unit'\]"),
        ("malformed.json", "not valid JSON"),
    ],
)
def test_findga_exceptions(lazy_datadir: Path, table: str, message: str) -> None:
    """Test rejecting tables that are malformed or violate an axiom."""
    with (
        (lazy_datadir / table).open(encoding="utf-8") as fp,
        pytest.raises(StructureError, match=message),
    ):
        FinDGA.load(fp)


def test_exterior_matrices() -> None:
    """Test the inner differential on a Grassmann extension of triangular matrices."""
    algebra = FinDGA.exterior_matrices(1, 2, {((1,), 1, 2): 1})

    assert len(algebra.labels) == 6
    assert algebra.degree("t1:e12") == 1
    assert algebra.differential("e11") == {"t1:e12": Fraction(-1)}
    assert algebra.differential("e22") == {"t1:e12": Fraction(1)}
    assert algebra.differential("e12") == {}
    assert algebra.unit() == {"e11": Fraction(1), "e22": Fraction(1)}
    assert algebra.unit_key() is None
    assert not check_axioms(algebra, list(algebra.labels))

    with pytest.raises(StructureError, match="not an odd basis element"):
        FinDGA.exterior_matrices(1, 2, {((), 1, 2): 1})


def test_findga_twisting() -> None:
    """Test the chain identities of twisting on a table algebra."""
    algebra = FinDGA.exterior_matrices(1, 2, {})
    omega = MCElement(algebra, {"t1:e12": 1})
    words = [
        GradedChain.word(algebra, [{"e11": 1}, {"t1:e12": 1}]),
        GradedChain.word(algebra, [{"e12": 1}, {"e22": 1}, {"t1:e11": 2}]),
        GradedChain.word(algebra, [{"t1:e22": 1}, {"e11": 1}]),
    ]

    for word in words:
        assert graded_boundary(graded_boundary(word)).is_zero()
        assert total_differential(total_differential(word)).is_zero()
        assert twisted_total_differential(
            twisted_total_differential(word, omega), omega
        ).is_zero()

    for k in range(4):
        for left in range(k + 1):
            assert shuffle(
                omega_power(omega, left), omega_power(omega, k - left)
            ) == omega_power(omega, k) * math.comb(k, left)

    with pytest.raises(StructureError, match="not a Maurer-Cartan element"):
        MCElement(algebra, {"e12": 1})
