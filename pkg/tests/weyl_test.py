# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Tests for the arithmetic of matrix valued Weyl algebras."""

import random
from fractions import Fraction

import pytest

from hochschild_lefschetz.algebra._syntax import parse_operator
from hochschild_lefschetz.algebra.weyl import (
    MonKey,
    Section,
    WeylOp,
    apply,
    commutator,
    monomials,
    truncate,
)
from hochschild_lefschetz.exceptions import DimensionMismatchError, DomainError
from hochschild_lefschetz.suites import random_operator, random_section


@pytest.mark.parametrize("n", [1, 2, 3])
def test_canonical_commutation(n: int) -> None:
    """Test that `[d_i, y_j]` is the Kronecker delta and variables commute."""
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d_i, y_j = WeylOp.derivative(i, n), WeylOp.variable(j, n)
            expected = WeylOp.identity(n) if i == j else WeylOp.zero(n)

            assert commutator(d_i, y_j) == expected
            assert commutator(WeylOp.variable(i, n), y_j).is_zero()
            assert commutator(d_i, WeylOp.derivative(j, n)).is_zero()


@pytest.mark.parametrize(
    ("left", "right", "product"),
    [
        ("d", "y", "y*d + 1"),
        ("y^2*d^2", "y", "y^3*d^2 + 2*y^2*d"),
        ("d^3", "y^2", "y^2*d^3 + 6*y*d^2 + 6*d"),
        ("y*d", "y*d", "y^2*d^2 + y*d"),
    ],
)
def test_normal_ordered_product(left: str, right: str, product: str) -> None:
    """Test products of monomials against hand computed normal orders."""
    assert parse_operator(left, 1) * parse_operator(right, 1) == parse_operator(
        product, 1
    )


def test_laurent_product() -> None:
    """Test that the Leibniz rule holds for negative exponents."""
    d = parse_operator("d", 1, laurent=True)
    inverse = parse_operator("y^-1", 1, laurent=True)

    assert d * inverse == parse_operator("y^-1*d - y^-2", 1, laurent=True)
    assert inverse * parse_operator("y", 1, laurent=True) == WeylOp.identity(
        1, laurent=True
    )


def test_matrix_units() -> None:
    """Test products of matrix units and their commutation with the Weyl part."""
    e12 = WeylOp.matrix_unit(1, 2, 1, 2)
    e21 = WeylOp.matrix_unit(2, 1, 1, 2)

    assert e12 * e21 == WeylOp.matrix_unit(1, 1, 1, 2)
    assert (e12 * e12).is_zero()
    assert commutator(e12, WeylOp.derivative(1, 1, r=2)).is_zero()
    assert WeylOp.scalar(3, 1, 2).scalar_value() == 3
    assert WeylOp.matrix_unit(1, 1, 1, 2).scalar_value() is None


@pytest.mark.parametrize("seed", range(5))
def test_associativity(seed: int) -> None:
    """Test associativity on random operators of every shape."""
    rng = random.Random(seed)

    for n, r, laurent in ((1, 1, False), (2, 1, False), (1, 2, False), (1, 1, True)):
        a, b, c = (random_operator(rng, n, r, laurent=laurent) for _ in range(3))

        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("seed", range(5))
def test_action_homomorphism(seed: int) -> None:
    """Test that acting by a product is acting twice."""
    rng = random.Random(seed)

    for n, r, laurent in ((1, 1, False), (2, 1, False), (1, 2, False), (1, 1, True)):
        a, b = (random_operator(rng, n, r, laurent=laurent) for _ in range(2))
        f = random_section(rng, n, r, laurent=laurent)

        assert apply(a * b, f) == apply(a, apply(b, f))


def test_action_on_monomials() -> None:
    """Test the action on single monomials."""
    euler = WeylOp.euler(1)
    cube = Section.monomial((3,))

    assert apply(euler, cube) == Section.monomial((3,), coefficient=3)
    assert apply(WeylOp.derivative(1, 1), Section.monomial((0,))) == Section(1)

    inverse_square = Section.monomial((-2,), laurent=True)

    assert apply(
        WeylOp.derivative(1, 1, laurent=True), inverse_square
    ) == Section.monomial((-3,), coefficient=-2, laurent=True)


def test_euler_weight() -> None:
    """Test that the Euler commutator multiplies a monomial by its weight."""
    key = MonKey((3, 1), (1, 2))
    op = WeylOp.monomial(key)

    assert key.weight == 1
    assert commutator(WeylOp.euler(2), op) == op * key.weight

    op = parse_operator("y^2*d + d^2 + y", 1)

    assert sorted(op.weight_components()) == [-2, 1]


def test_truncate() -> None:
    """Test dropping monomials outside of the degree and order bounds."""
    op = parse_operator("y^2*d + y*d^3 + 1", 1)

    assert truncate(op, 1, 3) == parse_operator("y*d^3 + 1", 1)
    assert truncate(op, float("inf"), 1) == parse_operator("y^2*d + 1", 1)

    with pytest.raises(DomainError, match="must be non-negative"):
        truncate(op, -1, 0)


def test_monomials() -> None:
    """Test enumerating monomials of bounded degree and order."""
    keys = monomials(1, 1, 1)

    assert keys == sorted(keys)
    assert len(keys) == 4
    assert len(monomials(2, 1, 0, 2)) == 3 * 4


def test_operator_exceptions() -> None:
    """Test rejecting operators that do not fit together."""
    with pytest.raises(DimensionMismatchError):
        _ = WeylOp.variable(1, 1) + WeylOp.variable(1, 2)

    with pytest.raises(DimensionMismatchError):
        _ = WeylOp.identity(1) * WeylOp.identity(1, laurent=True)

    with pytest.raises(DomainError, match="not Laurent"):
        WeylOp(1, terms={MonKey((-1,), (0,)): Fraction(1)})

    with pytest.raises(DomainError, match="negative derivative"):
        WeylOp(1, laurent=True, terms={MonKey((0,), (-1,)): Fraction(1)})

    with pytest.raises(DimensionMismatchError):
        WeylOp(1, 2, terms={MonKey.constant(1, 2, 0): Fraction(1)})

    with pytest.raises(DomainError):
        WeylOp.variable(1, 1, -1, laurent=True).as_polynomial()

    with pytest.raises(DimensionMismatchError):
        apply(WeylOp.identity(1), Section.monomial((1, 1)))
