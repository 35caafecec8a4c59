# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Tests for the normalized Hochschild complex of Weyl algebras."""

import random
from fractions import Fraction

import pytest

from hochschild_lefschetz.algebra.weyl import MonKey, WeylOp
from hochschild_lefschetz.exceptions import DimensionMismatchError, DomainError
from hochschild_lefschetz.homology._syntax import parse_chain
from hochschild_lefschetz.homology.hochschild import (
    Chain,
    boundary,
    generator_c2n,
    insertion,
    lie_action,
)
from hochschild_lefschetz.suites import random_chain, random_operator

SHAPES = [(1, 1, False), (2, 1, False), (1, 2, False), (1, 1, True)]


def test_boundary_of_words() -> None:
    """Test the boundary of small words against hand computations."""
    assert boundary(parse_chain("d⊗y", 1)) == Chain.from_ops([WeylOp.identity(1)])
    assert boundary(parse_chain("1⊗y", 1)).is_zero()
    assert boundary(parse_chain("1⊗d⊗y", 1)) == parse_chain(
        "d⊗y - 1⊗y*d + y⊗d", 1
    )

    with pytest.raises(DomainError, match="degree >= 1"):
        boundary(Chain.from_ops([WeylOp.variable(1, 1)]))


@pytest.mark.parametrize(("n", "r", "laurent"), SHAPES)
def test_boundary_squared(n: int, r: int, laurent: bool) -> None:
    """Test that the boundary squares to zero on random chains."""
    rng = random.Random(f"{n}:{r}:{laurent}")

    for degree in (2, 3, 4):
        chain = random_chain(rng, n, degree, r, laurent=laurent)

        assert boundary(boundary(chain)).is_zero()


@pytest.mark.parametrize(("n", "r", "laurent"), SHAPES)
def test_cartan_formula(n: int, r: int, laurent: bool) -> None:
    """Test `L_a = b i_a + i_a b` on random operators and chains."""
    rng = random.Random(f"{n}:{r}:{laurent}")

    for degree in range(4):
        a = random_operator(rng, n, r, terms=2, laurent=laurent)
        chain = random_chain(rng, n, degree, r, laurent=laurent)
        expected = boundary(insertion(a, chain))

        if degree:
            expected += insertion(a, boundary(chain))

        assert lie_action(a, chain) == expected


def test_insertion_signs() -> None:
    """Test that inserting into a single letter gives `-(a_0, a)`."""
    y = WeylOp.variable(1, 1)
    d = WeylOp.derivative(1, 1)
    letter = Chain.from_ops([y**2])

    assert insertion(d, letter) == Chain.from_ops([y**2, d], -1)
    assert boundary(insertion(d, letter)) == lie_action(d, letter)
    assert lie_action(d, letter) == Chain.from_ops([y * 2])

    word = Chain.from_ops([y, d])

    assert insertion(y**2, word) == Chain.from_ops([y, d, y**2]) - Chain.from_ops(
        [y, y**2, d]
    )


@pytest.mark.parametrize(("n", "r", "laurent"), SHAPES)
def test_generator_is_cycle(n: int, r: int, laurent: bool) -> None:
    """Test that the antisymmetrized generator is a cycle in every shape."""
    generator = generator_c2n(n, r, laurent=laurent)

    assert generator.degree == 2 * n
    assert boundary(generator).is_zero()


def test_generator_words() -> None:
    """Test the words of the generator in one and two variables."""
    assert generator_c2n(1) == parse_chain("1⊗d⊗y - 1⊗y⊗d", 1)
    assert len(generator_c2n(2).terms) == 24


@pytest.mark.parametrize("n", [1, 2])
def test_generator_invariance(n: int) -> None:
    """Test that quadratic operators act trivially on the generator."""
    generator = generator_c2n(n)

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            y_i, y_j = WeylOp.variable(i, n), WeylOp.variable(j, n)
            d_i, d_j = WeylOp.derivative(i, n), WeylOp.derivative(j, n)

            for a in (y_i * d_j, y_i * y_j, d_i * d_j):
                assert lie_action(a, generator).is_zero()


def test_normalization() -> None:
    """Test that scalars vanish after the first slot and matrix units are rewritten."""
    y = WeylOp.variable(1, 1)

    assert Chain.from_ops([y, WeylOp.identity(1)]).is_zero()
    assert Chain.from_ops([y, y + WeylOp.scalar(2, 1)]) == Chain.from_ops([y, y])

    e11 = WeylOp.matrix_unit(1, 1, 1, 2)
    e22 = WeylOp.matrix_unit(2, 2, 1, 2)

    assert Chain.from_ops([e11, e22]) == Chain.from_ops([e11, e11], -1)

    k11 = MonKey.constant(1, 0, 0)
    k22 = MonKey.constant(1, 1, 1)

    assert Chain.build(1, 1, {(k11, k11): 1}, 2) == Chain.from_ops([e11, e11])
    assert Chain.build(1, 1, {(k11, k22): 1}, 2) == Chain.from_ops([e11, e11], -1)


def test_weight_components() -> None:
    """Test splitting a chain by the weight of its words."""
    chain = parse_chain("1⊗y - y⊗y*d + d⊗y", 1)
    components = chain.weight_components()

    assert sorted(components) == [0, 1]
    assert components[0] == parse_chain("d⊗y", 1)
    assert chain.bounds() == (2, 1, 1)


def test_chain_exceptions() -> None:
    """Test rejecting chains that are not normalized or do not fit together."""
    unit = MonKey.constant(1)

    with pytest.raises(DomainError, match="normalized basis"):
        Chain(1, 1, terms={(unit, unit): Fraction(1)})

    with pytest.raises(DimensionMismatchError, match="degree 2"):
        Chain(1, 2, terms={(unit, unit): Fraction(1)})

    with pytest.raises(DomainError, match="negative exponent"):
        Chain(1, 0, terms={(MonKey((-1,), (0,)),): Fraction(1)})

    with pytest.raises(DimensionMismatchError):
        _ = generator_c2n(1) + generator_c2n(1, laurent=True)

    with pytest.raises(DimensionMismatchError):
        lie_action(WeylOp.variable(1, 2), generator_c2n(1))

    with pytest.raises(DomainError, match="at least one operator"):
        Chain.from_ops([])

    with pytest.raises(ZeroDivisionError):
        _ = generator_c2n(1) / 0
