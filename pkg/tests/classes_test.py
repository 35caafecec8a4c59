# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Tests for extracting Hochschild classes and boundary witnesses."""

from fractions import Fraction

import pytest

from hochschild_lefschetz.algebra._syntax import parse_operator
from hochschild_lefschetz.algebra.weyl import WeylOp
from hochschild_lefschetz.exceptions import (
    CalibrationError,
    DimensionMismatchError,
    DomainError,
)
from hochschild_lefschetz.homology._syntax import parse_chain
from hochschild_lefschetz.homology.classes import (
    GrowthSchedule,
    TruncationWindow,
    commutator_chain,
    commutator_decompose,
    euler_homotopy,
    express_as_boundary,
    extract_class,
    laurent_normal_form,
    laurent_reference,
    window_words,
)
from hochschild_lefschetz.homology.hochschild import (
    Chain,
    boundary,
    generator_c2n,
    lie_action,
)


@pytest.mark.parametrize(
    "x", ["y⊗d⊗y⊗d", "1⊗y*d⊗d⊗y", "2*d⊗y⊗y*d⊗d - y⊗d⊗d⊗y"]
)
def test_class_of_multiple(x: str) -> None:
    """Test that a multiple of the generator plus a boundary has that coefficient."""
    c2 = generator_c2n(1)
    cycle = c2 * 3 + boundary(parse_chain(x, 1))
    result = extract_class(cycle, c2)

    assert result.coefficient == 3
    assert result.method == "linear"
    assert result.window is not None
    assert boundary(result.witness) == cycle - c2 * 3
    assert result.to_report()["lambda"] == "3"


def test_class_of_lie_derivative() -> None:
    """Test that Lie derivatives of cycles have no class."""
    c2 = generator_c2n(1)
    cycle = lie_action(parse_operator("y^2*d", 1), c2)
    result = extract_class(cycle, c2)

    assert result.coefficient == 0
    assert result.method == "euler"
    assert boundary(result.witness) == cycle

    zero = extract_class(lie_action(parse_operator("y*d", 1), c2), c2)

    assert zero.coefficient == 0
    assert zero.method == "zero"


def test_euler_homotopy() -> None:
    """Test bounding the components of non-zero Euler weight."""
    cycle = parse_chain("1⊗y^2 + y⊗y", 1)
    witness = euler_homotopy(cycle)

    assert boundary(witness) == cycle
    assert euler_homotopy(parse_chain("d⊗y", 1)).is_zero()


def test_stable_rank_defect() -> None:
    """Test that the generator stays outside the image of growing windows."""
    c2 = generator_c2n(1)
    verdict = express_as_boundary(c2, growth=GrowthSchedule(step=1, rounds=2))

    assert not verdict.solvable
    assert verdict.stable_rank_defect
    assert len(verdict.windows) == 2
    assert verdict.stats[1].rank >= verdict.stats[0].rank
    assert verdict.to_report()["witness_sha256"] is None


def test_express_as_boundary() -> None:
    """Test finding verified witnesses of boundaries."""
    target = boundary(parse_chain("y⊗d⊗y*d - 1⊗y^2⊗d^2", 1))
    verdict = express_as_boundary(target)

    assert verdict.solvable
    assert verdict.witness is not None
    assert boundary(verdict.witness) == target
    assert not verdict.stable_rank_defect

    zero = express_as_boundary(Chain.zero(1, 1))

    assert zero.witness == Chain.zero(1, 2)


def test_truncation_windows() -> None:
    """Test covering windows and how they grow."""
    c2 = generator_c2n(1)
    window = TruncationWindow.covering(c2)

    assert window == TruncationWindow(1, 1, 1, 4)
    assert window.contains(c2)
    assert not window.contains(parse_chain("y^2⊗d", 1))

    growth = GrowthSchedule(step=1, laurent_factor=3, rounds=3)
    windows = list(growth.windows(TruncationWindow(1, 1, 1)))

    assert [(w.degree, w.order, w.laurent) for w in windows] == [
        (1, 1, 1),
        (2, 2, 3),
        (3, 3, 9),
    ]

    words = window_words(parse_chain("d⊗y", 1), TruncationWindow(1, 1, 0, 2))

    assert words == sorted(words)
    assert all(sum(key.weight for key in word) == 0 for word in words)


def test_laurent_normal_form() -> None:
    """Test reducing Laurent 1-cycles to multiples of `z^-1 (x) z`."""
    reference = laurent_reference()

    assert laurent_normal_form(reference) == (
        Fraction(1),
        Chain.zero(1, 2, laurent=True),
    )

    for text, coefficient in (("y^-2⊗y^2", 2), ("1⊗y*d", 0), ("y^-1⊗y + y⊗y^-1", 0)):
        cycle = parse_chain(text, 1, laurent=True)
        value, witness = laurent_normal_form(cycle)

        assert value == coefficient
        assert boundary(witness) == cycle - reference * coefficient

    result = extract_class(parse_chain("y^-3⊗y^3", 1, laurent=True), reference)

    assert result.coefficient == 3
    assert result.method == "normal-form"

    with pytest.raises(DomainError, match="one variable scalar 1-chain"):
        laurent_normal_form(generator_c2n(1, laurent=True))


def test_commutator_decompose() -> None:
    """Test writing operators as sums of commutators."""
    op = parse_operator("3*y^2*d + d^2 + 5", 1)
    pairs = commutator_decompose(op)

    assert pairs == [
        (WeylOp.derivative(1, 1), parse_operator("y^3*d + 5*y", 1)),
        (-WeylOp.variable(1, 1), parse_operator("1/3*d^3", 1)),
    ]
    assert boundary(commutator_chain(pairs)) == Chain.from_ops([op])

    with pytest.raises(DomainError, match="one variable"):
        commutator_decompose(WeylOp.variable(1, 2))

    with pytest.raises(DomainError, match="Laurent operators"):
        commutator_decompose(WeylOp.identity(1, laurent=True))

    with pytest.raises(DomainError, match="at least one pair"):
        commutator_chain([])


def test_class_exceptions() -> None:
    """Test rejecting inputs that can not be classified."""
    c2 = generator_c2n(1)

    with pytest.raises(DimensionMismatchError):
        extract_class(c2, generator_c2n(2))

    with pytest.raises(CalibrationError, match="reference cycle is a boundary"):
        extract_class(c2, boundary(parse_chain("y⊗d⊗y⊗d", 1)))

    with pytest.raises(DomainError, match="target is not a cycle"):
        express_as_boundary(parse_chain("d⊗y", 1))

    with pytest.raises(DimensionMismatchError, match="3 slots"):
        express_as_boundary(c2, TruncationWindow(2, 2, slots=3))
