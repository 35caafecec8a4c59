# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Tests for Grassmann extensions and twisting by Maurer-Cartan elements."""

import itertools
import math
import random
from fractions import Fraction

import pytest

from hochschild_lefschetz.algebra.base import check_axioms
from hochschild_lefschetz.algebra.grassmann import (
    GrassmannKey,
    GrassmannWeyl,
    merge_sign,
)
from hochschild_lefschetz.algebra.weyl import MonKey, WeylOp
from hochschild_lefschetz.exceptions import (
    DimensionMismatchError,
    DomainError,
    InconclusiveError,
    StructureError,
)
from hochschild_lefschetz.homology.linsolve import SparseEliminator, solve
from hochschild_lefschetz.homology.twist import (
    GradedChain,
    MCElement,
    bracket_correction,
    chain_differential,
    complete_maurer_cartan,
    graded_boundary,
    inverse_series,
    is_maurer_cartan,
    omega_power,
    shuffle,
    total_differential,
    twist_map,
    twist_series,
    twisted_algebra_differential,
    twisted_total_differential,
    untwist_map,
)
from hochschild_lefschetz.suites import random_graded_chain

Y = WeylOp.variable(1, 1)
D = WeylOp.derivative(1, 1)
Y_KEY = MonKey((1,), (0,))


def _omega(algebra: GrassmannWeyl, u: WeylOp) -> MCElement[GrassmannKey]:
    return MCElement(algebra, algebra.element({(1,): u, (2,): D + u}))


def _letter(
    algebra: GrassmannWeyl, generators: tuple[int, ...], op: WeylOp
) -> dict[GrassmannKey, Fraction]:
    return algebra.element({generators: op})


@pytest.mark.parametrize(
    ("left", "right", "sign"),
    [
        (0b01, 0b10, 1),
        (0b10, 0b01, -1),
        (0b01, 0b01, 0),
        (0b011, 0b100, 1),
        (0b110, 0b001, 1),
    ],
)
def test_merge_sign(left: int, right: int, sign: int) -> None:
    """Test the sign of multiplying Grassmann monomials."""
    assert merge_sign(left, right) == sign


def test_grassmann_axioms() -> None:
    """Test the differential graded algebra axioms on a few basis elements."""
    algebra = GrassmannWeyl(2, 1)
    keys = [
        (0b00, MonKey((1,), (0,))),
        (0b01, MonKey((0,), (1,))),
        (0b10, MonKey((1,), (1,))),
        (0b11, MonKey((2,), (0,))),
    ]

    assert not check_axioms(algebra, keys)
    assert algebra.differential((0b00, MonKey((1,), (0,)))) == {
        (0b01, MonKey.constant(1)): Fraction(1)
    }
    assert algebra.component(algebra.unit(), ()) == WeylOp.identity(1)


def test_grassmann_exceptions() -> None:
    """Test rejecting inner elements that do not give a differential."""
    with pytest.raises(StructureError, match="not odd"):
        GrassmannWeyl(2, 1, kappa={(0b11, MonKey.constant(1)): 1})

    with pytest.raises(StructureError, match="does not square to 0"):
        GrassmannWeyl(
            2, 1, kappa={(0b01, MonKey((1,), (0,))): 1, (0b10, MonKey((0,), (1,))): 1}
        )

    with pytest.raises(DomainError, match="not an increasing tuple"):
        GrassmannWeyl(2, 1).element({(2, 1): Y})

    with pytest.raises(DomainError, match="not an operator"):
        GrassmannWeyl(2, 1).element({(1,): WeylOp.variable(1, 2)})


def test_maurer_cartan_elements() -> None:
    """Test recognizing elements with vanishing curvature."""
    algebra = GrassmannWeyl(2, 1)
    omega = _omega(algebra, Y)

    assert is_maurer_cartan(algebra, omega.element)
    assert is_maurer_cartan(algebra, _letter(algebra, (1,), Y**3))
    assert not is_maurer_cartan(algebra, _letter(algebra, (), Y))
    assert not is_maurer_cartan(algebra, algebra.element({(1,): Y, (2,): Y}))

    with pytest.raises(StructureError, match="not a Maurer-Cartan element"):
        MCElement(algebra, algebra.element({(1,): Y, (2,): Y}))


def test_differentials_square_to_zero() -> None:
    """Test that the total differentials square to zero on mixed words."""
    algebra = GrassmannWeyl(2, 1)
    omega = _omega(algebra, Y * D)
    words = [
        GradedChain.word(algebra, [_letter(algebra, (1,), Y), _letter(algebra, (), D)]),
        GradedChain.word(
            algebra,
            [
                _letter(algebra, (2,), Y**2),
                _letter(algebra, (1,), D),
                _letter(algebra, (), Y * D),
            ],
        ),
        GradedChain.word(algebra, [_letter(algebra, (1, 2), Y)]),
    ]

    for c in words:
        assert graded_boundary(graded_boundary(c)).is_zero()
        assert total_differential(total_differential(c)).is_zero()
        assert twisted_total_differential(
            twisted_total_differential(c, omega), omega
        ).is_zero()

        for key in {key for word in c.terms for key in word}:
            letter = {key: Fraction(1)}
            twice = twisted_algebra_differential(
                algebra,
                omega.element,
                twisted_algebra_differential(algebra, omega.element, letter),
            )

            assert not twice


def test_powers_of_omega() -> None:
    """Test the boundary and shuffle products of the words `(1, omega, ..., omega)`."""
    algebra = GrassmannWeyl(2, 1)
    omega = _omega(algebra, Y)

    assert omega_power(omega, -1).is_zero()
    assert omega_power(omega, 0) == GradedChain.word(algebra, [algebra.unit()])
    assert len(omega_power(omega, 2).terms) == 9

    for k in range(1, 4):
        assert graded_boundary(omega_power(omega, k)) == chain_differential(
            omega_power(omega, k - 1)
        )

    for total in range(5):
        for k in range(total + 1):
            assert shuffle(
                omega_power(omega, k), omega_power(omega, total - k)
            ) == omega_power(omega, total) * math.comb(total, k)


def test_inverse_series() -> None:
    """Test that the alternating series is the shuffle inverse of the plain one."""
    algebra = GrassmannWeyl(2, 1)
    omega = _omega(algebra, Y**2)
    top = 3
    product = shuffle(twist_series(omega, top), inverse_series(omega, top))

    assert product.truncate(top) == GradedChain.word(algebra, [algebra.unit()])
    assert product.max_tensor_degree() == 2 * top


def test_twist_maps() -> None:
    """Test that twisting is invertible and a chain map below the top degree."""
    algebra = GrassmannWeyl(2, 1)
    omegas = [_omega(algebra, u) for u in (Y, Y**2, Y * D)]
    rng = random.Random(2026)
    top = 3

    for index in range(50):
        omega = omegas[index % len(omegas)]
        c = random_graded_chain(rng, algebra)

        assert untwist_map(twist_map(c, omega, top), omega, top) == c.truncate(top)
        assert twist_map(untwist_map(c, omega, top), omega, top) == c.truncate(top)

        left = total_differential(twist_map(c, omega, top)).truncate(top - 1)
        right = twist_map(twisted_total_differential(c, omega), omega, top)

        assert left == right.truncate(top - 1)


@pytest.mark.parametrize("u", [Y, Y**2, Y * D])
def test_bracket_correction(u: WeylOp) -> None:
    """Test expanding the boundary of a shuffle with omega through brackets."""
    algebra = GrassmannWeyl(2, 1)
    omega = _omega(algebra, u)
    letters = [
        _letter(algebra, (), Y),
        _letter(algebra, (), D),
        _letter(algebra, (1,), Y),
        _letter(algebra, (2,), D),
        _letter(algebra, (1,), D),
        _letter(algebra, (1, 2), Y),
    ]

    for first, second in itertools.product(letters, repeat=2):
        c = GradedChain.word(algebra, [first, second])

        for k in range(1, 4):
            expected = graded_boundary(shuffle(c, omega_power(omega, k)))

            assert bracket_correction(c, omega, k) == expected


def test_bracket_correction_odd_letters() -> None:
    """Test the sign of the boundary of `(1, omega, ..., omega)` on odd words."""
    algebra = GrassmannWeyl(2, 1)
    omega = _omega(algebra, Y)
    odd = GradedChain.word(algebra, [_letter(algebra, (1,), Y)])
    mixed = GradedChain.word(
        algebra,
        [_letter(algebra, (), D), _letter(algebra, (2,), Y), _letter(algebra, (1,), D)],
    )
    rng = random.Random(7)

    assert not graded_boundary(omega_power(omega, 2)).is_zero()

    for c in (odd, mixed, *(random_graded_chain(rng, algebra) for _ in range(20))):
        for k in range(4):
            expected = graded_boundary(shuffle(c, omega_power(omega, k)))

            assert bracket_correction(c, omega, k) == expected


def test_twist_exceptions() -> None:
    """Test rejecting chains and elements of different algebras."""
    algebra = GrassmannWeyl(2, 1)
    omega = _omega(algebra, Y)
    c = GradedChain.word(algebra, [_letter(algebra, (1,), Y)])

    with pytest.raises(DomainError, match="must be non-negative"):
        twist_map(c, omega, -1)

    with pytest.raises(DimensionMismatchError):
        twist_map(GradedChain.word(GrassmannWeyl(1, 1), [{(0, Y_KEY): 1}]), omega, 2)

    with pytest.raises(DomainError, match="not normalized"):
        GradedChain(algebra, {((0, Y_KEY), (0, MonKey.constant(1))): 1})

    assert GradedChain.word(
        algebra, [_letter(algebra, (), Y), algebra.unit()]
    ).is_zero()


@pytest.mark.parametrize(
    ("u", "v"),
    [(Y, D + Y), (Y**2, D + Y**2), (Y * D, D + Y * D), (D, D)],
)
def test_complete_maurer_cartan(u: WeylOp, v: WeylOp) -> None:
    """Test finding the second component of a Maurer-Cartan element."""
    algebra = GrassmannWeyl(2, 1)
    omega = complete_maurer_cartan(algebra, u, max_degree=2, max_order=2)

    assert algebra.component(omega.element, (1,)) == u
    assert algebra.component(omega.element, (2,)) == v


def test_complete_maurer_cartan_exceptions() -> None:
    """Test the cases where no completion is searched for or found."""
    with pytest.raises(DomainError, match="exactly two generators"):
        complete_maurer_cartan(GrassmannWeyl(1, 1), Y)

    with pytest.raises(
        InconclusiveError, match="No Maurer-Cartan completion"
    ) as exc_info:
        complete_maurer_cartan(GrassmannWeyl(2, 1), Y, max_degree=0, max_order=0)

    assert exc_info.value.windows == ((0, 0),)


def test_solve() -> None:
    """Test solving sparse systems exactly."""
    columns = [
        ("a", {"r1": Fraction(1), "r2": Fraction(1)}),
        ("b", {"r2": Fraction(1), "r3": Fraction(2)}),
    ]
    target = {"r1": Fraction(1), "r2": Fraction(2), "r3": Fraction(2)}

    solution, stats = solve(columns, target)

    assert solution == {"a": 1, "b": 1}
    assert stats.to_report() == {"rows": 3, "columns": 2, "nnz": 4, "rank": 2}

    solution, _ = solve(columns, {"r1": Fraction(1, 2), "r2": Fraction(1, 2)})

    assert solution == {"a": Fraction(1, 2)}

    solution, _ = solve(columns, {"r3": Fraction(1)})

    assert solution is None


def test_sparse_eliminator() -> None:
    """Test that dependent columns do not raise the rank and residuals are canonical."""
    eliminator: SparseEliminator[str, str] = SparseEliminator()

    assert eliminator.add_column("a", {"r1": Fraction(2), "r2": Fraction(4)})
    assert not eliminator.add_column("b", {"r1": Fraction(1), "r2": Fraction(2)})
    assert eliminator.add_column("c", {"r2": Fraction(1, 3)})
    assert eliminator.rank == 2

    reduction = eliminator.reduce({"r1": Fraction(1), "r3": Fraction(5)})

    assert not reduction.in_span
    assert reduction.residual == {"r3": Fraction(5)}
    assert reduction.solution == {"a": Fraction(1, 2), "c": Fraction(-6)}
