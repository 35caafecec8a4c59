# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Hochschild classes of Weyl algebra cycles.

A cycle is split as `cycle = lambda * reference + b(witness)`. Components of non-zero
Euler weight are exact through the Cartan formula and are removed first. The rest is
solved exactly inside a finite truncation window of words, which grows on failure. An
unsolvable window is a verdict about that window only.

For one variable Laurent cycles of degree 1 there is also a constructive normal form
that reduces every cycle to a multiple of `z^-1 (x) z`.
"""

from __future__ import annotations

import hashlib
import itertools
import logging
from collections.abc import Iterator, Sequence
from fractions import Fraction
from typing import Any, Literal

import attrs

from hochschild_lefschetz.algebra.weyl import MonKey, WeylOp
from hochschild_lefschetz.exceptions import (
    CalibrationError,
    DimensionMismatchError,
    DomainError,
    InconclusiveError,
    StructureError,
)
from hochschild_lefschetz.homology._syntax import format_chain
from hochschild_lefschetz.homology.hochschild import (
    Chain,
    ChainWord,
    boundary,
    insertion,
    reduce_slot,
)
from hochschild_lefschetz.homology.linsolve import SolverStats, SparseEliminator

logger = logging.getLogger(__name__)

type Method = Literal["zero", "euler", "linear", "normal-form"]
"""How a class coefficient was found."""


@attrs.frozen
class TruncationWindow:
    """Bounds on the words a witness may use.

    Degree and order are summed over the slots of a word. The Laurent bound caps the
    size of every single exponent.
    """

    degree: int = attrs.field(validator=attrs.validators.ge(0))
    order: int = attrs.field(validator=attrs.validators.ge(0))
    laurent: int = attrs.field(default=0, validator=attrs.validators.ge(0))
    slots: int = attrs.field(default=2, validator=attrs.validators.ge(1))
    """The number of slots of a witness word."""

    @classmethod
    def covering(cls, *chains: Chain) -> TruncationWindow:
        """Return the smallest window that contains the chains and their witnesses."""
        degree = order = laurent = slots = 0

        for chain in chains:
            chain_degree, chain_order, chain_laurent = chain.bounds()
            degree = max(degree, chain_degree)
            order = max(order, chain_order)
            laurent = max(laurent, chain_laurent)
            slots = max(slots, chain.degree + 2)

        return cls(degree, order, laurent, max(slots, 1))

    def contains(self, chain: Chain) -> bool:
        degree, order, laurent = chain.bounds()

        return (
            degree <= self.degree
            and order <= self.order
            and laurent <= self.laurent
            and (chain.is_zero() or chain.degree + 1 <= self.slots)
        )

    def to_report(self) -> dict[str, int]:
        return {
            "degree": self.degree,
            "order": self.order,
            "laurent": self.laurent,
            "slots": self.slots,
        }


@attrs.frozen
class GrowthSchedule:
    """How a window grows after an unsolvable round."""

    step: int = attrs.field(default=2, validator=attrs.validators.ge(0))
    """Added to the degree and order bounds."""
    laurent_factor: int = attrs.field(default=2, validator=attrs.validators.ge(1))
    """Multiplies the Laurent bound."""
    rounds: int = attrs.field(default=4, validator=attrs.validators.ge(1))
    """The number of windows tried, the first one included."""

    def windows(self, start: TruncationWindow) -> Iterator[TruncationWindow]:
        window = start

        for _ in range(self.rounds):
            yield window
            window = attrs.evolve(
                window,
                degree=window.degree + self.step,
                order=window.order + self.step,
                laurent=window.laurent * self.laurent_factor,
            )


@attrs.frozen
class BoundaryVerdict:
    """The outcome of `express_as_boundary` over one or more windows."""

    witness: Chain | None
    """A chain whose boundary is the target, or `None` if no window had one."""
    windows: tuple[TruncationWindow, ...]
    stats: tuple[SolverStats, ...]
    """The size of the linear system of every window tried."""

    @property
    def solvable(self) -> bool:
        return self.witness is not None

    @property
    def stable_rank_defect(self) -> bool:
        """Whether the target stayed outside the image of two or more windows."""
        return self.witness is None and len(self.windows) >= 2  # noqa: PLR2004

    def to_report(self) -> dict[str, Any]:
        return {
            "solvable": self.solvable,
            "stable_rank_defect": self.stable_rank_defect,
            "windows": [window.to_report() for window in self.windows],
            "solver": [stats.to_report() for stats in self.stats],
            "witness_sha256": (
                None if self.witness is None else witness_hash(self.witness)
            ),
        }


@attrs.frozen
class ClassResult:
    """A verified split `cycle = coefficient * reference + b(witness)`."""

    coefficient: Fraction
    witness: Chain
    method: Method
    window: TruncationWindow | None = None
    """The window the coefficient was found in, if a linear system was solved."""
    stats: SolverStats | None = None

    def to_report(self) -> dict[str, Any]:
        return {
            "lambda": str(self.coefficient),
            "method": self.method,
            "window": None if self.window is None else self.window.to_report(),
            "solver": None if self.stats is None else self.stats.to_report(),
            "witness_terms": len(self.witness.terms),
            "witness_sha256": witness_hash(self.witness),
        }


def witness_hash(witness: Chain) -> str:
    """Return the SHA-256 of the canonical text of a chain."""
    return hashlib.sha256(format_chain(witness).encode()).hexdigest()


# Commutators


def commutator_decompose(op: WeylOp) -> list[tuple[WeylOp, WeylOp]]:
    """Write a one variable operator as a sum of commutators `[x_i, y_i]`.

    Monomials `y^a d^b` with `a > 0` become `[d, y^(a+1) d^b / (a+1)]`, monomials `d^b`
    become `[-y, d^(b+1) / (b+1)]` and constants `c` become `[d, c y]`.

    Returns:
        At most two pairs, grouped by their first entry.

    Raises:
        DomainError: The operator has several variables, matrix entries or Laurent
            coefficients.
    """
    if op.n != 1 or op.r != 1:
        raise DomainError("Commutator decompositions need one variable and r = 1.")

    if op.laurent:
        raise DomainError("Laurent operators are not sums of commutators in general.")

    derivative_side: dict[MonKey, Fraction] = {}
    variable_side: dict[MonKey, Fraction] = {}

    for key, value in op.terms.items():
        ((a,), (b,)) = key.alpha, key.beta

        if a > 0 or b == 0:
            derivative_side[MonKey((a + 1,), (b,))] = value / (a + 1)
        else:
            variable_side[MonKey((0,), (b + 1,))] = value / (b + 1)

    pairs: list[tuple[WeylOp, WeylOp]] = []

    if derivative_side:
        pairs.append((WeylOp.derivative(1, 1), WeylOp(1, terms=derivative_side)))

    if variable_side:
        pairs.append((-WeylOp.variable(1, 1), WeylOp(1, terms=variable_side)))

    return pairs


def commutator_chain(pairs: Sequence[tuple[WeylOp, WeylOp]]) -> Chain:
    """Return the 1-chain `sum x_i (x) y_i`, whose boundary is `sum [x_i, y_i]`."""
    if not pairs:
        raise DomainError("A commutator chain needs at least one pair.")

    chain = Chain.from_ops(pairs[0])

    for pair in pairs[1:]:
        chain += Chain.from_ops(pair)

    return chain


# Cartan homotopy


def euler_homotopy(cycle: Chain) -> Chain:
    """Return a witness for the components of a cycle with non-zero Euler weight.

    The Lie action of the Euler operator multiplies a component of weight `w` by `w`, so
    by the Cartan formula `i_E(c_w) / w` bounds it. Weight zero components are ignored.
    """
    euler = WeylOp.euler(cycle.n, cycle.r, laurent=cycle.laurent)
    witness = Chain.zero(cycle.n, cycle.degree + 1, cycle.r, laurent=cycle.laurent)

    for weight, part in cycle.weight_components().items():
        if weight:
            witness += insertion(euler, part) / weight

    return witness


def _weight_zero(chain: Chain) -> Chain:
    return chain.weight_components().get(
        0, Chain.zero(chain.n, chain.degree, chain.r, laurent=chain.laurent)
    )


def _check_cycle(chain: Chain, name: str) -> None:
    if chain.degree and not boundary(chain).is_zero():
        raise DomainError(f"The {name} is not a cycle.")


def _verify(witness: Chain, expected: Chain) -> None:
    if boundary(witness) != expected:
        raise StructureError(
            "The boundary of the witness does not reproduce the target. The linear "
            "solver returned a wrong solution."
        )


# Windowed solver


def _slot_monomials(
    chain: Chain, window: TruncationWindow, *, first: bool
) -> list[MonKey]:
    n, r = chain.n, chain.r
    lowest = -window.laurent if chain.laurent else 0
    exponent_range = range(lowest, max(window.degree, window.laurent) + 1)
    keys: list[MonKey] = []

    for alpha in itertools.product(exponent_range, repeat=n):
        if sum(abs(a) for a in alpha) > window.degree:
            continue

        if chain.laurent and any(abs(a) > window.laurent for a in alpha):
            continue

        for beta in itertools.product(range(window.order + 1), repeat=n):
            if sum(beta) > window.order:
                continue

            for row, col in itertools.product(range(r), repeat=2):
                key = MonKey(alpha, beta, row, col)

                if first or reduce_slot(key, r) == ((key, Fraction(1)),):
                    keys.append(key)

    return sorted(keys)


def window_words(chain: Chain, window: TruncationWindow) -> list[ChainWord]:
    """Return the sorted words of Euler weight zero inside a window.

    The words have `window.slots` slots and the normalization, variable count and
    matrix size of `chain`.
    """
    first = _slot_monomials(chain, window, first=True)
    rest = _slot_monomials(chain, window, first=False)
    words: list[ChainWord] = []

    def extend(word: tuple[MonKey, ...], degree: int, order: int, weight: int) -> None:
        if len(word) == window.slots:
            if not weight:
                words.append(word)

            return

        for key in rest if word else first:
            if (
                degree + key.degree <= window.degree
                and order + key.order <= window.order
            ):
                extend(
                    (*word, key),
                    degree + key.degree,
                    order + key.order,
                    weight + key.weight,
                )

    extend((), 0, 0, 0)

    return words


def _eliminator(
    chain: Chain, window: TruncationWindow
) -> SparseEliminator[ChainWord, ChainWord]:
    eliminator: SparseEliminator[ChainWord, ChainWord] = SparseEliminator()
    eliminator.add_columns(
        (
            word,
            boundary(
                Chain(chain.n, window.slots - 1, chain.r, chain.laurent, {word: 1})
            ).terms,
        )
        for word in window_words(chain, window)
    )

    return eliminator


def _check_window(chain: Chain, window: TruncationWindow) -> None:
    if window.slots != chain.degree + 2:
        raise DimensionMismatchError(
            f"A window with {window.slots} slots does not hold witnesses of a "
            f"{chain.degree}-chain."
        )


def express_as_boundary(
    target: Chain,
    window: TruncationWindow | None = None,
    growth: GrowthSchedule | None = None,
) -> BoundaryVerdict:
    """Find a witness whose boundary is the target.

    Arguments:
        target: A cycle.
        window: The first window to solve in. Defaults to the window covering the
            target.
        growth: How to grow the window after a failure. Only the first window is tried
            if this is `None`.

    Returns:
        The verdict, with a witness whose boundary was verified exactly, or the windows
        in which no witness exists.

    Raises:
        DomainError: The target is not a cycle.
        DimensionMismatchError: The window has the wrong number of slots.
    """
    _check_cycle(target, "target")
    start = window or TruncationWindow.covering(target)
    _check_window(target, start)
    windows = (growth or GrowthSchedule(rounds=1)).windows(start)

    if target.is_zero():
        return BoundaryVerdict(
            Chain.zero(target.n, target.degree + 1, target.r, laurent=target.laurent),
            (start,),
            (),
        )

    peeled = euler_homotopy(target)
    remainder = _weight_zero(target)
    tried: list[TruncationWindow] = []
    stats: list[SolverStats] = []

    for current in windows:
        tried.append(current)
        eliminator = _eliminator(target, current)
        reduction = eliminator.reduce(remainder.terms)
        stats.append(eliminator.stats())
        logger.info("Window %s: %s", current, stats[-1])

        if reduction.in_span:
            solved = Chain(
                target.n,
                target.degree + 1,
                target.r,
                target.laurent,
                reduction.solution,
            )
            witness = peeled + solved
            _verify(witness, target)

            return BoundaryVerdict(witness, tuple(tried), tuple(stats))

    return BoundaryVerdict(None, tuple(tried), tuple(stats))


# Class extraction


def extract_class(
    cycle: Chain,
    reference: Chain,
    window: TruncationWindow | None = None,
    growth: GrowthSchedule | None = None,
) -> ClassResult:
    """Find `lambda` and a witness with `cycle - lambda * reference = b(witness)`.

    One variable Laurent cycles of degree 1 are first reduced with
    `laurent_normal_form`. Everything else is solved in growing truncation windows.
    Every result is verified by exact chain arithmetic before it is returned.

    Arguments:
        cycle: The cycle to classify.
        reference: A cycle of the same degree that represents a non-zero class.
        window: The first window. Defaults to the window covering both cycles.
        growth: The growth schedule. Defaults to `GrowthSchedule()`.

    Raises:
        DomainError: An input is not a cycle.
        DimensionMismatchError: The cycles have different degrees or signatures.
        CalibrationError: The reference is a boundary inside the window.
        InconclusiveError: No window of the growth schedule decides the class.
    """
    if (cycle.signature, cycle.degree) != (reference.signature, reference.degree):
        raise DimensionMismatchError("The cycle and the reference do not match.")

    _check_cycle(cycle, "cycle")
    _check_cycle(reference, "reference")
    empty = Chain.zero(cycle.n, cycle.degree + 1, cycle.r, laurent=cycle.laurent)

    if cycle.is_zero():
        return ClassResult(Fraction(0), empty, "zero")

    if not _weight_zero(cycle).terms:
        witness = euler_homotopy(cycle)
        _verify(witness, cycle)

        return ClassResult(Fraction(0), witness, "euler")

    if _has_normal_form(cycle):
        try:
            return _extract_by_normal_form(cycle, reference)
        except StructureError:
            logger.warning("The normal form failed, falling back to linear solving")

    return _extract_by_windows(cycle, reference, window, growth or GrowthSchedule())


def _has_normal_form(cycle: Chain) -> bool:
    return (cycle.n, cycle.r, cycle.degree, cycle.laurent) == (1, 1, 1, True)


def _extract_by_normal_form(cycle: Chain, reference: Chain) -> ClassResult:
    value, witness = laurent_normal_form(cycle)
    reference_value, reference_witness = laurent_normal_form(reference)

    if not reference_value:
        raise CalibrationError("The reference cycle is a boundary.")

    coefficient = value / reference_value
    witness -= reference_witness * coefficient
    _verify(witness, cycle - reference * coefficient)

    return ClassResult(coefficient, witness, "normal-form")


def _extract_by_windows(
    cycle: Chain,
    reference: Chain,
    window: TruncationWindow | None,
    growth: GrowthSchedule,
) -> ClassResult:
    start = window or TruncationWindow.covering(cycle, reference)
    _check_window(cycle, start)
    peeled = euler_homotopy(cycle)
    reference_peeled = euler_homotopy(reference)
    remainder = _weight_zero(cycle)
    reference_remainder = _weight_zero(reference)
    tried: list[TruncationWindow] = []

    for current in growth.windows(start):
        tried.append(current)
        eliminator = _eliminator(cycle, current)
        reduced = eliminator.reduce(remainder.terms)
        reference_reduced = eliminator.reduce(reference_remainder.terms)
        stats = eliminator.stats()
        logger.info("Window %s: %s", current, stats)

        if reference_reduced.in_span:
            raise CalibrationError(
                f"The reference cycle is a boundary inside the window {current}."
            )

        pivot = min(reference_reduced.residual)
        coefficient = reduced.residual.get(pivot, Fraction(0)) / (
            reference_reduced.residual[pivot]
        )
        keys = reduced.residual.keys() | reference_reduced.residual.keys()

        if any(
            reduced.residual.get(key, 0)
            != coefficient * reference_reduced.residual.get(key, 0)
            for key in keys
        ):
            continue

        solution = dict(reduced.solution)

        for key, value in reference_reduced.solution.items():
            solution[key] = solution.get(key, Fraction(0)) - coefficient * value

        witness = (
            peeled
            - reference_peeled * coefficient
            + Chain(cycle.n, cycle.degree + 1, cycle.r, cycle.laurent, solution)
        )
        _verify(witness, cycle - reference * coefficient)

        return ClassResult(coefficient, witness, "linear", current, stats)

    raise InconclusiveError(
        "No truncation window of the growth schedule decides the class.", tried
    )


# Laurent normal form

_Z = MonKey((1,), (0,))
_ZI = MonKey((-1,), (0,))
_D = MonKey((0,), (1,))
_T = MonKey((1,), (1,))
_LETTERS = frozenset({_Z, _ZI, _D, _T})


def _op(key: MonKey) -> WeylOp:
    return WeylOp.monomial(key, laurent=True)


def _factor(key: MonKey) -> tuple[MonKey, MonKey]:
    """Split a monomial into a letter times a shorter monomial."""
    ((a,), (b,)) = key.alpha, key.beta

    if a > 0:
        return _Z, MonKey((a - 1,), (b,))

    if a < 0:
        return _ZI, MonKey((a + 1,), (b,))

    return _D, MonKey((0,), (b - 1,))


def laurent_normal_form(cycle: Chain) -> tuple[Fraction, Chain]:
    """Reduce a one variable Laurent 1-cycle to `c * (z^-1 (x) z) + b(witness)`.

    Second slots are first factored into the letters `z`, `z^-1`, `d` and `z d`. Then
    `d` and `z^-1` tails are rewritten into `z d` and `z` tails, and the `z d` tails
    are removed by an explicit homotopy. What is left must be a multiple of
    `z^-1 (x) z`.

    Returns:
        The coefficient `c` and a verified witness.

    Raises:
        DomainError: The chain is not a one variable scalar Laurent 1-cycle.
        StructureError: The reduction did not end in a multiple of `z^-1 (x) z`.
    """
    if (cycle.n, cycle.r, cycle.degree) != (1, 1, 1):
        raise DomainError("The normal form needs a one variable scalar 1-chain.")

    _check_cycle(cycle, "cycle")
    cycle = cycle.as_laurent()
    witness = euler_homotopy(cycle)
    residual = _weight_zero(cycle)

    def subtract_boundary(step: Chain) -> None:
        nonlocal residual, witness
        residual -= boundary(step)
        witness += step

    # Factor every second slot into letters.
    while True:
        word = next((w for w in sorted(residual.terms) if w[1] not in _LETTERS), None)

        if word is None:
            break

        u, v = _factor(word[1])
        subtract_boundary(
            Chain.from_ops([_op(word[0]), _op(u), _op(v)], -residual.terms[word])
        )

    for word, value in sorted(residual.terms.items()):
        if word[1] == _D:
            subtract_boundary(Chain.from_ops([_op(word[0]), _op(_ZI), _op(_T)], -value))

    for word, value in sorted(residual.terms.items()):
        if word[1] == _ZI:
            x = _op(word[0]) * _op(_ZI)
            subtract_boundary(Chain.from_ops([x, _op(_Z), _op(_ZI)], value))

    # For e = z d, h(e - 1) - h(e) = p(e) and g = h z^-1 the tails p (x) e are the
    # boundary of (g, e, z) - (g, z, e).
    tails = {word[0]: value for word, value in residual.terms.items() if word[1] == _T}

    if tails:
        theta = _op(_T)
        h = WeylOp.zero(1, laurent=True)

        for key, value in tails.items():
            if key.weight:
                raise StructureError(f"The tail {key} of weight {key.weight} remains.")

            h -= (theta + WeylOp.identity(1, laurent=True)) * _op(key) * (
                value / (key.order + 1)
            )

        g = h * _op(_ZI)
        subtract_boundary(
            Chain.from_ops([g, theta, _op(_Z)]) - Chain.from_ops([g, _op(_Z), theta])
        )

    coefficient = residual.terms.get((_ZI, _Z), Fraction(0))
    expected = Chain.from_ops([_op(_ZI), _op(_Z)], coefficient)

    if residual != expected:
        raise StructureError(f"The normal form left the chain {residual}.")

    _verify(witness, cycle - expected)

    return coefficient, witness


def laurent_reference() -> Chain:
    """Return the 1-cycle `z^-1 (x) z` of the one variable Laurent Weyl algebra."""
    return Chain.from_ops([_op(_ZI), _op(_Z)])
