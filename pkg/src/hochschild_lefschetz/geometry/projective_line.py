# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Global differential operators on the line bundles `O(k)` of the projective line.

The line is covered by the charts `U0 = {z}` and `U1 = {w}` with `w = 1 / z`. A section
`f(z)` on `U0` corresponds to `g(w) = w^k f(1 / w)` on `U1`, so an operator `D` on `U0`
becomes `w^k T(D) w^-k` on `U1`, where `T` substitutes `z = w^-1` and `dz = -w^2 dw`.
The operator is global when that expression has polynomial coefficients.

The Lefschetz number is the supertrace of `D` on `H^0 (+) H^1`. The local class is the
Hochschild class of the Cech difference of the commutator decompositions on both charts,
a 1-cycle of the Laurent Weyl algebra on the overlap.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from typing import Any

import attrs

from hochschild_lefschetz.algebra._syntax import format_operator, parse_operator
from hochschild_lefschetz.algebra.weyl import MonKey, Section, WeylOp, apply
from hochschild_lefschetz.exceptions import (
    CalibrationError,
    DimensionMismatchError,
    DomainError,
    InconclusiveError,
    StructureError,
)
from hochschild_lefschetz.homology.classes import (
    ClassResult,
    GrowthSchedule,
    TruncationWindow,
    commutator_chain,
    commutator_decompose,
    extract_class,
    laurent_reference,
    witness_hash,
)
from hochschild_lefschetz.homology.hochschild import Chain, boundary
from hochschild_lefschetz.typing import Status

logger = logging.getLogger(__name__)

ORACLE_SECTIONS = 7
"""The least number of section monomials the globality oracle acts on."""

MIN_FAMILY = 3
"""The smallest family whose Lefschetz numbers can test proportionality."""


# Chart transitions


@lru_cache(maxsize=1024)
def _transform_monomial(key: MonKey, k: int) -> WeylOp:
    ((a,), (b,)) = key.alpha, key.beta
    derivative = WeylOp(1, 1, True, {MonKey((2,), (1,)): Fraction(-1)})
    image = WeylOp.variable(1, 1, -a, laurent=True) * derivative**b

    return (
        WeylOp.variable(1, 1, k, laurent=True)
        * image
        * WeylOp.variable(1, 1, -k, laurent=True)
    )


def _check_line_operator(op: WeylOp) -> None:
    if op.n != 1 or op.r != 1:
        raise DomainError(
            "Operators on the projective line have one variable and r = 1."
        )


def transform_to_chart1(op: WeylOp, k: int) -> WeylOp:
    """Rewrite an operator in `(z, dz)` as the same operator on `O(k)` in `(w, dw)`.

    The transition is an algebra homomorphism and the result may have negative
    exponents.

    Raises:
        DomainError: The operator does not have one variable and `r = 1`.
    """
    _check_line_operator(op)
    result = WeylOp.zero(1, laurent=True)

    for key, value in op.terms.items():
        result += _transform_monomial(key, k) * value

    return result


def transform_from_chart1(op: WeylOp, k: int) -> WeylOp:
    """Rewrite an operator in `(w, dw)` as the same operator in `(z, dz)`.

    `z = 1 / w` and the section rule `f(z) = z^k g(1 / z)` have the same shape as the
    forward transition, so the transition is its own inverse.

    Raises:
        DomainError: The operator does not have one variable and `r = 1`.
    """
    return transform_to_chart1(op, k)


def _chart1_image(section: Section, k: int) -> Section:
    terms = {((k - e,), 0): value for ((e,), _), value in section.terms.items()}

    return Section(1, 1, True, terms)


def is_global(op: WeylOp, k: int, count: int | None = None) -> bool:
    """Decide whether an operator on `U0` extends to `O(k)` by acting on sections.

    Every monomial `w^j` of `U1` is the section `z^(k-j)` of `U0`. The operator is
    applied there and the image is read back in `w`. The operator is global when every
    image is a polynomial. A non polynomial coefficient of weight `s` shows up on `w^j`
    for all but finitely many `j`, so `count` is at least twice the order plus two.

    Raises:
        DomainError: The operator does not have one variable and `r = 1`.
        StructureError: The images disagree with `transform_to_chart1`.
    """
    _check_line_operator(op)
    chart0 = op.as_laurent()
    chart1 = transform_to_chart1(op, k)
    count = max(count or ORACLE_SECTIONS, 2 * op.order() + 2)
    polynomial = True

    for j in range(count):
        image = _chart1_image(
            apply(chart0, Section.monomial((k - j,), laurent=True)), k
        )

        if image != apply(chart1, Section.monomial((j,), laurent=True)):
            raise StructureError(
                f"The action of {op} on w^{j} does not match its chart transition."
            )

        polynomial &= all(e >= 0 for ((e,), _) in image.terms)

    return polynomial


# Global operators


@attrs.frozen
class GlobalOpP1:
    """An operator on `O(k)` given by its expressions on both charts."""

    k: int
    """The degree of the line bundle."""
    chart0: WeylOp
    """The operator in `(z, dz)`, a polynomial operator."""
    chart1: WeylOp
    """The operator in `(w, dw)`, a Laurent operator."""
    certificate: bool
    """Whether the section oracle found the operator global."""

    @classmethod
    def from_chart0(cls, op: WeylOp, k: int) -> GlobalOpP1:
        """Build both chart expressions of an operator on `U0`.

        Raises:
            DomainError: The operator does not have one variable, `r = 1` and
                polynomial coefficients.
            StructureError: The section oracle and the transition disagree on whether
                the operator is global.
        """
        _check_line_operator(op)
        chart0 = op.as_polynomial()
        chart1 = transform_to_chart1(chart0, k)
        certificate = is_global(chart0, k)
        polynomial = all(a >= 0 for key in chart1.terms for a in key.alpha)

        if certificate != polynomial:
            raise StructureError(
                f"The section oracle and the transition disagree about {op}."
            )

        return cls(k, chart0, chart1, certificate)

    @classmethod
    def parse(cls, text: str, k: int) -> GlobalOpP1:
        """Parse an operator in the variable `z` and derivative `d`."""
        return cls.from_chart0(parse_operator(text, 1), k)

    @property
    def is_global(self) -> bool:
        return self.certificate

    def __str__(self) -> str:
        return format_operator(self.chart0, "z")

    def __add__(self, other: GlobalOpP1) -> GlobalOpP1:
        self._check_compatible(other)

        return GlobalOpP1.from_chart0(self.chart0 + other.chart0, self.k)

    def __sub__(self, other: GlobalOpP1) -> GlobalOpP1:
        self._check_compatible(other)

        return GlobalOpP1.from_chart0(self.chart0 - other.chart0, self.k)

    def __mul__(self, other: GlobalOpP1 | Fraction | int) -> GlobalOpP1:
        if isinstance(other, GlobalOpP1):
            self._check_compatible(other)

            return GlobalOpP1.from_chart0(self.chart0 * other.chart0, self.k)

        return GlobalOpP1.from_chart0(self.chart0 * other, self.k)

    def __rmul__(self, other: Fraction | int) -> GlobalOpP1:
        return self * other

    def _check_compatible(self, other: GlobalOpP1) -> None:
        if self.k != other.k:
            raise DimensionMismatchError(
                f"Operators on O({self.k}) and O({other.k}) can not be combined."
            )


def _require_global(op: GlobalOpP1) -> None:
    if not op.is_global:
        raise DomainError(f"{op} is not a global operator on O({op.k}).")


# Cohomology


@attrs.frozen
class CohP1:
    """The cohomology of `O(k)` on the projective line in monomial bases.

    `H^0` has the basis `z^0, ..., z^k`. `H^1` is the Laurent quotient with the basis
    `z^(k+1), ..., z^-1`: exponents `>= 0` extend over `U0` and exponents `<= k` extend
    over `U1`, so they are Cech coboundaries and are dropped.
    """

    k: int

    @property
    def h0_basis(self) -> tuple[int, ...]:
        return tuple(range(self.k + 1))

    @property
    def h1_basis(self) -> tuple[int, ...]:
        return tuple(range(self.k + 1, 0))

    @property
    def euler_characteristic(self) -> int:
        return len(self.h0_basis) - len(self.h1_basis)

    def _matrix(
        self, op: GlobalOpP1, basis: tuple[int, ...], *, laurent: bool
    ) -> list[list[Fraction]]:
        _require_global(op)

        if op.k != self.k:
            raise DimensionMismatchError(
                f"An operator on O({op.k}) does not act on H(O({self.k}))."
            )

        chart0 = op.chart0.as_laurent() if laurent else op.chart0
        columns = [
            apply(chart0, Section.monomial((e,), laurent=laurent)) for e in basis
        ]

        return [[column.coefficient((row,)) for column in columns] for row in basis]

    def h0_matrix(self, op: GlobalOpP1) -> list[list[Fraction]]:
        """Return the matrix of a global operator on `H^0`, columns are images.

        Raises:
            DomainError: The operator is not global.
            DimensionMismatchError: The operator acts on another line bundle.
        """
        return self._matrix(op, self.h0_basis, laurent=False)

    def h1_matrix(self, op: GlobalOpP1) -> list[list[Fraction]]:
        """Return the matrix of a global operator on `H^1`, columns are images.

        Raises:
            DomainError: The operator is not global.
            DimensionMismatchError: The operator acts on another line bundle.
        """
        return self._matrix(op, self.h1_basis, laurent=True)

    def traces(self, op: GlobalOpP1) -> tuple[Fraction, Fraction]:
        """Return the traces of a global operator on `H^0` and `H^1`."""
        h0 = self.h0_matrix(op)
        h1 = self.h1_matrix(op)

        return (
            sum((h0[i][i] for i in range(len(h0))), Fraction(0)),
            sum((h1[i][i] for i in range(len(h1))), Fraction(0)),
        )


def lefschetz_t1(op: GlobalOpP1) -> Fraction:
    """Return the Lefschetz number `tr H^0(D) - tr H^1(D)` of a global operator.

    Raises:
        DomainError: The operator is not global.
    """
    h0, h1 = CohP1(op.k).traces(op)

    return h0 - h1


# Local class


def _local_chain(op: WeylOp) -> Chain:
    pairs = commutator_decompose(op)
    chain = commutator_chain(pairs) if pairs else Chain.zero(1, 1)

    if boundary(chain) != Chain.from_ops([op]):
        raise StructureError(f"The commutator decomposition of {op} does not bound it.")

    return chain


@attrs.frozen
class StaircaseResult:
    """The two chart staircase of a global operator and its local class."""

    operator: GlobalOpP1
    chart0: Chain
    """A 1-chain on `U0` whose boundary is the operator."""
    chart1: Chain
    """A 1-chain on `U1` whose boundary is the operator."""
    cycle: Chain
    """The Cech difference of both chains on the overlap, in the coordinate `z`."""
    reference: Chain
    classification: ClassResult

    @property
    def coefficient(self) -> Fraction:
        return self.classification.coefficient

    def to_report(self) -> dict[str, Any]:
        return {
            "operator": str(self.operator),
            "k": self.operator.k,
            "cycle_terms": len(self.cycle.terms),
            "cycle_sha256": witness_hash(self.cycle),
            **self.classification.to_report(),
        }


def staircase_t3(
    op: GlobalOpP1,
    reference: Chain | None = None,
    window: TruncationWindow | None = None,
    growth: GrowthSchedule | None = None,
) -> StaircaseResult:
    """Climb the staircase of the two chart cover and extract the local class.

    On each chart the operator is written as a boundary `b(D_a)`. The chart `U1` chain
    is moved to `z` and `D_1 - D_0` is a 1-cycle of the Laurent Weyl algebra, which is
    split against the reference.

    Arguments:
        op: A global operator.
        reference: The reference 1-cycle. Defaults to `z^-1 (x) z`.
        window: The first truncation window of the class extraction.
        growth: The growth schedule of the class extraction.

    Raises:
        DomainError: The operator is not global.
        StructureError: An intermediate identity failed exact verification.
        CalibrationError: The reference is a boundary.
        InconclusiveError: No truncation window decided the class.
    """
    _require_global(op)
    reference = reference or laurent_reference()
    chart0 = _local_chain(op.chart0)
    chart1 = _local_chain(op.chart1.as_polynomial())
    moved = chart1.map_entries(
        lambda key: transform_from_chart1(WeylOp.monomial(key, laurent=True), op.k),
        laurent=True,
    )

    if boundary(moved) != Chain.from_ops([op.chart0.as_laurent()]):
        raise StructureError(f"The chart transition of {op} does not commute with b.")

    cycle = moved - chart0.as_laurent()

    if not boundary(cycle).is_zero():
        raise StructureError(f"The Cech difference of {op} is not a cycle.")

    classification = extract_class(cycle, reference, window, growth)
    logger.debug("The local class of %s is %s", op, classification.coefficient)

    return StaircaseResult(op, chart0, chart1, cycle, reference, classification)


# Proportionality


def default_family(k: int) -> dict[str, GlobalOpP1]:
    """Return operators generated by the `sl2` action on `O(k)`.

    `H = z d`, `E = d` and `F = -z^2 d + k z` are global for every `k`.
    """
    z = WeylOp.variable(1, 1)
    e = WeylOp.derivative(1, 1)
    h = z * e
    f = -(z**2) * e + z * k
    ops = {
        "Id": WeylOp.identity(1),
        "H": h,
        "H^2": h**2,
        "E": e,
        "F": f,
        "EF": e * f,
        "FE": f * e,
        "H^3": h**3,
    }

    return {name: GlobalOpP1.from_chart0(op, k) for name, op in ops.items()}


@attrs.frozen
class ProportionalityRow:
    name: str
    operator: GlobalOpP1
    t1: Fraction
    staircase: StaircaseResult | None
    """The staircase, or `None` if the class extraction failed."""
    error: str | None = None

    @property
    def coefficient(self) -> Fraction | None:
        return None if self.staircase is None else self.staircase.coefficient

    def to_report(self, constant: Fraction | None) -> dict[str, Any]:
        report: dict[str, Any] = {
            "name": self.name,
            "operator": str(self.operator),
            "T1": str(self.t1),
            "lambda": None if self.coefficient is None else str(self.coefficient),
        }

        if constant is not None and self.coefficient is not None:
            report["c_lambda"] = str(constant * self.coefficient)
            report["match"] = self.t1 == constant * self.coefficient

        if self.staircase is not None:
            report["class"] = self.staircase.to_report()

        if self.error is not None:
            report["error"] = self.error

        return report


@attrs.frozen
class ProportionalityReport:
    """The Lefschetz numbers and local classes of a family on one line bundle."""

    k: int
    rows: tuple[ProportionalityRow, ...]
    constant: Fraction | None
    """The constant `c = T1(Id) / lambda(Id)`, or `None` if it is undetermined."""
    degenerate: bool
    """Whether the calibration on the identity is degenerate."""
    underdetermined: str | None = None
    """Why the family can not test proportionality, or `None`."""

    @property
    def status(self) -> Status:
        if self.underdetermined is not None:
            return "inconclusive"

        if any(row.staircase is None for row in self.rows):
            return "inconclusive"

        if self.constant is None:
            # Only T1 = 0 everywhere fits every constant.
            return "pass" if all(row.t1 == 0 for row in self.rows) else "fail"

        if all(
            row.t1 == self.constant * (row.coefficient or 0) for row in self.rows
        ):
            return "pass"

        return "fail"

    def to_report(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "status": self.status,
            "constant": None if self.constant is None else str(self.constant),
            "degenerate_calibration": self.degenerate,
            "underdetermined": self.underdetermined,
            "operators": [row.to_report(self.constant) for row in self.rows],
        }


def _row(
    name: str,
    op: GlobalOpP1,
    window: TruncationWindow | None,
    growth: GrowthSchedule | None,
) -> ProportionalityRow:
    t1 = lefschetz_t1(op)

    try:
        return ProportionalityRow(name, op, t1, staircase_t3(op, None, window, growth))
    except InconclusiveError as e:
        logger.warning("The local class of %s is undecided: %s", name, e)

        return ProportionalityRow(name, op, t1, None, e.message)


def proportionality_report(
    family: Mapping[str, GlobalOpP1] | Iterable[tuple[str, GlobalOpP1]],
    window: TruncationWindow | None = None,
    growth: GrowthSchedule | None = None,
) -> ProportionalityReport:
    """Compare the Lefschetz numbers of a family with their local classes.

    The constant is calibrated on the identity and `T1(D) = c * lambda(D)` is checked
    exactly for every member. When the class of the identity vanishes the calibration
    is degenerate and only the zero constant can be tested. The report is inconclusive
    when the family lacks the identity or has fewer than three operators. It is also
    inconclusive when all `T1` values coincide under a calibrated constant.

    Raises:
        DomainError: The family is empty or has a non global operator.
        DimensionMismatchError: The operators act on different line bundles.
        CalibrationError: The reference cycle is a boundary.
    """
    members = list(family.items() if isinstance(family, Mapping) else family)

    if not members:
        raise DomainError("A proportionality report needs at least one operator.")

    k = members[0][1].k

    if any(op.k != k for _, op in members):
        raise DimensionMismatchError("The family acts on different line bundles.")

    rows = tuple(_row(name, op, window, growth) for name, op in members)
    identities = [row for row in rows if row.operator.chart0.scalar_value() == 1]

    if not identities or len(rows) < MIN_FAMILY:
        reason = (
            "the family has no identity to calibrate on"
            if not identities
            else f"the family needs at least {MIN_FAMILY} operators"
        )
        logger.warning("The family on O(%d) is underdetermined: %s", k, reason)

        return ProportionalityReport(
            k, rows, None, degenerate=False, underdetermined=reason
        )

    calibration = next(
        (row for row in identities if row.coefficient is not None), None
    )

    if calibration is None:
        return ProportionalityReport(k, rows, None, degenerate=False)

    if not calibration.coefficient:
        logger.info("The calibration on O(%d) is degenerate", k)

        return ProportionalityReport(k, rows, None, degenerate=True)

    constant = calibration.t1 / calibration.coefficient
    reason = None

    if len({row.t1 for row in rows}) < 2:  # noqa: PLR2004
        reason = "every operator has the same Lefschetz number"
        logger.warning("The family on O(%d) is underdetermined: %s", k, reason)

    report = ProportionalityReport(
        k, rows, constant, degenerate=False, underdetermined=reason
    )

    if report.status == "fail":
        logger.error("T1 is not proportional to the local class on O(%d)", k)

    return report


def calibration_constant(k: int) -> Fraction:
    """Return `T1(Id) / lambda(Id)` on `O(k)`.

    Raises:
        CalibrationError: The class of the identity vanishes.
    """
    identity = GlobalOpP1.parse("1", k)
    value = staircase_t3(identity).coefficient

    if not value:
        raise CalibrationError(f"The class of the identity on O({k}) vanishes.")

    return lefschetz_t1(identity) / value
