# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Verification suites that check the identities of every module.

A suite is a list of checks. Every check yields one or more `CheckResult` entries with
a status, the number of cases it covered and the data it was decided on. Random cases
are drawn from a `random.Random` seeded by the configured seed and the name of the
check, so a run is reproduced by its configuration alone.
"""

from __future__ import annotations

import itertools
import logging
import math
import os
import random
import time
from collections.abc import Callable, Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any

import attrs

from hochschild_lefschetz.algebra._syntax import format_operator, parse_operator
from hochschild_lefschetz.algebra.grassmann import GrassmannKey, GrassmannWeyl
from hochschild_lefschetz.algebra.weyl import (
    MonKey,
    Section,
    WeylOp,
    apply,
    commutator,
)
from hochschild_lefschetz.analysis.flat_jlo import (
    kernel_mass,
    multiplication_form,
    semigroup_residual,
    sigma_two,
    verify_index_density,
)
from hochschild_lefschetz.cli.config import SuiteConfig
from hochschild_lefschetz.exceptions import HochschildLefschetzError, InconclusiveError
from hochschild_lefschetz.geometry.projective_line import (
    CohP1,
    GlobalOpP1,
    ProportionalityReport,
    default_family,
    lefschetz_t1,
    proportionality_report,
)
from hochschild_lefschetz.geometry.quadrature import (
    simplex_integral,
    simplex_moment,
)
from hochschild_lefschetz.geometry.simplicial import (
    BUILDERS,
    OrderedComplex,
    barycentric_boundary,
    chain_boundary,
    dual_blocks_of_chain,
    intersection,
    nerve,
    open_star_cover,
    simplex_boundary,
)
from hochschild_lefschetz.homology.classes import (
    GrowthSchedule,
    express_as_boundary,
    extract_class,
)
from hochschild_lefschetz.homology.hochschild import (
    Chain,
    boundary,
    generator_c2n,
    insertion,
    lie_action,
)
from hochschild_lefschetz.homology.twist import (
    GradedChain,
    MCElement,
    bracket_correction,
    chain_differential,
    complete_maurer_cartan,
    graded_boundary,
    inverse_series,
    omega_power,
    shuffle,
    total_differential,
    twist_map,
    twist_series,
    twisted_algebra_differential,
    twisted_total_differential,
    untwist_map,
)
from hochschild_lefschetz.typing import Status, SuiteName

logger = logging.getLogger(__name__)

FAILURES_SHOWN = 5
"""The number of failing cases quoted in the message of a check."""


@attrs.frozen
class CheckResult:
    """The verdict of one check."""

    name: str
    status: Status
    cases: int = 0
    """The number of cases the check was decided on."""
    details: Mapping[str, Any] = attrs.field(factory=dict)
    message: str | None = None

    def to_report(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status,
            "cases": self.cases,
            "details": dict(self.details),
            "message": self.message,
        }


@attrs.frozen
class SuiteReport:
    suite: SuiteName
    checks: tuple[CheckResult, ...]
    seconds: float = 0.0

    @property
    def status(self) -> Status:
        statuses = {check.status for check in self.checks}

        if "fail" in statuses:
            return "fail"

        if "inconclusive" in statuses:
            return "inconclusive"

        return "pass"

    def to_report(self, *, timings: bool = False) -> dict[str, Any]:
        report: dict[str, Any] = {
            "suite": self.suite,
            "status": self.status,
            "checks": [check.to_report() for check in self.checks],
        }

        if timings:
            report["seconds"] = round(self.seconds, 3)

        return report


def verdict(
    name: str,
    failures: list[str],
    cases: int,
    details: Mapping[str, Any] | None = None,
) -> CheckResult:
    """Return a passing result, or a failing one that quotes the first failures."""
    if not failures:
        return CheckResult(name, "pass", cases, details or {})

    shown = "; ".join(failures[:FAILURES_SHOWN])
    more = len(failures) - FAILURES_SHOWN

    return CheckResult(
        name,
        "fail",
        cases,
        details or {},
        f"{shown} (and {more} more)" if more > 0 else shown,
    )


# Random cases


def random_monomial(
    rng: random.Random,
    n: int,
    r: int = 1,
    *,
    max_exponent: int = 2,
    laurent: bool = False,
) -> MonKey:
    low = -max_exponent if laurent else 0

    return MonKey(
        tuple(rng.randint(low, max_exponent) for _ in range(n)),
        tuple(rng.randint(0, max_exponent) for _ in range(n)),
        rng.randrange(r),
        rng.randrange(r),
    )


def random_operator(
    rng: random.Random,
    n: int,
    r: int = 1,
    *,
    terms: int = 3,
    max_exponent: int = 2,
    laurent: bool = False,
) -> WeylOp:
    """Return a sum of random monomials with small integer coefficients."""
    values: dict[MonKey, Fraction] = {}

    for _ in range(terms):
        key = random_monomial(rng, n, r, max_exponent=max_exponent, laurent=laurent)
        values[key] = values.get(key, Fraction(0)) + rng.choice((-3, -2, -1, 1, 2, 3))

    return WeylOp(n, r, laurent, values)


def random_chain(
    rng: random.Random,
    n: int,
    degree: int,
    r: int = 1,
    *,
    words: int = 2,
    max_exponent: int = 1,
    laurent: bool = False,
) -> Chain:
    chain = Chain.zero(n, degree, r, laurent=laurent)

    for _ in range(words):
        ops = [
            random_operator(
                rng, n, r, terms=2, max_exponent=max_exponent, laurent=laurent
            )
            for _ in range(degree + 1)
        ]
        chain += Chain.from_ops(ops, rng.choice((-2, -1, 1, 2)))

    return chain


def random_section(
    rng: random.Random, n: int, r: int = 1, *, laurent: bool = False
) -> Section:
    section = Section(n, r, laurent)

    for _ in range(3):
        low = -3 if laurent else 0
        section += Section.monomial(
            [rng.randint(low, 3) for _ in range(n)],
            rng.randrange(r),
            r,
            rng.randint(-4, 4),
            laurent=laurent,
        )

    return section


def _shapes(index: int) -> tuple[int, int, bool]:
    # Cycles through one and two variables, scalar and 2 x 2 matrices, and Laurent.
    return ((1, 1, False), (2, 1, False), (1, 2, False), (1, 1, True))[index % 4]


# Weyl algebra


def _weyl_associativity(
    config: SuiteConfig, rng: random.Random
) -> Iterator[CheckResult]:
    failures: list[str] = []
    cases = config.cases.algebra

    for index in range(cases):
        n, r, laurent = _shapes(index)
        a, b, c = (random_operator(rng, n, r, laurent=laurent) for _ in range(3))

        if (a * b) * c != a * (b * c):
            failures.append(f"({a})({b})({c})")

    yield verdict("associativity", failures, cases)


def _weyl_commutation(_config: SuiteConfig, _: random.Random) -> Iterator[CheckResult]:
    failures: list[str] = []
    cases = 0

    for n in range(1, 4):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                cases += 1
                expected = WeylOp.identity(n) if i == j else WeylOp.zero(n)
                value = commutator(WeylOp.derivative(i, n), WeylOp.variable(j, n))

                if value != expected:
                    failures.append(f"[d{i}, y{j}] = {value} for n = {n}")

    yield verdict("canonical-commutation", failures, cases)


def _weyl_action(config: SuiteConfig, rng: random.Random) -> Iterator[CheckResult]:
    failures: list[str] = []
    cases = config.cases.algebra

    for index in range(cases):
        n, r, laurent = _shapes(index)
        a, b = (random_operator(rng, n, r, laurent=laurent) for _ in range(2))
        f = random_section(rng, n, r, laurent=laurent)

        if apply(a * b, f) != apply(a, apply(b, f)):
            failures.append(f"({a})({b}) on {f.terms}")

    yield verdict("action-homomorphism", failures, cases)


def _weyl_syntax(config: SuiteConfig, rng: random.Random) -> Iterator[CheckResult]:
    failures: list[str] = []
    cases = config.cases.algebra

    for index in range(cases):
        n, r, laurent = _shapes(index)
        op = random_operator(rng, n, r, laurent=laurent)
        text = format_operator(op)

        if parse_operator(text, n, r, laurent=laurent) != op:
            failures.append(text)

    yield verdict("syntax-round-trip", failures, cases)


def _weyl_euler(config: SuiteConfig, rng: random.Random) -> Iterator[CheckResult]:
    failures: list[str] = []
    cases = config.cases.algebra

    for index in range(cases):
        n, r, laurent = _shapes(index)
        key = random_monomial(rng, n, r, max_exponent=3, laurent=laurent)
        op = WeylOp.monomial(key, r=r, laurent=laurent)

        if commutator(WeylOp.euler(n, r, laurent=laurent), op) != op * key.weight:
            failures.append(str(op))

    yield verdict("euler-weight", failures, cases)


# Hochschild complex


def _hochschild_boundary(
    config: SuiteConfig, rng: random.Random
) -> Iterator[CheckResult]:
    failures: list[str] = []
    cases = config.cases.algebra

    for index in range(cases):
        n, r, laurent = _shapes(index)
        c = random_chain(rng, n, 2 + index % 3, r, laurent=laurent)

        if not boundary(boundary(c)).is_zero():
            failures.append(str(c))

    yield verdict("boundary-squared", failures, cases)


def _hochschild_cartan(
    config: SuiteConfig, rng: random.Random
) -> Iterator[CheckResult]:
    failures: list[str] = []
    cases = config.cases.algebra

    for index in range(cases):
        n, r, laurent = _shapes(index)
        a = random_operator(rng, n, r, terms=2, laurent=laurent)
        c = random_chain(rng, n, index % 4, r, laurent=laurent)
        expected = boundary(insertion(a, c))

        if c.degree:
            expected += insertion(a, boundary(c))

        if lie_action(a, c) != expected:
            failures.append(f"a = {a}, c = {c}")

    yield verdict("cartan-formula", failures, cases)


def _generator_letters(n: int) -> Iterator[tuple[str, WeylOp]]:
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            y_i, y_j = WeylOp.variable(i, n), WeylOp.variable(j, n)
            d_i, d_j = WeylOp.derivative(i, n), WeylOp.derivative(j, n)
            yield f"y{i}*d{j}", y_i * d_j
            yield f"y{i}*y{j}", y_i * y_j
            yield f"d{i}*d{j}", d_i * d_j


def _hochschild_generator(
    _config: SuiteConfig, _: random.Random
) -> Iterator[CheckResult]:
    failures: list[str] = []
    shapes = ((1, 1, False), (2, 1, False), (1, 2, False), (1, 1, True))

    for n, r, laurent in shapes:
        if not boundary(generator_c2n(n, r, laurent=laurent)).is_zero():
            failures.append(f"b(c_{2 * n}) for n = {n}, r = {r}, laurent = {laurent}")

    yield verdict("generator-cycle", failures, len(shapes))

    failures = []
    cases = 0

    for n in (1, 2):
        generator = generator_c2n(n)

        for name, a in _generator_letters(n):
            cases += 1

            if not lie_action(a, generator).is_zero():
                failures.append(f"L_({name}) c_{2 * n}")

    yield verdict("generator-invariance", failures, cases)


# Twisting


def _mc_elements(algebra: GrassmannWeyl) -> list[tuple[str, MCElement[GrassmannKey]]]:
    y = WeylOp.variable(1, 1)
    d = WeylOp.derivative(1, 1)
    elements: list[tuple[str, MCElement[GrassmannKey]]] = []

    # The curvature of theta_1 u + theta_2 v is theta_1 theta_2 [d + u, v].
    for u in (y, y**2, y * d):
        v = d + u
        elements.append(
            (
                f"theta1*({u}) + theta2*({v})",
                MCElement(algebra, algebra.element({(1,): u, (2,): v})),
            )
        )

    return elements


def _random_letter(
    rng: random.Random, algebra: GrassmannWeyl
) -> dict[GrassmannKey, Fraction]:
    mask = rng.randrange(1 << algebra.m)
    key = random_monomial(rng, algebra.n, max_exponent=1)

    return {(mask, key): Fraction(rng.choice((-2, -1, 1, 2)))}


def random_graded_chain(
    rng: random.Random, algebra: GrassmannWeyl, max_length: int = 3
) -> GradedChain[GrassmannKey]:
    """Return a random word whose letters have random Grassmann parity."""
    length = rng.randint(1, max_length)

    return GradedChain.word(
        algebra, [_random_letter(rng, algebra) for _ in range(length)]
    )


def _twist_differentials(
    config: SuiteConfig, rng: random.Random
) -> Iterator[CheckResult]:
    algebra = GrassmannWeyl(2, 1)
    elements = _mc_elements(algebra)
    failures: list[str] = []
    cases = config.cases.twist

    for index in range(cases):
        name, omega = elements[index % len(elements)]
        c = random_graded_chain(rng, algebra)

        if not total_differential(total_differential(c)).is_zero():
            failures.append(f"delta^2 on {c.terms}")

        if not twisted_total_differential(
            twisted_total_differential(c, omega), omega
        ).is_zero():
            failures.append(f"delta_omega^2 on {c.terms} for {name}")

        letter = _random_letter(rng, algebra)
        twice = twisted_algebra_differential(
            algebra,
            omega.element,
            twisted_algebra_differential(algebra, omega.element, letter),
        )

        if twice:
            failures.append(f"d_omega^2 on {letter} for {name}")

    yield verdict("differentials-square-to-zero", failures, cases)


def _twist_powers(_config: SuiteConfig, _: random.Random) -> Iterator[CheckResult]:
    algebra = GrassmannWeyl(2, 1)
    name, omega = _mc_elements(algebra)[0]
    failures: list[str] = []
    cases = 0

    for k in range(1, 5):
        cases += 1

        if graded_boundary(omega_power(omega, k)) != chain_differential(
            omega_power(omega, k - 1)
        ):
            failures.append(f"b(omega)_{k} for {name}")

    yield verdict("boundary-of-powers", failures, cases)

    failures = []
    cases = 0

    for total in range(7):
        for k in range(total + 1):
            cases += 1
            product = shuffle(omega_power(omega, k), omega_power(omega, total - k))

            if product != omega_power(omega, total) * math.comb(total, k):
                failures.append(f"(omega)_{k} x (omega)_{total - k}")

    yield verdict("binomial-shuffle", failures, cases)

    top = 4
    unit = GradedChain.word(algebra, [algebra.unit()])
    product = shuffle(twist_series(omega, top), inverse_series(omega, top))
    yield verdict(
        "inverse-series",
        [] if product.truncate(top) == unit else [f"psi x psi_bar up to {top}"],
        1,
    )


def _twist_maps(config: SuiteConfig, rng: random.Random) -> Iterator[CheckResult]:
    algebra = GrassmannWeyl(2, 1)
    elements = _mc_elements(algebra)
    top = 3
    round_trips: list[str] = []
    chain_maps: list[str] = []
    brackets: list[str] = []
    cases = config.cases.twist

    for index in range(cases):
        name, omega = elements[index % len(elements)]
        c = random_graded_chain(rng, algebra)

        if untwist_map(twist_map(c, omega, top), omega, top) != c.truncate(top):
            round_trips.append(f"{c.terms} for {name}")

        # Twisting raises the tensor degree, so both sides agree below the top.
        left = total_differential(twist_map(c, omega, top)).truncate(top - 1)
        right = twist_map(twisted_total_differential(c, omega), omega, top).truncate(
            top - 1
        )

        if left != right:
            chain_maps.append(f"{c.terms} for {name}")

        k = 1 + index % 3
        expected = graded_boundary(shuffle(c, omega_power(omega, k)))

        if bracket_correction(c, omega, k) != expected:
            brackets.append(f"{c.terms} with k = {k} for {name}")

    yield verdict("untwist-twist", round_trips, cases)
    yield verdict("chain-map", chain_maps, cases)
    yield verdict("bracket-correction", brackets, cases)


def _twist_completion(_config: SuiteConfig, _: random.Random) -> Iterator[CheckResult]:
    algebra = GrassmannWeyl(2, 1)
    y = WeylOp.variable(1, 1)
    d = WeylOp.derivative(1, 1)
    failures: list[str] = []
    details: dict[str, str] = {}

    for u in (y, y**2, y * d, d):
        omega = complete_maurer_cartan(algebra, u, max_degree=2, max_order=2)
        v = algebra.component(omega.element, (2,))
        details[format_operator(u)] = format_operator(v)

        if algebra.component(omega.element, (1,)) != u:
            failures.append(f"the completion of {u} changed its first component")

        if v.is_zero():
            failures.append(f"the completion of {u} is trivial")

    yield verdict("maurer-cartan-completion", failures, len(details), details)


# Class extraction


def _small_word(rng: random.Random, degree: int) -> Chain:
    letters = [
        WeylOp.variable(1, 1),
        WeylOp.derivative(1, 1),
        WeylOp.variable(1, 1) * WeylOp.derivative(1, 1),
    ]
    ops = [rng.choice([WeylOp.identity(1), *letters])]
    ops.extend(rng.choice(letters) for _ in range(degree))

    return Chain.from_ops(ops, rng.choice((-2, -1, 1, 2)))


def _classes_extraction(
    config: SuiteConfig, rng: random.Random
) -> Iterator[CheckResult]:
    c2 = generator_c2n(1)
    window = config.window.start(c2.degree)
    growth = config.window.growth()
    failures: list[str] = []
    cases = config.cases.classes

    for _ in range(cases):
        x = _small_word(rng, 3)
        result = extract_class(c2 * 3 + boundary(x), c2, window, growth)

        if result.coefficient != 3:  # noqa: PLR2004
            failures.append(f"lambda = {result.coefficient} for x = {x}")

    yield verdict("class-of-multiple", failures, cases)

    euler = WeylOp.variable(1, 1) * WeylOp.derivative(1, 1)
    result = extract_class(lie_action(euler, c2), c2, window, growth)
    yield verdict(
        "class-of-lie-derivative",
        [] if result.coefficient == 0 else [f"lambda = {result.coefficient}"],
        1,
        result.to_report(),
    )


def _classes_defect(config: SuiteConfig, _: random.Random) -> Iterator[CheckResult]:
    c2 = generator_c2n(1)
    growth = GrowthSchedule(config.window.step, config.window.laurent_factor, rounds=2)
    result = express_as_boundary(c2, config.window.start(c2.degree), growth)
    failures = [] if result.stable_rank_defect else ["c_2 is a boundary in a window"]

    yield verdict(
        "stable-rank-defect", failures, len(result.windows), result.to_report()
    )


# Simplicial complexes


def _complexes(config: SuiteConfig) -> Iterator[tuple[str, OrderedComplex]]:
    for name, builder in BUILDERS.items():
        yield name, builder()

    for path in config.complexes:
        with path.open(encoding="utf-8") as fp:
            yield str(path), OrderedComplex.load(fp)


def _complex_identities(name: str, complex_: OrderedComplex) -> CheckResult:
    d = complex_.dimension
    failures: list[str] = []
    cases = 0

    for face in complex_.faces():
        cases += 1

        if len(face) > 2 and chain_boundary(simplex_boundary(face)):  # noqa: PLR2004
            failures.append(f"primal boundary squared on {face}")

        dual = complex_.dual_boundary(face)

        if complex_.dual_chain_boundary(dual):
            failures.append(f"dual boundary squared on {face}")

        if len(face) <= d and barycentric_boundary(
            complex_.dual_blocks(face)
        ) != dual_blocks_of_chain(complex_, dual):
            failures.append(f"dual boundary sign on {face}")

        # The dual boundary pairs with the primal boundary up to (-1)^(d + p).
        sign = -1 if (d + len(face) - 1) % 2 else 1

        for coface in complex_.cofaces(face):
            if intersection(dual, {coface: 1}) != sign * intersection(
                {face: 1}, simplex_boundary(coface)
            ):
                failures.append(f"pairing of {face} with {coface}")

    for simplex in complex_.top:
        swapped = (simplex[1], simplex[0], *simplex[2:])

        if complex_.orientation_sign(swapped) != -complex_.orientation_sign(simplex):
            failures.append(f"orientation of {simplex} is not antisymmetric")

    if chain_boundary(complex_.fundamental_class()):
        failures.append("the fundamental class is not a cycle")

    if set(nerve(open_star_cover(complex_), d + 2)) != set(complex_.faces()):
        failures.append("the nerve of the open star cover is not the complex")

    return verdict(
        f"complex-{name}",
        failures,
        cases,
        {
            "dimension": d,
            "vertices": len(complex_.vertices),
            "top_simplices": len(complex_.top),
        },
    )


def _simplicial_complexes(
    config: SuiteConfig, _: random.Random
) -> Iterator[CheckResult]:
    for name, complex_ in _complexes(config):
        yield _complex_identities(name, complex_)


def _simplicial_integrals(
    config: SuiteConfig, _: random.Random
) -> Iterator[CheckResult]:
    quadrature = config.quadrature
    failures: list[str] = []
    errors: dict[str, float] = {}

    for k in range(quadrature.max_k + 1):
        for p in range(1, quadrature.max_p + 1):
            value = simplex_integral(
                k, p, quadrature.order, pieces=quadrature.pieces
            )
            error = abs(value - float(simplex_moment(k, p)))
            errors[f"k={k},p={p}"] = error

            if error > quadrature.tolerance:
                failures.append(f"k = {k}, p = {p} is off by {error:.3e}")

    yield verdict("simplex-moments", failures, len(errors), {"errors": errors})

    failures = []

    # The integral does not depend on the partition of unity.
    for p in range(1, quadrature.max_p + 1):
        value = simplex_integral(
            1, p, quadrature.order, kind="cyclic", pieces=quadrature.pieces
        )
        expected = 1 / math.factorial(p + 1)

        if abs(value - expected) > 1e-8:  # noqa: PLR2004
            failures.append(f"cyclic partition on p = {p} gives {value}")

    yield verdict("partition-independence", failures, quadrature.max_p)


# Lefschetz numbers


def _lefschetz_euler(config: SuiteConfig, _: random.Random) -> Iterator[CheckResult]:
    failures: list[str] = []

    for k in config.lefschetz.euler_degrees:
        identity = GlobalOpP1.parse("1", k)
        t1 = lefschetz_t1(identity)

        if t1 != k + 1 or CohP1(k).euler_characteristic != k + 1:
            failures.append(f"T1(Id) = {t1} on O({k})")

    yield verdict("riemann-roch", failures, len(config.lefschetz.euler_degrees))


def _lefschetz_family(config: SuiteConfig, k: int) -> dict[str, GlobalOpP1]:
    if config.lefschetz.family is None:
        return default_family(k)

    return {text: GlobalOpP1.parse(text, k) for text in config.lefschetz.family}


def _proportionality_message(report: ProportionalityReport) -> str | None:
    if report.status == "pass":
        return None

    if report.underdetermined is not None:
        return report.underdetermined

    if report.status == "inconclusive":
        return "a local class is undecided"

    return "T1 is not c * lambda everywhere"


def _lefschetz_proportionality(
    config: SuiteConfig, _: random.Random
) -> Iterator[CheckResult]:
    window = config.window.start(1)
    growth = config.window.growth()

    for k in config.lefschetz.degrees:
        report = proportionality_report(_lefschetz_family(config, k), window, growth)

        yield CheckResult(
            f"proportionality-O({k})",
            report.status,
            len(report.rows),
            report.to_report(),
            _proportionality_message(report),
        )


# Heat kernels

_SEMIGROUP_CASES = (
    (0.05, 0.08, 0.1 + 0.2j, -0.1j),
    (0.02, 0.1, 0j, 0.15 + 0.05j),
    (0.1, 0.1, -0.2 + 0.1j, 0.1 - 0.1j),
)


def _jlo_kernels(config: SuiteConfig, _: random.Random) -> Iterator[CheckResult]:
    jlo = config.jlo
    grid = jlo.make_grid()
    failures: list[str] = []
    residuals: dict[str, float] = {}

    for s0, s1, z, w in _SEMIGROUP_CASES:
        residual = semigroup_residual(s0, s1, z, w, grid)
        residuals[f"s=({s0},{s1})"] = residual

        if residual > jlo.semigroup_tolerance:
            failures.append(f"semigroup at s = ({s0}, {s1}) is off by {residual:.3e}")

    yield verdict(
        "semigroup", failures, len(_SEMIGROUP_CASES), {"residuals": residuals}
    )

    failures = []
    times = [float(t) for t in jlo.times()]

    for t in times:
        error = abs(kernel_mass(t, 0j, grid) - 1)

        if error > jlo.semigroup_tolerance:
            failures.append(f"the mass at t = {t} is off by {error:.3e}")

    yield verdict("kernel-mass", failures, len(times))


def _jlo_scaling(config: SuiteConfig, _: random.Random) -> Iterator[CheckResult]:
    jlo = config.jlo
    grid = jlo.make_grid()
    rho0, rho1, rho2 = (bump.bump().sample(grid) for bump in jlo.triples[0])
    form = multiplication_form(rho0, rho1, rho2)
    closed_form = -grid.integrate(form) / math.pi
    failures: list[str] = []
    errors: dict[str, float] = {}

    for t in (jlo.tmin, jlo.tmax):
        value = sigma_two(form, t, grid, config.quadrature.order)
        error = abs(value - closed_form) / abs(closed_form)
        errors[f"t={t}"] = error

        if error > jlo.tolerance:
            failures.append(f"the density at t = {t} is off by {error:.3e}")

    yield verdict("time-independence", failures, len(errors), {"errors": errors})


def _jlo_index_density(config: SuiteConfig, _: random.Random) -> Iterator[CheckResult]:
    jlo = config.jlo
    grid = jlo.make_grid()
    times = jlo.times()

    for index, triple in enumerate(jlo.triples):
        bumps = (triple[0].bump(), triple[1].bump(), triple[2].bump())
        report = verify_index_density(
            bumps,
            grid,
            times,
            negative=jlo.negative,
            positive=jlo.positive,
            condition_limit=jlo.condition_limit,
            residual_limit=jlo.residual_limit,
            quadrature_order=config.quadrature.order,
            tolerance=jlo.tolerance,
        )
        singular = abs(report.singular_coefficient)
        status = report.status
        message = report.error

        if status == "pass" and singular > jlo.singular_tolerance:
            status = "fail"
            message = f"the 1 / t coefficient is {singular:.3e}"
        elif status == "fail":
            message = f"the relative error is {report.relative_error:.3e}"

        yield CheckResult(
            f"index-density-{index}", status, len(times), report.to_report(), message
        )


# Registry

type Check = Callable[[SuiteConfig, random.Random], Iterator[CheckResult]]

SUITES: dict[SuiteName, tuple[tuple[str, Check], ...]] = {
    "weyl": (
        ("associativity", _weyl_associativity),
        ("canonical-commutation", _weyl_commutation),
        ("action-homomorphism", _weyl_action),
        ("syntax-round-trip", _weyl_syntax),
        ("euler-weight", _weyl_euler),
    ),
    "hochschild": (
        ("boundary-squared", _hochschild_boundary),
        ("cartan-formula", _hochschild_cartan),
        ("generator", _hochschild_generator),
    ),
    "twist": (
        ("differentials", _twist_differentials),
        ("powers", _twist_powers),
        ("maps", _twist_maps),
        ("completion", _twist_completion),
    ),
    "classes": (
        ("extraction", _classes_extraction),
        ("stable-rank-defect", _classes_defect),
    ),
    "simplicial": (
        ("complexes", _simplicial_complexes),
        ("integrals", _simplicial_integrals),
    ),
    "lefschetz": (
        ("riemann-roch", _lefschetz_euler),
        ("proportionality", _lefschetz_proportionality),
    ),
    "jlo": (
        ("kernels", _jlo_kernels),
        ("time-independence", _jlo_scaling),
        ("index-density", _jlo_index_density),
    ),
}
"""The checks of every suite with the name of their group."""


def _run_check(
    suite: SuiteName, group: str, check: Check, config: SuiteConfig
) -> list[CheckResult]:
    rng = random.Random(f"{config.seed}:{suite}:{group}")
    results: list[CheckResult] = []

    try:
        results.extend(check(config, rng))
    except InconclusiveError as e:
        logger.warning("The check %s of %s is undecided: %s", group, suite, e)
        results.append(CheckResult(group, "inconclusive", message=e.message))
    except (HochschildLefschetzError, OSError) as e:
        logger.error("The check %s of %s failed: %s", group, suite, e)
        results.append(CheckResult(group, "fail", message=f"{type(e).__name__}: {e}"))

    return results


def run_suite(name: SuiteName, config: SuiteConfig) -> SuiteReport:
    """Run every check of a suite.

    Package errors and I/O failures inside a check become failing entries of the
    report, and an exhausted truncation window becomes an inconclusive entry.
    """
    start = time.perf_counter()
    checks: list[CheckResult] = []

    for group, check in SUITES[name]:
        logger.info("Running %s / %s", name, group)
        checks.extend(_run_check(name, group, check, config))

    report = SuiteReport(name, tuple(checks), time.perf_counter() - start)
    logger.info("The %s suite finished with %s", name, report.status)

    return report


def run_suites(
    names: Sequence[SuiteName], config: SuiteConfig, workers: int | None = None
) -> list[SuiteReport]:
    """Run suites in worker processes and return their reports in the given order.

    Arguments:
        names: The suites to run.
        config: The configuration shared by every suite.
        workers: The number of processes. Defaults to the number of logical cores, and
            a single worker runs every suite in this process.
    """
    workers = min(workers or os.cpu_count() or 1, len(names) or 1)

    if workers == 1:
        return [run_suite(name, config) for name in names]

    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(run_suite, names, itertools.repeat(config)))
