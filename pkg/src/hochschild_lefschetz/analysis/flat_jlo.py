# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Heat kernel traces on the flat complex line.

With the flat metric the heat operator of the Dolbeault Laplacian has the kernel
`k_t(z, z') = exp(-|z - z'|^2 / t) / (pi t)`, and `[dbar*, z] = -i_(d/dzbar)` commutes
with it. The degree 2 local index density of three bumps is then a time simplex
integral of kernel traces, whose non-positive part in `t` is compared with
`1 / (2 pi i) int rho_0 d rho_1 ^ d rho_2`.

Floating point is confined to this module. Every number it reports carries the residual
it was checked against.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from typing import Any

import attrs
import numpy as np
import numpy.typing as npt
from numpy.polynomial import hermite

from hochschild_lefschetz.exceptions import (
    DomainError,
    FitUnstableError,
    QuadratureError,
)
from hochschild_lefschetz.geometry.quadrature import (
    DEFAULT_DEGREE,
    time_simplex_integral,
)
from hochschild_lefschetz.typing import ComplexArray, FloatArray, Status

logger = logging.getLogger(__name__)

RESOLUTION = 4
"""Every time must be at least this many squared grid spacings."""

CONDITION_LIMIT = 1e10
"""The largest condition number of a scaled Vandermonde matrix that is trusted."""

RESIDUAL_LIMIT = 1e-3
"""The largest relative residual of a fit that is trusted."""


@attrs.frozen
class Grid:
    """A uniform grid on the square `[-half_width, half_width]^2`.

    Integrals use the tensor trapezoid rule.
    """

    size: int = attrs.field(validator=attrs.validators.ge(3))
    half_width: float = attrs.field(validator=attrs.validators.gt(0))

    @property
    def points(self) -> FloatArray:
        return np.linspace(-self.half_width, self.half_width, self.size)

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / (self.size - 1)

    @property
    def weights(self) -> FloatArray:
        """The one dimensional trapezoid weights."""
        weights = np.full(self.size, self.spacing)
        weights[[0, -1]] /= 2

        return weights

    def mesh(self) -> tuple[FloatArray, FloatArray]:
        """Return the coordinates `x[i, j]`, `y[i, j]` of the grid points."""
        x, y = np.meshgrid(self.points, self.points, indexing="ij")

        return x, y

    def integrate(self, values: FloatArray | ComplexArray) -> complex:
        return complex(np.einsum("i,j,ij->", self.weights, self.weights, values))

    def resolves(self, time: float) -> bool:
        return time >= RESOLUTION * self.spacing**2


# Bumps


@attrs.frozen
class BumpValues:
    """A bump and its first derivatives sampled on a grid."""

    value: FloatArray = attrs.field(eq=False)
    dx: FloatArray = attrs.field(eq=False)
    dy: FloatArray = attrs.field(eq=False)

    @property
    def dz(self) -> ComplexArray:
        return (self.dx - 1j * self.dy) / 2

    @property
    def dzbar(self) -> ComplexArray:
        return (self.dx + 1j * self.dy) / 2


@attrs.frozen
class BumpFunction:
    """The compactly supported function `h (1 + tilt . (z - c)) exp(1 - 1 / (1 - q))`.

    Here `q = |z - c|^2 / R^2` and the function vanishes for `q >= 1`.
    """

    center: complex
    radius: float = attrs.field(validator=attrs.validators.gt(0))
    height: float = 1.0
    tilt: tuple[float, float] = (0.0, 0.0)
    """A linear factor in `(x, y)`. It breaks the rotational symmetry."""

    def __attrs_post_init__(self) -> None:
        if math.hypot(*self.tilt) * self.radius >= 1:
            raise DomainError("The tilt of a bump must keep it positive.")

    def check_inside(self, grid: Grid) -> None:
        """Raise `DomainError` unless the support lies strictly inside the grid."""
        reach = max(abs(self.center.real), abs(self.center.imag)) + self.radius

        if reach >= grid.half_width:
            raise DomainError(
                f"The bump at {self.center} with radius {self.radius} leaves the "
                f"square of half width {grid.half_width}."
            )

    def sample(self, grid: Grid) -> BumpValues:
        """Evaluate the bump and its derivatives on a grid.

        Raises:
            DomainError: The support is not strictly inside the grid.
        """
        self.check_inside(grid)
        x, y = grid.mesh()
        u = x - self.center.real
        v = y - self.center.imag
        q = (u**2 + v**2) / self.radius**2
        inside = q < 1
        gap = np.where(inside, 1 - q, 1.0)
        profile = np.where(inside, np.exp(1 - 1 / gap), 0.0)
        # d profile / dq
        slope = np.where(inside, -profile / gap**2, 0.0)
        linear = 1 + self.tilt[0] * u + self.tilt[1] * v

        return BumpValues(
            self.height * linear * profile,
            self.height
            * (self.tilt[0] * profile + linear * slope * 2 * u / self.radius**2),
            self.height
            * (self.tilt[1] * profile + linear * slope * 2 * v / self.radius**2),
        )


def multiplication_form(
    rho0: BumpValues, rho1: BumpValues, rho2: BumpValues
) -> ComplexArray:
    """Return the coefficient `b` of the `(0,1)`-form that the bumps multiply by.

    `b = sum_pi sgn(pi) rho_0 d rho_pi(1) / dz d rho_pi(2) / dzbar`.
    """
    terms = [rho1, rho2]
    form = np.zeros_like(rho0.value, dtype=np.complex128)

    for permutation, sign in (((0, 1), 1), ((1, 0), -1)):
        first, second = (terms[i] for i in permutation)
        form += sign * rho0.value * first.dz * second.dzbar

    return form


def area_form(rho1: BumpValues, rho2: BumpValues) -> FloatArray:
    """Return the coefficient of `d rho_1 ^ d rho_2` on `dx ^ dy`."""
    return rho1.dx * rho2.dy - rho1.dy * rho2.dx


# Kernels


def gaussian_kernel(
    t: float, z: complex | ComplexArray, w: complex | ComplexArray
) -> float | FloatArray:
    """Return the heat kernel `exp(-|z - w|^2 / t) / (pi t)` of the flat line.

    Raises:
        DomainError: `t` is not positive.
    """
    if t <= 0:
        raise DomainError("The heat kernel needs t > 0.")

    return np.exp(-np.abs(np.subtract(z, w)) ** 2 / t) / (math.pi * t)


def _line_kernel(t: float, grid: Grid) -> FloatArray:
    # One coordinate factor of the kernel, k_t = g_t(x) g_t(y).
    points = grid.points
    difference = points[:, None] - points[None, :]

    return np.exp(-(difference**2) / t) / math.sqrt(math.pi * t)


def _check_resolved(times: Sequence[float], grid: Grid) -> None:
    if min(times) <= 0:
        raise DomainError("Heat kernel times must be positive.")

    if not grid.resolves(min(times)):
        raise QuadratureError(
            f"The time {min(times)} is not resolved by a grid spacing of "
            f"{grid.spacing}."
        )


def kernel_mass(t: float, z: complex, grid: Grid) -> float:
    """Return `int k_t(z, w) dw` over the grid, which is 1 away from the boundary.

    Raises:
        DomainError: `t` is not positive.
        QuadratureError: The grid does not resolve the kernel.
    """
    _check_resolved([t], grid)
    x, y = grid.mesh()

    return grid.integrate(gaussian_kernel(t, z, x + 1j * y)).real


def composed_kernel(s0: float, s1: float, z: complex, w: complex, grid: Grid) -> float:
    """Return `int k_s0(z, u) k_s1(u, w) du` by the trapezoid rule on the grid.

    Raises:
        DomainError: A time is not positive.
        QuadratureError: The grid does not resolve a kernel.
    """
    _check_resolved([s0, s1], grid)
    points = grid.points
    factors = []

    for a, b in ((z.real, w.real), (z.imag, w.imag)):
        values = np.exp(-((a - points) ** 2) / s0 - (points - b) ** 2 / s1)
        factors.append(float(np.dot(grid.weights, values)))

    return math.prod(factors) / (math.pi**2 * s0 * s1)


def composed_kernel_hermite(
    s0: float, s1: float, z: complex, w: complex, nodes: int = 40
) -> float:
    """Return `int k_s0(z, u) k_s1(u, w) du` by tensor Gauss-Hermite quadrature.

    `u = z + sqrt(s0) v` turns the first kernel into the Hermite weight.

    Raises:
        DomainError: A time is not positive.
    """
    if s0 <= 0 or s1 <= 0:
        raise DomainError("Heat kernel times must be positive.")

    roots, weights = hermite.hermgauss(nodes)
    v = roots[:, None] + 1j * roots[None, :]
    values = gaussian_kernel(s1, z + math.sqrt(s0) * v, w)

    return float(np.einsum("i,j,ij->", weights, weights, values)) / math.pi


def semigroup_residual(
    s0: float, s1: float, z: complex, w: complex, grid: Grid
) -> float:
    """Return the worst relative error of both quadratures of `K_s0 K_s1 = K_s0+s1`."""
    exact = float(gaussian_kernel(s0 + s1, z, w))

    return max(
        abs(composed_kernel(s0, s1, z, w, grid) - exact) / exact,
        abs(composed_kernel_hermite(s0, s1, z, w) - exact) / exact,
    )


def diagonal_trace(
    form: FloatArray | ComplexArray, times: Sequence[float], grid: Grid
) -> complex:
    """Return `int b(x) (K_s0 ... K_sm)(x, x) dx` with every kernel on the grid.

    The kernels factor over the coordinates, so the diagonal of the composition is the
    product of two one dimensional diagonals.

    Raises:
        DomainError: A time is not positive.
        QuadratureError: The grid does not resolve a kernel.
    """
    _check_resolved(times, grid)
    weights = grid.weights
    product = _line_kernel(times[0], grid)

    for time in times[1:]:
        product = (product * weights[None, :]) @ _line_kernel(time, grid)

    diagonal = np.diagonal(product)

    return grid.integrate(form * np.outer(diagonal, diagonal))


def jlo_trace_sample(
    form: FloatArray | ComplexArray, times: tuple[float, float], grid: Grid
) -> complex:
    """Return the supertrace `Str(B K_s0 [dbar*, z] K_s1)` for `B = b dzbar`.

    The interior product sends `dzbar` to `-1` and the trace over `(0,1)`-forms comes
    with a sign `-1`, so the supertrace is the plain diagonal trace.

    Raises:
        DomainError: A time is not positive.
        QuadratureError: The grid does not resolve a kernel.
    """
    return diagonal_trace(form, times, grid)


def sigma_two(
    form: FloatArray | ComplexArray,
    t: float,
    grid: Grid,
    quadrature_order: int = DEFAULT_DEGREE,
) -> complex:
    """Return the degree 2 density `-int_(t Delta_1) Str(...) ds` before taking `[ ]_-`.

    On the flat line it does not depend on `t` and equals `-1 / pi int b`.

    Raises:
        DomainError: `t` is not positive.
        QuadratureError: The grid does not resolve a kernel.
    """

    def samples(nodes: FloatArray) -> ComplexArray:
        return np.array(
            [jlo_trace_sample(form, (s0, s1), grid) for s0, s1 in nodes],
            dtype=np.complex128,
        )

    return -complex(time_simplex_integral(samples, t, 1, quadrature_order))


# Asymptotic fits


@attrs.frozen
class AsymptoticFit:
    """A least-squares fit by `sum a_p t^p` for `-negative <= p <= positive`."""

    times: FloatArray = attrs.field(eq=False)
    values: ComplexArray = attrs.field(eq=False)
    powers: tuple[int, ...]
    coefficients: ComplexArray = attrs.field(eq=False)
    residual: float
    condition: float
    """The condition number of the column scaled Vandermonde matrix."""

    def coefficient(self, power: int) -> complex:
        if power not in self.powers:
            return 0j

        return complex(self.coefficients[self.powers.index(power)])

    @property
    def nonpositive_part(self) -> dict[int, complex]:
        """The coefficients of `t^p` for `p <= 0`, the part `[f(t)]_-`."""
        return {p: self.coefficient(p) for p in self.powers if p <= 0}

    @property
    def relative_residual(self) -> float:
        scale = float(np.linalg.norm(self.values))

        return self.residual / scale if scale else self.residual

    def to_report(self) -> dict[str, Any]:
        return {
            "powers": list(self.powers),
            "coefficients": [_complex_report(c) for c in self.coefficients],
            "residual": self.residual,
            "condition": self.condition,
        }


def geometric_times(tmin: float, tmax: float, samples: int) -> FloatArray:
    """Return `samples` decreasing times from `tmax` to `tmin` with a constant ratio.

    Raises:
        DomainError: The interval is empty or not positive.
    """
    if not 0 < tmin < tmax or samples < 2:
        raise DomainError("A time grid needs 0 < tmin < tmax and two samples.")

    return np.geomspace(tmax, tmin, samples)


def laurent_nonpositive_part(
    times: npt.ArrayLike,
    values: npt.ArrayLike,
    negative: int = 1,
    positive: int = 2,
    condition_limit: float = CONDITION_LIMIT,
    residual_limit: float = RESIDUAL_LIMIT,
) -> AsymptoticFit:
    """Fit samples `f(t_i)` by a Laurent polynomial in `t`.

    The columns of the Vandermonde matrix are scaled to unit norm before the condition
    number is measured.

    Arguments:
        times: Distinct positive sample times, usually a geometric grid.
        values: Real or complex samples.
        negative: The largest power of `1 / t`.
        positive: The largest power of `t`.
        condition_limit: The largest condition number that is accepted.
        residual_limit: The largest residual that is accepted, relative to the norm
            of the samples.

    Raises:
        DomainError: There are fewer than `negative + positive + 3` samples.
        FitUnstableError: The scaled Vandermonde matrix is too badly conditioned, or
            the samples are too far from a Laurent polynomial of the given powers.
    """
    t = np.asarray(times, dtype=np.float64)
    f = np.asarray(values, dtype=np.complex128)
    powers = tuple(range(-negative, positive + 1))

    if t.shape != f.shape or len(t) < len(powers) + 2:
        raise DomainError(
            f"A fit with {len(powers)} powers needs at least {len(powers) + 2} samples."
        )

    if np.any(t <= 0):
        raise DomainError("Sample times must be positive.")

    vandermonde = t[:, None] ** np.array(powers)[None, :]
    norms = np.linalg.norm(vandermonde, axis=0)
    scaled = vandermonde / norms
    condition = float(np.linalg.cond(scaled))

    if condition > condition_limit:
        raise FitUnstableError(
            f"The Vandermonde matrix has condition number {condition:.3g}, use a wider "
            "time grid.",
            condition,
        )

    solution, *_ = np.linalg.lstsq(scaled.astype(np.complex128), f, rcond=None)
    coefficients = solution / norms
    residual = float(np.linalg.norm(vandermonde @ coefficients - f))
    logger.debug("Fitted %d samples with residual %g", len(t), residual)
    fit = AsymptoticFit(t, f, powers, coefficients, residual, condition)

    if fit.relative_residual > residual_limit:
        raise FitUnstableError(
            f"The fit leaves a relative residual of {fit.relative_residual:.3g}, the "
            f"samples are not a Laurent polynomial in t with powers {powers}.",
            condition,
        )

    return fit


def _complex_report(value: complex) -> dict[str, float]:
    return {"re": float(value.real), "im": float(value.imag)}


# Index density


@attrs.frozen
class IndexDensityReport:
    """Both sides of the degree 2 local index density of three bumps."""

    lhs: complex | None
    """The `t^0` coefficient of the heat kernel density, `None` if undecided."""
    rhs: complex
    """`1 / (2 pi i) int rho_0 d rho_1 ^ d rho_2` through the Jacobian."""
    rhs_complex: complex
    """The same integral through `d/dz` and `d/dzbar`."""
    closed_form: complex
    """`-1 / pi int b`, the value every sample should approach."""
    fit: AsymptoticFit | None
    tolerance: float
    error: str | None = None

    @property
    def relative_error(self) -> float | None:
        if self.lhs is None:
            return None

        difference = abs(self.lhs - self.rhs)

        return difference / abs(self.rhs) if abs(self.rhs) else difference

    @property
    def singular_coefficient(self) -> complex:
        return 0j if self.fit is None else self.fit.coefficient(-1)

    @property
    def status(self) -> Status:
        if self.lhs is None or self.fit is None:
            return "inconclusive"

        if self.relative_error is not None and self.relative_error <= self.tolerance:
            return "pass"

        return "fail"

    def to_report(self) -> dict[str, Any]:
        return {
            "status": self.status,
            "lhs": None if self.lhs is None else _complex_report(self.lhs),
            "rhs": _complex_report(self.rhs),
            "rhs_complex": _complex_report(self.rhs_complex),
            "closed_form": _complex_report(self.closed_form),
            "relative_error": self.relative_error,
            "singular_coefficient": _complex_report(self.singular_coefficient),
            "fit": None if self.fit is None else self.fit.to_report(),
            "error": self.error,
        }


def verify_index_density(
    bumps: tuple[BumpFunction, BumpFunction, BumpFunction],
    grid: Grid,
    times: npt.ArrayLike,
    *,
    negative: int = 1,
    positive: int = 2,
    condition_limit: float = CONDITION_LIMIT,
    residual_limit: float = RESIDUAL_LIMIT,
    quadrature_order: int = DEFAULT_DEGREE,
    tolerance: float = 1e-3,
) -> IndexDensityReport:
    """Compare the heat kernel density of three bumps with its closed form.

    The left side is the `t^0` coefficient of `sigma_two` fitted on the sample times.
    The right side is `1 / (2 pi i) int rho_0 d rho_1 ^ d rho_2` by grid quadrature.
    An unstable fit, a fit with a large residual or an unresolved kernel makes the
    report inconclusive.

    Raises:
        DomainError: A bump leaves the grid.
    """
    rho0, rho1, rho2 = (bump.sample(grid) for bump in bumps)
    form = multiplication_form(rho0, rho1, rho2)
    rhs = grid.integrate(rho0.value * area_form(rho1, rho2)) / (2j * math.pi)
    rhs_complex = grid.integrate(-2j * form) / (2j * math.pi)
    closed_form = -grid.integrate(form) / math.pi

    try:
        samples = [sigma_two(form, float(t), grid, quadrature_order) for t in times]
        fit = laurent_nonpositive_part(
            times, samples, negative, positive, condition_limit, residual_limit
        )
    except (FitUnstableError, QuadratureError) as e:
        logger.warning("The index density is undecided: %s", e)

        return IndexDensityReport(
            None, rhs, rhs_complex, closed_form, None, tolerance, str(e)
        )

    return IndexDensityReport(
        fit.coefficient(0), rhs, rhs_complex, closed_form, fit, tolerance
    )


def swapped(
    bumps: tuple[BumpFunction, BumpFunction, BumpFunction],
) -> tuple[BumpFunction, BumpFunction, BumpFunction]:
    """Exchange `rho_1` and `rho_2`, which flips the sign of both sides."""
    return bumps[0], bumps[2], bumps[1]

