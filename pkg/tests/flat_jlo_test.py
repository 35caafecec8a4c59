# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Tests for heat kernel traces and the local index density on the flat line."""

import math

import numpy as np
import pytest

from hochschild_lefschetz.analysis.flat_jlo import (
    CONDITION_LIMIT,
    RESIDUAL_LIMIT,
    BumpFunction,
    Grid,
    area_form,
    diagonal_trace,
    gaussian_kernel,
    geometric_times,
    kernel_mass,
    laurent_nonpositive_part,
    multiplication_form,
    semigroup_residual,
    sigma_two,
    swapped,
    verify_index_density,
)
from hochschild_lefschetz.exceptions import (
    DomainError,
    FitUnstableError,
    QuadratureError,
)

GRID = Grid(81, 4.0)

BUMPS = (
    BumpFunction(0j, 1.5, tilt=(0.2, -0.1)),
    BumpFunction(0.5 + 0j, 1.0),
    BumpFunction(0.3j, 1.2, height=2.0, tilt=(-0.3, 0.4)),
)


def _form(grid: Grid = GRID) -> np.ndarray:
    rho0, rho1, rho2 = (bump.sample(grid) for bump in BUMPS)

    return multiplication_form(rho0, rho1, rho2)


def test_grid() -> None:
    """Test the trapezoid rule and the resolution check of a grid."""
    grid = Grid(5, 2.0)

    assert grid.spacing == 1
    assert list(grid.weights) == [0.5, 1, 1, 1, 0.5]
    assert grid.integrate(np.ones((5, 5))) == 16
    assert grid.resolves(4.0)
    assert not grid.resolves(3.9)

    with pytest.raises(ValueError):
        Grid(2, 1.0)


def test_bump_function() -> None:
    """Test the samples of a bump against central differences."""
    grid = Grid(21, 2.0)
    bump = BumpFunction(0.1 + 0.2j, 1.0, tilt=(0.3, -0.2))
    values = bump.sample(grid)
    h = 1e-5

    for direction, derivative in ((h, values.dx), (1j * h, values.dy)):
        lower = BumpFunction(bump.center + direction, 1.0, tilt=bump.tilt)
        upper = BumpFunction(bump.center - direction, 1.0, tilt=bump.tilt)
        difference = (upper.sample(grid).value - lower.sample(grid).value) / (2 * h)

        assert np.allclose(derivative, difference, atol=1e-6)

    assert values.value.min() == 0
    assert np.allclose(values.dz + values.dzbar, values.dx)
    assert BumpFunction(0j, 1.0).sample(grid).value.max() == pytest.approx(1)


def test_bump_exceptions() -> None:
    """Test rejecting bumps that are not positive or leave the grid."""
    with pytest.raises(DomainError, match="keep it positive"):
        BumpFunction(0j, 1.0, tilt=(1.0, 0.0))

    with pytest.raises(DomainError, match="leaves the square"):
        BumpFunction(1.5 + 0j, 1.0).sample(Grid(5, 2.0))


def test_forms() -> None:
    """Test that both ways of writing the area form agree point by point."""
    rho0, rho1, rho2 = (bump.sample(GRID) for bump in BUMPS)
    form = multiplication_form(rho0, rho1, rho2)

    assert np.allclose(-2j * form, rho0.value * area_form(rho1, rho2))
    assert np.allclose(multiplication_form(rho0, rho2, rho1), -form)


def test_gaussian_kernel() -> None:
    """Test the heat kernel, its mass and the semigroup property."""
    assert gaussian_kernel(1.0, 0j, 0j) == pytest.approx(1 / math.pi)
    assert gaussian_kernel(2.0, 1 + 1j, 0j) == pytest.approx(
        math.exp(-1) / (2 * math.pi)
    )
    assert kernel_mass(0.5, 0.2 - 0.1j, GRID) == pytest.approx(1, rel=1e-8)
    assert semigroup_residual(0.5, 0.7, 0.1 + 0.2j, -0.3j, GRID) < 1e-8

    with pytest.raises(DomainError, match="t > 0"):
        gaussian_kernel(0.0, 0j, 0j)

    with pytest.raises(DomainError, match="must be positive"):
        kernel_mass(-1.0, 0j, GRID)

    with pytest.raises(QuadratureError, match="not resolved"):
        kernel_mass(1.0, 0j, Grid(5, 2.0))


def test_diagonal_trace() -> None:
    """Test traces of compositions of heat kernels."""
    form = _form()
    total = GRID.integrate(form)

    assert diagonal_trace(form, [1.0], GRID) == pytest.approx(total / math.pi)
    assert diagonal_trace(form, (0.3, 0.5), GRID) == pytest.approx(
        total / (0.8 * math.pi), rel=1e-6
    )


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_sigma_two(t: float) -> None:
    """Test that the density on the flat line does not depend on the time."""
    form = _form()

    assert sigma_two(form, t, GRID) == pytest.approx(
        -GRID.integrate(form) / math.pi, rel=1e-6
    )


def test_laurent_nonpositive_part() -> None:
    """Test recovering the singular and constant parts of a Laurent polynomial."""
    times = geometric_times(0.1, 1.0, 8)
    values = 2 / times + 3 - times + 0.5 * times**2
    fit = laurent_nonpositive_part(times, values)

    assert times[0] == pytest.approx(1)
    assert times[-1] == pytest.approx(0.1)
    assert fit.powers == (-1, 0, 1, 2)
    assert fit.nonpositive_part[-1] == pytest.approx(2)
    assert fit.nonpositive_part[0] == pytest.approx(3)
    assert fit.coefficient(2) == pytest.approx(0.5)
    assert fit.coefficient(5) == 0
    assert fit.relative_residual < 1e-10
    assert fit.to_report()["powers"] == [-1, 0, 1, 2]


def test_laurent_exceptions() -> None:
    """Test rejecting fits that can not be trusted."""
    times = geometric_times(0.1, 1.0, 8)

    with pytest.raises(FitUnstableError, match="wider time grid") as e:
        laurent_nonpositive_part(times, np.ones(8), condition_limit=1.0)

    assert e.value.condition > 1

    wild = geometric_times(0.1, 1.0, 12)

    with pytest.raises(FitUnstableError, match="relative residual") as e:
        laurent_nonpositive_part(wild, np.log(wild) + np.sin(40 * wild))

    assert e.value.condition < CONDITION_LIMIT

    fit = laurent_nonpositive_part(
        wild, np.log(wild) + np.sin(40 * wild), residual_limit=math.inf
    )

    assert fit.relative_residual > RESIDUAL_LIMIT

    with pytest.raises(DomainError, match="at least 6 samples"):
        laurent_nonpositive_part(times[:5], np.ones(5))

    with pytest.raises(DomainError, match="must be positive"):
        laurent_nonpositive_part(-times, np.ones(8))

    with pytest.raises(DomainError, match="0 < tmin < tmax"):
        geometric_times(1.0, 0.1, 5)


def test_verify_index_density() -> None:
    """Test that the heat kernel density matches the integral of the area form."""
    times = geometric_times(0.5, 2.0, 6)
    report = verify_index_density(BUMPS, GRID, times)

    assert report.status == "pass"
    assert report.lhs is not None
    assert report.lhs == pytest.approx(report.closed_form, rel=1e-6)
    assert report.rhs == pytest.approx(report.rhs_complex)
    assert report.rhs == pytest.approx(report.closed_form)
    assert abs(report.singular_coefficient) < 1e-6
    assert report.to_report()["error"] is None

    mirrored = verify_index_density(swapped(BUMPS), GRID, times)

    assert mirrored.rhs == pytest.approx(-report.rhs)
    assert mirrored.lhs == pytest.approx(-report.lhs, rel=1e-6)


def test_inconclusive_index_density() -> None:
    """Test that unstable fits and unresolved kernels leave the density undecided."""
    unstable = verify_index_density(
        BUMPS, GRID, geometric_times(0.5, 2.0, 6), condition_limit=1.0
    )

    assert unstable.status == "inconclusive"
    assert unstable.lhs is None
    assert unstable.relative_error is None
    assert "condition number" in (unstable.error or "")

    unresolved = verify_index_density(BUMPS, GRID, geometric_times(0.01, 1.0, 6))

    assert unresolved.status == "inconclusive"
    assert unresolved.to_report()["fit"] is None
