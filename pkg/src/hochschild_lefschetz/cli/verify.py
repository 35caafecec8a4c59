# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""The cli to run the verification suites and write their reports."""

from __future__ import annotations

import json
import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import attrs
import click
import cloup

from hochschild_lefschetz.cli._confopts import (
    complex_option,
    configure_logging,
    jlo_options,
    lefschetz_constraint,
    lefschetz_options,
    load_config,
    override,
    run_options,
)
from hochschild_lefschetz.cli.config import SCHEMA_VERSION, SuiteConfig
from hochschild_lefschetz.suites import SuiteReport, run_suites
from hochschild_lefschetz.typing import Status, SuiteName

logger = logging.getLogger(__name__)


def _status(reports: Sequence[SuiteReport]) -> Status:
    statuses = {report.status for report in reports}

    if "fail" in statuses:
        return "fail"

    if "inconclusive" in statuses:
        return "inconclusive"

    return "pass"


def render_report(config: SuiteConfig, reports: Sequence[SuiteReport]) -> str:
    """Return the JSON report of a run with sorted keys.

    Without timings the report of the exact suites only depends on the configuration.
    """
    document: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "status": _status(reports),
        "config": config.to_report(),
        "suites": [
            report.to_report(timings=config.report.timings) for report in reports
        ],
    }

    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _prepare(
    config_file: Path | None,
    report_file: Path | None,
    seed: int | None,
    timings: bool | None,
    verbose: int,
) -> SuiteConfig:
    configure_logging(verbose)
    config = load_config(config_file)
    config = override(config, "--seed", seed=seed)

    return override(
        config,
        "--report",
        report=override(config.report, "--report", path=report_file, timings=timings),
    )


def _run(
    config: SuiteConfig, suites: Sequence[SuiteName], workers: int | None
) -> None:
    reports = run_suites(suites, config, workers)
    text = render_report(config, reports)

    if config.report.path is None:
        click.echo(text, nl=False)
    else:
        try:
            config.report.path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise click.FileError(str(config.report.path), hint=e.strerror) from e

        logger.info("Wrote the report to %s", config.report.path)

    for report in reports:
        failed = [check.name for check in report.checks if check.status != "pass"]
        summary = f"{report.suite}: {report.status}"
        click.echo(f"{summary} ({', '.join(failed)})" if failed else summary, err=True)

    if _status(reports) == "fail":
        raise click.exceptions.Exit(1)


@cloup.group()
@cloup.version_option()
def app() -> None:
    """A tool to verify Hochschild homology and Lefschetz number computations.

    Every command writes a JSON report and exits with status 1 if any check fails.
    """


@app.command(name="verify-weyl")
@run_options
def verify_weyl(
    config_file: Path | None,
    report_file: Path | None,
    workers: int | None,
    seed: int | None,
    timings: bool | None,
    verbose: int,
) -> None:
    """Check the Weyl algebra product, its action and the operator syntax."""
    config = _prepare(config_file, report_file, seed, timings, verbose)
    _run(config, ["weyl"], workers)


@app.command(name="verify-hochschild")
@run_options
def verify_hochschild(
    config_file: Path | None,
    report_file: Path | None,
    workers: int | None,
    seed: int | None,
    timings: bool | None,
    verbose: int,
) -> None:
    """Check the Hochschild complex identities and the class extraction."""
    config = _prepare(config_file, report_file, seed, timings, verbose)
    _run(config, ["hochschild", "classes"], workers)


@app.command(name="verify-twist")
@run_options
def verify_twist(
    config_file: Path | None,
    report_file: Path | None,
    workers: int | None,
    seed: int | None,
    timings: bool | None,
    verbose: int,
) -> None:
    """Check twisting by Maurer-Cartan elements on a Grassmann extension."""
    config = _prepare(config_file, report_file, seed, timings, verbose)
    _run(config, ["twist"], workers)


@app.command(name="verify-simplicial")
@complex_option
@run_options
def verify_simplicial(
    complex_files: tuple[Path, ...],
    config_file: Path | None,
    report_file: Path | None,
    workers: int | None,
    seed: int | None,
    timings: bool | None,
    verbose: int,
) -> None:
    """Check the signs of dual cells and the simplex integrals.

    The built in complexes are always checked, next to the configured ones and the
    ones given with --complex.
    """
    config = _prepare(config_file, report_file, seed, timings, verbose)
    config = attrs.evolve(config, complexes=(*config.complexes, *complex_files))
    _run(config, ["simplicial"], workers)


@app.command(name="lefschetz")
@lefschetz_options
@lefschetz_constraint
@run_options
def lefschetz(
    degrees: tuple[int, ...],
    family: str | None,
    operators: tuple[str, ...],
    config_file: Path | None,
    report_file: Path | None,
    workers: int | None,
    seed: int | None,
    timings: bool | None,
    verbose: int,
) -> None:
    """Compare Lefschetz numbers with local classes on the line bundles O(k).

    The identity is added to the given operators to calibrate the constant.
    """
    config = _prepare(config_file, report_file, seed, timings, verbose)
    operator_family: tuple[str, ...] | None = config.lefschetz.family

    if family is not None:
        operator_family = None
    elif operators:
        operator_family = operators if "1" in operators else ("1", *operators)

    config = override(
        config,
        "--k",
        lefschetz=attrs.evolve(
            override(config.lefschetz, "--k", degrees=degrees or None),
            family=operator_family,
        ),
    )
    _run(config, ["lefschetz"], workers)


@app.command(name="jlo-check")
@jlo_options
@run_options
def jlo_check(
    grid: int | None,
    tmin: float | None,
    tmax: float | None,
    config_file: Path | None,
    report_file: Path | None,
    workers: int | None,
    seed: int | None,
    timings: bool | None,
    verbose: int,
) -> None:
    """Compare heat kernel index densities of bump functions with their closed form."""
    config = _prepare(config_file, report_file, seed, timings, verbose)
    config = override(
        config,
        "--grid",
        jlo=override(config.jlo, "--tmin/--tmax", grid=grid, tmin=tmin, tmax=tmax),
    )
    _run(config, ["jlo"], workers)


@app.command(name="all")
@run_options
def verify_all(
    config_file: Path | None,
    report_file: Path | None,
    workers: int | None,
    seed: int | None,
    timings: bool | None,
    verbose: int,
) -> None:
    """Run every suite selected by the configuration."""
    config = _prepare(config_file, report_file, seed, timings, verbose)
    _run(config, config.suites, workers)
