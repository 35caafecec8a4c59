# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Options that are used by the cli tools."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import attrs
import click
import cloup
from cloup.constraints import mutually_exclusive

from hochschild_lefschetz.cli.config import SuiteConfig
from hochschild_lefschetz.exceptions import ConfigError

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def load_config(config_file: Path | None) -> SuiteConfig:
    """Read the configuration file, or return the defaults without one."""
    if config_file is None:
        return SuiteConfig()

    try:
        with config_file.open(encoding="utf-8") as fp:
            return SuiteConfig.from_json(fp)
    except OSError as e:
        raise click.FileError(str(config_file), hint=e.strerror) from e
    except ConfigError as e:
        raise click.BadParameter(str(e), param_hint="--config") from e


def override[T](section: T, param_hint: str, **changes: Any) -> T:
    """Replace the values of a configuration section given on the command line."""
    changes = {key: value for key, value in changes.items() if value is not None}

    if not changes:
        return section

    try:
        return attrs.evolve(section, **changes)  # pyright: ignore[reportArgumentType]
    except (TypeError, ValueError) as e:
        raise click.BadParameter(str(e), param_hint=param_hint) from e


def configure_logging(verbose: int) -> None:
    logging.basicConfig(
        level=LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)],
        format="%(levelname)s %(name)s: %(message)s",
    )


run_options = cloup.option_group(
    "Run Options",
    cloup.option(
        "--config",
        "config_file",
        help="JSON configuration file. Every key has a default.",
        type=cloup.Path(exists=True, dir_okay=False, path_type=Path),
    ),
    cloup.option(
        "--report",
        "-o",
        "report_file",
        help=(
            "Output file of the JSON report. Defaults to the configured report path, "
            "or the standard output."
        ),
        type=cloup.Path(dir_okay=False, writable=True, path_type=Path),
    ),
    cloup.option(
        "--workers",
        help="Number of worker processes. Defaults to the number of logical cores.",
        type=cloup.IntRange(1),
    ),
    cloup.option("--seed", help="Seed of the randomized cases.", type=int),
    cloup.option(
        "--timings/--no-timings",
        help="Write the running time of every suite into the report.",
        default=None,
    ),
    cloup.option(
        "--verbose",
        "-v",
        help="Log more, repeat for debug output.",
        count=True,
    ),
)

# Simplicial

complex_option = cloup.option(
    "--complex",
    "complex_files",
    help="Complex definition file checked next to the built in complexes.",
    type=cloup.Path(exists=True, dir_okay=False, path_type=Path),
    multiple=True,
)

# Lefschetz

lefschetz_options = cloup.option_group(
    "Lefschetz Options",
    cloup.option(
        "--k",
        "degrees",
        help="Degree of the line bundle O(k), may be repeated.",
        type=int,
        multiple=True,
    ),
    cloup.option(
        "--family",
        help="A built in operator family. Defaults to the sl2 family.",
        type=cloup.Choice(["default"], case_sensitive=False),
    ),
    cloup.option(
        "--op",
        "operators",
        help="Operator in z and d, for example 'z*d^2 - 2*d', may be repeated.",
        multiple=True,
    ),
)

lefschetz_constraint = cloup.constraint(
    mutually_exclusive.rephrased(
        help="an operator family or operators", error="give a family or operators"
    ),
    ["family", "operators"],
)

# Heat kernels

jlo_options = cloup.option_group(
    "Heat Kernel Options",
    cloup.option(
        "--grid",
        help="Number of grid points along each axis.",
        type=cloup.IntRange(3),
    ),
    cloup.option(
        "--tmin", help="Smallest sample time.", type=cloup.FloatRange(0, min_open=True)
    ),
    cloup.option(
        "--tmax", help="Largest sample time.", type=cloup.FloatRange(0, min_open=True)
    ),
)
