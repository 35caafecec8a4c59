# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Configuration of the verification suites.

Every section is a frozen attrs class whose validators run at construction, so an
invalid configuration is rejected before any suite starts.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path
from typing import Any, ClassVar, TextIO

import attrs

from hochschild_lefschetz.analysis.flat_jlo import BumpFunction, Grid, geometric_times
from hochschild_lefschetz.exceptions import ConfigError
from hochschild_lefschetz.homology.classes import GrowthSchedule, TruncationWindow
from hochschild_lefschetz.typing import FloatArray, SuiteName

SCHEMA_VERSION = "1"
"""The version of the configuration and report formats."""

SUITE_NAMES: tuple[SuiteName, ...] = (
    "weyl",
    "hochschild",
    "twist",
    "classes",
    "simplicial",
    "lefschetz",
    "jlo",
)

_positive = attrs.validators.gt(0)
_non_negative = attrs.validators.ge(0)


def _ints(value: Any) -> tuple[int, ...]:
    return tuple(value)


def _pair(_: object, attribute: attrs.Attribute[Any], value: tuple[float, ...]) -> None:
    if len(value) != 2:  # noqa: PLR2004
        raise ValueError(f"{attribute.name} must have two entries.")


@attrs.frozen
class CasesConfig:
    """The number of random cases of the property checks."""

    algebra: int = attrs.field(default=200, validator=_positive)
    """Cases of the Weyl algebra and Hochschild identities."""
    twist: int = attrs.field(default=50, validator=_positive)
    classes: int = attrs.field(default=20, validator=_positive)


@attrs.frozen
class WindowConfig:
    """The first truncation window and its growth.

    Without a degree and an order the first window covers the inputs.
    """

    degree: int | None = attrs.field(
        default=None, validator=attrs.validators.optional(_non_negative)
    )
    order: int | None = attrs.field(
        default=None, validator=attrs.validators.optional(_non_negative)
    )
    laurent: int = attrs.field(default=0, validator=_non_negative)
    step: int = attrs.field(default=2, validator=_non_negative)
    laurent_factor: int = attrs.field(default=2, validator=attrs.validators.ge(1))
    rounds: int = attrs.field(default=4, validator=attrs.validators.ge(1))

    def growth(self) -> GrowthSchedule:
        return GrowthSchedule(self.step, self.laurent_factor, self.rounds)

    def start(self, chain_degree: int) -> TruncationWindow | None:
        """Return the first window for a cycle of the given degree, if it is fixed."""
        if self.degree is None or self.order is None:
            return None

        return TruncationWindow(self.degree, self.order, self.laurent, chain_degree + 2)


@attrs.frozen
class QuadratureConfig:
    order: int = attrs.field(default=7, validator=_non_negative)
    """The polynomial degree of the simplex rule."""
    pieces: int = attrs.field(default=1, validator=attrs.validators.ge(1))
    """The Kuhn subdivision of every simplex."""
    max_k: int = attrs.field(default=3, validator=_non_negative)
    max_p: int = attrs.field(default=4, validator=attrs.validators.ge(1))
    tolerance: float = attrs.field(default=1e-10, validator=_positive)


@attrs.frozen
class BumpConfig:
    center: tuple[float, float] = attrs.field(converter=tuple, validator=_pair)
    radius: float = attrs.field(validator=_positive)
    height: float = 1.0
    tilt: tuple[float, float] = attrs.field(
        default=(0.0, 0.0), converter=tuple, validator=_pair
    )

    def bump(self) -> BumpFunction:
        x, y = self.center

        return BumpFunction(complex(x, y), self.radius, self.height, self.tilt)


def _default_triples() -> tuple[tuple[BumpConfig, BumpConfig, BumpConfig], ...]:
    return (
        (
            BumpConfig((0.0, 0.0), 1.2),
            BumpConfig((0.3, 0.1), 1.0),
            BumpConfig((-0.2, 0.25), 0.9),
        ),
        (
            BumpConfig((0.1, -0.1), 1.0, 2.0),
            BumpConfig((0.4, 0.3), 0.8),
            BumpConfig((-0.3, 0.2), 1.1),
        ),
        (
            BumpConfig((0.0, 0.0), 1.0, 1.0, (0.3, -0.2)),
            BumpConfig((0.2, -0.3), 0.9, 1.0, (0.0, 0.4)),
            BumpConfig((-0.25, 0.0), 1.0),
        ),
    )


def _triples(value: Any) -> tuple[tuple[BumpConfig, BumpConfig, BumpConfig], ...]:
    triples: list[tuple[BumpConfig, BumpConfig, BumpConfig]] = []

    for triple in value:
        bumps = tuple(
            bump if isinstance(bump, BumpConfig) else BumpConfig(**bump)
            for bump in triple
        )

        if len(bumps) != 3:  # noqa: PLR2004
            raise ValueError("Every bump triple has exactly three bumps.")

        triples.append((bumps[0], bumps[1], bumps[2]))

    return tuple(triples)


@attrs.frozen
class JloConfig:
    grid: int = attrs.field(default=256, validator=attrs.validators.ge(3))
    """The number of grid points along each axis."""
    half_width: float = attrs.field(default=2.5, validator=_positive)
    tmin: float = attrs.field(default=0.02, validator=_positive)
    tmax: float = attrs.field(default=0.2, validator=_positive)
    samples: int = attrs.field(default=8, validator=attrs.validators.ge(2))
    negative: int = attrs.field(default=1, validator=_non_negative)
    """The largest power of `1 / t` in the fit."""
    positive: int = attrs.field(default=2, validator=_non_negative)
    """The largest power of `t` in the fit."""
    condition_limit: float = attrs.field(default=1e10, validator=_positive)
    residual_limit: float = attrs.field(default=1e-3, validator=_positive)
    """The largest relative residual of the fit."""
    tolerance: float = attrs.field(default=1e-3, validator=_positive)
    singular_tolerance: float = attrs.field(default=1e-4, validator=_positive)
    """The largest accepted size of the fitted `1 / t` coefficient."""
    semigroup_tolerance: float = attrs.field(default=1e-7, validator=_positive)
    triples: tuple[tuple[BumpConfig, BumpConfig, BumpConfig], ...] = attrs.field(
        factory=_default_triples, converter=_triples
    )

    def __attrs_post_init__(self) -> None:
        if self.tmin >= self.tmax:
            raise ValueError("tmin must be smaller than tmax.")

    def make_grid(self) -> Grid:
        return Grid(self.grid, self.half_width)

    def times(self) -> FloatArray:
        return geometric_times(self.tmin, self.tmax, self.samples)


@attrs.frozen
class LefschetzConfig:
    degrees: tuple[int, ...] = attrs.field(
        default=(-3, -2, 0, 1, 2, 3), converter=_ints
    )
    """The line bundle degrees of the proportionality check."""
    euler_degrees: tuple[int, ...] = attrs.field(
        default=tuple(range(-4, 5)), converter=_ints
    )
    family: tuple[str, ...] | None = attrs.field(
        default=None,
        converter=attrs.converters.optional(tuple),
        validator=attrs.validators.optional(
            attrs.validators.deep_iterable(attrs.validators.instance_of(str))
        ),
    )
    """Operators in `z` and `d`. `None` uses the `sl2` family."""


@attrs.frozen
class ReportConfig:
    path: Path | None = attrs.field(
        default=None, converter=attrs.converters.optional(Path)
    )
    timings: bool = False


def _sections(value: Any) -> tuple[SuiteName, ...]:
    return tuple(value)


def _paths(value: Any) -> tuple[Path, ...]:
    return tuple(Path(path) for path in value)


@attrs.frozen
class SuiteConfig:
    """The configuration of a verification run."""

    suites: tuple[SuiteName, ...] = attrs.field(
        default=SUITE_NAMES,
        converter=_sections,
        validator=attrs.validators.deep_iterable(attrs.validators.in_(SUITE_NAMES)),
    )
    seed: int = attrs.field(default=0, validator=attrs.validators.instance_of(int))
    """The seed of every random case."""
    cases: CasesConfig = attrs.field(factory=CasesConfig)
    window: WindowConfig = attrs.field(factory=WindowConfig)
    quadrature: QuadratureConfig = attrs.field(factory=QuadratureConfig)
    jlo: JloConfig = attrs.field(factory=JloConfig)
    lefschetz: LefschetzConfig = attrs.field(factory=LefschetzConfig)
    complexes: tuple[Path, ...] = attrs.field(default=(), converter=_paths)
    """Extra complex files of the simplicial suite, next to the built in ones."""
    report: ReportConfig = attrs.field(factory=ReportConfig)

    _SECTIONS: ClassVar[dict[str, type]] = {
        "cases": CasesConfig,
        "window": WindowConfig,
        "quadrature": QuadratureConfig,
        "jlo": JloConfig,
        "lefschetz": LefschetzConfig,
        "report": ReportConfig,
    }

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> SuiteConfig:
        """Build a configuration from parsed JSON.

        Raises:
            ConfigError: A key is unknown or a value is invalid.
        """
        kwargs: dict[str, Any] = {}

        for key, value in data.items():
            if key == "schema_version":
                if value != SCHEMA_VERSION:
                    raise ConfigError(
                        f"unsupported schema version {value!r}", "schema_version"
                    )
                continue

            section = cls._SECTIONS.get(key)

            if section is None:
                kwargs[key] = value
                continue

            if not isinstance(value, Mapping):
                raise ConfigError("expected an object", key)

            kwargs[key] = _build(section, value, key)

        return _build(cls, kwargs, "")

    @classmethod
    def from_json(cls, fp: TextIO) -> SuiteConfig:
        """Read a configuration file.

        Raises:
            ConfigError: The file is not JSON or does not follow the schema.
        """
        try:
            data = json.load(fp)
        except json.JSONDecodeError as e:
            raise ConfigError(f"invalid JSON: {e.msg}", "") from e

        if not isinstance(data, dict):
            raise ConfigError("expected an object", "")

        return cls.from_mapping(data)  # pyright: ignore[reportUnknownArgumentType]

    def to_report(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            **attrs.asdict(
                self,
                value_serializer=lambda _, __, value: (
                    str(value) if isinstance(value, Path) else value
                ),
            ),
        }


def _build[T](cls: type[T], data: Mapping[str, Any], prefix: str) -> T:
    fields = attrs.fields(cls)  # pyright: ignore[reportArgumentType]
    names = {field.name for field in fields}  # pyright: ignore[reportUnknownVariableType]

    for key in data:
        if key not in names:
            raise ConfigError("unknown key", f"{prefix}.{key}" if prefix else key)

    try:
        return cls(**data)
    except (TypeError, ValueError) as e:
        raise ConfigError(str(e), prefix or "config") from e
