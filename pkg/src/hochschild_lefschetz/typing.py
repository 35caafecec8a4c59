# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Custom primitive types and aliases used by modules in hochschild-lefschetz."""

from collections.abc import Hashable
from fractions import Fraction
from typing import Literal

import numpy as np
import numpy.typing as npt

type Scalar = Fraction
"""An exact rational number. Always in lowest terms with a positive denominator."""

type Exponents = tuple[int, ...]
"""An exponent vector, one entry per variable."""

type SparseVector[K: Hashable] = dict[K, Fraction]
"""A finite linear combination of basis keys. Zero coefficients are never stored."""

type Word[K: Hashable] = tuple[K, ...]
"""A tensor word `(a_0, ..., a_q)` of basis keys."""

type Status = Literal["pass", "fail", "inconclusive"]
"""The verdict of a single verification check."""

# Simplicial

type Vertex = int

type Simplex = tuple[Vertex, ...]
"""The vertices of a simplex. Sorted unless the ordering itself carries a sign."""

type PartitionKind = Literal["barycentric", "cyclic", "squared"]
"""The partitions of unity on the standard simplex that the simplex integral supports.

`barycentric` uses the coordinates themselves, `cyclic` perturbs them by a cyclic
quadratic term and `squared` normalizes their squares.
"""

# Numerics

type FloatArray = npt.NDArray[np.float64]

type ComplexArray = npt.NDArray[np.complex128]

# Verification suites

type SuiteName = Literal[
    "weyl", "hochschild", "twist", "classes", "simplicial", "lefschetz", "jlo"
]
