# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Exact arithmetic in the algebra of matrix valued polynomial differential operators.

An operator is a finite sum of monomials `c * E[i,j] * y^alpha * d^beta` with rational
coefficients `c`, written in normal order: every power of a variable `y_k` stands to the
left of every derivative `d_k`. In Laurent mode the exponents of the variables may be
negative, which models operators with coefficients on the overlap of two charts.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import lru_cache
from itertools import product

import attrs

from hochschild_lefschetz._math import falling_factorial
from hochschild_lefschetz._sparse import add_term, to_fraction
from hochschild_lefschetz.exceptions import DimensionMismatchError, DomainError
from hochschild_lefschetz.typing import Exponents


@attrs.frozen(order=True)
class MonKey:
    """The monomial `E[row,col] * y^alpha * d^beta` of the operator basis.

    Matrix indices are stored zero based. The textual syntax is one based.
    """

    alpha: Exponents
    """The exponents of the variables."""
    beta: Exponents
    """The exponents of the derivatives, never negative."""
    row: int = 0
    col: int = 0

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def order(self) -> int:
        """The order `|beta|` of the monomial as a differential operator."""
        return sum(self.beta)

    @property
    def degree(self) -> int:
        """The coefficient degree `|alpha|`, counting negative exponents by size."""
        return sum(abs(a) for a in self.alpha)

    @property
    def laurent_bound(self) -> int:
        """The largest absolute value of a variable exponent."""
        return max((abs(a) for a in self.alpha), default=0)

    @property
    def weight(self) -> int:
        """The eigenvalue of the commutator with the Euler operator `sum y_k d_k`."""
        return sum(self.alpha) - sum(self.beta)

    @property
    def is_constant(self) -> bool:
        return not any(self.alpha) and not any(self.beta)

    @classmethod
    def constant(cls, n: int, row: int = 0, col: int = 0) -> MonKey:
        return cls((0,) * n, (0,) * n, row, col)


@lru_cache(maxsize=1 << 18)
def monomial_product(
    left: MonKey, right: MonKey
) -> tuple[tuple[MonKey, Fraction], ...]:
    """Return the normal ordered product of two monomials.

    Per variable this is the Leibniz rule
    `y^a d^b * y^c d^e = sum_j C(b, j) c(c-1)...(c-j+1) y^(a+c-j) d^(b-j+e)`, which also
    holds for negative `c`.
    """
    if left.col != right.row:
        return ()

    per_variable: list[list[tuple[int, int, int]]] = []

    for a, b, c, e in zip(left.alpha, left.beta, right.alpha, right.beta, strict=True):
        options: list[tuple[int, int, int]] = []

        for j in range(b + 1):
            coefficient = math.comb(b, j) * falling_factorial(c, j)

            if coefficient:
                options.append((a + c - j, b - j + e, coefficient))

        per_variable.append(options)

    terms: list[tuple[MonKey, Fraction]] = []

    for choice in product(*per_variable):
        coefficient = math.prod(option[2] for option in choice)
        key = MonKey(
            tuple(option[0] for option in choice),
            tuple(option[1] for option in choice),
            left.row,
            right.col,
        )
        terms.append((key, Fraction(coefficient)))

    return tuple(terms)


def _clean_terms(terms: Mapping[MonKey, Fraction | int]) -> dict[MonKey, Fraction]:
    return {key: to_fraction(value) for key, value in terms.items() if value}


def _clean_section_terms(
    terms: Mapping[tuple[Exponents, int], Fraction | int],
) -> dict[tuple[Exponents, int], Fraction]:
    return {key: to_fraction(value) for key, value in terms.items() if value}


@attrs.frozen
class WeylOp:
    """An element of `M_r(D_n)`, the `r x r` matrices over the Weyl algebra.

    Instances are immutable values. Arithmetic operators build new instances and
    combine only operators with the same `(n, r, laurent)` signature.
    """

    n: int = attrs.field(validator=attrs.validators.ge(1))
    """The number of variables."""
    r: int = attrs.field(default=1, validator=attrs.validators.ge(1))
    """The matrix size."""
    laurent: bool = False
    """Whether variable exponents may be negative."""
    terms: Mapping[MonKey, Fraction] = attrs.field(
        factory=dict[MonKey, Fraction], converter=_clean_terms
    )
    """The non-zero coefficients of the operator indexed by monomial."""

    @terms.validator  # pyright: ignore[reportAttributeAccessIssue, reportUntypedFunctionDecorator]
    def _check_terms(
        self,
        _: attrs.Attribute[Mapping[MonKey, Fraction]],
        value: Mapping[MonKey, Fraction],
    ) -> None:
        for key in value:
            if key.n != self.n or len(key.beta) != self.n:
                raise DimensionMismatchError(
                    f"{key} does not have {self.n} variables."
                )

            if not (0 <= key.row < self.r and 0 <= key.col < self.r):
                raise DimensionMismatchError(
                    f"{key} is not a monomial of {self.r} x {self.r} matrices."
                )

            if any(b < 0 for b in key.beta):
                raise DomainError(f"{key} has a negative derivative exponent.")

            if not self.laurent and any(a < 0 for a in key.alpha):
                raise DomainError(
                    f"{key} has a negative exponent but the operator is not Laurent."
                )

    # Constructors

    @classmethod
    def zero(cls, n: int, r: int = 1, *, laurent: bool = False) -> WeylOp:
        return cls(n, r, laurent)

    @classmethod
    def scalar(
        cls, value: Fraction | int, n: int, r: int = 1, *, laurent: bool = False
    ) -> WeylOp:
        """Return `value` times the identity."""
        return cls(
            n,
            r,
            laurent,
            {MonKey.constant(n, i, i): to_fraction(value) for i in range(r)},
        )

    @classmethod
    def identity(cls, n: int, r: int = 1, *, laurent: bool = False) -> WeylOp:
        return cls.scalar(1, n, r, laurent=laurent)

    @classmethod
    def monomial(
        cls,
        key: MonKey,
        coefficient: Fraction | int = 1,
        r: int = 1,
        *,
        laurent: bool = False,
    ) -> WeylOp:
        return cls(key.n, r, laurent, {key: to_fraction(coefficient)})

    @classmethod
    def variable(
        cls, index: int, n: int, power: int = 1, r: int = 1, *, laurent: bool = False
    ) -> WeylOp:
        """Return `y_index^power` times the identity, with a one based index."""
        alpha = tuple(power if k == index - 1 else 0 for k in range(n))

        terms = {MonKey(alpha, (0,) * n, i, i): Fraction(1) for i in range(r)}

        return cls(n, r, laurent, terms)

    @classmethod
    def derivative(
        cls, index: int, n: int, power: int = 1, r: int = 1, *, laurent: bool = False
    ) -> WeylOp:
        """Return `d_index^power` times the identity, with a one based index."""
        beta = tuple(power if k == index - 1 else 0 for k in range(n))

        return cls(
            n, r, laurent, {MonKey((0,) * n, beta, i, i): Fraction(1) for i in range(r)}
        )

    @classmethod
    def matrix_unit(
        cls, row: int, col: int, n: int, r: int, *, laurent: bool = False
    ) -> WeylOp:
        """Return the matrix unit `E[row,col]`, with one based indices."""
        return cls(n, r, laurent, {MonKey.constant(n, row - 1, col - 1): Fraction(1)})

    @classmethod
    def euler(cls, n: int, r: int = 1, *, laurent: bool = False) -> WeylOp:
        """Return the Euler operator `sum_k y_k d_k`."""
        terms: dict[MonKey, Fraction] = {}

        for k in range(n):
            unit = tuple(int(k == m) for m in range(n))

            for i in range(r):
                terms[MonKey(unit, unit, i, i)] = Fraction(1)

        return cls(n, r, laurent, terms)

    # Properties

    @property
    def signature(self) -> tuple[int, int, bool]:
        return self.n, self.r, self.laurent

    def order(self) -> int:
        """The largest order of a monomial of the operator."""
        return max((key.order for key in self.terms), default=0)

    def degree(self) -> int:
        """The largest coefficient degree of a monomial of the operator."""
        return max((key.degree for key in self.terms), default=0)

    def laurent_bound(self) -> int:
        return max((key.laurent_bound for key in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def scalar_value(self) -> Fraction | None:
        """Return `c` if the operator is `c` times the identity, otherwise `None`."""
        if not self.terms:
            return Fraction(0)

        value = self.terms.get(MonKey.constant(self.n, 0, 0))

        if value is None or len(self.terms) != self.r:
            return None

        if all(
            self.terms.get(MonKey.constant(self.n, i, i)) == value
            for i in range(self.r)
        ):
            return value

        return None

    def weight_components(self) -> dict[int, WeylOp]:
        """Split the operator into eigencomponents of the Euler commutator."""
        parts: dict[int, dict[MonKey, Fraction]] = {}

        for key, value in self.terms.items():
            parts.setdefault(key.weight, {})[key] = value

        return {
            weight: WeylOp(self.n, self.r, self.laurent, terms)
            for weight, terms in sorted(parts.items())
        }

    # Conversions

    def as_laurent(self) -> WeylOp:
        return attrs.evolve(self, laurent=True)

    def as_polynomial(self) -> WeylOp:
        """Return the same operator outside of Laurent mode.

        Raises:
            DomainError: The operator has a negative exponent.
        """
        return WeylOp(self.n, self.r, False, self.terms)

    # Arithmetic

    def _check_compatible(self, other: WeylOp) -> None:
        if self.signature != other.signature:
            raise DimensionMismatchError(
                f"Operators with signatures {self.signature} and {other.signature} "
                "can not be combined."
            )

    def __add__(self, other: WeylOp) -> WeylOp:
        self._check_compatible(other)
        terms = dict(self.terms)

        for key, value in other.terms.items():
            add_term(terms, key, value)

        return WeylOp(self.n, self.r, self.laurent, terms)

    def __neg__(self) -> WeylOp:
        return WeylOp(
            self.n, self.r, self.laurent, {k: -v for k, v in self.terms.items()}
        )

    def __sub__(self, other: WeylOp) -> WeylOp:
        return self + (-other)

    def __mul__(self, other: WeylOp | Fraction | int) -> WeylOp:
        if isinstance(other, WeylOp):
            return mul(self, other)

        return WeylOp(
            self.n,
            self.r,
            self.laurent,
            {k: v * other for k, v in self.terms.items()},
        )

    def __rmul__(self, other: Fraction | int) -> WeylOp:
        return self * other

    def __pow__(self, exponent: int) -> WeylOp:
        if exponent < 0:
            raise DomainError("Operators can only be raised to non-negative powers.")

        result = WeylOp.identity(self.n, self.r, laurent=self.laurent)

        for _ in range(exponent):
            result = mul(result, self)

        return result

    def __str__(self) -> str:
        # Deferred to keep the syntax module free to import this one.
        from hochschild_lefschetz.algebra._syntax import format_operator  # noqa: PLC0415

        return format_operator(self)


@attrs.frozen
class Section:
    """A vector valued polynomial or Laurent polynomial in the variables `y`.

    Keys are pairs of an exponent vector and a zero based component index.
    """

    n: int
    r: int = 1
    laurent: bool = False
    terms: Mapping[tuple[Exponents, int], Fraction] = attrs.field(
        factory=dict[tuple[Exponents, int], Fraction],
        converter=_clean_section_terms,
    )

    @classmethod
    def monomial(
        cls,
        exponents: Iterable[int],
        component: int = 0,
        r: int = 1,
        coefficient: Fraction | int = 1,
        *,
        laurent: bool = False,
    ) -> Section:
        """Return `coefficient * y^exponents` in the given zero based component."""
        exponents = tuple(exponents)

        if not laurent and any(e < 0 for e in exponents):
            raise DomainError(f"{exponents} is not a polynomial exponent.")

        return cls(len(exponents), r, laurent, {(exponents, component): coefficient})

    def coefficient(self, exponents: Iterable[int], component: int = 0) -> Fraction:
        return self.terms.get((tuple(exponents), component), Fraction(0))

    def __add__(self, other: Section) -> Section:
        if (self.n, self.r, self.laurent) != (other.n, other.r, other.laurent):
            raise DimensionMismatchError(
                "Sections of different shapes can not be added."
            )

        terms = dict(self.terms)

        for key, value in other.terms.items():
            add_term(terms, key, value)

        return Section(self.n, self.r, self.laurent, terms)


def mul(a: WeylOp, b: WeylOp) -> WeylOp:
    """Return the normal ordered product `a * b`.

    Raises:
        DimensionMismatchError: The operators have different signatures.
    """
    a._check_compatible(b)  # noqa: SLF001  # pyright: ignore[reportPrivateUsage]
    terms: dict[MonKey, Fraction] = {}

    for left, left_value in a.terms.items():
        for right, right_value in b.terms.items():
            scale = left_value * right_value

            for key, value in monomial_product(left, right):
                add_term(terms, key, scale * value)

    return WeylOp(a.n, a.r, a.laurent, terms)


def commutator(a: WeylOp, b: WeylOp) -> WeylOp:
    """Return `[a, b] = ab - ba`."""
    return mul(a, b) - mul(b, a)


def apply(op: WeylOp, f: Section) -> Section:
    """Apply an operator to a section.

    Raises:
        DimensionMismatchError:
            The section has a different number of variables, components or Laurent
            flag than the operator.
    """
    if (op.n, op.r, op.laurent) != (f.n, f.r, f.laurent):
        raise DimensionMismatchError(
            f"An operator with signature {op.signature} can not act on a section with "
            f"signature {(f.n, f.r, f.laurent)}."
        )

    terms: dict[tuple[Exponents, int], Fraction] = {}

    for key, value in op.terms.items():
        for (exponents, component), coefficient in f.terms.items():
            if component != key.col:
                continue

            factor = math.prod(
                falling_factorial(e, b)
                for e, b in zip(exponents, key.beta, strict=True)
            )

            if not factor:
                continue

            result = tuple(
                e - b + a
                for e, b, a in zip(exponents, key.beta, key.alpha, strict=True)
            )
            add_term(terms, (result, key.row), value * coefficient * factor)

    return Section(f.n, f.r, f.laurent, terms)


def truncate(op: WeylOp, max_coeff_deg: float, max_order: float) -> WeylOp:
    """Drop the monomials with a larger coefficient degree or order than allowed.

    Arguments:
        op: The operator to truncate.
        max_coeff_deg: The largest kept coefficient degree, may be `math.inf`.
        max_order: The largest kept order, may be `math.inf`.

    Raises:
        DomainError: A bound is negative.
    """
    if max_coeff_deg < 0 or max_order < 0:
        raise DomainError("Truncation bounds must be non-negative.")

    return WeylOp(
        op.n,
        op.r,
        op.laurent,
        {
            key: value
            for key, value in op.terms.items()
            if key.degree <= max_coeff_deg and key.order <= max_order
        },
    )


def _compositions(total_max: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 0:
        return [()]

    return [
        (first, *rest)
        for first in range(total_max + 1)
        for rest in _compositions(total_max - first, parts - 1)
    ]


def monomials(
    n: int, max_degree: int, max_order: int, r: int = 1
) -> list[MonKey]:
    """Return the sorted monomials of bounded coefficient degree and order."""
    return sorted(
        MonKey(alpha, beta, row, col)
        for alpha in _compositions(max_degree, n)
        for beta in _compositions(max_order, n)
        for row in range(r)
        for col in range(r)
    )
