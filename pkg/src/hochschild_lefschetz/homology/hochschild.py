# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""The normalized Hochschild chain complex of matrix valued Weyl algebras.

A `q`-chain is a finite linear combination of words `a_0 (x) a_1 (x) ... (x) a_q` of
monomials. In the normalized complex every slot after the first lives in the quotient
of the algebra by the scalars. The quotient basis drops the constant monomial, and for
matrices the constant `E[r,r]`, which is rewritten as `-E[1,1] - ... - E[r-1,r-1]`.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Callable, Iterable, Mapping, Sequence
from fractions import Fraction

import attrs

from hochschild_lefschetz._math import permutation_sign
from hochschild_lefschetz._sparse import add_term, to_fraction
from hochschild_lefschetz.algebra.weyl import (
    MonKey,
    WeylOp,
    commutator,
    monomial_product,
)
from hochschild_lefschetz.exceptions import DimensionMismatchError, DomainError
from hochschild_lefschetz.typing import Word

logger = logging.getLogger(__name__)

type ChainWord = Word[MonKey]

type SlotTerms = Iterable[tuple[MonKey, Fraction]]


def reduce_slot(key: MonKey, r: int) -> tuple[tuple[MonKey, Fraction], ...]:
    """Rewrite a monomial in the normalized basis of a slot after the first."""
    if not key.is_constant or key.row != key.col or key.row != r - 1:
        return ((key, Fraction(1)),)

    return tuple((MonKey.constant(key.n, i, i), Fraction(-1)) for i in range(r - 1))


def _expand_into(
    out: dict[ChainWord, Fraction],
    slots: Sequence[SlotTerms],
    scale: Fraction,
    r: int,
) -> None:
    options = [list(slots[0])]

    for slot in slots[1:]:
        reduced: dict[MonKey, Fraction] = {}

        for key, value in slot:
            for reduced_key, factor in reduce_slot(key, r):
                add_term(reduced, reduced_key, value * factor)

        options.append(list(reduced.items()))

    for choice in itertools.product(*options):
        value = scale

        for _, factor in choice:
            value *= factor

        add_term(out, tuple(key for key, _ in choice), value)


def _clean_terms(
    terms: Mapping[ChainWord, Fraction | int],
) -> dict[ChainWord, Fraction]:
    return {word: to_fraction(value) for word, value in terms.items() if value}


@attrs.frozen
class Chain:
    """A normalized Hochschild chain of `M_r(D_n)`, or of its Laurent version.

    Words must already be written in the normalized basis. Use `Chain.from_ops` or the
    chain operations of this module to build chains from arbitrary operators.
    """

    n: int
    """The number of variables."""
    degree: int = attrs.field(validator=attrs.validators.ge(0))
    """The Hochschild degree `q`, one less than the length of every word."""
    r: int = 1
    """The matrix size."""
    laurent: bool = False
    """Whether variable exponents may be negative."""
    terms: Mapping[ChainWord, Fraction] = attrs.field(
        factory=dict[ChainWord, Fraction], converter=_clean_terms
    )
    """The non-zero coefficients indexed by word."""

    def __attrs_post_init__(self) -> None:
        for word in self.terms:
            if len(word) != self.degree + 1:
                raise DimensionMismatchError(
                    f"The word {word} does not have degree {self.degree}."
                )

            for position, key in enumerate(word):
                if key.n != self.n or not (
                    0 <= key.row < self.r and 0 <= key.col < self.r
                ):
                    raise DimensionMismatchError(
                        f"{key} is not a monomial of the chain."
                    )

                if not self.laurent and any(a < 0 for a in key.alpha):
                    raise DomainError(f"{key} has a negative exponent.")

                if position and reduce_slot(key, self.r) != ((key, Fraction(1)),):
                    raise DomainError(
                        f"{key} is not in the normalized basis of slot {position}."
                    )

    # Constructors

    @classmethod
    def zero(cls, n: int, degree: int, r: int = 1, *, laurent: bool = False) -> Chain:
        return cls(n, degree, r, laurent)

    @classmethod
    def from_ops(
        cls, ops: Sequence[WeylOp], coefficient: Fraction | int = 1
    ) -> Chain:
        """Return `coefficient * ops[0] (x) ... (x) ops[q]` in the normalized basis.

        Raises:
            DomainError: No operators are given.
            DimensionMismatchError: The operators have different signatures.
        """
        if not ops:
            raise DomainError("A chain needs at least one operator.")

        n, r, laurent = ops[0].signature

        for op in ops:
            if op.signature != (n, r, laurent):
                raise DimensionMismatchError(
                    "The operators of a chain must have the same signature."
                )

        terms: dict[ChainWord, Fraction] = {}
        _expand_into(
            terms, [op.terms.items() for op in ops], to_fraction(coefficient), r
        )

        return cls(n, len(ops) - 1, r, laurent, terms)

    @classmethod
    def build(
        cls,
        n: int,
        degree: int,
        words: Mapping[ChainWord, Fraction | int],
        r: int = 1,
        *,
        laurent: bool = False,
    ) -> Chain:
        """Create a chain from words that may contain unreduced slots."""
        terms: dict[ChainWord, Fraction] = {}

        for word, value in words.items():
            _expand_into(
                terms, [[(key, Fraction(1))] for key in word], to_fraction(value), r
            )

        return cls(n, degree, r, laurent, terms)

    # Properties

    @property
    def signature(self) -> tuple[int, int, bool]:
        return self.n, self.r, self.laurent

    def is_zero(self) -> bool:
        return not self.terms

    def bounds(self) -> tuple[int, int, int]:
        """Return the largest word degree, word order and Laurent exponent.

        The degree and order of a word are summed over its slots.
        """
        degree = order = laurent = 0

        for word in self.terms:
            degree = max(degree, sum(key.degree for key in word))
            order = max(order, sum(key.order for key in word))
            laurent = max(laurent, max(key.laurent_bound for key in word))

        return degree, order, laurent

    def weight_components(self) -> dict[int, Chain]:
        """Split the chain into eigencomponents of the Lie action of the Euler field."""
        parts: dict[int, dict[ChainWord, Fraction]] = {}

        for word, value in self.terms.items():
            parts.setdefault(sum(key.weight for key in word), {})[word] = value

        return {
            weight: attrs.evolve(self, terms=terms)
            for weight, terms in sorted(parts.items())
        }

    def as_laurent(self) -> Chain:
        return attrs.evolve(self, laurent=True)

    def map_entries(
        self,
        function: Callable[[MonKey], WeylOp],
        *,
        laurent: bool | None = None,
    ) -> Chain:
        """Apply a linear map to every slot and expand multilinearly.

        The map must send the unit to the unit for the result to stay normalized.
        """
        cache: dict[MonKey, list[tuple[MonKey, Fraction]]] = {}
        terms: dict[ChainWord, Fraction] = {}

        def image(key: MonKey) -> list[tuple[MonKey, Fraction]]:
            if key not in cache:
                cache[key] = list(function(key).terms.items())

            return cache[key]

        for word, value in self.terms.items():
            _expand_into(terms, [image(key) for key in word], value, self.r)

        return Chain(
            self.n,
            self.degree,
            self.r,
            self.laurent if laurent is None else laurent,
            terms,
        )

    # Arithmetic

    def _check_compatible(self, other: Chain) -> None:
        if (self.signature, self.degree) != (other.signature, other.degree):
            raise DimensionMismatchError(
                f"A {self.degree}-chain with signature {self.signature} and a "
                f"{other.degree}-chain with signature {other.signature} can not be "
                "combined."
            )

    def __add__(self, other: Chain) -> Chain:
        self._check_compatible(other)
        terms = dict(self.terms)

        for word, value in other.terms.items():
            add_term(terms, word, value)

        return attrs.evolve(self, terms=terms)

    def __neg__(self) -> Chain:
        return attrs.evolve(self, terms={w: -v for w, v in self.terms.items()})

    def __sub__(self, other: Chain) -> Chain:
        return self + (-other)

    def __mul__(self, scale: Fraction | int) -> Chain:
        return attrs.evolve(self, terms={w: v * scale for w, v in self.terms.items()})

    def __rmul__(self, scale: Fraction | int) -> Chain:
        return self * scale

    def __truediv__(self, scale: Fraction | int) -> Chain:
        if not scale:
            raise ZeroDivisionError("A chain can not be divided by zero.")

        return self * (1 / to_fraction(scale))

    def __str__(self) -> str:
        from hochschild_lefschetz.homology._syntax import format_chain  # noqa: PLC0415

        return format_chain(self)


def _merge(
    out: dict[ChainWord, Fraction],
    word: ChainWord,
    position: int,
    scale: Fraction,
    r: int,
) -> None:
    """Add `scale * (a_0, ..., a_j a_{j+1}, ..., a_q)` for `j = position`."""
    product = monomial_product(word[position], word[position + 1])

    if not product:
        return

    slots: list[SlotTerms] = [[(key, Fraction(1))] for key in word]
    slots[position : position + 2] = [product]
    _expand_into(out, slots, scale, r)


def boundary(c: Chain) -> Chain:
    """Return the Hochschild boundary `b(c)`.

    `b(a_0, ..., a_q) = sum_j (-1)^j (..., a_j a_{j+1}, ...) + (-1)^q (a_q a_0, ...)`.

    Raises:
        DomainError: The chain has degree 0.
    """
    if c.degree == 0:
        raise DomainError("The boundary is only defined on chains of degree >= 1.")

    q = c.degree
    terms: dict[ChainWord, Fraction] = {}

    for word, value in c.terms.items():
        for j in range(q):
            _merge(terms, word, j, value if j % 2 == 0 else -value, c.r)

        cyclic = monomial_product(word[q], word[0])

        if cyclic:
            _expand_into(
                terms,
                [cyclic, *([(key, Fraction(1))] for key in word[1:q])],
                value if q % 2 == 0 else -value,
                c.r,
            )

    return Chain(c.n, q - 1, c.r, c.laurent, terms)


def _check_operator(a: WeylOp, c: Chain) -> None:
    if a.signature != c.signature:
        raise DimensionMismatchError(
            f"An operator with signature {a.signature} does not act on chains with "
            f"signature {c.signature}."
        )


def lie_action(a: WeylOp, c: Chain) -> Chain:
    """Return `L_a(c) = sum_j (a_0, ..., [a, a_j], ..., a_q)`.

    Raises:
        DimensionMismatchError: The operator and the chain have different signatures.
    """
    _check_operator(a, c)
    terms: dict[ChainWord, Fraction] = {}
    brackets: dict[MonKey, list[tuple[MonKey, Fraction]]] = {}

    for word, value in c.terms.items():
        for j, key in enumerate(word):
            if key not in brackets:
                single = WeylOp(c.n, c.r, c.laurent, {key: Fraction(1)})
                brackets[key] = list(commutator(a, single).terms.items())

            if not brackets[key]:
                continue

            slots: list[SlotTerms] = [[(k, Fraction(1))] for k in word]
            slots[j] = brackets[key]
            _expand_into(terms, slots, value, c.r)

    return Chain(c.n, c.degree, c.r, c.laurent, terms)


def insertion(a: WeylOp, c: Chain) -> Chain:
    """Return `i_a(c) = sum_j (-1)^j (a_0, ..., a_{j-1}, a, a_j, ..., a_q)`.

    The sum runs over `j = 1, ..., q + 1`, so that `L_a = b i_a + i_a b`. In particular
    `i_a(a_0) = -(a_0, a)`.

    Raises:
        DimensionMismatchError: The operator and the chain have different signatures.
    """
    _check_operator(a, c)
    terms: dict[ChainWord, Fraction] = {}
    inserted = list(a.terms.items())

    for word, value in c.terms.items():
        for j in range(1, c.degree + 2):
            slots: list[SlotTerms] = [[(k, Fraction(1))] for k in word]
            slots.insert(j, inserted)
            _expand_into(terms, slots, value if j % 2 == 0 else -value, c.r)

    return Chain(c.n, c.degree + 1, c.r, c.laurent, terms)


def generator_c2n(n: int, r: int = 1, *, laurent: bool = False) -> Chain:
    """Return the antisymmetrized cycle `sum sgn(s) (1, u_s(1), ..., u_s(2n))`.

    The letters are `u_(2i-1) = d_i` and `u_(2i) = y_i`. For `r > 1` every letter is
    multiplied by the identity matrix.
    """
    letters: list[WeylOp] = []

    for i in range(1, n + 1):
        letters.append(WeylOp.derivative(i, n, r=r, laurent=laurent))
        letters.append(WeylOp.variable(i, n, r=r, laurent=laurent))

    unit = WeylOp.identity(n, r, laurent=laurent)
    terms: dict[ChainWord, Fraction] = {}

    for permutation in itertools.permutations(range(2 * n)):
        sign = permutation_sign(permutation)
        _expand_into(
            terms,
            [
                unit.terms.items(),
                *(letters[index].terms.items() for index in permutation),
            ],
            Fraction(sign),
            r,
        )

    chain = Chain(n, 2 * n, r, laurent, terms)
    logger.debug("Built c_%d with %d words", 2 * n, len(chain.terms))

    return chain
