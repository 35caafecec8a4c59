# SPDX-FileCopyrightText: 2026 hochschild-lefschetz contributors
#
# SPDX-License-Identifier: MIT

"""Hochschild chains of differential graded algebras and their twists.

Chains are sums of words `(a_0, ..., a_q)` of basis elements of a `GradedAlgebra`.
The total degree of a word is `|a_0| + ... + |a_q| - q`. Signs follow the Koszul rule:
moving `a` past `b` costs `(-1)^(|a||b|)`.

The twist of an algebra by a Maurer-Cartan element `omega` has the differential
`d_omega(a) = da + omega a - (-1)^|a| a omega`. Shuffle multiplication by
`sum_k (-1)^k (omega)_k`, where `(omega)_k = (1, omega, ..., omega)`, is an isomorphism
from the chains of the twisted algebra to the chains of the algebra, with inverse the
shuffle multiplication by `sum_k (omega)_k`. Both series are truncated at a given tensor
degree.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

import attrs

from hochschild_lefschetz._sparse import add_scaled, add_term, scaled, to_fraction
from hochschild_lefschetz.algebra.base import GradedAlgebra
from hochschild_lefschetz.algebra.grassmann import GrassmannKey, GrassmannWeyl
from hochschild_lefschetz.algebra.weyl import MonKey, WeylOp, monomials
from hochschild_lefschetz.exceptions import (
    DimensionMismatchError,
    DomainError,
    InconclusiveError,
    StructureError,
)
from hochschild_lefschetz.homology.linsolve import SparseEliminator

logger = logging.getLogger(__name__)

type Element[K] = Mapping[K, Fraction]


def _clean_terms[K](
    terms: Mapping[tuple[K, ...], Fraction | int],
) -> dict[tuple[K, ...], Fraction]:
    return {word: to_fraction(value) for word, value in terms.items() if value}


@attrs.frozen
class GradedChain[K]:
    """A normalized Hochschild chain of a differential graded algebra.

    Words of different lengths may be mixed. Words with the unit in a slot after the
    first are dropped when the unit is a basis element.
    """

    algebra: GradedAlgebra[K] = attrs.field(eq=False, repr=False)
    terms: Mapping[tuple[K, ...], Fraction] = attrs.field(
        factory=dict[tuple[K, ...], Fraction], converter=_clean_terms
    )

    def __attrs_post_init__(self) -> None:
        unit = self.algebra.unit_key()

        for word in self.terms:
            if not word:
                raise DimensionMismatchError("A chain word needs at least one slot.")

            if unit is not None and unit in word[1:]:
                raise DomainError(f"The word {word} is not normalized.")

    @classmethod
    def word(
        cls,
        algebra: GradedAlgebra[K],
        elements: Sequence[Element[K]],
        coefficient: Fraction | int = 1,
    ) -> GradedChain[K]:
        """Return `coefficient * (e_0, ..., e_q)` expanded multilinearly."""
        terms: dict[tuple[K, ...], Fraction] = {}
        _expand_into(
            terms, algebra, [e.items() for e in elements], to_fraction(coefficient)
        )

        return cls(algebra, terms)

    @classmethod
    def zero(cls, algebra: GradedAlgebra[K]) -> GradedChain[K]:
        return cls(algebra)

    def is_zero(self) -> bool:
        return not self.terms

    def truncate(self, max_degree: int) -> GradedChain[K]:
        """Drop the words of tensor degree above `max_degree`."""
        return attrs.evolve(
            self,
            terms={w: v for w, v in self.terms.items() if len(w) - 1 <= max_degree},
        )

    def max_tensor_degree(self) -> int:
        return max((len(word) - 1 for word in self.terms), default=-1)

    def _check_compatible(self, other: GradedChain[K]) -> None:
        if self.algebra is not other.algebra and self.algebra != other.algebra:
            raise DimensionMismatchError(
                "Chains of different algebras can not be combined."
            )

    def __add__(self, other: GradedChain[K]) -> GradedChain[K]:
        self._check_compatible(other)
        terms = dict(self.terms)
        add_scaled(terms, other.terms)

        return attrs.evolve(self, terms=terms)

    def __neg__(self) -> GradedChain[K]:
        return attrs.evolve(self, terms={w: -v for w, v in self.terms.items()})

    def __sub__(self, other: GradedChain[K]) -> GradedChain[K]:
        return self + (-other)

    def __mul__(self, scale: Fraction | int) -> GradedChain[K]:
        return attrs.evolve(self, terms={w: v * scale for w, v in self.terms.items()})

    def __rmul__(self, scale: Fraction | int) -> GradedChain[K]:
        return self * scale


def _expand_into[K](
    out: dict[tuple[K, ...], Fraction],
    algebra: GradedAlgebra[K],
    slots: Sequence[Iterable[tuple[K, Fraction]]],
    scale: Fraction,
) -> None:
    unit = algebra.unit_key()
    options = [list(slots[0])]
    options.extend(
        [(key, value) for key, value in slot if key != unit or unit is None]
        for slot in slots[1:]
    )

    for choice in itertools.product(*options):
        value = scale

        for _, factor in choice:
            value *= factor

        add_term(out, tuple(key for key, _ in choice), value)


def _single[K](key: K) -> list[tuple[K, Fraction]]:
    return [(key, Fraction(1))]


def total_degree[K](algebra: GradedAlgebra[K], word: Sequence[K]) -> int:
    """Return `|a_0| + ... + |a_q| - q`."""
    return sum(algebra.degree(key) for key in word) - (len(word) - 1)


# Differentials


def graded_boundary[K](c: GradedChain[K]) -> GradedChain[K]:
    """Return the Hochschild boundary with the Koszul sign on the cyclic term.

    `b(a_0, ..., a_q) = sum_j (-1)^j (..., a_j a_(j+1), ...)
    + (-1)^(q + |a_q|(|a_0| + ... + |a_(q-1)|)) (a_q a_0, a_1, ..., a_(q-1))`.
    Words of length one are cycles.
    """
    algebra = c.algebra
    terms: dict[tuple[K, ...], Fraction] = {}

    for word, value in c.terms.items():
        q = len(word) - 1

        if q == 0:
            continue

        for j in range(q):
            slots = [_single(key) for key in word]
            slots[j : j + 2] = [list(algebra.product(word[j], word[j + 1]).items())]
            _expand_into(terms, algebra, slots, value if j % 2 == 0 else -value)

        prefix = sum(algebra.degree(key) for key in word[:q])
        sign = (-1) ** (q + algebra.degree(word[q]) * prefix)
        _expand_into(
            terms,
            algebra,
            [
                list(algebra.product(word[q], word[0]).items()),
                *(_single(key) for key in word[1:q]),
            ],
            sign * value,
        )

    return GradedChain(algebra, terms)


def _derivation[K](
    c: GradedChain[K],
    images: Mapping[K, Mapping[K, Fraction]],
    *,
    total_sign: bool = False,
) -> GradedChain[K]:
    """Extend a degree one map given on basis keys to chains with Koszul signs.

    With `total_sign` every word is also multiplied by `(-1)^p`, where `p` is its total
    degree.
    """
    algebra = c.algebra
    terms: dict[tuple[K, ...], Fraction] = {}

    for word, value in c.terms.items():
        prefix = 0

        if total_sign and total_degree(algebra, word) % 2:
            value = -value

        for j, key in enumerate(word):
            image = images[key]

            if image:
                slots = [_single(k) for k in word]
                slots[j] = list(image.items())
                signed = value if prefix % 2 == 0 else -value
                _expand_into(terms, algebra, slots, signed)

            prefix += algebra.degree(key)

    return GradedChain(algebra, terms)


def _keys[K](c: GradedChain[K]) -> set[K]:
    return {key for word in c.terms for key in word}


def chain_differential[K](c: GradedChain[K]) -> GradedChain[K]:
    """Return the differential of the algebra extended to chains.

    `d(a_0, ..., a_q) = sum_j (-1)^(|a_0| + ... + |a_(j-1)|) (..., da_j, ...)`
    """
    return _derivation(c, {key: c.algebra.differential(key) for key in _keys(c)})


def twisted_algebra_differential[K](
    algebra: GradedAlgebra[K], omega: Element[K], element: Element[K]
) -> dict[K, Fraction]:
    """Return `d_omega(a) = da + omega a - (-1)^|a| a omega` extended linearly."""
    result = algebra.apply_differential(element)
    add_scaled(result, algebra.graded_commutator(omega, element))

    return result


def _twisted_images[K](
    c: GradedChain[K], omega: MCElement[K]
) -> dict[K, dict[K, Fraction]]:
    _check_parent(c, omega)

    return {
        key: twisted_algebra_differential(c.algebra, omega.element, {key: Fraction(1)})
        for key in _keys(c)
    }


def twisted_chain_differential[K](
    c: GradedChain[K], omega: MCElement[K]
) -> GradedChain[K]:
    """Return `d_omega` extended to chains as a derivation."""
    return _derivation(c, _twisted_images(c, omega))


def _split_words[K](c: GradedChain[K]) -> dict[tuple[K, ...], GradedChain[K]]:
    return {
        word: GradedChain(c.algebra, {word: value}) for word, value in c.terms.items()
    }


def total_differential[K](c: GradedChain[K]) -> GradedChain[K]:
    """Return `delta(a) = b(a) + (-1)^p d(a)` for words of total degree `p`."""
    images = {key: c.algebra.differential(key) for key in _keys(c)}

    return graded_boundary(c) + _derivation(c, images, total_sign=True)


def twisted_total_differential[K](
    c: GradedChain[K], omega: MCElement[K]
) -> GradedChain[K]:
    """Return `delta_omega(a) = b(a) + (-1)^p d_omega(a)` for words of degree `p`."""
    images = _twisted_images(c, omega)

    return graded_boundary(c) + _derivation(c, images, total_sign=True)


# Shuffles


def _shuffle_words[K](
    algebra: GradedAlgebra[K],
    left: tuple[K, ...],
    right: tuple[K, ...],
    scale: Fraction,
    out: dict[tuple[K, ...], Fraction],
) -> None:
    head = algebra.product(left[0], right[0])

    if not head:
        return

    tail_left = left[1:]
    tail_right = right[1:]
    sign = (-1) ** (
        algebra.degree(right[0]) * sum(algebra.degree(key) for key in tail_left)
    )
    length = len(tail_left) + len(tail_right)

    for positions in itertools.combinations(range(length), len(tail_left)):
        taken = set(positions)
        merged: list[K] = []
        shuffle_sign = sign
        left_index = right_index = 0

        for slot in range(length):
            if slot in taken:
                merged.append(tail_left[left_index])
                left_index += 1
            else:
                # Every remaining left letter is jumped over by this right letter.
                letter = tail_right[right_index]
                degree = algebra.degree(letter)

                for key in tail_left[left_index:]:
                    if (algebra.degree(key) * degree + 1) % 2:
                        shuffle_sign = -shuffle_sign

                merged.append(letter)
                right_index += 1

        _expand_into(
            out,
            algebra,
            [list(head.items()), *(_single(key) for key in merged)],
            scale * shuffle_sign,
        )


def shuffle[K](x: GradedChain[K], y: GradedChain[K]) -> GradedChain[K]:
    """Return the shuffle product `x * y`.

    `(a_0, ..., a_p) x (b_0, ..., b_q) = (-1)^(|b_0| (|a_1| + ... + |a_p|))
    sum_s sgn(s) s.(a_0 b_0, a_1, ..., a_p, b_1, ..., b_q)` over `(p, q)`-shuffles `s`,
    where `s` permutes letters with Koszul signs.
    """
    x._check_compatible(y)  # noqa: SLF001
    terms: dict[tuple[K, ...], Fraction] = {}

    for left, left_value in x.terms.items():
        for right, right_value in y.terms.items():
            _shuffle_words(x.algebra, left, right, left_value * right_value, terms)

    return GradedChain(x.algebra, terms)


# Maurer-Cartan elements


def _clean_element[K](element: Mapping[K, Fraction | int]) -> dict[K, Fraction]:
    return {key: to_fraction(value) for key, value in element.items() if value}


@attrs.frozen
class MCElement[K]:
    """A Maurer-Cartan element `omega` of degree 1 with `d(omega) + omega^2 = 0`."""

    algebra: GradedAlgebra[K] = attrs.field(eq=False, repr=False)
    element: Mapping[K, Fraction] = attrs.field(converter=_clean_element)

    def __attrs_post_init__(self) -> None:
        if not is_maurer_cartan(self.algebra, self.element):
            raise StructureError(
                "The element is not a Maurer-Cartan element of degree 1."
            )


def is_maurer_cartan[K](algebra: GradedAlgebra[K], omega: Element[K]) -> bool:
    """Return whether `omega` has degree 1 and solves `d(omega) + omega^2 = 0`."""
    if any(algebra.degree(key) != 1 for key in omega):
        return False

    return not algebra.maurer_cartan_curvature(omega)


def _check_parent[K](c: GradedChain[K], omega: MCElement[K]) -> None:
    if c.algebra is not omega.algebra and c.algebra != omega.algebra:
        raise DimensionMismatchError(
            "The Maurer-Cartan element belongs to a different algebra."
        )


def omega_power[K](omega: MCElement[K], k: int) -> GradedChain[K]:
    """Return `(omega)_k = (1, omega, ..., omega)` with `k` copies of `omega`."""
    if k < 0:
        return GradedChain(omega.algebra)

    return GradedChain.word(
        omega.algebra, [omega.algebra.unit(), *([omega.element] * k)]
    )


def twist_series[K](omega: MCElement[K], top: int) -> GradedChain[K]:
    """Return `psi = sum_(k <= top) (-1)^k (omega)_k`."""
    result = GradedChain(omega.algebra)

    for k in range(top + 1):
        result += omega_power(omega, k) * (-1) ** k

    return result


def inverse_series[K](omega: MCElement[K], top: int) -> GradedChain[K]:
    """Return `psi_bar = sum_(k <= top) (omega)_k`, the shuffle inverse of `psi`."""
    result = GradedChain(omega.algebra)

    for k in range(top + 1):
        result += omega_power(omega, k)

    return result


def _shuffle_series[K](
    c: GradedChain[K], omega: MCElement[K], top: int, *, alternating: bool
) -> GradedChain[K]:
    _check_parent(c, omega)

    if top < 0:
        raise DomainError("The truncation degree must be non-negative.")

    result = GradedChain(c.algebra)
    lowest = min((len(word) - 1 for word in c.terms), default=0)

    for k in range(top - lowest + 1):
        sign = -1 if alternating and k % 2 else 1
        result += shuffle(c, omega_power(omega, k)) * sign

    return result.truncate(top)


def twist_map[K](c: GradedChain[K], omega: MCElement[K], top: int) -> GradedChain[K]:
    """Map chains of the twisted algebra to chains of the algebra.

    Only words of tensor degree at most `top` are kept.

    Raises:
        DomainError: `top` is negative.
        DimensionMismatchError: `omega` belongs to a different algebra.
    """
    return _shuffle_series(c, omega, top, alternating=True)


def untwist_map[K](c: GradedChain[K], omega: MCElement[K], top: int) -> GradedChain[K]:
    """Invert `twist_map` on chains of tensor degree at most `top`."""
    return _shuffle_series(c, omega, top, alternating=False)


def bracket_correction[K](
    a: GradedChain[K], omega: MCElement[K], k: int
) -> GradedChain[K]:
    """Return the expansion of `b(a x (omega)_k)` through `b(a)` and omega brackets.

    For a word `a = (a_0, ..., a_q)` of total degree `p` the result is
    `b(a) x (omega)_k + (-1)^q a x b((omega)_k)
    - (-1)^p sum_j (-1)^(|a_0| + ... + |a_(j-1)|) (..., [omega, a_j], ...)
    x (omega)_(k-1)`, which equals `b(a x (omega)_k)` term by term. The middle sign
    depends on the tensor degree `q` and not on `p`.
    """
    _check_parent(a, omega)
    algebra = a.algebra
    power = omega_power(omega, k)
    lower = omega_power(omega, k - 1)
    result = shuffle(graded_boundary(a), power)

    for word, part in _split_words(a).items():
        result += shuffle(part, graded_boundary(power)) * (-1) ** (len(word) - 1)

        brackets = _derivation(
            part,
            {
                key: algebra.graded_commutator(omega.element, {key: Fraction(1)})
                for key in word
            },
        )
        result -= shuffle(brackets, lower) * (-1) ** total_degree(algebra, word)

    return result


def complete_maurer_cartan(
    algebra: GrassmannWeyl, u: WeylOp, *, max_degree: int = 3, max_order: int = 2
) -> MCElement[GrassmannKey]:
    """Find `v` such that `theta_1 u + theta_2 v` is a Maurer-Cartan element.

    The curvature is affine in `v` because `theta_2^2 = 0`. When `theta_1 u` is already
    a Maurer-Cartan element the equation is homogeneous and `v` is the first non-zero
    solution found by exact elimination, otherwise it is the canonical solution of the
    inhomogeneous system. `v` never has constant monomials.

    Arguments:
        algebra: A Grassmann extension with two generators.
        u: The operator coefficient of `theta_1`.
        max_degree: The largest coefficient degree of the monomials of `v`.
        max_order: The largest order of the monomials of `v`.

    Raises:
        DomainError: The algebra does not have exactly two Grassmann generators.
        InconclusiveError: No `v` exists inside the bounds.
    """
    if algebra.m != 2:  # noqa: PLR2004
        raise DomainError("Maurer-Cartan completion needs exactly two generators.")

    first = algebra.element({(1,): u})
    base = algebra.maurer_cartan_curvature(first)
    eliminator: SparseEliminator[GrassmannKey, MonKey] = SparseEliminator()
    solution: dict[MonKey, Fraction] | None = None

    for key in monomials(algebra.n, max_degree, max_order, algebra.r):
        if key.is_constant:
            continue

        trial = dict(first)
        trial[0b10, key] = Fraction(1)
        column = algebra.maurer_cartan_curvature(trial)
        add_scaled(column, base, -1)

        if not base:
            # A dependent column is a non-zero element of the kernel.
            reduction = eliminator.reduce(column)

            if reduction.in_span:
                solution = scaled(reduction.solution, -1)
                solution[key] = Fraction(1)
                break

        eliminator.add_column(key, column)

    if base:
        reduction = eliminator.reduce(scaled(base, -1))
        solution = reduction.solution if reduction.in_span else None

    logger.debug(
        "Completed a Maurer-Cartan element of %s with %s", algebra, eliminator.stats()
    )

    if solution is None:
        raise InconclusiveError(
            f"No Maurer-Cartan completion of {u} up to degree {max_degree} and "
            f"order {max_order}.",
            [(max_degree, max_order)],
        )

    v = WeylOp(algebra.n, algebra.r, terms=solution)

    return MCElement(algebra, algebra.element({(1,): u, (2,): v}))
