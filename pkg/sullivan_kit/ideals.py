"""Homogeneous ideals in polynomial subalgebras on even generators."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import prod
from typing import Any, Sequence

from sympy import QQ
from sympy.polys.groebnertools import groebner
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from sullivan_kit.algebra.bases import basis_monomials
from sullivan_kit.algebra.generators import FreeAlgebra, Generator, Monomial
from sullivan_kit.algebra.linalg import to_fraction, to_qq
from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.errors import (
    ContradictionError,
    InapplicableError,
    ModelValidationError,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdealBasis:
    """The ideal generated by `generators` in ℚ[ambient].

    `ambient` lists positions of even generators of `algebra`. The reduced
    Gröbner basis uses the degree-lexicographic order on the ambient
    generators in declaration order.
    """

    algebra: FreeAlgebra
    ambient: tuple[int, ...]
    generators: tuple[Polynomial, ...]
    _ring: Any = field(init=False, repr=False, compare=False, hash=False)
    groebner: tuple[Any, ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        for position in self.ambient:
            if self.algebra.generators[position].is_odd:
                raise InapplicableError(
                    f"Ideals live on even generators; "
                    f"{self.algebra.names[position]!r} is odd"
                )
        polynomial_ring = None
        basis: tuple[Any, ...] = ()
        if self.ambient:
            polynomial_ring = ring(
                ",".join(f"g{i}" for i in range(len(self.ambient))), QQ, grlex
            )[0]
        object.__setattr__(self, "_ring", polynomial_ring)
        elements = [self._to_ring(p) for p in self.generators]
        elements = [e for e in elements if e]
        if elements and polynomial_ring is not None:
            basis = tuple(groebner(elements, polynomial_ring))
        elif elements:
            # nonzero constants in ℚ
            basis = tuple(elements)
        object.__setattr__(self, "groebner", basis)
        log.debug(
            f"Gröbner basis of {len(self.generators)} generators has {len(basis)} elements"
        )

    @classmethod
    def generate(
        cls,
        generators: Sequence[Polynomial],
        ambient: Sequence[Generator] | None = None,
        algebra: FreeAlgebra | None = None,
    ) -> IdealBasis:
        """The ideal of `generators`; ambient defaults to all even generators."""
        if algebra is None:
            if not generators:
                raise ValueError("Pass an algebra to build an ideal with no generators")
            algebra = generators[0].algebra
        positions = (
            algebra.even_indices
            if ambient is None
            else tuple(algebra.index(g.name) for g in ambient)
        )
        for polynomial in generators:
            algebra.ensure_same(polynomial.algebra)
            if not polynomial.is_homogeneous():
                raise ModelValidationError(
                    f"{polynomial} is not homogeneous", invariant="homogeneous"
                )
        return cls(algebra, tuple(positions), tuple(generators))

    def _check_ambient(self, polynomial: Polynomial) -> None:
        outside = polynomial.support - set(self.ambient)
        if outside:
            names = ", ".join(sorted(self.algebra.names[p] for p in outside))
            if any(self.algebra.generators[p].is_odd for p in outside):
                raise InapplicableError(
                    f"{polynomial} involves odd generators ({names})"
                )
            raise ModelValidationError(
                f"{polynomial} involves generators outside the ambient ring ({names})",
                invariant="ambient",
            )

    def _to_ring(self, polynomial: Polynomial) -> Any:
        self.algebra.ensure_same(polynomial.algebra)
        self._check_ambient(polynomial)
        if self._ring is None:
            return polynomial.coefficient(self.algebra.unit_monomial())
        return self._ring.from_dict(
            {
                tuple(m[p] for p in self.ambient): to_qq(c)
                for m, c in polynomial.terms.items()
            }
        )

    def _from_ring(self, element: Any) -> Polynomial:
        size = len(self.algebra)
        terms: dict[Monomial, Fraction] = {}
        for exponents, coefficient in element.terms():
            monomial = [0] * size
            for position, exponent in zip(self.ambient, exponents):
                monomial[position] = exponent
            terms[tuple(monomial)] = to_fraction(coefficient)
        return Polynomial(self.algebra, terms)

    def normal_form(self, polynomial: Polynomial) -> Polynomial:
        element = self._to_ring(polynomial)
        if self._ring is None:
            return self.algebra.zero() if self.groebner else polynomial
        if self.groebner:
            element = element.rem(list(self.groebner))
        return self._from_ring(element)

    def contains(self, polynomial: Polynomial) -> bool:
        return not self.normal_form(polynomial)

    @property
    def leading_monomials(self) -> list[tuple[int, ...]]:
        if self._ring is None:
            return []
        return [tuple(g.LM) for g in self.groebner]

    def is_zero_dimensional(self) -> bool:
        """Every ambient variable has a pure power among the leading monomials."""
        leading = self.leading_monomials
        return all(
            any(lm[i] > 0 and sum(lm) == lm[i] for lm in leading)
            for i in range(len(self.ambient))
        )

    def _is_standard(self, exponents: tuple[int, ...]) -> bool:
        return not any(
            all(e >= l for e, l in zip(exponents, lm)) for lm in self.leading_monomials
        )

    def standard_monomials(self, degree: int) -> list[Monomial]:
        """Monomials of `degree` not divisible by any leading monomial."""
        sub = self.algebra.subalgebra(self.ambient)
        found = []
        for exponents in basis_monomials(sub.generators, degree):
            if self._is_standard(exponents):
                monomial = [0] * len(self.algebra)
                for position, exponent in zip(self.ambient, exponents):
                    monomial[position] = exponent
                found.append(tuple(monomial))
        return found

    def all_standard_monomials(self) -> list[Monomial]:
        """The finite monomial basis of the quotient; needs zero-dimensionality."""
        if not self.is_zero_dimensional():
            raise InapplicableError("The quotient is infinite-dimensional")
        bounds = []
        for i in range(len(self.ambient)):
            bounds.append(
                min(lm[i] for lm in self.leading_monomials if lm[i] and sum(lm) == lm[i])
            )
        found = []
        for exponents in product(*(range(b) for b in bounds)):
            if self._is_standard(exponents):
                monomial = [0] * len(self.algebra)
                for position, exponent in zip(self.ambient, exponents):
                    monomial[position] = exponent
                found.append(tuple(monomial))
        return found

    def quotient_dimension(self) -> int:
        return len(self.all_standard_monomials())


def in_ideal(polynomial: Polynomial, ideal: IdealBasis) -> bool:
    if not polynomial.is_homogeneous():
        raise ModelValidationError(f"{polynomial} is not homogeneous", invariant="homogeneous")
    return ideal.contains(polynomial)


@dataclass(frozen=True)
class RegularSequenceReport:
    regular: bool
    quotient_dim: int | None
    expected_dim: Fraction
    """∏ deg y / ∏ deg x, the dimension a regular sequence must produce."""


def _positions(xs: Sequence[Generator], algebra: FreeAlgebra) -> tuple[int, ...]:
    positions = tuple(algebra.index(x.name) for x in xs)
    for x in xs:
        if x.is_odd:
            raise InapplicableError(f"{x.name} has odd degree {x.degree}")
    return positions


def is_regular_sequence(
    xs: Sequence[Generator], ys: Sequence[Polynomial], algebra: FreeAlgebra | None = None
) -> RegularSequenceReport:
    """Whether ys cut ℚ[xs] down to a finite-dimensional quotient."""
    if len(xs) != len(ys):
        raise ModelValidationError(
            f"A complete intersection needs as many relations as generators "
            f"({len(ys)} vs {len(xs)})",
            invariant="complete-intersection",
        )
    if algebra is None:
        if not ys:
            return RegularSequenceReport(True, 1, Fraction(1))
        algebra = ys[0].algebra
    for y in ys:
        if not y or y.degree is None or y.degree <= 0:
            raise ModelValidationError(
                f"Relation {y} is not homogeneous of positive degree",
                invariant="homogeneous",
            )
    expected = Fraction(
        prod(y.degree for y in ys if y.degree is not None), prod(x.degree for x in xs)
    )
    ideal = IdealBasis(algebra, _positions(xs, algebra), tuple(ys))
    if not ideal.is_zero_dimensional():
        return RegularSequenceReport(False, None, expected)
    return RegularSequenceReport(True, ideal.quotient_dimension(), expected)


@dataclass(frozen=True)
class XremPairing:
    permutation: tuple[int, ...]
    """permutation[j] is the index of the relation paired with xs[j]."""
    degree_pairs: tuple[tuple[int, int], ...]

    @property
    def satisfies_degree_bound(self) -> bool:
        return all(2 * x <= y for x, y in self.degree_pairs)


def reorder_xrem(
    xs: Sequence[Generator], ys: Sequence[Polynomial], algebra: FreeAlgebra | None = None
) -> XremPairing:
    """Pair relations with generators so that y_{i_j} ∉ I(x_1, …, x_{j-1}).

    Chooses from the last generator downwards; among admissible relations
    the one of largest degree wins, ties going to the earlier position.
    """
    degrees = [x.degree for x in xs]
    if degrees != sorted(degrees):
        raise ModelValidationError(
            "Generators must be sorted by ascending degree", invariant="sorted"
        )
    report = is_regular_sequence(xs, ys, algebra)
    if not report.regular:
        raise InapplicableError("The relations do not form a regular sequence")
    if not ys:
        return XremPairing((), ())
    algebra = algebra or ys[0].algebra
    positions = _positions(xs, algebra)
    remaining = list(range(len(ys)))
    chosen: dict[int, int] = {}
    for j in range(len(xs) - 1, -1, -1):
        ideal = IdealBasis(
            algebra, positions, tuple(algebra.generator(p) for p in positions[:j])
        )
        admissible = [i for i in remaining if not ideal.contains(ys[i])]
        if not admissible:
            raise ContradictionError(
                f"No relation outside I({', '.join(x.name for x in xs[:j])}) is left; "
                f"a regular sequence always leaves one"
            )
        pick = max(admissible, key=lambda i: (ys[i].degree or 0, -i))
        chosen[j] = pick
        remaining.remove(pick)
    permutation = tuple(chosen[j] for j in range(len(xs)))
    pairs = tuple((xs[j].degree, ys[permutation[j]].degree or 0) for j in range(len(xs)))
    return XremPairing(permutation, pairs)
