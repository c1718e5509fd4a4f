"""Negative-degree derivations of finite even-degree algebras and the verdict built on them."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Iterable, Mapping, Sequence

from sullivan_kit.algebra.generators import FreeAlgebra, Generator, Monomial
from sullivan_kit.algebra.linalg import SparseRow, nullspace, rank, transpose
from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.errors import (
    InapplicableError,
    ModelValidationError,
    UnsupportedShapeError,
)
from sullivan_kit.ideals import IdealBasis, is_regular_sequence
from sullivan_kit.sullivan.classify import is_pure
from sullivan_kit.sullivan.models import SullivanAlgebra, ensure_valid

log = logging.getLogger(__name__)

GENERATOR_COUNT_LIMIT = 3
"""Complete intersections on at most this many generators satisfy the conjecture."""


@dataclass(frozen=True)
class AlgebraPresentation:
    """ℚ[even generators] / (relations), required to be finite-dimensional."""

    algebra: FreeAlgebra
    relations: tuple[Polynomial, ...]
    ideal: IdealBasis = field(init=False, repr=False, compare=False)
    degree_basis: dict[int, list[Monomial]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        for generator in self.algebra.generators:
            if generator.is_odd:
                raise InapplicableError(
                    f"{generator.name} has odd degree {generator.degree}; "
                    f"only even-degree presentations are supported"
                )
        for relation in self.relations:
            self.algebra.ensure_same(relation.algebra)
            if not relation or not relation.is_homogeneous():
                raise ModelValidationError(
                    f"Relation {relation} is not a nonzero homogeneous polynomial",
                    invariant="homogeneous",
                )
        ideal = IdealBasis.generate(self.relations, algebra=self.algebra)
        if not ideal.is_zero_dimensional():
            raise InapplicableError("The quotient algebra is infinite-dimensional")
        by_degree: dict[int, list[Monomial]] = {}
        for monomial in ideal.all_standard_monomials():
            by_degree.setdefault(self.algebra.monomial_degree(monomial), []).append(
                monomial
            )
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "degree_basis", by_degree)

    @classmethod
    def build(
        cls,
        generators: Iterable[Generator | tuple[str, int]],
        relations: Sequence[str | Polynomial],
    ) -> AlgebraPresentation:
        algebra = FreeAlgebra.of(generators)
        return cls(
            algebra,
            tuple(r if isinstance(r, Polynomial) else algebra.parse(r) for r in relations),
        )

    @property
    def even_gens(self) -> tuple[Generator, ...]:
        return self.algebra.generators

    @property
    def top_degree(self) -> int:
        return max(self.degree_basis)

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.degree_basis.values())

    def basis(self, degree: int) -> list[Monomial]:
        return self.degree_basis.get(degree, [])

    def reduce(self, element: Polynomial) -> Polynomial:
        return self.ideal.normal_form(element)

    def is_complete_intersection(self) -> bool:
        if len(self.relations) != len(self.algebra):
            return False
        return is_regular_sequence(
            self.algebra.generators, self.relations, self.algebra
        ).regular


def presentation_of(model: SullivanAlgebra) -> AlgebraPresentation:
    """The cohomology presentation of a pure model, ℚ[V^even] / (d V^odd)."""
    ensure_valid(model)
    if not is_pure(model):
        raise UnsupportedShapeError(f"{model.label} is not pure")
    even = model.algebra.even_indices
    sub = model.algebra.subalgebra(even)
    relations = tuple(
        model.differential[i].restrict(sub, even)
        for i in model.algebra.odd_indices
        if model.differential[i]
    )
    return AlgebraPresentation(sub, relations)


def generator_count(presentation: AlgebraPresentation) -> int:
    """Minimal number of algebra generators: l minus the rank of the linear parts."""
    rows: list[SparseRow] = []
    for relation in presentation.relations:
        linear = relation.linear_part()
        rows.append({m.index(1): c for m, c in linear.terms.items()})
    return len(presentation.algebra) - rank(rows, len(presentation.algebra))


@dataclass(frozen=True)
class DerivationSpace:
    shift: int
    dimension: int
    basis: tuple[dict[str, Polynomial], ...]
    """Each element maps generator name to θ(generator) in normal form."""


def _images(
    presentation: AlgebraPresentation, assignment: Mapping[int, Polynomial]
) -> list[Polynomial]:
    algebra = presentation.algebra
    return [assignment.get(i, algebra.zero()) for i in range(len(algebra))]


def derivation_space(presentation: AlgebraPresentation, shift: int) -> DerivationSpace:
    """All derivations θ of degree `shift` < 0 with θ(relation) ≡ 0 modulo the relations."""
    if shift >= 0:
        raise ValueError(f"shift must be negative, got {shift}")
    algebra = presentation.algebra
    unknowns: list[tuple[int, Monomial]] = [
        (i, monomial)
        for i, generator in enumerate(algebra.generators)
        for monomial in presentation.basis(generator.degree + shift)
    ]
    constraints: dict[tuple[int, Monomial], int] = {}
    for j, relation in enumerate(presentation.relations):
        for monomial in presentation.basis((relation.degree or 0) + shift):
            constraints[(j, monomial)] = len(constraints)
    log.debug(
        f"Derivations of degree {shift}: {len(unknowns)} unknowns, "
        f"{len(constraints)} constraints"
    )
    columns: list[SparseRow] = []
    for i, monomial in unknowns:
        images = _images(presentation, {i: Polynomial(algebra, {monomial: 1})})
        column: SparseRow = {}
        for j, relation in enumerate(presentation.relations):
            value = presentation.reduce(relation.derive(images, shift))
            for m, c in value.terms.items():
                column[constraints[(j, m)]] = c
        columns.append(column)
    kernel = nullspace(transpose(columns, len(constraints)), len(unknowns))
    basis = []
    for vector in kernel:
        theta: dict[str, Polynomial] = {name: algebra.zero() for name in algebra.names}
        for k, value in vector.items():
            i, monomial = unknowns[k]
            name = algebra.names[i]
            theta[name] = theta[name] + Polynomial(algebra, {monomial: value})
        basis.append({name: presentation.reduce(p) for name, p in theta.items()})
    return DerivationSpace(shift, len(basis), tuple(basis))


def apply_derivation(
    presentation: AlgebraPresentation, theta: Mapping[str, Polynomial], element: Polynomial
) -> Polynomial:
    algebra = presentation.algebra
    shift = _shift_of(presentation, theta)
    images = _images(presentation, {algebra.index(n): p for n, p in theta.items()})
    return presentation.reduce(element.derive(images, shift))


def _shift_of(presentation: AlgebraPresentation, theta: Mapping[str, Polynomial]) -> int:
    for name, image in theta.items():
        if image and image.degree is not None:
            return image.degree - presentation.algebra.generators[
                presentation.algebra.index(name)
            ].degree
    return -1


def check_leibniz(
    presentation: AlgebraPresentation,
    theta: Mapping[str, Polynomial],
    p: Polynomial,
    q: Polynomial,
) -> bool:
    """θ(pq) ≡ θ(p)q + pθ(q) in the quotient."""
    left = apply_derivation(presentation, theta, p * q)
    right = apply_derivation(presentation, theta, p) * q + p * apply_derivation(
        presentation, theta, q
    )
    return left == presentation.reduce(right)


class Verdict(StrEnum):
    HOLDS_BY_GENERATOR_COUNT = "holds-by-generator-count"
    HOLDS_BY_DERIVATIONS = "holds-by-derivations"
    FAILS_CRITERION = "fails-criterion"


@dataclass(frozen=True)
class MeierReport:
    verdict: Verdict
    generator_count: int
    shifts_checked: tuple[int, ...] = ()
    witness: DerivationSpace | None = None


def meier_check(presentation: AlgebraPresentation) -> MeierReport:
    count = generator_count(presentation)
    if presentation.is_complete_intersection() and count <= GENERATOR_COUNT_LIMIT:
        return MeierReport(Verdict.HOLDS_BY_GENERATOR_COUNT, count)
    lowest = max(g.degree for g in presentation.algebra.generators)
    checked = []
    for shift in range(-1, -lowest - 1, -1):
        checked.append(shift)
        space = derivation_space(presentation, shift)
        if space.dimension:
            log.debug(f"Nonzero derivation space in degree {shift}")
            return MeierReport(Verdict.FAILS_CRITERION, count, tuple(checked), space)
    return MeierReport(Verdict.HOLDS_BY_DERIVATIONS, count, tuple(checked))

