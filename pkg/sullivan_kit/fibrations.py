"""Relative Sullivan models: fiber extraction, transgression and the fibration checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Iterable, Mapping

from sullivan_kit.algebra.generators import FreeAlgebra, Generator
from sullivan_kit.algebra.linalg import SparseRow, left_nullspace, rank, rank_increase
from sullivan_kit.algebra.polynomials import Polynomial, word_length
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import (
    InapplicableError,
    MalformedRelativeModelError,
    ModelValidationError,
)
from sullivan_kit.ideals import is_regular_sequence
from sullivan_kit.sullivan.classify import is_minimal
from sullivan_kit.sullivan.cohomology import (
    CochainComplex,
    cohomology,
    formal_dimension,
    indecomposables,
    is_elliptic_shaped,
)
from sullivan_kit.sullivan.models import SullivanAlgebra, ensure_valid, validate

log = logging.getLogger(__name__)

INTERSECTION_READING = (
    "d(ΛV) ∩ d(W^odd)|V = 0 is read as: no nonzero rational combination of the "
    "projections d(x)|ΛV^even, x an odd fiber generator, is a coboundary in the base"
)


@dataclass(frozen=True)
class RelativeSullivan:
    """(ΛV ⊗ ΛW, d) with V the base generators and W the named fiber generators."""

    total: SullivanAlgebra
    fiber: frozenset[str]
    base_indices: tuple[int, ...] = field(init=False, repr=False, compare=False)
    fiber_indices: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        algebra = self.total.algebra
        for name in self.fiber:
            algebra.index(name)
        fiber = tuple(i for i, name in enumerate(algebra.names) if name in self.fiber)
        base = tuple(i for i in range(len(algebra)) if i not in fiber)
        object.__setattr__(self, "fiber_indices", fiber)
        object.__setattr__(self, "base_indices", base)
        ensure_valid(self.total)
        for position in base:
            image = self.total.differential[position]
            if not image.support <= set(base):
                raise MalformedRelativeModelError(
                    f"d{algebra.names[position]} = {image} leaves the base subalgebra",
                    invariant="base-closed",
                )

    @classmethod
    def build(
        cls,
        generators: Iterable[Generator | tuple[str, int]],
        differential: Mapping[str, str | Polynomial],
        fiber: Iterable[str],
        name: str | None = None,
    ) -> RelativeSullivan:
        return cls(SullivanAlgebra.build(generators, differential, name), frozenset(fiber))

    @property
    def label(self) -> str:
        return self.total.label

    @property
    def base_algebra(self) -> FreeAlgebra:
        return self.total.algebra.subalgebra(self.base_indices)

    def base_generators(self) -> tuple[Generator, ...]:
        return tuple(self.total.generators[i] for i in self.base_indices)

    def fiber_generators(self) -> tuple[Generator, ...]:
        return tuple(self.total.generators[i] for i in self.fiber_indices)

    @property
    def odd_fiber_indices(self) -> tuple[int, ...]:
        return tuple(i for i in self.fiber_indices if self.total.generators[i].is_odd)


def base_model(relative: RelativeSullivan) -> SullivanAlgebra:
    sub = relative.base_algebra
    differential = tuple(
        relative.total.differential[i].restrict(sub, relative.base_indices)
        for i in relative.base_indices
    )
    return SullivanAlgebra(sub, differential, name=f"{relative.label} base")


def fiber_model(relative: RelativeSullivan) -> SullivanAlgebra:
    """(ΛW, d̄), dropping every monomial that involves a base generator."""
    positions = relative.fiber_indices
    sub = relative.total.algebra.subalgebra(positions)
    differential = tuple(
        relative.total.differential[i]
        .without(relative.base_indices)
        .restrict(sub, positions)
        for i in positions
    )
    fiber = SullivanAlgebra(sub, differential, name=f"{relative.label} fiber")
    report = validate(fiber)
    if not report.ok:
        raise MalformedRelativeModelError(
            f"Reduced fiber differential is not a differential: {report.failures[0].detail}",
            invariant="fiber-d-squared",
        )
    return fiber


@dataclass(frozen=True)
class TransgressionReport:
    map: dict[str, Polynomial]
    """d₀(w) for each fiber generator, a linear form in the base generators."""
    injective_on_odd: bool
    kernel_odd_basis: tuple[dict[str, Fraction], ...]


def transgression(relative: RelativeSullivan) -> TransgressionReport:
    """The base-generator-linear part of d on the fiber generators."""
    base = set(relative.base_indices)
    sub = relative.base_algebra
    column = {p: k for k, p in enumerate(relative.base_indices)}
    names = relative.total.algebra.names
    images: dict[str, Polynomial] = {}
    rows: list[SparseRow] = []
    for position in relative.fiber_indices:
        linear = relative.total.differential[position].filter(
            lambda m: word_length(m) == 1 and all(e == 0 or p in base for p, e in enumerate(m))
        )
        images[names[position]] = linear.restrict(sub, relative.base_indices)
        if relative.total.generators[position].is_odd:
            rows.append({column[m.index(1)]: c for m, c in linear.terms.items()})
    odd = relative.odd_fiber_indices
    kernel = left_nullspace(rows, len(relative.base_indices)) if rows else []
    basis = tuple({names[odd[k]]: v for k, v in vector.items()} for vector in kernel)
    return TransgressionReport(images, injective_on_odd=not basis, kernel_odd_basis=basis)


@dataclass(frozen=True)
class AlternateReport:
    fiber_odd_degree_sum: int
    base_odd_degree_sum: int
    degree_sums_hold: bool
    projections: tuple[Polynomial, ...]
    regular_sequence: bool | None
    """None when the projection count differs from the number of even base generators."""
    intersection_trivial: bool
    reading: str = INTERSECTION_READING

    @property
    def holds(self) -> bool:
        return bool(
            self.degree_sums_hold and self.regular_sequence and self.intersection_trivial
        )


@dataclass(frozen=True)
class VersionReport:
    weak: bool
    strong: bool
    alternate: AlternateReport
    transgression: TransgressionReport
    notes: tuple[str, ...] = ()


def _intersection_trivial(
    base: SullivanAlgebra, projections: tuple[Polynomial, ...], config: ToolkitConfig | None
) -> bool:
    complex_ = CochainComplex(base, config)
    by_degree: dict[int, list[Polynomial]] = {}
    for projection in projections:
        if projection and projection.degree is not None:
            by_degree.setdefault(projection.degree, []).append(projection)
    for degree, elements in by_degree.items():
        width = len(complex_.basis(degree))
        vectors = [complex_.coordinates(p, degree) for p in elements]
        if rank_increase(complex_.boundaries(degree), vectors, width) != rank(vectors, width):
            return False
    return True


def check_versions(
    relative: RelativeSullivan, config: ToolkitConfig | None = None
) -> VersionReport:
    base = base_model(relative)
    sub = base.algebra
    report = transgression(relative)
    odd_fiber = relative.odd_fiber_indices
    generators = relative.total.generators
    base_even = tuple(relative.base_indices[k] for k in sub.even_indices)
    projections = tuple(
        relative.total.differential[i].only(base_even).restrict(sub, relative.base_indices)
        for i in odd_fiber
    )
    regular: bool | None
    if len(projections) != len(sub.even_indices):
        regular = None
    elif any(not p for p in projections):
        regular = False
    else:
        try:
            regular = is_regular_sequence(
                [sub.generators[k] for k in sub.even_indices], projections, sub
            ).regular
        except ModelValidationError:
            regular = False
    fiber_sum = sum(generators[i].degree for i in odd_fiber)
    base_sum = sum(generators[i].degree for i in relative.base_indices if generators[i].is_odd)
    alternate = AlternateReport(
        fiber_odd_degree_sum=fiber_sum,
        base_odd_degree_sum=base_sum,
        degree_sums_hold=fiber_sum < base_sum,
        projections=projections,
        regular_sequence=regular,
        intersection_trivial=_intersection_trivial(base, projections, config),
    )
    weak = not is_minimal(relative.total)
    notes: list[str] = []
    if weak and not report.injective_on_odd:
        vanishing = sorted(n for n, p in report.map.items() if not p and n in _odd_names(relative))
        nonzero = sorted(n for n, p in report.map.items() if p)
        notes.append(
            f"d₀ vanishes on {', '.join(vanishing)} and is nonzero on "
            f"{', '.join(nonzero) or 'nothing'}; d₀ is read as the linear part of d"
        )
    log.debug(f"Checked fibration versions of {relative.label}")
    return VersionReport(weak, report.injective_on_odd, alternate, report, tuple(notes))


def _odd_names(relative: RelativeSullivan) -> set[str]:
    return {relative.total.algebra.names[i] for i in relative.odd_fiber_indices}


@dataclass(frozen=True)
class WilhelmGap:
    base_dim: int
    fiber_dim: int
    gap: int
    lemma02_bound: int
    """Number of odd fiber generators, the gap predicted by an injective transgression."""
    f0_bound: int | None


def _has_positive_euler(model: SullivanAlgebra, config: ToolkitConfig | None) -> bool:
    n = formal_dimension(model)
    return cohomology(model, config=config).euler_characteristic(n) > 0


def wilhelm_gap(relative: RelativeSullivan, config: ToolkitConfig | None = None) -> WilhelmGap:
    """Negative gaps are reported as they are."""
    base = base_model(relative)
    fiber = fiber_model(relative)
    for part in (base, fiber):
        if not is_elliptic_shaped(part):
            raise InapplicableError(f"Formal dimension of {part.label} is not available")
    n = len(relative.odd_fiber_indices)
    base_dim = formal_dimension(base)
    fiber_dim = formal_dimension(fiber)
    return WilhelmGap(
        base_dim=base_dim,
        fiber_dim=fiber_dim,
        gap=base_dim - fiber_dim,
        lemma02_bound=n,
        f0_bound=2 * n if _has_positive_euler(fiber, config) else None,
    )


@dataclass(frozen=True)
class EulerCheck:
    total: int
    base: int
    fiber: int

    @property
    def holds(self) -> bool:
        return self.total == self.base * self.fiber


def euler_multiplicativity(
    relative: RelativeSullivan, config: ToolkitConfig | None = None
) -> EulerCheck:
    values = []
    for part in (relative.total, base_model(relative), fiber_model(relative)):
        if not is_elliptic_shaped(part):
            raise InapplicableError(f"{part.label} has no finite Betti vector to sum")
        values.append(
            cohomology(part, config=config).euler_characteristic(formal_dimension(part))
        )
    return EulerCheck(*values)


class SinglyGeneratedCase(StrEnum):
    EVEN_CONCENTRATED = "even-concentrated"
    ODD_SPHERE = "odd-sphere"
    NOT_SINGLY_GENERATED = "not-singly-generated"


@dataclass(frozen=True)
class SinglyGeneratedReport:
    case: SinglyGeneratedCase
    generator_degree: int | None
    gap: int | None


def singly_generated_case(
    relative: RelativeSullivan, config: ToolkitConfig | None = None
) -> SinglyGeneratedReport:
    """Split on whether H(total) is generated by one class, and of which parity."""
    total = relative.total
    if not is_elliptic_shaped(total):
        raise InapplicableError(f"{total.label} is not elliptic-shaped")
    counts = indecomposables(total, formal_dimension(total), config)
    try:
        gap: int | None = wilhelm_gap(relative, config).gap
    except InapplicableError:
        gap = None
    if sum(counts.values()) != 1:
        return SinglyGeneratedReport(SinglyGeneratedCase.NOT_SINGLY_GENERATED, None, gap)
    (degree,) = counts
    case = (
        SinglyGeneratedCase.ODD_SPHERE if degree % 2 else SinglyGeneratedCase.EVEN_CONCENTRATED
    )
    return SinglyGeneratedReport(case, degree, gap)
