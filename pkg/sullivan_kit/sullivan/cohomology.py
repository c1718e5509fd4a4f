"""Per-degree cohomology of Sullivan algebras by exact rank computations."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from typing import Sequence

from sullivan_kit.algebra.generators import Monomial
from sullivan_kit.algebra.linalg import SparseRow, left_nullspace, rank, rank_increase
from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import InapplicableError, ModelValidationError
from sullivan_kit.sullivan.models import SullivanAlgebra, ensure_valid

log = logging.getLogger(__name__)


class CutoffPolicy(StrEnum):
    USER = "user"
    FORMAL_DIMENSION = "formal-dimension+margin"


@dataclass(frozen=True)
class BettiVector:
    dims: tuple[int, ...]
    policy: CutoffPolicy = CutoffPolicy.USER

    @property
    def cutoff(self) -> int:
        return len(self.dims) - 1

    def __getitem__(self, degree: int) -> int:
        return self.dims[degree] if 0 <= degree < len(self.dims) else 0

    def total(self, upto: int | None = None) -> int:
        return sum(self.dims[: None if upto is None else upto + 1])

    def euler_characteristic(self, upto: int | None = None) -> int:
        dims = self.dims[: None if upto is None else upto + 1]
        return sum(b if i % 2 == 0 else -b for i, b in enumerate(dims))

    @property
    def top_degree(self) -> int:
        nonzero = [i for i, b in enumerate(self.dims) if b]
        return nonzero[-1] if nonzero else -1

    def __str__(self) -> str:
        return " ".join(str(b) for b in self.dims)


def formal_dimension(model: SullivanAlgebra) -> int:
    """Σ odd degrees − Σ (even degree − 1), the top degree for elliptic models."""
    return sum(g.degree for g in model.generators if g.is_odd) - sum(
        g.degree - 1 for g in model.generators if g.is_even
    )


def homotopy_euler_characteristic(model: SullivanAlgebra) -> int:
    return sum(1 if g.is_even else -1 for g in model.generators)


def is_elliptic_shaped(model: SullivanAlgebra) -> bool:
    """Whether the default cutoff (formal dimension + margin) applies."""
    return formal_dimension(model) >= 0 and homotopy_euler_characteristic(model) <= 0


class CochainComplex:
    """Monomial bases and differential matrices of a Sullivan algebra, per degree."""

    def __init__(self, model: SullivanAlgebra, config: ToolkitConfig | None = None) -> None:
        self.model = model
        self.config = config or ToolkitConfig.get_current()
        self._bases: dict[int, list[Monomial]] = {}
        self._indices: dict[int, dict[Monomial, int]] = {}
        self._matrices: dict[int, list[SparseRow]] = {}
        self._ranks: dict[int, int] = {}

    def basis(self, degree: int) -> list[Monomial]:
        if degree not in self._bases:
            self._bases[degree] = self.model.algebra.basis(
                degree, limit=self.config.basis_limit
            )
        return self._bases[degree]

    def index(self, degree: int) -> dict[Monomial, int]:
        if degree not in self._indices:
            self._indices[degree] = {m: i for i, m in enumerate(self.basis(degree))}
        return self._indices[degree]

    def coordinates(self, element: Polynomial, degree: int) -> SparseRow:
        if element and element.degrees != {degree}:
            raise ModelValidationError(
                f"{element} is not homogeneous of degree {degree}",
                invariant="homogeneous",
            )
        index = self.index(degree)
        return {index[m]: c for m, c in element.terms.items()}

    def element(self, vector: SparseRow, degree: int) -> Polynomial:
        basis = self.basis(degree)
        return Polynomial(self.model.algebra, {basis[i]: c for i, c in vector.items()})

    def matrix(self, degree: int) -> list[SparseRow]:
        """Row i holds the coordinates of d(basis[degree][i]) in degree + 1."""
        if degree not in self._matrices:
            if degree < 0:
                self._matrices[degree] = []
            else:
                self._matrices[degree] = [
                    self.coordinates(self.model.d_monomial(m), degree + 1)
                    for m in self.basis(degree)
                ]
        return self._matrices[degree]

    def rank(self, degree: int) -> int:
        if degree not in self._ranks:
            self._ranks[degree] = (
                rank(self.matrix(degree), len(self.basis(degree + 1)))
                if degree >= 0
                else 0
            )
        return self._ranks[degree]

    def betti(self, degree: int) -> int:
        if degree < 0:
            return 0
        return len(self.basis(degree)) - self.rank(degree) - self.rank(degree - 1)

    def boundaries(self, degree: int) -> list[SparseRow]:
        return self.matrix(degree - 1) if degree >= 1 else []

    def cocycles(self, degree: int) -> list[SparseRow]:
        return left_nullspace(self.matrix(degree), len(self.basis(degree + 1)))

    def cohomology_basis(self, degree: int) -> list[Polynomial]:
        """Cocycle representatives of a basis of H^degree."""
        if degree < 0:
            return []
        width = len(self.basis(degree))
        chosen: list[SparseRow] = list(self.boundaries(degree))
        current = rank(chosen, width)
        representatives: list[Polynomial] = []
        target = self.betti(degree)
        for vector in self.cocycles(degree):
            if len(representatives) == target:
                break
            if rank([*chosen, vector], width) > current:
                chosen.append(vector)
                current += 1
                representatives.append(self.element(vector, degree))
        return representatives

    def class_rank(self, degree: int, cocycles: Sequence[Polynomial]) -> int:
        """Dimension of the span of the classes of the given cocycles."""
        if not cocycles:
            return 0
        for cocycle in cocycles:
            if self.model.d(cocycle):
                raise ModelValidationError(
                    f"{cocycle} is not closed", invariant="cocycle"
                )
        width = len(self.basis(degree))
        vectors = [self.coordinates(c, degree) for c in cocycles]
        return rank_increase(self.boundaries(degree), vectors, width)

    def is_exact(self, element: Polynomial, degree: int) -> bool:
        return self.class_rank(degree, [element]) == 0

    def d_squared_vanishes(self, degree: int) -> bool:
        """Check d∘d = 0 on the full degree basis."""
        width = len(self.basis(degree + 2))
        next_index = self.index(degree + 1)
        for row in self.matrix(degree):
            total: dict[int, Fraction] = {}
            for column, value in row.items():
                monomial = self.basis(degree + 1)[column]
                for target, entry in self.matrix(degree + 1)[next_index[monomial]].items():
                    total[target] = total.get(target, Fraction(0)) + value * entry
            if any(total.values()):
                return False
        log.debug(f"d∘d = 0 on degree {degree} ({width} target monomials)")
        return True


def default_cutoff(model: SullivanAlgebra, config: ToolkitConfig | None = None) -> int:
    config = config or ToolkitConfig.get_current()
    if not is_elliptic_shaped(model):
        raise InapplicableError(
            f"{model.label} is not elliptic-shaped (formal dimension "
            f"{formal_dimension(model)}, χπ {homotopy_euler_characteristic(model)}); "
            f"pass an explicit cutoff"
        )
    return formal_dimension(model) + config.cohomology_margin


def cohomology(
    model: SullivanAlgebra,
    cutoff: int | None = None,
    config: ToolkitConfig | None = None,
    complex_: CochainComplex | None = None,
) -> BettiVector:
    """Betti numbers of (ΛV, d) in degrees 0..cutoff."""
    ensure_valid(model)
    config = config or ToolkitConfig.get_current()
    policy = CutoffPolicy.USER
    if cutoff is None:
        cutoff = default_cutoff(model, config)
        policy = CutoffPolicy.FORMAL_DIMENSION
    if cutoff < 0:
        raise ValueError(f"cutoff must be non-negative, got {cutoff}")
    complex_ = complex_ or CochainComplex(model, config)
    log.debug(f"Computing cohomology of {model.label} up to degree {cutoff}")
    dims = tuple(complex_.betti(degree) for degree in range(cutoff + 1))
    return BettiVector(dims, policy)


def cohomology_basis(
    model: SullivanAlgebra, degree: int, config: ToolkitConfig | None = None
) -> list[Polynomial]:
    return CochainComplex(model, config).cohomology_basis(degree)


def indecomposables(
    model: SullivanAlgebra, cutoff: int, config: ToolkitConfig | None = None
) -> dict[int, int]:
    """Number of algebra generators of H(ΛV, d) needed in each degree ≤ cutoff."""
    complex_ = CochainComplex(model, config)
    bases = {m: complex_.cohomology_basis(m) for m in range(1, cutoff + 1)}
    counts: dict[int, int] = {}
    for degree in range(1, cutoff + 1):
        if not bases[degree]:
            continue
        products = [
            left * right
            for low in range(1, degree // 2 + 1)
            for left in bases[low]
            for right in bases[degree - low]
        ]
        products = [p for p in products if p]
        decomposable = complex_.class_rank(degree, products)
        if len(bases[degree]) > decomposable:
            counts[degree] = len(bases[degree]) - decomposable
    return counts
