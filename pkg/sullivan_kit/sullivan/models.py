from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from sullivan_kit.algebra.generators import FreeAlgebra, Generator, Monomial
from sullivan_kit.algebra.polynomials import Polynomial, derive_monomial
from sullivan_kit.errors import ModelValidationError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SullivanAlgebra:
    """A free graded-commutative algebra with a degree +1 differential.

    `differential[i]` is d of generator i; omitted generators are closed.
    """

    algebra: FreeAlgebra
    differential: tuple[Polynomial, ...]
    name: str | None = field(default=None, compare=False)
    _monomial_cache: dict[Monomial, Polynomial] = field(
        default_factory=dict, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if len(self.differential) != len(self.algebra):
            raise ModelValidationError(
                f"Expected {len(self.algebra)} differential images, "
                f"got {len(self.differential)}",
                invariant="differential-shape",
            )
        for image in self.differential:
            self.algebra.ensure_same(image.algebra)

    @classmethod
    def build(
        cls,
        generators: Iterable[Generator | tuple[str, int]],
        differential: Mapping[str, str | Polynomial] | None = None,
        name: str | None = None,
    ) -> SullivanAlgebra:
        """Build from generator declarations and `name -> polynomial text`."""
        algebra = FreeAlgebra.of(generators)
        images = [algebra.zero() for _ in algebra.generators]
        for key, value in (differential or {}).items():
            position = algebra.index(key)
            images[position] = (
                value if isinstance(value, Polynomial) else algebra.parse(value)
            )
        return cls(algebra, tuple(images), name=name)

    @property
    def generators(self) -> tuple[Generator, ...]:
        return self.algebra.generators

    @property
    def label(self) -> str:
        return self.name or "(" + ", ".join(self.algebra.names) + ")"

    def d_of(self, name: str) -> Polynomial:
        return self.differential[self.algebra.index(name)]

    def generator(self, name: str) -> Polynomial:
        return self.algebra.generator(name)

    def parse(self, text: str) -> Polynomial:
        return self.algebra.parse(text)

    def d_monomial(self, monomial: Monomial) -> Polynomial:
        cached = self._monomial_cache.get(monomial)
        if cached is None:
            cached = derive_monomial(self.algebra, monomial, self.differential, 1)
            self._monomial_cache[monomial] = cached
        return cached

    def d(self, element: Polynomial) -> Polynomial:
        """The differential, extended by the graded Leibniz rule."""
        self.algebra.ensure_same(element.algebra)
        terms: dict[Monomial, Fraction] = {}
        for monomial, coefficient in element.terms.items():
            for m, c in self.d_monomial(monomial).terms.items():
                terms[m] = terms.get(m, Fraction(0)) + coefficient * c
        return Polynomial(self.algebra, terms)

    @property
    def closed_indices(self) -> tuple[int, ...]:
        return tuple(i for i, image in enumerate(self.differential) if not image)

    def with_differential(
        self, differential: Sequence[Polynomial], name: str | None = None
    ) -> SullivanAlgebra:
        return SullivanAlgebra(self.algebra, tuple(differential), name=name or self.name)


class GeneratorStatus(StrEnum):
    OK = "ok"
    DEGREE = "degree"
    D_SQUARED = "d-squared"


@dataclass(frozen=True)
class GeneratorCheck:
    name: str
    status: GeneratorStatus
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    model: str
    checks: tuple[GeneratorCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.status is GeneratorStatus.OK for check in self.checks)

    @property
    def failures(self) -> list[GeneratorCheck]:
        return [check for check in self.checks if check.status is not GeneratorStatus.OK]

    def raise_for_failures(self) -> None:
        if not self.ok:
            first = self.failures[0]
            raise ModelValidationError(
                f"{self.model}: generator {first.name!r} fails {first.status}: "
                f"{first.detail}",
                invariant=str(first.status),
            )


def validate(model: SullivanAlgebra) -> ValidationReport:
    """Check that d raises degree by one and squares to zero, per generator."""
    checks: list[GeneratorCheck] = []
    for generator, image in zip(model.generators, model.differential):
        expected = generator.degree + 1
        if image and image.degrees != {expected}:
            found = ", ".join(str(d) for d in sorted(image.degrees))
            checks.append(
                GeneratorCheck(
                    generator.name,
                    GeneratorStatus.DEGREE,
                    f"d{generator.name} = {image} has degree {found}, expected {expected}",
                )
            )
            continue
        square = model.d(image)
        if square:
            checks.append(
                GeneratorCheck(
                    generator.name,
                    GeneratorStatus.D_SQUARED,
                    f"d(d{generator.name}) = {square}",
                )
            )
            continue
        checks.append(GeneratorCheck(generator.name, GeneratorStatus.OK))
    log.debug(f"Validated {model.label}: {sum(c.status == 'ok' for c in checks)} ok")
    return ValidationReport(model.label, tuple(checks))


def ensure_valid(model: SullivanAlgebra) -> None:
    validate(model).raise_for_failures()
