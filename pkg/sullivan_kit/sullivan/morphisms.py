from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import ModelValidationError
from sullivan_kit.sullivan.cohomology import CochainComplex
from sullivan_kit.sullivan.models import SullivanAlgebra, ensure_valid

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DgaMorphism:
    source: SullivanAlgebra
    target: SullivanAlgebra
    images: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.source.generators):
            raise ModelValidationError(
                "A morphism needs one image per source generator",
                invariant="morphism-shape",
            )
        for generator, image in zip(self.source.generators, self.images):
            self.target.algebra.ensure_same(image.algebra)
            if image and image.degrees != {generator.degree}:
                raise ModelValidationError(
                    f"{generator.name} (degree {generator.degree}) is sent to "
                    f"{image}, of degree {sorted(image.degrees)}",
                    invariant="degree-preserving",
                )

    @classmethod
    def build(
        cls,
        source: SullivanAlgebra,
        target: SullivanAlgebra,
        images: Mapping[str, str | Polynomial],
    ) -> DgaMorphism:
        """Generators missing from `images` are sent to 0."""
        resolved = [target.algebra.zero() for _ in source.generators]
        for name, value in images.items():
            resolved[source.algebra.index(name)] = (
                value if isinstance(value, Polynomial) else target.parse(value)
            )
        return cls(source, target, tuple(resolved))

    def __call__(self, element: Polynomial) -> Polynomial:
        self.source.algebra.ensure_same(element.algebra)
        return element.substitute(self.images, self.target.algebra)

    def commutes_with_differentials(self) -> bool:
        return all(
            self(image) == self.target.d(mapped)
            for image, mapped in zip(self.source.differential, self.images)
        )


def verify_quasi_iso(
    morphism: DgaMorphism, cutoff: int, config: ToolkitConfig | None = None
) -> bool:
    """Check φd = dφ exactly and that H(φ) is bijective in degrees ≤ cutoff."""
    ensure_valid(morphism.source)
    ensure_valid(morphism.target)
    if not morphism.commutes_with_differentials():
        log.debug("Morphism does not commute with the differentials")
        return False
    source = CochainComplex(morphism.source, config)
    target = CochainComplex(morphism.target, config)
    for degree in range(cutoff + 1):
        representatives = source.cohomology_basis(degree)
        if len(representatives) != target.betti(degree):
            log.debug(f"Betti numbers differ in degree {degree}")
            return False
        images = [morphism(z) for z in representatives]
        if target.class_rank(degree, images) != len(representatives):
            log.debug(f"Induced map is not injective in degree {degree}")
            return False
    return True
