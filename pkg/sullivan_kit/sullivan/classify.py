from __future__ import annotations

from dataclasses import dataclass

from sullivan_kit.errors import UnsupportedShapeError
from sullivan_kit.sullivan.models import SullivanAlgebra, ensure_valid


@dataclass(frozen=True)
class Classification:
    is_minimal: bool
    is_pure: bool
    spherical_dim: int


def is_minimal(model: SullivanAlgebra) -> bool:
    """No differential has a term of word length < 2."""
    return all(
        not image or min(image.word_lengths()) >= 2 for image in model.differential
    )


def is_pure(model: SullivanAlgebra) -> bool:
    even = set(model.algebra.even_indices)
    for generator, image in zip(model.generators, model.differential):
        if generator.is_even and image:
            return False
        if generator.is_odd and not image.support <= even:
            return False
    return True


def classify(model: SullivanAlgebra) -> Classification:
    ensure_valid(model)
    return Classification(
        is_minimal=is_minimal(model),
        is_pure=is_pure(model),
        spherical_dim=len(model.closed_indices),
    )


def is_two_stage(model: SullivanAlgebra) -> bool:
    """V = V0 ⊕ V1 with d(V0) = 0 and d(V1) ⊂ ΛV0, V0 the closed generators."""
    closed = set(model.closed_indices)
    return all(image.support <= closed for image in model.differential)


def pure_associate(model: SullivanAlgebra) -> SullivanAlgebra:
    """The associated pure algebra (ΛV, dσ) of a two-stage algebra.

    dσ vanishes on even generators and keeps, on odd generators, only the
    terms lying in the even subalgebra.
    """
    ensure_valid(model)
    if not is_two_stage(model):
        raise UnsupportedShapeError(
            f"{model.label} is not two-stage: some differential involves a "
            f"generator that is not closed"
        )
    even = model.algebra.even_indices
    differential = tuple(
        image.only(even) if generator.is_odd else model.algebra.zero()
        for generator, image in zip(model.generators, model.differential)
    )
    name = f"{model.name} (pure)" if model.name and not is_pure(model) else model.name
    return model.with_differential(differential, name=name)
