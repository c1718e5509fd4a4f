from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

from sullivan_kit.errors import GeneratorMismatchError, ModelValidationError

if TYPE_CHECKING:
    from sullivan_kit.algebra.polynomials import Polynomial

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")

Monomial = tuple[int, ...]
"""Exponent vector indexed by generator position in the owning algebra."""


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self) -> None:
        if not IDENTIFIER.fullmatch(self.name):
            raise ModelValidationError(
                f"Generator name {self.name!r} is not a valid identifier",
                invariant="generator-name",
            )
        if self.degree < 1:
            raise ModelValidationError(
                f"Generator {self.name!r} has degree {self.degree}, degrees start at 1",
                invariant="generator-degree",
            )

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1

    @property
    def is_even(self) -> bool:
        return not self.is_odd


@dataclass(frozen=True)
class FreeAlgebra:
    """The free graded-commutative algebra on an ordered set of generators.

    Polynomial on the even generators, exterior on the odd ones. Generators
    are referred to by position; the declaration order fixes Koszul signs.
    """

    generators: tuple[Generator, ...]
    _positions: dict[str, int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        positions: dict[str, int] = {}
        for position, generator in enumerate(self.generators):
            if generator.name in positions:
                raise ModelValidationError(
                    f"Generator {generator.name!r} is declared twice",
                    invariant="unique-names",
                )
            positions[generator.name] = position
        object.__setattr__(self, "_positions", positions)

    @classmethod
    def of(cls, generators: Iterable[Generator | tuple[str, int]]) -> FreeAlgebra:
        return cls(
            tuple(
                g if isinstance(g, Generator) else Generator(g[0], g[1])
                for g in generators
            )
        )

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def odd_mask(self) -> tuple[bool, ...]:
        return tuple(g.is_odd for g in self.generators)

    @property
    def even_indices(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.generators) if g.is_even)

    @property
    def odd_indices(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.generators) if g.is_odd)

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise ModelValidationError(
                f"Unknown generator {name!r} (declared: {', '.join(self.names)})",
                invariant="declared-generators",
            )

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def monomial_degree(self, monomial: Monomial) -> int:
        return sum(e * d for e, d in zip(monomial, self.degrees))

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.generators)

    def generator_monomial(self, position: int) -> Monomial:
        exponents = [0] * len(self.generators)
        exponents[position] = 1
        return tuple(exponents)

    def one(self) -> Polynomial:
        from sullivan_kit.algebra.polynomials import Polynomial

        return Polynomial(self, {self.unit_monomial(): 1})

    def zero(self) -> Polynomial:
        from sullivan_kit.algebra.polynomials import Polynomial

        return Polynomial(self, {})

    def generator(self, name_or_position: str | int) -> Polynomial:
        from sullivan_kit.algebra.polynomials import Polynomial

        position = (
            self.index(name_or_position)
            if isinstance(name_or_position, str)
            else name_or_position
        )
        return Polynomial(self, {self.generator_monomial(position): 1})

    def parse(self, text: str) -> Polynomial:
        from sullivan_kit.algebra.parsing import parse_polynomial

        return parse_polynomial(self, text)

    def basis(self, degree: int, limit: int | None = None) -> list[Monomial]:
        from sullivan_kit.algebra.bases import basis_monomials

        return basis_monomials(self.generators, degree, limit=limit)

    def subalgebra(self, positions: Sequence[int]) -> FreeAlgebra:
        return FreeAlgebra(tuple(self.generators[p] for p in positions))

    def ensure_same(self, other: FreeAlgebra) -> None:
        if self is not other and self.generators != other.generators:
            raise GeneratorMismatchError(
                f"Generator sets differ: ({', '.join(self.names)}) "
                f"vs ({', '.join(other.names)})",
                invariant="same-generators",
            )
