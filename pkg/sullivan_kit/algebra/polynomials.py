from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from sullivan_kit.algebra.generators import FreeAlgebra, Monomial
from sullivan_kit.errors import ModelValidationError

Coefficient = Fraction | int


@lru_cache(maxsize=1 << 16)
def _monomial_product(
    odd_mask: tuple[bool, ...], left: Monomial, right: Monomial
) -> tuple[int, Monomial] | None:
    """Multiply two canonical monomials, returning (sign, monomial) or None for 0.

    Each odd generator of `right` moves left past the odd generators of
    `left` that sit at a later position.
    """
    sign = 1
    odd_after = 0
    for position in range(len(left) - 1, -1, -1):
        if not odd_mask[position]:
            continue
        if right[position]:
            if left[position]:
                return None
            if odd_after % 2:
                sign = -sign
        if left[position]:
            odd_after += 1
    return sign, tuple(a + b for a, b in zip(left, right))


def word_length(monomial: Monomial) -> int:
    return sum(monomial)


class Polynomial:
    """An element of a free graded-commutative algebra with rational coefficients.

    Terms are stored with generators in declaration order and the Koszul sign
    folded into the coefficient. Instances are immutable.
    """

    __slots__ = ("algebra", "_terms", "_hash")

    def __init__(
        self,
        algebra: FreeAlgebra,
        terms: Mapping[Monomial, Coefficient] | Iterable[tuple[Monomial, Coefficient]] = (),
    ) -> None:
        size = len(algebra)
        odd = algebra.odd_mask
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Monomial, Fraction] = {}
        for raw_monomial, coefficient in items:
            monomial = tuple(raw_monomial)
            if len(monomial) != size:
                raise ModelValidationError(
                    f"Monomial {monomial} does not match {size} generators",
                    invariant="monomial-shape",
                )
            for position, exponent in enumerate(monomial):
                if exponent < 0:
                    raise ModelValidationError(
                        f"Negative exponent in monomial {monomial}",
                        invariant="monomial-shape",
                    )
                if odd[position] and exponent > 1:
                    raise ModelValidationError(
                        f"Odd generator {algebra.names[position]!r} raised to "
                        f"power {exponent}",
                        invariant="odd-exponent",
                    )
            collected[monomial] = collected.get(monomial, Fraction(0)) + Fraction(
                coefficient
            )
        self.algebra = algebra
        self._terms = {m: c for m, c in collected.items() if c}
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, algebra: FreeAlgebra, terms: dict[Monomial, Fraction]) -> Polynomial:
        polynomial = cls.__new__(cls)
        polynomial.algebra = algebra
        polynomial._terms = {m: c for m, c in terms.items() if c}
        polynomial._hash = None
        return polynomial

    @classmethod
    def constant(cls, algebra: FreeAlgebra, value: Coefficient) -> Polynomial:
        return cls(algebra, {algebra.unit_monomial(): value})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=self._order_key, reverse=True)

    def _order_key(self, monomial: Monomial) -> tuple[int, Monomial]:
        return self.algebra.monomial_degree(monomial), monomial

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degrees(self) -> set[int]:
        return {self.algebra.monomial_degree(m) for m in self._terms}

    @property
    def degree(self) -> int | None:
        """The common degree of all terms, None for 0 or inhomogeneous elements."""
        degrees = self.degrees
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    @property
    def support(self) -> frozenset[int]:
        return frozenset(
            position
            for monomial in self._terms
            for position, exponent in enumerate(monomial)
            if exponent
        )

    def word_lengths(self) -> set[int]:
        return {word_length(m) for m in self._terms}

    def linear_part(self) -> Polynomial:
        return self.filter(lambda m: word_length(m) == 1)

    def filter(self, keep) -> Polynomial:  # type: ignore[no-untyped-def]
        return Polynomial._trusted(
            self.algebra, {m: c for m, c in self._terms.items() if keep(m)}
        )

    def only(self, positions: Iterable[int]) -> Polynomial:
        """Keep the terms built entirely from the given generators."""
        allowed = set(positions)
        return self.filter(
            lambda m: all(e == 0 or p in allowed for p, e in enumerate(m))
        )

    def without(self, positions: Iterable[int]) -> Polynomial:
        """Drop every term that involves one of the given generators."""
        banned = set(positions)
        return self.filter(lambda m: all(m[p] == 0 for p in banned))

    def restrict(self, subalgebra: FreeAlgebra, positions: Sequence[int]) -> Polynomial:
        """Rewrite in `subalgebra`, whose generators sit at `positions` here."""
        if not self.support <= set(positions):
            raise ModelValidationError(
                f"{self} involves generators outside ({', '.join(subalgebra.names)})",
                invariant="subalgebra",
            )
        return Polynomial._trusted(
            subalgebra,
            {tuple(m[p] for p in positions): c for m, c in self._terms.items()},
        )

    def embed(self, target: FreeAlgebra, positions: Sequence[int]) -> Polynomial:
        """Inverse of `restrict`: place generator i at target position positions[i]."""
        size = len(target)
        terms: dict[Monomial, Fraction] = {}
        for monomial, coefficient in self._terms.items():
            exponents = [0] * size
            for source, exponent in enumerate(monomial):
                exponents[positions[source]] = exponent
            terms[tuple(exponents)] = coefficient
        return Polynomial._trusted(target, terms)

    def __add__(self, other: object) -> Polynomial:
        other_polynomial = self._coerce(other)
        if other_polynomial is None:
            return NotImplemented
        terms = dict(self._terms)
        for monomial, coefficient in other_polynomial._terms.items():
            terms[monomial] = terms.get(monomial, Fraction(0)) + coefficient
        return Polynomial._trusted(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._trusted(
            self.algebra, {m: -c for m, c in self._terms.items()}
        )

    def __sub__(self, other: object) -> Polynomial:
        other_polynomial = self._coerce(other)
        if other_polynomial is None:
            return NotImplemented
        return self + (-other_polynomial)

    def __rsub__(self, other: object) -> Polynomial:
        return (-self) + other

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial._trusted(
                self.algebra, {m: c * other for m, c in self._terms.items()}
            )
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("Polynomials have no negative powers")
        result = self.algebra.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def _coerce(self, other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self.algebra.ensure_same(other.algebra)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.algebra, other)
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == (
                {self.algebra.unit_monomial(): Fraction(other)} if other else {}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (
            self.algebra.generators == other.algebra.generators
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.algebra.generators, frozenset(self._terms.items())))
        return self._hash

    def derive(self, images: Sequence[Polynomial], degree: int) -> Polynomial:
        """Apply the derivation of the given degree determined by generator images.

        Uses θ(pq) = θ(p)q + (-1)^(degree·|p|) pθ(q).
        """
        result: dict[Monomial, Fraction] = {}
        for monomial, coefficient in self._terms.items():
            image = derive_monomial(self.algebra, monomial, images, degree)
            for m, c in image._terms.items():
                result[m] = result.get(m, Fraction(0)) + coefficient * c
        return Polynomial._trusted(self.algebra, result)

    def substitute(self, images: Sequence[Polynomial], target: FreeAlgebra) -> Polynomial:
        """Image under the algebra map sending generator i to images[i]."""
        result = target.zero()
        for monomial, coefficient in self._terms.items():
            product = target.one()
            for position, exponent in enumerate(monomial):
                if exponent:
                    product = product * images[position] ** exponent
            result = result + product * coefficient
        return result

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({render(self)!r})"


def multiply(left: Polynomial, right: Polynomial) -> Polynomial:
    """The graded-commutative product of two elements of the same algebra."""
    left.algebra.ensure_same(right.algebra)
    odd = left.algebra.odd_mask
    result: dict[Monomial, Fraction] = {}
    for m1, c1 in left._terms.items():
        for m2, c2 in right._terms.items():
            product = _monomial_product(odd, m1, m2)
            if product is None:
                continue
            sign, monomial = product
            result[monomial] = result.get(monomial, Fraction(0)) + sign * c1 * c2
    return Polynomial._trusted(left.algebra, result)


def derive_monomial(
    algebra: FreeAlgebra,
    monomial: Monomial,
    images: Sequence[Polynomial],
    degree: int,
) -> Polynomial:
    size = len(algebra)
    result = algebra.zero()
    prefix_degree = 0
    for position, exponent in enumerate(monomial):
        if exponent == 0:
            continue
        image = images[position]
        if image:
            prefix = Polynomial._trusted(
                algebra, {monomial[:position] + (0,) * (size - position): Fraction(1)}
            )
            suffix = Polynomial._trusted(
                algebra,
                {(0,) * (position + 1) + monomial[position + 1 :]: Fraction(1)},
            )
            power = [0] * size
            power[position] = exponent - 1
            middle = (
                Polynomial._trusted(algebra, {tuple(power): Fraction(exponent)})
                * image
            )
            term = prefix * middle * suffix
            if (degree * prefix_degree) % 2:
                term = -term
            result = result + term
        prefix_degree += exponent * algebra.degrees[position]
    return result


def _format_coefficient(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value}"


def render_monomial(algebra: FreeAlgebra, monomial: Monomial) -> str:
    factors = []
    for name, exponent in zip(algebra.names, monomial):
        if exponent == 1:
            factors.append(name)
        elif exponent > 1:
            factors.append(f"{name}^{exponent}")
    return "*".join(factors)


def render(polynomial: Polynomial) -> str:
    """Canonical text: degree-then-lexicographic order, parseable back."""
    if not polynomial:
        return "0"
    pieces: list[str] = []
    for monomial in polynomial.monomials():
        coefficient = polynomial.coefficient(monomial)
        magnitude = abs(coefficient)
        body = render_monomial(polynomial.algebra, monomial)
        if not body:
            text = _format_coefficient(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{_format_coefficient(magnitude)}*{body}"
        if not pieces:
            pieces.append(f"-{text}" if coefficient < 0 else text)
        else:
            pieces.append(f" - {text}" if coefficient < 0 else f" + {text}")
    return "".join(pieces)
