"""Euler characteristics, formal dimension and the inequality checks built on them."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Sequence

from sullivan_kit.algebra.polynomials import Polynomial
from sullivan_kit.config import ToolkitConfig
from sullivan_kit.errors import InapplicableError, ModelValidationError
from sullivan_kit.ideals import is_regular_sequence
from sullivan_kit.sullivan.classify import is_pure
from sullivan_kit.sullivan.cohomology import (
    BettiVector,
    CochainComplex,
    cohomology,
    formal_dimension,
    homotopy_euler_characteristic,
)
from sullivan_kit.sullivan.models import SullivanAlgebra, ensure_valid

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EllipticProfile:
    model: str
    formal_dim: int
    chi_formula: Fraction | None
    """∏ deg d(y') / ∏ deg x; None when the model is not a pure F₀ model."""
    chi_homological: int
    chi_pi: int
    betti: BettiVector
    generator_count: int
    spherical_dim: int

    @property
    def total_dimension(self) -> int:
        return self.betti.total(self.formal_dim)


def euler_formula(model: SullivanAlgebra) -> Fraction | None:
    """The degree-ratio Euler characteristic of a pure model with regular relations."""
    algebra = model.algebra
    even = [algebra.generators[i] for i in algebra.even_indices]
    odd = algebra.odd_indices
    if not is_pure(model) or len(even) != len(odd):
        return None
    relations = [model.differential[i] for i in odd]
    if any(not r or r.degree is None for r in relations):
        return None
    report = is_regular_sequence(even, relations, algebra)
    if not report.regular:
        return None
    return Fraction(
        prod(r.degree for r in relations if r.degree is not None),
        prod(x.degree for x in even),
    )


def profile(model: SullivanAlgebra, config: ToolkitConfig | None = None) -> EllipticProfile:
    ensure_valid(model)
    n = formal_dimension(model)
    betti = cohomology(model, config=config)
    return EllipticProfile(
        model=model.label,
        formal_dim=n,
        chi_formula=euler_formula(model),
        chi_homological=betti.euler_characteristic(n),
        chi_pi=homotopy_euler_characteristic(model),
        betti=betti,
        generator_count=len(model.algebra.even_indices),
        spherical_dim=len(model.closed_indices),
    )


def check_chi_ge_2l(profile: EllipticProfile) -> bool:
    """χ ≥ 2^l for a positively elliptic model with l even generators."""
    if profile.chi_homological <= 0:
        raise InapplicableError(
            f"{profile.model} has χ = {profile.chi_homological}; the bound needs χ > 0"
        )
    return profile.chi_homological >= 2**profile.generator_count


def spherical_bound_check(model: SullivanAlgebra, config: ToolkitConfig | None = None) -> bool:
    """Total cohomology dimension ≥ 2^(number of closed generators)."""
    ensure_valid(model)
    n = formal_dimension(model)
    betti = cohomology(model, config=config)
    return betti.total(n) >= 2 ** len(model.closed_indices)


def hard_lefschetz_check(
    model: SullivanAlgebra, omega: Polynomial, config: ToolkitConfig | None = None
) -> bool:
    """Whether [ω]^k: H^(m-k) → H^(m+k) is an isomorphism for k = 1..m."""
    ensure_valid(model)
    if omega.degrees != {2}:
        raise ModelValidationError(f"ω = {omega} is not of degree 2", invariant="omega-degree")
    if model.d(omega):
        raise ModelValidationError(f"ω = {omega} is not closed", invariant="omega-closed")
    n = formal_dimension(model)
    if n < 0 or n % 2:
        raise InapplicableError(f"Formal dimension {n} is not even")
    return _lefschetz(CochainComplex(model, config), omega, n // 2)


def _lefschetz(complex_: CochainComplex, omega: Polynomial, middle: int) -> bool:
    for k in range(1, middle + 1):
        low = complex_.cohomology_basis(middle - k)
        if len(low) != complex_.betti(middle + k):
            return False
        power = omega**k
        images = [power * z for z in low]
        if complex_.class_rank(middle + k, images) != len(low):
            return False
    # k = 0 is the identity; a zero class in the middle is still fine
    return True


class LefschetzStatus(StrEnum):
    FOUND = "found"
    NONE_EXISTS = "none-exists"
    NOT_FOUND = "not-found"


@dataclass(frozen=True)
class LefschetzSearch:
    status: LefschetzStatus
    omega: Polynomial | None
    trials: int


def find_lefschetz_class(
    model: SullivanAlgebra, config: ToolkitConfig | None = None
) -> LefschetzSearch:
    """Look for a Hard-Lefschetz class among rational combinations of an H² basis.

    Random combinations are certified exactly. A one-dimensional H² is decided
    outright by testing its generator.
    """
    config = config or ToolkitConfig.get_current()
    ensure_valid(model)
    n = formal_dimension(model)
    if n < 0 or n % 2:
        raise InapplicableError(f"Formal dimension {n} is not even")
    complex_ = CochainComplex(model, config)
    basis = complex_.cohomology_basis(2)
    if n == 0:
        return LefschetzSearch(LefschetzStatus.FOUND, model.algebra.zero(), 0)
    if not basis:
        return LefschetzSearch(LefschetzStatus.NONE_EXISTS, None, 0)
    if len(basis) == 1:
        works = _lefschetz(complex_, basis[0], n // 2)
        return LefschetzSearch(
            LefschetzStatus.FOUND if works else LefschetzStatus.NONE_EXISTS,
            basis[0] if works else None,
            1,
        )
    rng = random.Random(config.random_seed)
    for trial in range(1, config.lefschetz_trials + 1):
        omega = model.algebra.zero()
        for z in basis:
            omega = omega + z * Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if omega and _lefschetz(complex_, omega, n // 2):
            log.debug(f"Lefschetz class found after {trial} trials")
            return LefschetzSearch(LefschetzStatus.FOUND, omega, trial)
    return LefschetzSearch(LefschetzStatus.NOT_FOUND, None, config.lefschetz_trials)


@dataclass(frozen=True)
class FourPeriodicChi:
    n: int
    b3: int
    chi: int
    positive: bool


def four_periodic_chi(n: int, b3: int) -> FourPeriodicChi:
    """χ = 2 + (n − 2)/4 · (2 − b3) for four-periodic elliptic spaces, n ≡ 2 mod 4."""
    if n < 10 or n % 4 != 2:
        raise InapplicableError(f"n = {n} must satisfy n ≡ 2 mod 4 and n ≥ 10")
    if b3 < 0:
        raise ModelValidationError(f"b3 = {b3} is negative", invariant="b3")
    if b3 % 2:
        raise ModelValidationError(
            f"b3 = {b3} is odd; Poincaré duality forces it to be even", invariant="b3-parity"
        )
    chi = 2 + (n - 2) // 4 * (2 - b3)
    return FourPeriodicChi(n, b3, chi, positive=b3 <= 2)


def admissible_b3(n: int) -> list[int]:
    """Even b3 keeping χ non-negative, as ellipticity requires."""
    values = []
    b3 = 0
    while four_periodic_chi(n, b3).chi >= 0:
        values.append(b3)
        b3 += 2
    return values


def six_dimensional_chi(b2: int, b3: int) -> int:
    return 2 + 2 * b2 - b3


def six_dimensional_b3() -> list[int]:
    """Even b3 with 0 ≤ 4 − 2·b3, the six-dimensional specialization."""
    return [b3 for b3 in range(0, 5, 2) if 4 - 2 * b3 >= 0]


def _semigroup(degrees: Sequence[int], limit: int) -> int:
    """Bitset of degrees of words (including the empty word) up to limit."""
    mask = (1 << (limit + 1)) - 1
    reach = 1
    for degree in degrees:
        step = degree
        while step <= limit:
            reach = (reach | (reach << step)) & mask
            step *= 2
    return reach


def long_word_degrees(degrees: Sequence[int], limit: int) -> int:
    """Bitset of degrees of words of length ≥ 2 in the given degrees."""
    return _long_word_degrees(tuple(sorted(degrees)), limit)


@lru_cache(maxsize=65536)
def _long_word_degrees(degrees: tuple[int, ...], limit: int) -> int:
    words = _semigroup(degrees, limit) & ~1
    mask = (1 << (limit + 1)) - 1
    result = 0
    for degree in degrees:
        result |= (words << degree) & mask
    return result


def friedlander_halperin(xs: Sequence[int], ys: Sequence[int]) -> bool:
    """Degree condition for (x, y) to come from a pure elliptic model.

    For every nonempty set J of even generators, at least |J| of the relation
    degrees must be degrees of words of length ≥ 2 in J alone.
    """
    if len(xs) != len(ys):
        return False
    limit = max(ys, default=0)
    for size in range(1, len(xs) + 1):
        for subset in combinations(xs, size):
            words = long_word_degrees(subset, limit)
            if sum(1 for y in ys if (words >> y) & 1) < size:
                return False
    return True
